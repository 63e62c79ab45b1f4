#pragma once

// Ramanujan tau up to a cutoff, from q * prod (1 - q^n)^24 computed exactly
// by number-theoretic transforms modulo several primes and CRT.

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "equilab/arith.hpp"

namespace equilab::eig {

using int256 = boost::multiprecision::int256_t;
using bigint = boost::multiprecision::cpp_int;

inline constexpr i64 kMaxTauCutoff = 10'000'000;

class TauTable {
 public:
  /// Throws std::invalid_argument if Y < 1 or Y > kMaxTauCutoff.
  static TauTable build(i64 Y);
  /// Reads `<dir>/tau_<Y>.txt` or builds and writes it. A malformed file is
  /// an error and is left untouched.
  static TauTable load_or_build(i64 Y, const std::string& cache_dir);
  /// First line the cutoff, then tau(1), ..., tau(Y), one per line.
  void save(const std::string& path) const;
  static TauTable load(const std::string& path);

  i64 cutoff() const { return static_cast<i64>(tau_.size()) - 1; }
  const int256& tau(i64 n) const { return tau_.at(static_cast<std::size_t>(n)); }
  /// tau(n) n^(-11/2).
  double lambda(i64 n) const { return lambda_.at(static_cast<std::size_t>(n)); }

 private:
  void fill_lambda();
  std::vector<int256> tau_;  // index 0 unused
  std::vector<double> lambda_;
};

/// Coefficients of prod_{n>=1} (1 - q^n) up to q^len-1 (pentagonal numbers).
std::vector<int> euler_series(std::size_t len);

/// Exact product of two integer series truncated to len terms, via NTT
/// residues. Coefficients must stay below 2^148 in absolute value.
std::vector<int256> multiply_truncated(const std::vector<int256>& a, const std::vector<int256>& b, std::size_t len);

}  // namespace equilab::eig
