#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_n) and rational functions
// in X = p^(-s) with cyclotomic coefficients.

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace equilab::exact {

using rational = boost::multiprecision::cpp_rational;

/// Element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^(phi(n)-1),
/// reduced modulo the n-th cyclotomic polynomial (so equality is exact).
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(int n, const rational& q = 0);
  static Cyclotomic root(int n, long long k);  // zeta_n^k

  int n() const { return n_; }
  bool is_zero() const;
  /// The value if it lies in Q; throws std::domain_error otherwise.
  rational to_rational() const;
  std::complex<double> to_complex() const;
  Cyclotomic conj() const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic scaled(const rational& q) const;
  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  static Cyclotomic from_full(int n, std::vector<rational> full);
  std::vector<rational> full() const;  // length n
  Cyclotomic lifted(int m) const;      // into Q(zeta_m), n | m
  static int common(const Cyclotomic& a, const Cyclotomic& b);

  int n_;
  std::vector<rational> c_;  // length phi(n)
};

/// Integer coefficients of the n-th cyclotomic polynomial, low degree first.
const std::vector<long long>& cyclotomic_polynomial(int n);

/// N(X) / D(X) with X = p^(-s); N and D are Laurent polynomials keyed by
/// exponent. Equality is by cross-multiplication.
class LaurentValue {
 public:
  using Poly = std::map<int, Cyclotomic>;

  LaurentValue() : LaurentValue(2) {}
  explicit LaurentValue(long long p) : p_(p) { den_[0] = Cyclotomic(1, 1); }
  LaurentValue(long long p, Poly num, Poly den);
  static LaurentValue constant(long long p, const Cyclotomic& c);
  /// c * X^m.
  static LaurentValue monomial(long long p, int m, const Cyclotomic& c);

  long long p() const { return p_; }
  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  LaurentValue operator+(const LaurentValue& o) const;
  LaurentValue operator*(const LaurentValue& o) const;
  LaurentValue operator*(const Cyclotomic& c) const;
  bool operator==(const LaurentValue& o) const;
  bool operator!=(const LaurentValue& o) const { return !(*this == o); }

  bool is_zero() const { return num_.empty(); }
  /// The value if it does not depend on s. Decided exactly: N = c D.
  std::optional<Cyclotomic> constant_value() const;
  bool is_constant() const;
  /// Throws std::domain_error when the value depends on s.
  Cyclotomic constant_term() const;
  std::complex<double> evaluate(std::complex<double> s) const;
  std::string to_string() const;

 private:
  static Poly mul(const Poly& a, const Poly& b);
  static void prune(Poly& a);
  long long p_;
  Poly num_, den_;
};

}  // namespace equilab::exact
