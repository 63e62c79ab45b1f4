#pragma once

// Positive definite binary quadratic forms ax^2 + bxy + cy^2, their
// reduction theory, Gauss composition and the resulting class group.

#include <complex>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "equilab/arith.hpp"

namespace equilab::qf {

struct QuadForm {
  i64 a = 1, b = 0, c = 1;

  i64 disc() const { return b * b - 4 * a * c; }
  i64 operator()(i64 x, i64 y) const { return a * x * x + b * x * y + c * y * y; }
  auto operator<=>(const QuadForm&) const = default;
};

std::string to_string(const QuadForm& f);

bool is_positive_definite(const QuadForm& f);
bool is_primitive(const QuadForm& f);
bool is_reduced(const QuadForm& f);

/// Unique reduced representative of the SL2(Z) class of f.
/// Throws std::invalid_argument unless f is positive definite and primitive.
QuadForm reduce(const QuadForm& f);

/// Reduced Gauss composite. Throws on discriminant mismatch.
QuadForm compose(const QuadForm& f, const QuadForm& g);

inline QuadForm inverse(const QuadForm& f) { return reduce({f.a, -f.b, f.c}); }

/// (1, 0, -disc/4) or (1, 1, (1-disc)/4).
QuadForm principal_form(i64 disc);

/// All reduced primitive forms of the discriminant, ordered by a ascending,
/// then b descending.
std::vector<QuadForm> reduced_forms(i64 disc);

inline i64 class_number(i64 disc) { return static_cast<i64>(reduced_forms(disc).size()); }

/// Number of units of the order of discriminant disc.
int roots_of_unity(i64 disc);

/// Least positive integer represented by a reduced form, i.e. its a.
/// Throws std::invalid_argument on unreduced input.
i64 minimal_represented(const QuadForm& f);

/// Number of (x, y) mod n with f(x, y) = 0 mod n.
i64 density(const QuadForm& f, i64 n);

/// density at a prime power p^k.
i64 density_prime_power(const QuadForm& f, i64 p, int k);

/// #{(x, y) in Z^2 : f(x, y) = n}. Throws std::out_of_range when the
/// search radius required for n exceeds `bound`.
i64 representation_count(const QuadForm& f, i64 n, i64 bound);

using IdealClassId = int;

/// Class group of a negative discriminant on the reduced forms, with its
/// cyclic decomposition and dual group.
class ClassGroup {
 public:
  static ClassGroup build(i64 disc);

  i64 disc() const { return disc_; }
  int size() const { return static_cast<int>(forms_.size()); }
  const std::vector<QuadForm>& forms() const { return forms_; }
  const QuadForm& form(IdealClassId i) const { return forms_.at(static_cast<std::size_t>(i)); }

  /// Throws std::out_of_range if f (after reduction) is not in the group.
  IdealClassId index_of(const QuadForm& f) const;

  IdealClassId identity() const { return 0; }
  IdealClassId mul(IdealClassId i, IdealClassId j) const {
    return table_[static_cast<std::size_t>(i) * forms_.size() + static_cast<std::size_t>(j)];
  }
  IdealClassId inv(IdealClassId i) const { return inverse_[static_cast<std::size_t>(i)]; }
  IdealClassId pow(IdealClassId i, i64 e) const;
  int order(IdealClassId i) const;

  /// Orders n_1, ..., n_r of the cyclic factors; their product is size().
  const std::vector<int>& structure() const { return structure_; }
  /// Element generating each cyclic factor.
  const std::vector<IdealClassId>& generators() const { return generators_; }
  /// Exponent vector of element i on the generators.
  const std::vector<int>& coords(IdealClassId i) const {
    return coords_[static_cast<std::size_t>(i)];
  }

  /// Characters are indexed by 0 <= k < size(); k is read as an exponent
  /// vector in the mixed radix given by structure(). The value is
  /// exp(2 pi i * angle_num / exponent()).
  int exponent() const { return exponent_; }
  int character_angle(int k, IdealClassId g) const;
  std::complex<double> character(int k, IdealClassId g) const;
  /// Index of the complex-conjugate character.
  int conjugate_character(int k) const;

  nlohmann::json to_json() const;
  /// Validates everything against a fresh enumeration; throws
  /// std::runtime_error on any inconsistency.
  static ClassGroup from_json(const nlohmann::json& j);

  /// Loads `<dir>/classgroup_<|disc|>.json` if present, otherwise builds and
  /// writes it. A present but invalid file is an error, never overwritten.
  static ClassGroup load_or_build(i64 disc, const std::string& cache_dir);

 private:
  void finish_from_table();
  void decompose();
  void assign_coords();

  i64 disc_ = 0;
  std::vector<QuadForm> forms_;
  std::map<QuadForm, IdealClassId> index_;
  std::vector<IdealClassId> table_;
  std::vector<IdealClassId> inverse_;
  std::vector<int> structure_;
  std::vector<IdealClassId> generators_;
  std::vector<std::vector<int>> coords_;
  std::vector<std::vector<int>> char_digits_;
  int exponent_ = 1;
};

}  // namespace equilab::qf
