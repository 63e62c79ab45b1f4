#pragma once

// Hurwitz quaternions stored with doubled coordinates so that the
// half-integral ones stay in integer arithmetic.

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "equilab/arith.hpp"
#include "equilab/sphere.hpp"

namespace equilab::quat {

class Quaternion {
 public:
  Quaternion() = default;
  /// Doubled coordinates; throws std::invalid_argument if parities differ.
  static Quaternion from_doubled(i64 w2, i64 x2, i64 y2, i64 z2);
  static Quaternion integral(i64 w, i64 x, i64 y, i64 z) { return from_doubled(2 * w, 2 * x, 2 * y, 2 * z); }

  const std::array<i64, 4>& doubled() const { return e_; }
  bool half_integral() const { return (e_[0] & 1) != 0; }
  bool is_pure() const { return e_[0] == 0; }

  i64 norm() const { return (e_[0] * e_[0] + e_[1] * e_[1] + e_[2] * e_[2] + e_[3] * e_[3]) / 4; }
  Quaternion conj() const { return {e_[0], -e_[1], -e_[2], -e_[3]}; }
  Quaternion operator-() const { return {-e_[0], -e_[1], -e_[2], -e_[3]}; }
  Quaternion operator+(const Quaternion& o) const;
  Quaternion operator-(const Quaternion& o) const;
  Quaternion operator*(const Quaternion& o) const;
  Quaternion scaled(i64 k) const { return from_doubled(k * e_[0], k * e_[1], k * e_[2], k * e_[3]); }

  /// True iff the element lies in n times the Hurwitz order.
  bool divisible_by(i64 n) const;
  /// Exact division by n; throws std::domain_error unless the quotient is
  /// again Hurwitz.
  Quaternion divided_by(i64 n) const;

  auto operator<=>(const Quaternion&) const = default;
  std::string to_string() const;

 private:
  Quaternion(i64 a, i64 b, i64 c, i64 d) : e_{a, b, c, d} {}
  std::array<i64, 4> e_{0, 0, 0, 0};
};

/// x i + y j + z k.
Quaternion embed(const sphere::LatticePoint& p);
/// Inverse of embed; throws unless q is pure with integral coordinates.
sphere::LatticePoint to_point(const Quaternion& q);

/// The 24 units of the Hurwitz order.
const std::vector<Quaternion>& hurwitz_units();

/// Representatives of norm-p Hurwitz quaternions modulo left multiplication
/// by units, each the lexicographically least element of its class.
/// For odd primes there are p + 1 of them.
std::vector<Quaternion> norm_p_classes(i64 p);

}  // namespace equilab::quat
