#pragma once

// Primitive integer points on the sphere x^2 + y^2 + z^2 = d and their
// classes modulo the rotation group of order 12 that permutes the
// coordinate axes evenly (with sign changes of determinant one).

#include <array>
#include <compare>
#include <ostream>
#include <vector>

#include "equilab/arith.hpp"

namespace equilab::sphere {

struct LatticePoint {
  i64 x = 0, y = 0, z = 0;

  i64 norm() const { return x * x + y * y + z * z; }
  auto operator<=>(const LatticePoint&) const = default;
};

struct OrbitRep {
  LatticePoint point;
  int orbit_size = 0;

  auto operator<=>(const OrbitRep&) const = default;
};

using Mat3 = std::array<std::array<int, 3>, 3>;

/// d mod 8 not in {0, 4, 7}.
bool admissible(i64 d);

bool is_primitive(const LatticePoint& p);

/// All primitive solutions, x descending from floor(sqrt d), then y
/// descending, then z positive before negative.
std::vector<LatticePoint> enumerate_points(i64 d);

/// The 12 rotation matrices: sign patterns {I, diag(1,-1,-1),
/// diag(-1,1,-1), diag(-1,-1,1)} times the cyclic coordinate shifts.
const std::array<Mat3, 12>& rotation_group();

LatticePoint apply(const Mat3& m, const LatticePoint& p);

/// Lexicographically greatest image and the number of distinct images.
OrbitRep canonicalize(const LatticePoint& p);

/// Canonical representatives of all primitive points of norm d, in
/// descending lexicographic order.
std::vector<OrbitRep> quotient(i64 d);

/// CSV with header d,x,y,z,canonical,orbit_size.
void write_points_csv(std::ostream& out, i64 d, const std::vector<LatticePoint>& pts);

}  // namespace equilab::sphere
