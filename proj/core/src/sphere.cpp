#include "equilab/sphere.hpp"

#include <algorithm>
#include <stdexcept>

namespace equilab::sphere {

bool admissible(i64 d) {
  if (d < 1) throw std::invalid_argument("admissible: d must be positive");
  i64 r = d % 8;
  return r != 0 && r != 4 && r != 7;
}

bool is_primitive(const LatticePoint& p) { return gcd3(p.x, p.y, p.z) == 1; }

std::vector<LatticePoint> enumerate_points(i64 d) {
  std::vector<LatticePoint> out;
  if (d < 1) return out;
  const i64 r = isqrt(d);
  for (i64 x = r; x >= -r; --x) {
    const i64 rx = d - x * x;
    const i64 ry = isqrt(rx);
    for (i64 y = ry; y >= -ry; --y) {
      const i64 rz = rx - y * y;
      const i64 z = isqrt(rz);
      if (z * z != rz) continue;
      LatticePoint p{x, y, z};
      if (!is_primitive(p)) continue;
      out.push_back(p);
      if (z != 0) out.push_back({x, y, -z});
    }
  }
  return out;
}

namespace {

std::array<Mat3, 12> make_group() {
  const std::array<std::array<int, 3>, 4> signs = {{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}};
  // Row i of the shift picks coordinate perm[i].
  const std::array<std::array<int, 3>, 3> perms = {{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};
  std::array<Mat3, 12> g{};
  std::size_t n = 0;
  for (const auto& s : signs)
    for (const auto& perm : perms) {
      Mat3 m{};
      for (int i = 0; i < 3; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = s[static_cast<std::size_t>(i)];
      g[n++] = m;
    }
  return g;
}

}  // namespace

const std::array<Mat3, 12>& rotation_group() {
  static const std::array<Mat3, 12> g = make_group();
  return g;
}

LatticePoint apply(const Mat3& m, const LatticePoint& p) {
  const std::array<i64, 3> v = {p.x, p.y, p.z};
  std::array<i64, 3> w{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) w[i] += m[i][j] * v[j];
  return {w[0], w[1], w[2]};
}

OrbitRep canonicalize(const LatticePoint& p) {
  std::array<LatticePoint, 12> images;
  const auto& g = rotation_group();
  for (std::size_t i = 0; i < 12; ++i) images[i] = apply(g[i], p);
  std::sort(images.begin(), images.end());
  const auto distinct = std::unique(images.begin(), images.end()) - images.begin();
  return {images[static_cast<std::size_t>(distinct - 1)], static_cast<int>(distinct)};
}

std::vector<OrbitRep> quotient(i64 d) {
  std::vector<OrbitRep> reps;
  for (const auto& p : enumerate_points(d)) reps.push_back(canonicalize(p));
  std::sort(reps.begin(), reps.end(), [](const OrbitRep& a, const OrbitRep& b) { return b < a; });
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return reps;
}

void write_points_csv(std::ostream& out, i64 d, const std::vector<LatticePoint>& pts) {
  out << "d,x,y,z,canonical,orbit_size\n";
  for (const auto& p : pts) {
    OrbitRep r = canonicalize(p);
    out << d << ',' << p.x << ',' << p.y << ',' << p.z << ',' << (r.point == p ? 1 : 0) << ','
        << r.orbit_size << '\n';
  }
}

}  // namespace equilab::sphere
