#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "equilab/quadforms.hpp"
#include "equilab/sphere.hpp"

using namespace equilab;
using sphere::LatticePoint;

namespace {

std::set<LatticePoint> brute_points(i64 d) {
  std::set<LatticePoint> out;
  const i64 r = isqrt(d);
  for (i64 x = -r; x <= r; ++x)
    for (i64 y = -r; y <= r; ++y)
      for (i64 z = -r; z <= r; ++z)
        if (x * x + y * y + z * z == d && gcd3(x, y, z) == 1) out.insert({x, y, z});
  return out;
}

int det(const sphere::Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

TEST(Sphere, Admissibility) {
  for (i64 d = 1; d < 64; ++d) EXPECT_EQ(sphere::admissible(d), d % 8 != 0 && d % 8 != 4 && d % 8 != 7) << d;
}

TEST(Sphere, EnumerationMatchesTripleLoop) {
  for (i64 d = 1; d <= 400; ++d) {
    const auto pts = sphere::enumerate_points(d);
    const std::set<LatticePoint> got(pts.begin(), pts.end());
    ASSERT_EQ(got.size(), pts.size()) << "duplicates at " << d;
    EXPECT_EQ(got, brute_points(d)) << d;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      const auto &a = pts[i - 1], &b = pts[i];
      const bool ordered = a.x > b.x || (a.x == b.x && (a.y > b.y || (a.y == b.y && a.z > 0 && b.z < 0)));
      EXPECT_TRUE(ordered) << d;
    }
  }
}

TEST(Sphere, PointCountsMatchClassNumbers) {
  for (i64 d = 4; d <= 3000; ++d) {
    if (!is_squarefree(d)) continue;
    const auto n = static_cast<i64>(sphere::enumerate_points(d).size());
    if (d % 8 == 3) EXPECT_EQ(n, 24 * qf::class_number(-d)) << d;
    if (d % 4 == 1 || d % 4 == 2) EXPECT_EQ(n, 12 * qf::class_number(-4 * d)) << d;
    if (d % 8 == 7) EXPECT_EQ(n, 0) << d;
  }
}

TEST(Sphere, RotationGroupIsAGroupOfRotations) {
  const auto& G = sphere::rotation_group();
  std::set<sphere::Mat3> elems(G.begin(), G.end());
  EXPECT_EQ(elems.size(), 12u);
  for (const auto& a : G) {
    EXPECT_EQ(det(a), 1);
    for (const auto& b : G) {
      sphere::Mat3 c{};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
      EXPECT_TRUE(elems.count(c));
    }
  }
}

TEST(Sphere, CanonicalizeIsAClassInvariant) {
  for (i64 d : {3, 5, 6, 11, 14, 59, 101, 411}) {
    const auto pts = sphere::enumerate_points(d);
    std::size_t total = 0;
    for (const auto& o : sphere::quotient(d)) total += static_cast<std::size_t>(o.orbit_size);
    EXPECT_EQ(total, pts.size()) << d;
    for (const auto& p : pts) {
      const auto c = sphere::canonicalize(p);
      std::set<LatticePoint> images;
      for (const auto& g : sphere::rotation_group()) {
        const auto q = sphere::apply(g, p);
        images.insert(q);
        EXPECT_EQ(sphere::canonicalize(q), c);
      }
      EXPECT_EQ(static_cast<int>(images.size()), c.orbit_size);
      EXPECT_EQ(*images.rbegin(), c.point);
    }
  }
}

TEST(Sphere, PointsCsvFormat) {
  std::ostringstream out;
  sphere::write_points_csv(out, 3, sphere::enumerate_points(3));
  const std::string s = out.str();
  EXPECT_EQ(s.substr(0, s.find('\n')), "d,x,y,z,canonical,orbit_size");
  EXPECT_EQ(std::count(s.begin(), s.end(), '\n'), 9);
}
