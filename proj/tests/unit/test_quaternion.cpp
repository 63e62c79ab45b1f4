#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "equilab/quaternion.hpp"

using namespace equilab;
using quat::Quaternion;

namespace {

// Every Hurwitz element of norm n, from doubled coordinates.
std::vector<Quaternion> hurwitz_of_norm(i64 n) {
  std::vector<Quaternion> out;
  const i64 r = isqrt(4 * n);
  for (i64 a = -r; a <= r; ++a)
    for (i64 b = -r; b <= r; ++b)
      for (i64 c = -r; c <= r; ++c) {
        const i64 rest = 4 * n - a * a - b * b - c * c;
        if (rest < 0 || !is_square(rest)) continue;
        const i64 e = isqrt(rest);
        for (i64 dd : {e, -e}) {
          if (((a ^ b) & 1) || ((a ^ c) & 1) || ((a ^ dd) & 1)) continue;
          out.push_back(Quaternion::from_doubled(a, b, c, dd));
          if (e == 0) break;
        }
      }
  return out;
}

Quaternion random_hurwitz(std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<i64> dist(-range, range);
  const i64 par = static_cast<i64>(rng() & 1);
  auto coord = [&] { return 2 * dist(rng) + par; };
  return Quaternion::from_doubled(coord(), coord(), coord(), coord());
}

}  // namespace

TEST(Quaternion, ArithmeticLaws) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 2000; ++t) {
    const auto a = random_hurwitz(rng, 20), b = random_hurwitz(rng, 20), c = random_hurwitz(rng, 20);
    EXPECT_EQ((a * b).norm(), a.norm() * b.norm());
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ((a * b).conj(), b.conj() * a.conj());
    EXPECT_EQ(a * a.conj(), Quaternion::integral(a.norm(), 0, 0, 0));
    EXPECT_EQ(a + b - b, a);
  }
  EXPECT_THROW(Quaternion::from_doubled(1, 2, 1, 1), std::invalid_argument);
  const auto i = Quaternion::integral(0, 1, 0, 0), j = Quaternion::integral(0, 0, 1, 0);
  EXPECT_EQ(i * j, Quaternion::integral(0, 0, 0, 1));
  EXPECT_EQ(j * i, Quaternion::integral(0, 0, 0, -1));
}

TEST(Quaternion, UnitsAreTheNormOneElements) {
  const auto& u = quat::hurwitz_units();
  EXPECT_EQ(u.size(), 24u);
  const auto brute = hurwitz_of_norm(1);
  EXPECT_EQ(std::set<Quaternion>(u.begin(), u.end()), std::set<Quaternion>(brute.begin(), brute.end()));
}

TEST(Quaternion, DivisibilityMatchesSearch) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 400; ++t) {
    const i64 n = 2 + static_cast<i64>(rng() % 5);
    const Quaternion q = (rng() & 1) ? random_hurwitz(rng, 2).scaled(n) : random_hurwitz(rng, 6);
    if (q.norm() == 0) continue;
    bool found = false;
    if (q.norm() % (n * n) == 0)
      for (const auto& y : hurwitz_of_norm(q.norm() / (n * n)))
        if (y.scaled(n) == q) found = true;
    EXPECT_EQ(q.divisible_by(n), found) << q.to_string() << " / " << n;
    if (found) EXPECT_EQ(q.divided_by(n).scaled(n), q);
  }
}

TEST(Quaternion, NormPClassesPartitionTheNormPElements) {
  for (i64 p : {3, 5, 7, 11, 13}) {
    const auto reps = quat::norm_p_classes(p);
    ASSERT_EQ(reps.size(), static_cast<std::size_t>(p + 1));
    std::map<Quaternion, int> hits;
    for (const auto& q : hurwitz_of_norm(p)) {
      int owners = 0;
      for (const auto& r : reps)
        for (const auto& u : quat::hurwitz_units())
          if (u * r == q) {
            ++owners;
            break;
          }
      EXPECT_EQ(owners, 1) << q.to_string();
    }
    for (const auto& r : reps) EXPECT_EQ(r.norm(), p);
  }
}

TEST(Quaternion, EmbedRoundTrip) {
  const sphere::LatticePoint x{3, -5, 7};
  EXPECT_EQ(quat::to_point(quat::embed(x)), x);
  EXPECT_TRUE(quat::embed(x).is_pure());
  EXPECT_EQ(quat::embed(x).norm(), x.norm());
  EXPECT_THROW(quat::to_point(Quaternion::integral(1, 0, 0, 0)), std::domain_error);
}
