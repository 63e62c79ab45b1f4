#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "equilab/class_action.hpp"
#include "equilab/eigenvalues.hpp"
#include "equilab/local_factors.hpp"
#include "equilab/mixing.hpp"
#include "equilab/quadforms.hpp"
#include "equilab/quaternion.hpp"
#include "equilab/sphere.hpp"

using namespace equilab;

TEST(WorkedExamples, Forms) {
  const double bound = 2.0 / std::numbers::pi * std::sqrt(10007.0) + 1.0;
  for (const auto& f : qf::reduced_forms(-10007)) EXPECT_LE(static_cast<double>(qf::minimal_represented(f)), bound);
  EXPECT_EQ(qf::representation_count(qf::principal_form(-23), 1, 100), 2);
  // Zeros modulo an odd prime: 2p - 1 when split, 1 when inert.
  const qf::QuadForm f{2, 1, 3};  // disc -23
  for (i64 p : primes_up_to(60)) {
    if (p == 2 || p == 23) continue;
    EXPECT_EQ(qf::density(f, p), kronecker(-23, p) == 1 ? 2 * p - 1 : 1) << p;
  }
}

TEST(WorkedExamples, Sphere) {
  EXPECT_FALSE(sphere::admissible(7));
  EXPECT_TRUE(sphere::admissible(11));
  EXPECT_FALSE(sphere::admissible(8));
  EXPECT_EQ(sphere::enumerate_points(1).size(), 6u);
  EXPECT_TRUE(sphere::enumerate_points(7).empty());
  // The rotation group acts on the axes through even permutations.
  for (const auto& m : sphere::rotation_group()) {
    int perm[3];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (m[i][j] != 0) perm[i] = j;
    const int inversions = (perm[0] > perm[1]) + (perm[0] > perm[2]) + (perm[1] > perm[2]);
    EXPECT_EQ(inversions % 2, 0);
  }
}

TEST(WorkedExamples, Quaternions) {
  EXPECT_EQ(quat::Quaternion::integral(1, 1, 1, 1).norm(), 4);
  EXPECT_EQ(quat::Quaternion::from_doubled(1, 1, 1, 1).norm(), 1);
  // p (1 + i + j + k) / 2 lies in p times the Hurwitz order although its
  // doubled coordinates are not divisible by 2p.
  EXPECT_TRUE(quat::Quaternion::from_doubled(5, 5, 5, 5).divisible_by(5));
}

TEST(WorkedExamples, ActionIsWellDefinedOnRotationClasses) {
  std::mt19937_64 rng(100);
  const std::vector<i64> ds = {59, 101, 230, 1001, 2003, 4001};
  for (int t = 0; t < 100; ++t) {
    const i64 d = ds[rng() % ds.size()];
    const auto pts = sphere::enumerate_points(d);
    const auto& x = pts[rng() % pts.size()];
    const auto& g = sphere::rotation_group()[rng() % 12];
    const auto primes = action::split_primes(d, 5);
    const auto o = action::orientation(d, primes[rng() % primes.size()]);
    EXPECT_EQ(sphere::canonicalize(action::act_point(x, o)), sphere::canonicalize(action::act_point(sphere::apply(g, x), o)));
  }
}

TEST(WorkedExamples, Packets) {
  for (const auto& pkt : action::cover_packets(11)) {
    ASSERT_EQ(pkt.size(), 1u);
    for (const auto& g : pkt.generators) EXPECT_EQ(action::act_prime(pkt.base, g), pkt.base);
    const auto x = pkt.members[0];
    const auto vals = mix::symmetrized_all(8, x.point, 11);
    double worst = 0;
    for (const auto& h : mix::harmonic_family(8)) {
      const double v = vals[static_cast<std::size_t>(mix::flat_index(h.ell, h.m))];
      EXPECT_DOUBLE_EQ(mix::weyl_sum(pkt, h), v);
      if (h.ell >= 1) worst = std::max(worst, std::abs(v));
    }
    EXPECT_DOUBLE_EQ(mix::discrepancy(pkt, 8), worst);
  }
  for (const auto& pkt : action::cover_packets(59)) EXPECT_EQ(pkt.size(), 3u);

  for (i64 d : {59, 101, 1001, 4001})
    for (const auto& pkt : action::cover_packets(d)) {
      const auto& G = *pkt.group;
      for (const auto& x : pkt.members) {
        EXPECT_EQ(action::act_class(pkt, G.identity(), x), x);
        for (int s = 0; s < G.size(); ++s) {
          EXPECT_EQ(action::act_class(pkt, G.inv(s), action::act_class(pkt, s, x)), x);
          if (s != G.identity()) EXPECT_NE(action::act_class(pkt, s, x), x);
        }
      }
      EXPECT_THROW(action::act_class(pkt, 0, {{0, 0, 0}, 1}), std::out_of_range);
    }
}

TEST(WorkedExamples, Harmonics) {
  EXPECT_NEAR(mix::real_ylm({1, 0}, 0, 0, 1), std::sqrt(3.0 / (4 * std::numbers::pi)), 1e-15);
  const auto pkt = action::cover_packets(1001).front();
  for (const auto& h : mix::harmonic_family(8)) EXPECT_GE(mix::joint_period(pkt, pkt.group->identity(), h, h), 0.0);
}

TEST(WorkedExamples, EmptySums) {
  const auto tab = eig::TauTable::build(100);
  EXPECT_EQ(tab.tau(1), 1);
  EXPECT_EQ(eig::sparse_sum(tab, 2, {3, 1, 5}), 0.0);
  EXPECT_EQ(eig::sieve_product({1, 1, 6}, 2).product, 1.0);
  EXPECT_EQ(eig::squarefree_sum(tab, {1, 1, 6}, 1), 1.0);
  EXPECT_EQ(eig::prime_log_sum({{2, 0.0}, {3, 0.0}}, 100).sum, 0.0);
}

TEST(WorkedExamples, TateTailBound) {
  for (i64 p : {2, 3, 5, 7})
    for (auto t : {local::SplitType::split, local::SplitType::inert, local::SplitType::ramified}) {
      const auto r = local::tate_unramified(p, t, {0.3, 2.0}, {std::polar(1.0, 0.4), std::polar(1.0, -0.4)});
      EXPECT_LE(std::abs(r.closed - r.truncated), r.tail_bound + 1e-15);
      EXPECT_NEAR(r.volume, 1.0 / std::sqrt(static_cast<double>(r.local_disc)), 1e-15);
    }
}
