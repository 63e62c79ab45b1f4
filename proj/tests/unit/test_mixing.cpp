#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "equilab/mixing.hpp"

using namespace equilab;
using mix::Harmonic;

namespace {

// Joint period straight from the labels, without act_class.
double joint_period_direct(const action::LabeledPacket& pkt, int s, const Harmonic& a, const Harmonic& b) {
  const auto& G = *pkt.group;
  double acc = 0;
  for (std::size_t i = 0; i < pkt.size(); ++i) {
    const int target = G.mul(pkt.labels[i], s);
    std::size_t j = 0;
    while (pkt.labels[j] != target) ++j;
    acc += mix::eval_symmetrized(a, pkt.members[i].point, pkt.d) * mix::eval_symmetrized(b, pkt.members[j].point, pkt.d);
  }
  return acc / static_cast<double>(pkt.size());
}

}  // namespace

TEST(Mixing, ConstantHarmonic) {
  for (const auto& pkt : action::cover_packets(1001)) {
    EXPECT_NEAR(mix::weyl_sum(pkt, {0, 0}), 0.5 / std::sqrt(std::numbers::pi), 1e-14);
    EXPECT_NEAR(std::abs(mix::twisted_weyl(pkt, {0, 0}, 1)), 0.0, 1e-14);
  }
}

TEST(Mixing, JointPeriodMatchesDirectSum) {
  const auto pkt = action::cover_packets(1001).front();
  for (int s = 0; s < pkt.group->size(); s += 3)
    for (const Harmonic a : {Harmonic{2, 0}, Harmonic{4, 0}, Harmonic{6, 4}})
      for (const Harmonic b : {Harmonic{4, 0}, Harmonic{6, -2}})
        EXPECT_NEAR(mix::joint_period(pkt, s, a, b), joint_period_direct(pkt, s, a, b), 1e-14);
}

TEST(Mixing, TrivialCharacterGivesThePlainSum) {
  const auto pkt = action::cover_packets(4001).front();
  for (const auto& h : mix::harmonic_family(6)) {
    const auto w = mix::twisted_weyl(pkt, h, 0);
    EXPECT_NEAR(w.real(), mix::weyl_sum(pkt, h), 1e-14);
    EXPECT_NEAR(w.imag(), 0.0, 1e-14);
  }
}

TEST(Mixing, FourierIdentitiesHold) {
  for (i64 d : {59, 230, 1001, 4001}) {
    for (const auto& pkt : action::cover_packets(d)) {
      const auto rep = mix::analyze_packet(pkt, 8);
      EXPECT_EQ(rep.shifts.size(), static_cast<std::size_t>(pkt.group->size()));
      EXPECT_LT(rep.parseval_residual, 1e-12) << d;
      EXPECT_LT(rep.plancherel_residual, 1e-12) << d;
      EXPECT_LT(rep.symmetry_residual, 1e-12) << d;
      EXPECT_LT(rep.conjugation_residual, 1e-12) << d;
      EXPECT_NEAR(rep.discrepancy, mix::discrepancy(pkt, 8), 1e-15);
      for (std::size_t k = 0; k < rep.harmonics.size(); ++k)
        EXPECT_NEAR(rep.plain[k], mix::weyl_sum(pkt, rep.harmonics[k]), 1e-13);
    }
  }
}

TEST(Mixing, ParsevalByHand) {
  // P(s, h, h) = sum_chi |W_chi(h)|^2 chi(s) for every shift s.
  const auto pkt = action::cover_packets(1001).front();
  const auto& G = *pkt.group;
  const Harmonic h{4, 0};
  std::vector<std::complex<double>> w;
  for (int k = 0; k < G.size(); ++k) w.push_back(mix::twisted_weyl(pkt, h, k));
  for (int s = 0; s < G.size(); ++s) {
    std::complex<double> acc = 0;
    for (int k = 0; k < G.size(); ++k) acc += std::norm(w[static_cast<std::size_t>(k)]) * G.character(k, s);
    EXPECT_NEAR(std::abs(acc - mix::joint_period(pkt, s, h, h)), 0.0, 1e-13);
  }
}

TEST(Mixing, RejectsBadIndices) {
  const auto pkt = action::cover_packets(59).front();
  EXPECT_THROW(mix::weyl_sum(pkt, {17, 0}), std::invalid_argument);
  EXPECT_THROW(mix::weyl_sum(pkt, {2, 3}), std::invalid_argument);
  EXPECT_THROW(mix::twisted_weyl(pkt, {2, 0}, 99), std::invalid_argument);
  EXPECT_THROW(mix::discrepancy(pkt, 0), std::invalid_argument);
}
