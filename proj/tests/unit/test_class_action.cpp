#include <gtest/gtest.h>

#include <set>

#include <nlohmann/json.hpp>

#include "equilab/class_action.hpp"

using namespace equilab;
using action::LabeledPacket;

namespace {

std::vector<i64> sample_d() { return {11, 19, 59, 83, 131, 5, 6, 14, 21, 101, 146, 230, 401, 1001}; }

}  // namespace

TEST(ClassAction, SplitPrimesAndOrientation) {
  for (i64 d : sample_d()) {
    for (i64 p : action::split_primes(d, 10)) {
      EXPECT_TRUE(action::is_split(d, p));
      const auto o = action::orientation(d, p);
      EXPECT_EQ(mod(o.rho * o.rho + d, p), 0);
      EXPECT_GT(o.rho, 0);
      EXPECT_LT(2 * o.rho, p);
    }
  }
  EXPECT_THROW(action::orientation(59, 2), std::invalid_argument);
  EXPECT_THROW(action::orientation(59, 59), std::invalid_argument);
}

TEST(ClassAction, ActionPreservesNormAndPrimitivity) {
  for (i64 d : sample_d()) {
    for (i64 p : action::split_primes(d, 4)) {
      const auto o = action::orientation(d, p);
      for (const auto& x : sphere::quotient(d)) {
        const auto y = action::act_point(x.point, o, true);
        EXPECT_EQ(y.norm(), d);
        EXPECT_TRUE(sphere::is_primitive(y));
        EXPECT_EQ(action::act_prime(action::act_prime(x, o), o.conjugate()), x);
      }
    }
  }
}

TEST(ClassAction, PacketsCoverTheQuotientWithClassGroupSizes) {
  for (i64 d : sample_d()) {
    const auto pkts = action::cover_packets(d);
    std::set<sphere::LatticePoint> seen;
    for (const auto& pkt : pkts) {
      EXPECT_EQ(static_cast<int>(pkt.size()), pkt.group->size());
      EXPECT_TRUE(pkt.disc_matched == -d || pkt.disc_matched == -4 * d);
      for (const auto& m : pkt.members) EXPECT_TRUE(seen.insert(m.point).second);
      EXPECT_TRUE(action::check_action_laws(pkt).empty()) << d;
    }
    EXPECT_EQ(seen.size(), sphere::quotient(d).size()) << d;
  }
}

TEST(ClassAction, OrbitCountsByResidueClass) {
  // d = 3 mod 8: two packets of size h(-d). d = 1, 2 mod 4: one of size h(-4d).
  for (i64 d : {11, 19, 59, 83, 131, 251}) {
    const auto pkts = action::cover_packets(d);
    ASSERT_EQ(pkts.size(), 2u) << d;
    for (const auto& p : pkts) EXPECT_EQ(static_cast<i64>(p.size()), qf::class_number(-d));
  }
  for (i64 d : {5, 6, 14, 21, 101, 146, 230}) {
    const auto pkts = action::cover_packets(d);
    ASSERT_EQ(pkts.size(), 1u) << d;
    EXPECT_EQ(static_cast<i64>(pkts[0].size()), qf::class_number(-4 * d));
  }
}

TEST(ClassAction, LabelsAreEquivariant) {
  for (i64 d : {59, 101, 230, 1001}) {
    for (const auto& pkt : action::cover_packets(d)) {
      const auto& G = *pkt.group;
      EXPECT_EQ(pkt.labels[0], G.identity());
      for (std::size_t i = 0; i < pkt.generators.size(); ++i)
        for (const auto& x : pkt.members)
          EXPECT_EQ(action::act_prime(x, pkt.generators[i]), action::act_class(pkt, pkt.generator_classes[i], x));
      for (int s = 0; s < G.size(); ++s)
        for (int t = 0; t < G.size(); ++t)
          for (const auto& x : pkt.members)
            EXPECT_EQ(action::act_class(pkt, s, action::act_class(pkt, t, x)), action::act_class(pkt, G.mul(s, t), x));
      for (std::size_t i = 0; i < pkt.generators.size(); ++i)
        EXPECT_EQ(G.index_of(action::generator_form(pkt.disc_matched, d, pkt.generators[i])), pkt.generator_classes[i]);
    }
  }
}

TEST(ClassAction, LawCheckerCatchesTamperedLabels) {
  auto pkt = action::cover_packets(1001).front();
  ASSERT_GE(pkt.size(), 2u);
  pkt.labels[1] = pkt.labels[0];
  EXPECT_FALSE(action::check_action_laws(pkt).empty());
}

TEST(ClassAction, PacketJson) {
  const auto pkt = action::cover_packets(59).front();
  const auto j = action::packet_to_json(pkt);
  EXPECT_EQ(j["d"], 59);
  EXPECT_EQ(j["members"].size(), pkt.size());
  EXPECT_EQ(j["members"][0]["form"], nlohmann::json::array({1, 1, 15}));
}

TEST(ClassAction, RejectsInadmissibleInput) {
  EXPECT_THROW(action::build_packet(7, {}), std::invalid_argument);
  EXPECT_THROW(action::build_packet(12, {}), std::invalid_argument);
  EXPECT_THROW(action::build_packet(3, {}), std::invalid_argument);
}
