#pragma once

// The class group action on sphere points by conjugation with norm-p
// Hurwitz quaternions, and packets of points labelled by class group
// elements.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "equilab/quadforms.hpp"
#include "equilab/quaternion.hpp"
#include "equilab/sphere.hpp"

namespace equilab::action {

using sphere::LatticePoint;
using sphere::OrbitRep;

struct PrimeOrientation {
  i64 p = 0;
  i64 rho = 0;  // rho^2 = -d mod p

  PrimeOrientation conjugate() const { return {p, -rho}; }
  auto operator<=>(const PrimeOrientation&) const = default;
};

/// p odd, p not dividing d, (-d | p) = 1.
bool is_split(i64 d, i64 p);

/// Orientation with the square root of -d taken in (0, p/2).
/// Throws std::invalid_argument when p is not split for d.
PrimeOrientation orientation(i64 d, i64 p);

/// Split primes for d in increasing order, at most `count` of them.
std::vector<i64> split_primes(i64 d, std::size_t count);

/// Image of a point under the ideal class of (p, x - rho). Asserts
/// uniqueness of the matching right class and integrality, purity and norm
/// of the result. With check_all_alpha every generator of the matching
/// right class is tried and must give the same rotation class.
LatticePoint act_point(const LatticePoint& x, const PrimeOrientation& o, bool check_all_alpha = false);

/// act_point on the canonical point, canonicalised.
OrbitRep act_prime(const OrbitRep& x, const PrimeOrientation& o, bool check_all_alpha = false);

/// Class of the ideal acting through act_prime, as a form of discriminant
/// disc (which must be -d or -4d).
qf::QuadForm generator_form(i64 disc, i64 d, const PrimeOrientation& o);

struct LabeledPacket {
  i64 d = 0;
  i64 disc_matched = 0;
  std::shared_ptr<const qf::ClassGroup> group;
  OrbitRep base;
  std::vector<OrbitRep> members;          // in BFS order, members[0] == base
  std::vector<qf::IdealClassId> labels;   // labels[i] labels members[i]
  std::vector<PrimeOrientation> generators;
  std::vector<qf::IdealClassId> generator_classes;

  std::size_t size() const { return members.size(); }
  /// Throws std::out_of_range if x is not a member.
  std::size_t index_of(const OrbitRep& x) const;
  qf::IdealClassId label(const OrbitRep& x) const { return labels[index_of(x)]; }
  std::size_t member_with_label(qf::IdealClassId l) const { return by_label.at(static_cast<std::size_t>(l)); }

  std::map<LatticePoint, std::size_t> by_point;
  std::vector<std::size_t> by_label;
};

struct PacketOptions {
  std::size_t prime_cap = 20;
  /// Further primes that must fail to enlarge the orbit once its size
  /// equals a candidate class number.
  std::size_t stable_after = 4;
  std::string cache_dir;  // empty: build class groups in memory
};

/// Orbit of base under the listed primes (forward action only, which
/// suffices in a finite group).
std::vector<OrbitRep> orbit(const OrbitRep& base, const std::vector<PrimeOrientation>& gens);

/// Chooses generators, matches the orbit size against h(-d) (when
/// d = 3 mod 4) and h(-4d), then labels every member. Throws
/// std::runtime_error when no class number matches or the labelling is
/// inconsistent.
LabeledPacket build_packet(i64 d, const OrbitRep& base, const PacketOptions& opt = {});

/// Labelled packet for fixed generators and discriminant.
LabeledPacket label_packet(i64 d, i64 disc, std::shared_ptr<const qf::ClassGroup> group, const OrbitRep& base,
                           const std::vector<PrimeOrientation>& gens);

/// Disjoint packets covering the whole quotient of norm d.
std::vector<LabeledPacket> cover_packets(i64 d, const PacketOptions& opt = {});

/// The member labelled label(x) * s. Throws std::out_of_range if x is not a member.
OrbitRep act_class(const LabeledPacket& pkt, qf::IdealClassId s, const OrbitRep& x);

nlohmann::json packet_to_json(const LabeledPacket& pkt);

/// Checks on every member and generator: the conjugate prime undoes the
/// action, generators commute, the result does not depend on the choice of
/// alpha, and distinct members carry distinct labels. Returns one message
/// per violation.
std::vector<std::string> check_action_laws(const LabeledPacket& pkt);

}  // namespace equilab::action
