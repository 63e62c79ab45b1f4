#include "equilab/class_action.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace equilab::action {

using quat::Quaternion;

bool is_split(i64 d, i64 p) { return p > 2 && d % p != 0 && is_prime(p) && kronecker(-d, p) == 1; }

PrimeOrientation orientation(i64 d, i64 p) {
  if (!is_split(d, p))
    throw std::invalid_argument("orientation: " + std::to_string(p) + " is not split for d=" + std::to_string(d));
  auto r = sqrt_mod_prime(-d, p);
  i64 rho = *r;
  if (2 * rho > p) rho = p - rho;
  return {p, rho};
}

std::vector<i64> split_primes(i64 d, std::size_t count) {
  std::vector<i64> out;
  for (i64 p = 3; out.size() < count; p += 2)
    if (is_split(d, p)) out.push_back(p);
  return out;
}

namespace {

// Right-class representatives of norm p: conjugates of the left classes.
const std::vector<Quaternion>& right_classes(i64 p) {
  static std::mutex mu;
  static std::map<i64, std::vector<Quaternion>> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(p);
  if (it != memo.end()) return it->second;
  std::vector<Quaternion> r;
  for (const auto& q : quat::norm_p_classes(p)) r.push_back(q.conj());
  return memo.emplace(p, std::move(r)).first->second;
}

LatticePoint conjugate_by(const Quaternion& alpha, const Quaternion& q, i64 p, i64 d) {
  Quaternion y = (alpha.conj() * q * alpha).divided_by(p);
  if (!y.is_pure() || y.half_integral()) throw std::logic_error("act_prime: image is not an integral pure vector");
  LatticePoint out = quat::to_point(y);
  if (out.norm() != d) throw std::logic_error("act_prime: image has wrong norm");
  if (!sphere::is_primitive(out)) throw std::logic_error("act_prime: image is imprimitive");
  return out;
}

}  // namespace

LatticePoint act_point(const LatticePoint& x, const PrimeOrientation& o, bool check_all_alpha) {
  const i64 d = x.norm();
  if (!is_split(d, o.p)) throw std::invalid_argument("act_prime: prime not split for this norm");
  if (mod(o.rho * o.rho + d, o.p) != 0) throw std::invalid_argument("act_prime: rho^2 != -d mod p");
  const Quaternion q = quat::embed(x);
  const Quaternion shift = q - Quaternion::integral(o.rho, 0, 0, 0);
  const Quaternion* found = nullptr;
  for (const auto& alpha : right_classes(o.p)) {
    if (!(shift * alpha).divisible_by(o.p)) continue;
    if (found != nullptr) throw std::logic_error("act_prime: more than one right class matches");
    found = &alpha;
  }
  if (found == nullptr) throw std::runtime_error("act_prime: no right class matches (p not split or bad rho)");
  LatticePoint out = conjugate_by(*found, q, o.p, d);
  if (check_all_alpha) {
    // alpha u conjugates the image by u, a rotation of the quotient group.
    const LatticePoint canon = sphere::canonicalize(out).point;
    for (const auto& u : quat::hurwitz_units()) {
      Quaternion alt = *found * u;
      if (!(shift * alt).divisible_by(o.p)) throw std::logic_error("act_prime: right class not closed under units");
      if (sphere::canonicalize(conjugate_by(alt, q, o.p, d)).point != canon)
        throw std::logic_error("act_prime: result depends on alpha");
    }
  }
  return out;
}

OrbitRep act_prime(const OrbitRep& x, const PrimeOrientation& o, bool check_all_alpha) {
  return sphere::canonicalize(act_point(x.point, o, check_all_alpha));
}

qf::QuadForm generator_form(i64 disc, i64 d, const PrimeOrientation& o) {
  const i64 p = o.p;
  if (disc == -4 * d) return qf::reduce({p, -2 * o.rho, (o.rho * o.rho + d) / p});
  if (disc == -d && mod(d, 4) == 3) {
    i64 b = mod(-o.rho, p);
    if (b > p / 2) b -= p;
    if ((b & 1) == 0) b += (b > 0 ? -p : p);
    return qf::reduce({p, b, (b * b + d) / (4 * p)});
  }
  throw std::invalid_argument("generator_form: disc must be -d or -4d");
}

std::size_t LabeledPacket::index_of(const OrbitRep& x) const {
  auto it = by_point.find(x.point);
  if (it == by_point.end()) throw std::out_of_range("point is not a member of the packet");
  return it->second;
}

std::vector<OrbitRep> orbit(const OrbitRep& base, const std::vector<PrimeOrientation>& gens) {
  std::set<LatticePoint> seen = {base.point};
  std::vector<OrbitRep> out = {base};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : gens) {
      OrbitRep y = act_prime(out[i], g);
      if (seen.insert(y.point).second) out.push_back(y);
    }
  return out;
}

namespace {

std::shared_ptr<const qf::ClassGroup> group_for(i64 disc, const std::string& cache_dir) {
  if (cache_dir.empty()) return std::make_shared<const qf::ClassGroup>(qf::ClassGroup::build(disc));
  return std::make_shared<const qf::ClassGroup>(qf::ClassGroup::load_or_build(disc, cache_dir));
}

}  // namespace

LabeledPacket label_packet(i64 d, i64 disc, std::shared_ptr<const qf::ClassGroup> group, const OrbitRep& base,
                           const std::vector<PrimeOrientation>& gens) {
  LabeledPacket pkt;
  pkt.d = d;
  pkt.disc_matched = disc;
  pkt.group = std::move(group);
  pkt.base = base;
  pkt.generators = gens;
  const auto& G = *pkt.group;
  for (const auto& g : gens) pkt.generator_classes.push_back(G.index_of(generator_form(disc, d, g)));
  pkt.by_label.assign(static_cast<std::size_t>(G.size()), SIZE_MAX);
  auto add = [&](const OrbitRep& x, qf::IdealClassId l) {
    if (pkt.by_label[static_cast<std::size_t>(l)] != SIZE_MAX)
      throw std::runtime_error("packet labelling: two members share label " + std::to_string(l) +
                               " (action not free)");
    pkt.by_point[x.point] = pkt.members.size();
    pkt.by_label[static_cast<std::size_t>(l)] = pkt.members.size();
    pkt.members.push_back(x);
    pkt.labels.push_back(l);
  };
  add(base, G.identity());
  for (std::size_t i = 0; i < pkt.members.size(); ++i)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const OrbitRep y = act_prime(pkt.members[i], gens[k]);
      const qf::IdealClassId expect = G.mul(pkt.labels[i], pkt.generator_classes[k]);
      auto it = pkt.by_point.find(y.point);
      if (it == pkt.by_point.end()) {
        add(y, expect);
      } else if (pkt.labels[it->second] != expect) {
        throw std::runtime_error("packet labelling inconsistent at d=" + std::to_string(d) + " p=" +
                                 std::to_string(gens[k].p));
      }
    }
  if (static_cast<int>(pkt.members.size()) != G.size())
    throw std::runtime_error("packet labelling: generators do not reach every class");
  return pkt;
}

LabeledPacket build_packet(i64 d, const OrbitRep& base, const PacketOptions& opt) {
  if (!is_squarefree(d) || d <= 3 || !sphere::admissible(d))
    throw std::invalid_argument("build_packet: d must be squarefree, admissible and > 3");
  std::vector<i64> candidates;
  if (mod(d, 4) == 3) candidates.push_back(-d);
  candidates.push_back(-4 * d);
  std::vector<i64> hs;
  for (i64 disc : candidates) hs.push_back(qf::class_number(disc));
  auto matches = [&](std::size_t n) {
    return std::find(hs.begin(), hs.end(), static_cast<i64>(n)) != hs.end();
  };

  std::vector<PrimeOrientation> gens;
  std::vector<OrbitRep> cur = {base};
  std::set<LatticePoint> cur_set = {base.point};
  std::size_t fails = 0;
  for (i64 p : split_primes(d, opt.prime_cap)) {
    if (matches(cur.size()) && fails >= opt.stable_after) break;
    const PrimeOrientation o = orientation(d, p);
    if (cur_set.count(act_prime(base, o).point) != 0) {
      ++fails;
      continue;
    }
    gens.push_back(o);
    cur = orbit(base, gens);
    cur_set.clear();
    for (const auto& x : cur) cur_set.insert(x.point);
    fails = 0;
  }
  std::size_t which = hs.size();
  for (std::size_t i = 0; i < hs.size(); ++i)
    if (hs[i] == static_cast<i64>(cur.size())) {
      which = i;
      break;
    }
  if (which == hs.size())
    throw std::runtime_error("build_packet: orbit size " + std::to_string(cur.size()) + " at d=" +
                             std::to_string(d) + " matches no class number");
  const i64 disc = candidates[which];
  return label_packet(d, disc, group_for(disc, opt.cache_dir), base, gens);
}

std::vector<LabeledPacket> cover_packets(i64 d, const PacketOptions& opt) {
  std::vector<LabeledPacket> out;
  std::set<LatticePoint> covered;
  for (const auto& rep : sphere::quotient(d)) {
    if (covered.count(rep.point) != 0) continue;
    out.push_back(build_packet(d, rep, opt));
    for (const auto& m : out.back().members)
      if (!covered.insert(m.point).second) throw std::logic_error("cover_packets: packets overlap");
  }
  return out;
}

OrbitRep act_class(const LabeledPacket& pkt, qf::IdealClassId s, const OrbitRep& x) {
  const qf::IdealClassId l = pkt.group->mul(pkt.labels[pkt.index_of(x)], s);
  return pkt.members[pkt.member_with_label(l)];
}

nlohmann::json packet_to_json(const LabeledPacket& pkt) {
  auto pt = [](const LatticePoint& p) { return nlohmann::json::array({p.x, p.y, p.z}); };
  nlohmann::json j;
  j["d"] = pkt.d;
  j["disc_matched"] = pkt.disc_matched;
  j["base"] = pt(pkt.base.point);
  j["members"] = nlohmann::json::array();
  for (std::size_t i = 0; i < pkt.members.size(); ++i) {
    const auto& f = pkt.group->form(pkt.labels[i]);
    j["members"].push_back({{"point", pt(pkt.members[i].point)},
                            {"label", pkt.labels[i]},
                            {"form", {f.a, f.b, f.c}}});
  }
  j["generators"] = nlohmann::json::array();
  for (const auto& g : pkt.generators) j["generators"].push_back({{"p", g.p}, {"rho", g.rho}});
  return j;
}

std::vector<std::string> check_action_laws(const LabeledPacket& pkt) {
  std::vector<std::string> out;
  auto where = [&](const OrbitRep& x, const PrimeOrientation& o) {
    return "d=" + std::to_string(pkt.d) + " x=(" + std::to_string(x.point.x) + "," + std::to_string(x.point.y) + "," +
           std::to_string(x.point.z) + ") p=" + std::to_string(o.p);
  };
  std::set<qf::IdealClassId> labels(pkt.labels.begin(), pkt.labels.end());
  if (labels.size() != pkt.members.size()) out.push_back("d=" + std::to_string(pkt.d) + ": repeated label");
  for (const auto& x : pkt.members)
    for (std::size_t i = 0; i < pkt.generators.size(); ++i) {
      const auto& o = pkt.generators[i];
      try {
        const OrbitRep y = act_prime(x, o, true);
        if (act_prime(y, o.conjugate()) != x) out.push_back(where(x, o) + ": conjugate does not invert");
        for (std::size_t k = i + 1; k < pkt.generators.size(); ++k) {
          const auto& o2 = pkt.generators[k];
          if (act_prime(y, o2) != act_prime(act_prime(x, o2), o))
            out.push_back(where(x, o) + " q=" + std::to_string(o2.p) + ": generators do not commute");
        }
      } catch (const std::exception& e) {
        out.push_back(where(x, o) + ": " + e.what());
      }
    }
  return out;
}

}  // namespace equilab::action
