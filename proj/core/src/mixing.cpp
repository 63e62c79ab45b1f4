#include "equilab/mixing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace equilab::mix {

PacketHarmonics::PacketHarmonics(const LabeledPacket& pkt, int L_max)
    : L_(L_max), K_(static_cast<std::size_t>((L_max + 1) * (L_max + 1))), H_(pkt.size()), v_(K_ * H_) {
  for (std::size_t i = 0; i < H_; ++i) {
    const auto vals = symmetrized_all(L_max, pkt.members[i].point, pkt.d);
    for (std::size_t k = 0; k < K_; ++k) v_[k * H_ + i] = vals[k];
  }
}

namespace {

void check_degree(const Harmonic& h) {
  if (h.ell < 0 || h.ell > kMaxDegree || h.m < -h.ell || h.m > h.ell)
    throw std::invalid_argument("harmonic index out of range");
}

}  // namespace

double weyl_sum(const LabeledPacket& pkt, const Harmonic& h) {
  check_degree(h);
  double acc = 0.0;
  for (const auto& x : pkt.members) acc += eval_symmetrized(h, x.point, pkt.d);
  return acc / static_cast<double>(pkt.size());
}

cplx twisted_weyl(const LabeledPacket& pkt, const Harmonic& h, int chi) {
  check_degree(h);
  if (chi < 0 || chi >= pkt.group->size()) throw std::invalid_argument("twisted_weyl: character not of the packet group");
  cplx acc = 0.0;
  for (std::size_t i = 0; i < pkt.size(); ++i)
    acc += eval_symmetrized(h, pkt.members[i].point, pkt.d) * pkt.group->character(chi, pkt.labels[i]);
  return acc / static_cast<double>(pkt.size());
}

double joint_period(const LabeledPacket& pkt, qf::IdealClassId s, const Harmonic& h1, const Harmonic& h2) {
  check_degree(h1);
  check_degree(h2);
  double acc = 0.0;
  for (const auto& x : pkt.members) {
    const auto y = action::act_class(pkt, s, x);
    acc += eval_symmetrized(h1, x.point, pkt.d) * eval_symmetrized(h2, y.point, pkt.d);
  }
  return acc / static_cast<double>(pkt.size());
}

double discrepancy(const LabeledPacket& pkt, int L_max) {
  if (L_max < 1 || L_max > kMaxDegree) throw std::invalid_argument("discrepancy: L_max out of range");
  PacketHarmonics ph(pkt, L_max);
  double worst = 0.0;
  for (std::size_t k = 1; k < ph.num_harmonics(); ++k) {
    double acc = 0.0;
    for (std::size_t i = 0; i < ph.num_members(); ++i) acc += ph.value(k, i);
    worst = std::max(worst, std::abs(acc / static_cast<double>(ph.num_members())));
  }
  return worst;
}

WeylReport analyze_packet(const LabeledPacket& pkt, int L_max) {
  const auto& G = *pkt.group;
  const PacketHarmonics ph(pkt, L_max);
  const std::size_t H = pkt.size();
  const std::size_t h = static_cast<std::size_t>(G.size());
  const std::size_t K = ph.num_harmonics();
  if (H != h) throw std::logic_error("analyze_packet: packet is not a torsor of its group");

  WeylReport rep;
  rep.d = pkt.d;
  rep.disc_matched = pkt.disc_matched;
  rep.h_class = G.size();
  rep.L_max = L_max;
  rep.harmonics = harmonic_family(L_max);

  // Reindex members by label so that position g holds the member labelled g.
  std::vector<double> F(K * h);
  for (std::size_t g = 0; g < h; ++g) {
    const std::size_t i = pkt.member_with_label(static_cast<qf::IdealClassId>(g));
    for (std::size_t k = 0; k < K; ++k) F[k * h + g] = ph.value(k, i);
  }
  std::vector<cplx> chi(h * h);
  for (std::size_t c = 0; c < h; ++c)
    for (std::size_t g = 0; g < h; ++g)
      chi[c * h + g] = G.character(static_cast<int>(c), static_cast<qf::IdealClassId>(g));

  rep.plain.assign(K, 0.0);
  std::vector<double> mean_sq(K, 0.0);
  for (std::size_t k = 0; k < K; ++k) {
    for (std::size_t g = 0; g < h; ++g) {
      rep.plain[k] += F[k * h + g];
      mean_sq[k] += F[k * h + g] * F[k * h + g];
    }
    rep.plain[k] /= static_cast<double>(h);
    mean_sq[k] /= static_cast<double>(h);
  }
  for (std::size_t k = 1; k < K; ++k) rep.discrepancy = std::max(rep.discrepancy, std::abs(rep.plain[k]));

  rep.twisted.assign(h, std::vector<cplx>(K));
  for (std::size_t c = 0; c < h; ++c)
    for (std::size_t k = 0; k < K; ++k) {
      cplx acc = 0.0;
      for (std::size_t g = 0; g < h; ++g) acc += F[k * h + g] * chi[c * h + g];
      rep.twisted[c][k] = acc / static_cast<double>(h);
    }
  for (std::size_t k = 0; k < K; ++k) {
    double s = 0.0;
    for (std::size_t c = 0; c < h; ++c) s += std::norm(rep.twisted[c][k]);
    rep.plancherel_residual = std::max(rep.plancherel_residual, std::abs(s - mean_sq[k]));
  }
  for (std::size_t c = 0; c < h; ++c) {
    const std::size_t cc = static_cast<std::size_t>(G.conjugate_character(static_cast<int>(c)));
    for (std::size_t k = 0; k < K; ++k)
      rep.conjugation_residual =
          std::max(rep.conjugation_residual, std::abs(std::conj(rep.twisted[c][k]) - rep.twisted[cc][k]));
  }

  // periods[s][a*K+b] = (1/h) sum_g F_a(g) F_b(g s)
  std::vector<std::vector<double>> periods(h, std::vector<double>(K * K, 0.0));
  std::vector<double> shifted(K * h);
  std::vector<cplx> prod(K * h);
  for (std::size_t s = 0; s < h; ++s) {
    for (std::size_t g = 0; g < h; ++g) {
      const std::size_t gs = static_cast<std::size_t>(
          G.mul(static_cast<qf::IdealClassId>(g), static_cast<qf::IdealClassId>(s)));
      for (std::size_t k = 0; k < K; ++k) shifted[k * h + g] = F[k * h + gs];
    }
    auto& P = periods[s];
    for (std::size_t a = 0; a < K; ++a)
      for (std::size_t b = 0; b < K; ++b) {
        double acc = 0.0;
        const double* fa = &F[a * h];
        const double* fb = &shifted[b * h];
        for (std::size_t g = 0; g < h; ++g) acc += fa[g] * fb[g];
        P[a * K + b] = acc / static_cast<double>(h);
      }

    ShiftRow row;
    row.shift = static_cast<qf::IdealClassId>(s);
    row.q = qf::minimal_represented(G.form(row.shift));
    row.diagonal.resize(K);
    for (std::size_t k = 0; k < K; ++k) row.diagonal[k] = P[k * K + k];

    // Parseval side: sum_chi chi(s) W_a(chi) conj W_b(chi).
    for (std::size_t c = 0; c < h; ++c)
      for (std::size_t k = 0; k < K; ++k) prod[k * h + c] = chi[c * h + s] * rep.twisted[c][k];
    double worst = 0.0;
    for (std::size_t a = 0; a < K; ++a)
      for (std::size_t b = 0; b < K; ++b) {
        cplx acc = 0.0;
        for (std::size_t c = 0; c < h; ++c) acc += prod[a * h + c] * std::conj(rep.twisted[c][b]);
        worst = std::max(worst, std::abs(acc - P[a * K + b]));
      }
    row.parseval_residual = worst;
    rep.parseval_residual = std::max(rep.parseval_residual, worst);
    rep.shifts.push_back(std::move(row));
  }
  for (std::size_t s = 0; s < h; ++s) {
    const std::size_t si = static_cast<std::size_t>(G.inv(static_cast<qf::IdealClassId>(s)));
    for (std::size_t a = 0; a < K; ++a)
      for (std::size_t b = 0; b < K; ++b)
        rep.symmetry_residual =
            std::max(rep.symmetry_residual, std::abs(periods[s][a * K + b] - periods[si][b * K + a]));
  }
  return rep;
}

}  // namespace equilab::mix
