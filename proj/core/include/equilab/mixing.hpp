#pragma once

// Weyl sums, character-twisted Weyl sums and joint periods over a labelled
// packet, with the finite Fourier identities that tie them together.
// Harmonics are evaluated symmetrised over the rotation group, so they are
// genuine functions on the quotient the packet lives in.

#include <complex>
#include <vector>

#include "equilab/class_action.hpp"
#include "equilab/harmonics.hpp"

namespace equilab::mix {

using action::LabeledPacket;
using cplx = std::complex<double>;

/// Symmetrised harmonic values on every packet member, flat harmonic order.
class PacketHarmonics {
 public:
  PacketHarmonics(const LabeledPacket& pkt, int L_max);

  int L_max() const { return L_; }
  std::size_t num_harmonics() const { return K_; }
  std::size_t num_members() const { return H_; }
  /// Value of harmonic k at member i.
  double value(std::size_t k, std::size_t i) const { return v_[k * H_ + i]; }
  const double* row(std::size_t k) const { return &v_[k * H_]; }

 private:
  int L_;
  std::size_t K_, H_;
  std::vector<double> v_;
};

double weyl_sum(const LabeledPacket& pkt, const Harmonic& h);
cplx twisted_weyl(const LabeledPacket& pkt, const Harmonic& h, int chi);
double joint_period(const LabeledPacket& pkt, qf::IdealClassId s, const Harmonic& h1, const Harmonic& h2);
/// max over 1 <= ell <= L_max and |m| <= ell of |weyl_sum|.
double discrepancy(const LabeledPacket& pkt, int L_max);

struct ShiftRow {
  qf::IdealClassId shift = 0;
  i64 q = 0;                          // minimal norm of the shift class
  std::vector<double> diagonal;       // joint_period(s, h, h) per harmonic
  double parseval_residual = 0.0;     // max over all harmonic pairs
};

struct WeylReport {
  i64 d = 0;
  i64 disc_matched = 0;
  int h_class = 0;
  int L_max = 0;
  std::vector<Harmonic> harmonics;
  std::vector<double> plain;                 // per harmonic
  std::vector<std::vector<cplx>> twisted;    // [chi][harmonic]
  std::vector<ShiftRow> shifts;              // one per class
  double parseval_residual = 0.0;            // max over shifts and pairs
  double symmetry_residual = 0.0;            // P(s,h1,h2) vs P(s^-1,h2,h1)
  double plancherel_residual = 0.0;          // sum_chi |W|^2 vs mean Y^2
  double conjugation_residual = 0.0;         // conj W(chi) vs W(conj chi)
  double discrepancy = 0.0;
};

/// Evaluates everything for harmonics of degree <= L_max and all shifts.
WeylReport analyze_packet(const LabeledPacket& pkt, int L_max);

}  // namespace equilab::mix
