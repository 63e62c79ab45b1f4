#pragma once

// Real spherical harmonics (Condon-Shortley phase) up to degree 16.

#include <vector>

#include "equilab/sphere.hpp"

namespace equilab::mix {

inline constexpr int kMaxDegree = 16;

struct Harmonic {
  int ell = 0;
  int m = 0;  // |m| <= ell; m < 0 selects the sine harmonic

  auto operator<=>(const Harmonic&) const = default;
};

/// Position of (ell, m) in the flat ordering ell^2 + ell + m.
inline int flat_index(int ell, int m) { return ell * ell + ell + m; }

/// All harmonics with ell <= L_max in flat order.
std::vector<Harmonic> harmonic_family(int L_max);

/// Y_{ell m} at a unit vector.
double real_ylm(const Harmonic& h, double x, double y, double z);

/// Every Y_{ell m} with ell <= L at a unit vector, in flat order
/// (out must hold (L + 1)^2 values).
void real_ylm_all(int L, double x, double y, double z, double* out);

/// Y(p / sqrt d).
double eval_harmonic(const Harmonic& h, const sphere::LatticePoint& p, i64 d);

/// Average of Y over the 12 rotation images of p / sqrt d. This is the
/// value of the harmonic viewed as a function on the quotient.
double eval_symmetrized(const Harmonic& h, const sphere::LatticePoint& p, i64 d);

/// All symmetrised values at once, flat order.
std::vector<double> symmetrized_all(int L, const sphere::LatticePoint& p, i64 d);

/// Flat-order mask of the symmetrised harmonics that are not identically
/// zero, decided by evaluation at generic points.
std::vector<bool> symmetrized_nonvanishing(int L);

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// Max deviation of the Gram matrix of the family from the identity under
/// an exact product quadrature.
double orthonormality_residual(int L_max);

}  // namespace equilab::mix
