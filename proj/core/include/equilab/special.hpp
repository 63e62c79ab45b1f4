#pragma once

// Complex Gamma, the archimedean factor Gamma_R, the K-Bessel function and a
// double-exponential quadrature on (0, inf).

#include <complex>
#include <functional>

namespace equilab::special {

using cplx = std::complex<double>;

/// Lanczos approximation (g = 7, nine terms) with reflection.
cplx gamma(cplx z);
cplx log_gamma(cplx z);  // Re z >= 1/2 branch, continued by reflection

/// pi^(-s/2) Gamma(s/2).
cplx gamma_r(cplx s);

struct QuadResult {
  cplx value;
  double error;  // difference between the last two refinement levels
  int levels;
};

/// Integral of f over (0, inf) via r = exp((pi/2) sinh u) and the trapezoid
/// rule, halving the step until the relative change is below tol.
/// Throws std::runtime_error if max_levels is reached first.
QuadResult exp_sinh(const std::function<cplx(double)>& f, double tol, int max_levels = 12);

/// K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt for x > 0.
cplx bessel_k(cplx nu, double x);

}  // namespace equilab::special
