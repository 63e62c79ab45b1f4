#include "equilab/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace equilab::special {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

cplx log_gamma_right(cplx z) {
  z -= 1.0;
  cplx x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  const cplx t = z + kG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

cplx log_gamma(cplx z) {
  if (z.real() >= 0.5) return log_gamma_right(z);
  // Gamma(z) Gamma(1-z) = pi / sin(pi z)
  return std::log(kPi / std::sin(kPi * z)) - log_gamma_right(1.0 - z);
}

cplx gamma(cplx z) {
  if (z.real() < 0.5) return kPi / (std::sin(kPi * z) * gamma(1.0 - z));
  return std::exp(log_gamma_right(z));
}

cplx gamma_r(cplx s) { return std::exp(-0.5 * s * std::log(kPi)) * gamma(0.5 * s); }

QuadResult exp_sinh(const std::function<cplx(double)>& f, double tol, int max_levels) {
  // Walks u = start + k*step outward in both directions until the terms are
  // negligible or r leaves the double range.
  auto sweep = [&](double step, double start, cplx scale) {
    cplx acc = 0.0;
    for (int dir : {1, -1}) {
      int small = 0;
      for (long k = 0;; ++k) {
        const double u = dir * (start + static_cast<double>(k) * step);
        if (dir == -1 && u == 0.0) continue;
        const double e = 0.5 * kPi * std::sinh(u);
        if (std::abs(e) > 700.0) break;
        const double r = std::exp(e);
        const cplx term = f(r) * (r * 0.5 * kPi * std::cosh(u));
        acc += term;
        if (std::abs(term) <= 1e-18 * std::max(std::abs(acc), std::abs(scale))) {
          if (++small >= 4) break;
        } else {
          small = 0;
        }
      }
    }
    return acc;
  };
  double h = 0.5;
  cplx sum = sweep(h, 0.0, 0.0);
  cplx value = h * sum;
  for (int level = 1; level <= max_levels; ++level) {
    sum += sweep(h, 0.5 * h, sum);
    h *= 0.5;
    const cplx next = h * sum;
    const double err = std::abs(next - value);
    value = next;
    if (level >= 3 && err <= tol * std::max(1.0, std::abs(value))) return {value, err, level};
  }
  throw std::runtime_error("exp_sinh: quadrature did not converge");
}

cplx bessel_k(cplx nu, double x) {
  if (!(x > 0.0)) throw std::domain_error("bessel_k: x must be positive");
  // Even analytic integrand: the trapezoid rule on the half line converges
  // geometrically. Stop once exp(-x cosh t) is far below the growth of cosh.
  const double h = 0.1;
  const double growth = std::abs(nu.real());
  cplx acc = 0.5 * std::exp(-x);
  for (long k = 1;; ++k) {
    const double t = static_cast<double>(k) * h;
    const double expo = -x * std::cosh(t);
    acc += std::exp(expo) * std::cosh(nu * t);
    if (expo + growth * t < -745.0 || (expo + growth * t < -60.0 && t > 1.0)) break;
  }
  return h * acc;
}

}  // namespace equilab::special
