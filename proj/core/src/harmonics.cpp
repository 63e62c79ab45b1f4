#include "equilab/harmonics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace equilab::mix {

std::vector<Harmonic> harmonic_family(int L_max) {
  if (L_max < 0 || L_max > kMaxDegree) throw std::invalid_argument("harmonic_family: L_max out of range");
  std::vector<Harmonic> out;
  for (int ell = 0; ell <= L_max; ++ell)
    for (int m = -ell; m <= ell; ++m) out.push_back({ell, m});
  return out;
}

void real_ylm_all(int L, double x, double y, double z, double* out) {
  if (L < 0 || L > kMaxDegree) throw std::invalid_argument("real_ylm_all: degree out of range");
  constexpr double inv4pi = 1.0 / (4.0 * std::numbers::pi);
  const double st = std::sqrt(std::max(0.0, x * x + y * y));
  const double phi = std::atan2(y, x);
  const double ct = z;
  // pbar[l][m] is the orthonormalised associated Legendre function.
  double pbar[kMaxDegree + 1][kMaxDegree + 1] = {};
  pbar[0][0] = std::sqrt(inv4pi);
  for (int m = 1; m <= L; ++m)
    pbar[m][m] = -std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * st * pbar[m - 1][m - 1];
  for (int m = 0; m < L; ++m) pbar[m + 1][m] = std::sqrt(2.0 * m + 3.0) * ct * pbar[m][m];
  for (int m = 0; m <= L; ++m)
    for (int l = m + 2; l <= L; ++l) {
      const double a = std::sqrt((4.0 * l * l - 1.0) / (static_cast<double>(l) * l - static_cast<double>(m) * m));
      const double b = std::sqrt(((l - 1.0) * (l - 1.0) - static_cast<double>(m) * m) /
                                 (4.0 * (l - 1.0) * (l - 1.0) - 1.0));
      pbar[l][m] = a * (ct * pbar[l - 1][m] - b * pbar[l - 2][m]);
    }
  for (int l = 0; l <= L; ++l) {
    out[flat_index(l, 0)] = pbar[l][0];
    for (int m = 1; m <= l; ++m) {
      out[flat_index(l, m)] = std::numbers::sqrt2 * pbar[l][m] * std::cos(m * phi);
      out[flat_index(l, -m)] = std::numbers::sqrt2 * pbar[l][m] * std::sin(m * phi);
    }
  }
}

double real_ylm(const Harmonic& h, double x, double y, double z) {
  if (h.m < -h.ell || h.m > h.ell) throw std::invalid_argument("real_ylm: |m| > ell");
  double buf[(kMaxDegree + 1) * (kMaxDegree + 1)];
  real_ylm_all(h.ell, x, y, z, buf);
  return buf[flat_index(h.ell, h.m)];
}

double eval_harmonic(const Harmonic& h, const sphere::LatticePoint& p, i64 d) {
  const double s = std::sqrt(static_cast<double>(d));
  return real_ylm(h, static_cast<double>(p.x) / s, static_cast<double>(p.y) / s, static_cast<double>(p.z) / s);
}

std::vector<double> symmetrized_all(int L, const sphere::LatticePoint& p, i64 d) {
  const std::size_t n = static_cast<std::size_t>((L + 1) * (L + 1));
  std::vector<double> acc(n, 0.0), buf(n);
  const double s = std::sqrt(static_cast<double>(d));
  for (const auto& g : sphere::rotation_group()) {
    const auto q = sphere::apply(g, p);
    real_ylm_all(L, static_cast<double>(q.x) / s, static_cast<double>(q.y) / s, static_cast<double>(q.z) / s,
                 buf.data());
    for (std::size_t i = 0; i < n; ++i) acc[i] += buf[i];
  }
  for (double& v : acc) v /= 12.0;
  return acc;
}

std::vector<bool> symmetrized_nonvanishing(int L) {
  const std::size_t n = static_cast<std::size_t>((L + 1) * (L + 1));
  std::vector<bool> out(n, false);
  const sphere::LatticePoint probes[] = {{3, 5, 7}, {11, 2, 13}, {1, 17, 4}, {19, 8, 6}, {23, 29, 5}};
  for (const auto& pt : probes) {
    const auto v = symmetrized_all(L, pt, pt.norm());
    for (std::size_t i = 0; i < n; ++i)
      if (std::abs(v[i]) > 1e-10) out[i] = true;
  }
  return out;
}

double eval_symmetrized(const Harmonic& h, const sphere::LatticePoint& p, i64 d) {
  return symmetrized_all(h.ell, p, d)[static_cast<std::size_t>(flat_index(h.ell, h.m))];
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(static_cast<std::size_t>(n), 0.0);
  weights.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    nodes[static_cast<std::size_t>(i)] = x;
    weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

double orthonormality_residual(int L_max) {
  const int K = (L_max + 1) * (L_max + 1);
  std::vector<double> gram(static_cast<std::size_t>(K * K), 0.0);
  std::vector<double> nodes, weights;
  const int nt = L_max + 2;
  const int nphi = 2 * L_max + 3;
  gauss_legendre(nt, nodes, weights);
  std::vector<double> buf(static_cast<std::size_t>(K));
  for (int i = 0; i < nt; ++i) {
    const double z = nodes[static_cast<std::size_t>(i)];
    const double r = std::sqrt(1.0 - z * z);
    for (int j = 0; j < nphi; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / nphi;
      real_ylm_all(L_max, r * std::cos(phi), r * std::sin(phi), z, buf.data());
      const double w = weights[static_cast<std::size_t>(i)] * 2.0 * std::numbers::pi / nphi;
      for (int a = 0; a < K; ++a)
        for (int b = 0; b < K; ++b)
          gram[static_cast<std::size_t>(a * K + b)] += w * buf[static_cast<std::size_t>(a)] * buf[static_cast<std::size_t>(b)];
    }
  }
  double worst = 0.0;
  for (int a = 0; a < K; ++a)
    for (int b = 0; b < K; ++b)
      worst = std::max(worst, std::abs(gram[static_cast<std::size_t>(a * K + b)] - (a == b ? 1.0 : 0.0)));
  return worst;
}

}  // namespace equilab::mix
