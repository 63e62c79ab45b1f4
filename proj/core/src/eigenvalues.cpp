#include "equilab/eigenvalues.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace equilab::eig {

namespace {

bigint big(const int256& v) { return bigint(v); }

}  // namespace

std::vector<Violation> hecke_relations_check(const TauTable& tab, i64 N) {
  if (N > tab.cutoff()) throw std::invalid_argument("hecke_relations_check: N beyond cutoff");
  std::vector<Violation> out;
  if (tab.tau(1) != 1) out.push_back({1, "tau(1) != 1"});
  const auto spf = smallest_prime_factors(static_cast<std::int32_t>(N));
  for (i64 n = 2; n <= N; ++n) {
    const i64 p = spf[static_cast<std::size_t>(n)];
    i64 pk = 1;
    int k = 0;
    i64 m = n;
    while (m % p == 0) {
      m /= p;
      pk *= p;
      ++k;
    }
    if (m > 1) {
      if (big(tab.tau(n)) != big(tab.tau(pk)) * big(tab.tau(m)))
        out.push_back({n, "multiplicativity fails for " + std::to_string(pk) + " * " + std::to_string(m)});
    } else if (k >= 2) {
      const bigint p11 = boost::multiprecision::pow(bigint(p), 11);
      const bigint rhs = big(tab.tau(p)) * big(tab.tau(pk / p)) - p11 * big(tab.tau(pk / p / p));
      if (big(tab.tau(n)) != rhs) out.push_back({n, "prime-power recursion fails"});
    }
  }
  return out;
}

std::vector<Violation> deligne_check(const TauTable& tab, i64 P) {
  if (P > tab.cutoff()) throw std::invalid_argument("deligne_check: P beyond cutoff");
  std::vector<Violation> out;
  for (i64 p : primes_up_to(P)) {
    // Exact: tau(p)^2 <= 4 p^11.
    const bigint t = big(tab.tau(p));
    if (t * t > 4 * boost::multiprecision::pow(bigint(p), 11)) out.push_back({p, "|lambda(p)| > 2"});
  }
  return out;
}

double hecke_inequality_rhs(double lambda_p) {
  const double t = lambda_p * lambda_p - 1.0;
  return 1.0 + 0.5 * t - t * t / 18.0;
}

std::vector<Violation> hecke_inequality_check(const TauTable& tab, i64 P) {
  if (P > tab.cutoff()) throw std::invalid_argument("hecke_inequality_check: P beyond cutoff");
  constexpr double slack = 1e-9;
  std::vector<Violation> out;
  for (i64 p : primes_up_to(P)) {
    const double lp = tab.lambda(p);
    if (std::abs(lp) > hecke_inequality_rhs(lp) + slack) out.push_back({p, "Hecke inequality fails"});
    if (p * p <= tab.cutoff() && std::abs(tab.lambda(p * p) - (lp * lp - 1.0)) > slack)
      out.push_back({p, "lambda(p^2) != lambda(p)^2 - 1"});
  }
  return out;
}

double sparse_sum(const TauTable& tab, i64 Y, const qf::QuadForm& form) {
  if (!qf::is_reduced(form)) throw std::invalid_argument("sparse_sum: form must be reduced");
  if (Y > tab.cutoff()) throw std::invalid_argument("sparse_sum: Y beyond cutoff");
  if (Y < 1) return 0.0;
  const i64 D = -form.disc();
  const i64 ry = isqrt(4 * form.a * Y / D);
  double acc = 0.0;
  for (i64 y = -ry; y <= ry; ++y) {
    const i64 delta = 4 * form.a * Y - D * y * y;
    if (delta < 0) continue;
    const i64 s = isqrt(delta);
    i64 lo = static_cast<i64>(std::floor(static_cast<double>(-form.b * y - s) / (2.0 * form.a))) - 1;
    i64 hi = static_cast<i64>(std::ceil(static_cast<double>(-form.b * y + s) / (2.0 * form.a))) + 1;
    for (i64 x = lo; x <= hi; ++x) {
      if (x == 0 && y == 0) continue;
      const i64 v = form(x, y);
      if (v <= Y) acc += std::abs(tab.lambda(v));
    }
  }
  return acc;
}

SieveProduct sieve_product(const qf::QuadForm& form, i64 X) {
  if (X > 1'000'000) throw std::invalid_argument("sieve_product: X beyond 10^6");
  SieveProduct out;
  const i64 disc = form.disc();
  for (i64 p : primes_up_to(X)) {
    const int chi = kronecker(disc, p);
    out.l1_euler /= 1.0 - static_cast<double>(chi) / static_cast<double>(p);
    if (p < 3) continue;
    const double rho = static_cast<double>(qf::density_prime_power(form, p, 1));
    out.product *= 1.0 - rho / (static_cast<double>(p) * static_cast<double>(p));
  }
  return out;
}

double squarefree_sum(const TauTable& tab, const qf::QuadForm& form, i64 X) {
  if (X > tab.cutoff()) throw std::invalid_argument("squarefree_sum: X beyond cutoff");
  if (X < 1) return 0.0;
  const auto spf = smallest_prime_factors(static_cast<std::int32_t>(X));
  std::vector<double> rho_p(static_cast<std::size_t>(X) + 1, 0.0);
  for (i64 p : primes_up_to(X)) rho_p[static_cast<std::size_t>(p)] = static_cast<double>(qf::density_prime_power(form, p, 1));
  double acc = 0.0;
  for (i64 a = 1; a <= X; ++a) {
    double rho = 1.0;
    bool squarefree = true;
    for (i64 m = a; m > 1;) {
      const i64 p = spf[static_cast<std::size_t>(m)];
      m /= p;
      if (m % p == 0) {
        squarefree = false;
        break;
      }
      rho *= rho_p[static_cast<std::size_t>(p)];
    }
    if (!squarefree) continue;
    const double ad = static_cast<double>(a);
    acc += std::abs(tab.lambda(a)) * rho / (ad * ad);
  }
  return acc;
}

PrimeLogSum prime_log_sum(const std::map<i64, double>& coeffs, i64 x, const LocalRoots& roots) {
  PrimeLogSum out;
  for (auto it = coeffs.begin(); it != coeffs.end() && it->first <= x; ++it)
    out.sum += it->second / static_cast<double>(it->first);
  for (auto it = roots.begin(); it != roots.end() && it->first <= x; ++it) {
    const double p = static_cast<double>(it->first);
    for (const auto& r : it->second) out.log_euler -= std::log(1.0 - r / p).real();
  }
  return out;
}

CoefficientFamily zeta_family(i64 x) {
  CoefficientFamily f;
  for (i64 p : primes_up_to(x)) {
    f.coeffs[p] = 1.0;
    f.roots[p] = {1.0};
  }
  return f;
}

CoefficientFamily sym2_theta_family(const TauTable& tab, i64 disc, i64 x) {
  if (x > tab.cutoff()) throw std::invalid_argument("sym2_theta_family: x beyond cutoff");
  CoefficientFamily f;
  for (i64 p : primes_up_to(x)) {
    const double lp = tab.lambda(p);
    const double chi = static_cast<double>(kronecker(disc, p));
    f.coeffs[p] = (lp * lp - 1.0) * (1.0 + chi);
    // alpha, beta = exp(+-i theta) with 2 cos theta = lambda(p).
    const double theta = std::acos(std::clamp(lp / 2.0, -1.0, 1.0));
    const std::complex<double> a2 = std::polar(1.0, 2.0 * theta), b2 = std::polar(1.0, -2.0 * theta);
    std::vector<std::complex<double>> r = {a2, 1.0, b2};
    if (chi != 0.0)
      for (const auto& z : std::vector<std::complex<double>>{a2, 1.0, b2}) r.push_back(z * chi);
    f.roots[p] = r;
  }
  return f;
}

}  // namespace equilab::eig
