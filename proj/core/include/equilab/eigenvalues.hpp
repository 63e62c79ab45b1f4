#pragma once

// Sums of normalised Hecke eigenvalues over values of binary quadratic
// forms, sieve products of local densities, and prime sums.

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "equilab/quadforms.hpp"
#include "equilab/tau.hpp"

namespace equilab::eig {

struct Violation {
  i64 n = 0;
  std::string what;
};

/// tau(p^(k+1)) = tau(p) tau(p^k) - p^11 tau(p^(k-1)) and tau(mn) = tau(m) tau(n)
/// for coprime m, n, checked exactly for every n <= N.
std::vector<Violation> hecke_relations_check(const TauTable& tab, i64 N);

/// |lambda(p)| <= 2 for every prime p <= P.
std::vector<Violation> deligne_check(const TauTable& tab, i64 P);

/// Right side of |lambda(p)| <= 1 + t/2 - t^2/18 with t = lambda(p)^2 - 1.
double hecke_inequality_rhs(double lambda_p);

/// Primes p <= P violating the inequality beyond a 1e-9 slack. When p^2 is
/// within the table, lambda(p^2) is also checked against lambda(p)^2 - 1.
std::vector<Violation> hecke_inequality_check(const TauTable& tab, i64 P);

/// Sum of |lambda(Q(x, y))| over nonzero (x, y) with Q(x, y) <= Y. The form
/// must be reduced.
double sparse_sum(const TauTable& tab, i64 Y, const qf::QuadForm& form);

struct SieveProduct {
  double product = 1.0;    // prod_{3 <= p <= X} (1 - rho(p) / p^2)
  double l1_euler = 1.0;   // prod_{p <= X} (1 - chi(p) / p)^(-1)
};
SieveProduct sieve_product(const qf::QuadForm& form, i64 X);

/// Sum over squarefree a <= X of |lambda(a)| rho(a) / a^2.
double squarefree_sum(const TauTable& tab, const qf::QuadForm& form, i64 X);

struct PrimeLogSum {
  double sum = 0.0;        // sum_{p <= x} c(p) / p
  double log_euler = 0.0;  // -sum_{p <= x} sum_roots log(1 - root / p), real part
};

using LocalRoots = std::map<i64, std::vector<std::complex<double>>>;

/// Primes missing from `coeffs` count as zero. Roots default to none.
PrimeLogSum prime_log_sum(const std::map<i64, double>& coeffs, i64 x, const LocalRoots& roots = {});

struct CoefficientFamily {
  std::map<i64, double> coeffs;
  LocalRoots roots;
};

/// c(p) = 1 with the single root 1.
CoefficientFamily zeta_family(i64 x);

/// c(p) = lambda(p^2)(1 + chi(p)) with roots {alpha^2, 1, beta^2} x {1, chi(p)}.
CoefficientFamily sym2_theta_family(const TauTable& tab, i64 disc, i64 x);

}  // namespace equilab::eig
