#pragma once

// Exact local computations: Schwartz-basis induced functions on GL2(Z_p),
// unramified and ramified Tate integrals over quadratic etale algebras, and
// the archimedean Gamma identities.

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "equilab/arith.hpp"
#include "equilab/cyclotomic.hpp"

namespace equilab::local {

using cplx = std::complex<double>;
using exact::Cyclotomic;
using exact::LaurentValue;
using exact::rational;

/// Character of Q_p^x with chi(p) = 1 and conductor p^f, sending a fixed
/// generator of (Z/p^f)^x to zeta_n^r with n = phi(p^f).
class PadicCharacter {
 public:
  /// Throws std::invalid_argument when no primitive character of conductor
  /// p^f exists (p = 2, f = 1) or the exponent r does not make one.
  PadicCharacter(i64 p, int f, int r = 1);

  i64 p() const { return p_; }
  int conductor_exponent() const { return f_; }
  int order() const { return n_; }  // values are n-th roots of unity
  /// Angle a with chi(u) = zeta_n^a; u must be a p-adic unit.
  int angle(i64 u) const;
  Cyclotomic value(i64 u) const { return Cyclotomic::root(n_, angle(u)); }
  bool square_trivial() const { return (2 * r_) % n_ == 0; }

 private:
  i64 p_;
  int f_, r_, n_;
  i64 pf_;
  std::vector<int> dlog_;  // on residues mod p^f, -1 off the units
};

/// The basis vector Psi^(j,f,k) = chi^-1(xy) A_j 1_Lambda(x, y), with
/// Lambda = p^j Z_p^x * Z_p^x for 0 < j < k, p^k Z_p * Z_p^x for j = k
/// (f = 0) and Z_p^x * Z_p for j = 0. For k = 0 this is 1 on Z_p^2.
struct PadicSchwartz {
  i64 p;
  int j, f, k;
  PadicCharacter chi;
  rational a_squared;

  /// Requires k >= 2f and f <= j <= k - f. Throws std::invalid_argument.
  static PadicSchwartz make(i64 p, int j, int f, int k, int r = 1);

  bool spherical() const { return k == 0; }
  /// Angle of Psi(x, y) / A_j for residues mod p^M, or nullopt off support.
  std::optional<int> angle(i64 x, i64 y, i64 pM) const;
};

/// Basis of the K0(p^k)-fixed vectors, j = f..k-f (empty if k < 2f).
std::vector<PadicSchwartz> schwartz_basis(i64 p, int k, int f, int r = 1);

/// max(0, k - 2f + 1).
int invariant_dimension(int k, int f);

struct Mat2 {
  i64 a, b, c, d;
};
Mat2 mul_mod(const Mat2& x, const Mat2& y, i64 m);

/// f(g) = A * value, with A = sqrt(a_squared).
struct InducedValue {
  rational a_squared;
  LaurentValue value;
};

/// Exact shell sum of chi(det g)|det g|^s int Psi((0,t)g) chi^2(t)|t|^2s d^x t
/// with g read modulo p^M. Throws std::invalid_argument if M < k+1 or det g
/// is not a unit.
InducedValue induced_value(const PadicSchwartz& S, const Mat2& g, int M);

/// chi((ad-bc)/(cd)) 1_Lambda(c, d) for k >= 1; L_p(2s, chi^2) for k = 0.
InducedValue induced_closed_form(const PadicSchwartz& S, const Mat2& g, int M);

struct OrthonormalityReport {
  std::size_t dimension = 0;
  double max_residual = 0.0;     // max |Gram - I|
  bool off_diagonal_exact_zero = true;
  std::vector<std::vector<rational>> gram_squared;  // |G_ij|^2 as rationals
};

/// Gram matrix of the basis under the probability average over GL2(Z/p^M)
/// at Re s = 1/2. The spherical vector is taken divided by L_p(2s, chi^2).
OrthonormalityReport basis_orthonormality(i64 p, int k, int f, int M);

struct EquivarianceReport {
  std::size_t samples = 0;
  std::size_t closed_form_mismatches = 0;
  std::size_t left_failures = 0;
  std::size_t right_failures = 0;
  std::size_t vanishing_failures = 0;  // nonzero outside K0(p) for j >= 1
  std::size_t s_dependent = 0;         // k >= 1 values that depend on s
};

/// Samples g uniformly from GL2(Z/p^M) and checks induced_value against the
/// closed form, left (B, chi)-equivariance and right K0(p^k)-invariance.
EquivarianceReport check_equivariance(const PadicSchwartz& S, int M, std::size_t samples, std::mt19937_64& rng);

// ------------------------------------------------------------- Tate

enum class SplitType { split, inert, ramified };
std::string to_string(SplitType t);

/// Unramified character of E_p^x: values on the uniformisers (z1, z2 for
/// split, z for inert and ramified via z1).
struct UnramifiedCharacter {
  cplx z1 = 1.0, z2 = 1.0;
};

struct TateResult {
  cplx closed;
  cplx truncated;
  double tail_bound;
  int M;
  double volume;  // vol(O^x) from the unit count
  i64 local_disc;  // D_p
};

/// D_p of the algebra: 1 split or inert, p ramified (8 at p = 2).
i64 local_discriminant(i64 p, SplitType t);

/// Fraction of O_E / p O_E that is invertible, by direct count.
rational unit_fraction(i64 p, SplitType t);

/// Closed form D_p^(-1/2) L(s, omega) against the valuation-shell sum. M is a
/// lower bound; it is raised until the tail bound is below 1e-15.
/// Throws std::invalid_argument for Re s <= 0 or M < 40.
TateResult tate_unramified(i64 p, SplitType t, cplx s, const UnramifiedCharacter& omega, int M = 40);

struct RamifiedLevelP {
  cplx z_psi0, z_psi1;           // cell sums
  cplx expect_psi0, expect_psi1;  // closed forms
  double bound;                   // zeta_p(1) p^(1/2 - Re s) D_p^(-1/2)
};

/// Tate integrals of the level-p basis (k = 1, f = 0) on the ramified
/// algebra, by exact cell sums over (a, b) mod p^2.
RamifiedLevelP tate_ramified_level_p(i64 p, cplx s, cplx z);

// ------------------------------------------------------ archimedean

struct ArchResult {
  cplx quadrature;
  cplx closed;
  double residual;  // |q - c| / max(1, |c|)
};

/// 4 int_0^inf exp(-pi r^2) r^(2s-1) dr against 2 pi^-s Gamma(s).
ArchResult arch_tate(cplx s);

/// 8 int_0^inf K_nu1(2 pi y) K_nu2(2 pi y) y^(s-1) dy against
/// prod Gamma_R(s +- nu1 +- nu2) / Gamma_R(2s).
/// Throws std::invalid_argument unless Re s > |Re nu1| + |Re nu2|.
ArchResult arch_rs_integral(cplx nu1, cplx nu2, cplx s);

/// Gamma_R(2) int_{R^x} |2 |y|^(1/2) K_nu(2 pi y)|^2 d^x y against
/// Gamma_R(1 + 2nu) Gamma_R(1 - 2nu), for nu imaginary or real |nu| < 1/2.
ArchResult whittaker_norm(cplx nu);

// ------------------------------------------------------------ report

struct Check {
  std::string name;
  nlohmann::json params;
  nlohmann::json lhs, rhs;
  double residual = 0.0;
  bool pass = false;
};

nlohmann::json to_json(const Check& c);

struct LocalSuiteOptions {
  std::vector<i64> primes = {2, 3, 5};
  int k_max = 4;
  int f_max = 1;
  std::size_t samples = 1000;
  std::uint64_t seed = 20240611;
};

/// Every exact and numerical local check, in a fixed order.
std::vector<Check> run_local_suite(const LocalSuiteOptions& opt);

}  // namespace equilab::local
