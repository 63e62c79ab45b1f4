#include "equilab/local_factors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "equilab/special.hpp"

namespace equilab::local {

namespace {

constexpr double kPi = std::numbers::pi;

i64 ipow(i64 p, int e) {
  i64 r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

int valuation(i64 x, i64 p, int cap) {
  if (x == 0) return cap;
  int v = 0;
  while (v < cap && x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

i64 unit_part(i64 x, i64 p) {
  while (x != 0 && x % p == 0) x /= p;
  return x;
}

std::string rat_str(const rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

}  // namespace

// ------------------------------------------------------------ characters

PadicCharacter::PadicCharacter(i64 p, int f, int r) : p_(p), f_(f), r_(r), n_(1), pf_(ipow(p, f)) {
  if (!is_prime(p) || f < 0) throw std::invalid_argument("PadicCharacter: need a prime p and f >= 0");
  if (f == 0) {
    r_ = 0;
    dlog_.assign(1, 0);
    return;
  }
  if (p == 2 && f == 1) throw std::invalid_argument("PadicCharacter: no primitive character of conductor 2");
  if (p == 2 && f > 2) throw std::invalid_argument("PadicCharacter: (Z/2^f)^x is not cyclic for f > 2");
  n_ = static_cast<int>(pf_ / p * (p - 1));
  // Generator of the cyclic group (Z/p^f)^x by search.
  i64 g = 0;
  for (i64 c = 2; c < pf_ + 1 && g == 0; ++c) {
    if (c % p == 0) continue;
    i64 x = 1;
    int ord = 0;
    do {
      x = x * c % pf_;
      ++ord;
    } while (x != 1);
    if (ord == n_) g = c;
  }
  if (pf_ == 2 || g == 0) g = pf_ - 1;  // (Z/4)^x = {1, 3}
  dlog_.assign(static_cast<std::size_t>(pf_), -1);
  i64 x = 1;
  for (int e = 0; e < n_; ++e) {
    dlog_[static_cast<std::size_t>(x)] = e;
    x = x * g % pf_;
  }
  r_ = ((r % n_) + n_) % n_;
  // Primitive iff nontrivial on 1 + p^(f-1) Z (on all units when f = 1).
  const i64 step = f == 1 ? 1 : pf_ / p;
  bool primitive = false;
  for (i64 u = 1 + step; u < pf_ + 1 && !primitive; u += step) {
    const i64 res = u % pf_;
    if (res == 1 || res % p == 0) continue;
    if ((static_cast<i64>(r_) * dlog_[static_cast<std::size_t>(res)]) % n_ != 0) primitive = true;
  }
  if (!primitive) throw std::invalid_argument("PadicCharacter: exponent does not give conductor p^f");
}

int PadicCharacter::angle(i64 u) const {
  if (f_ == 0) {
    if (mod(u, p_) == 0) throw std::invalid_argument("PadicCharacter: argument is not a unit");
    return 0;
  }
  const int e = dlog_[static_cast<std::size_t>(mod(u, pf_))];
  if (e < 0) throw std::invalid_argument("PadicCharacter: argument is not a unit");
  return static_cast<int>((static_cast<i64>(r_) * e) % n_);
}

// ------------------------------------------------------------ basis

PadicSchwartz PadicSchwartz::make(i64 p, int j, int f, int k, int r) {
  if (k < 0 || f < 0 || k < 2 * f || j < f || j > k - f)
    throw std::invalid_argument("PadicSchwartz: need k >= 2f and f <= j <= k - f");
  PadicSchwartz S{p, j, f, k, PadicCharacter(p, f, r), 1};
  const rational P(p);
  const rational zeta1 = P / (P - 1);
  const rational phi_plus = [&]() -> rational {
    rational v = 1;
    for (int i = 0; i < j; ++i) v *= P;
    return v * (1 + 1 / P);
  }();
  if (k == 0)
    S.a_squared = 1;
  else if (j == 0)
    S.a_squared = 1 + 1 / P;
  else if (j < k)
    S.a_squared = zeta1 * phi_plus;
  else
    S.a_squared = phi_plus;
  return S;
}

std::optional<int> PadicSchwartz::angle(i64 x, i64 y, i64 pM) const {
  x = mod(x, pM);
  y = mod(y, pM);
  if (k == 0) return 0;
  const int M = valuation(pM, p, 64);
  const int vx = valuation(x, p, M);
  if (j == 0) {
    // Here f = 0 and chi is trivial. The support is Z_p^x * Z_p, the
    // double coset v(c) = 0; Z_p^x * Z_p^x is not K0(p^k)-stable.
    if (vx != 0) return std::nullopt;
    return 0;
  }
  if (y % p == 0) return std::nullopt;
  if (j == k && f == 0) {
    if (vx < k) return std::nullopt;
    return 0;
  }
  if (vx != j) return std::nullopt;
  const int n = chi.order();
  return (n - chi.angle(unit_part(x, p)) + n - chi.angle(y)) % n;
}

std::vector<PadicSchwartz> schwartz_basis(i64 p, int k, int f, int r) {
  std::vector<PadicSchwartz> out;
  for (int j = f; j <= k - f; ++j) out.push_back(PadicSchwartz::make(p, j, f, k, r));
  return out;
}

int invariant_dimension(int k, int f) {
  if (k < 0 || f < 0) throw std::invalid_argument("invariant_dimension: k, f must be nonnegative");
  return std::max(0, k - 2 * f + 1);
}

Mat2 mul_mod(const Mat2& x, const Mat2& y, i64 m) {
  auto mm = [m](i64 a, i64 b, i64 c, i64 d) {
    return mod(static_cast<i64>((static_cast<i128>(a) * b + static_cast<i128>(c) * d) % m), m);
  };
  return {mm(x.a, y.a, x.b, y.c), mm(x.a, y.b, x.b, y.d), mm(x.c, y.a, x.d, y.c), mm(x.c, y.b, x.d, y.d)};
}

// ---------------------------------------------------------- induced

namespace {

i64 det_mod(const Mat2& g, i64 m) {
  return mod(static_cast<i64>((static_cast<i128>(g.a) * g.d - static_cast<i128>(g.b) * g.c) % m), m);
}

void check_depth(const PadicSchwartz& S, int M) {
  if (M < S.k + 1 || M < 1) throw std::invalid_argument("induced_value: depth M must be at least k+1");
}

}  // namespace

InducedValue induced_value(const PadicSchwartz& S, const Mat2& g, int M) {
  check_depth(S, M);
  const i64 p = S.p;
  const i64 q = ipow(p, M);
  const i64 det = det_mod(g, q);
  if (det % p == 0) throw std::invalid_argument("induced_value: det g is not a unit");
  const int n = S.chi.order();
  const Cyclotomic chi_det = S.chi.value(det);

  LaurentValue::Poly shells;
  for (int m = 0; m < M; ++m) {
    // u ranges over units modulo p^max(M-m, f): p^m u mod p^M and chi(u)
    // are both determined there.
    const i64 modulus = ipow(p, std::max(M - m, S.f));
    const i64 pm = ipow(p, m);
    std::vector<i64> hist(static_cast<std::size_t>(n), 0);
    i64 units = 0;
    for (i64 u = 1; u < modulus; ++u) {
      if (u % p == 0) continue;
      ++units;
      const i64 t = static_cast<i64>(static_cast<i128>(pm) * u % q);
      const i64 x = static_cast<i64>(static_cast<i128>(t) * g.c % q);
      const i64 y = static_cast<i64>(static_cast<i128>(t) * g.d % q);
      const auto a = S.angle(x, y, q);
      if (!a) continue;
      hist[static_cast<std::size_t>((*a + 2 * S.chi.angle(u)) % n)] += 1;
    }
    Cyclotomic c(n, 0);
    for (int e = 0; e < n; ++e)
      if (hist[static_cast<std::size_t>(e)] != 0)
        c = c + Cyclotomic::root(n, e).scaled(rational(hist[static_cast<std::size_t>(e)], units));
    if (!c.is_zero()) shells[2 * m] = c;
  }
  LaurentValue v(p, shells, {{0, Cyclotomic(1, 1)}});
  // Shells m >= M all see (0, 0) modulo p^M.
  if (const auto a0 = S.angle(0, 0, q); a0 && S.chi.square_trivial()) {
    LaurentValue::Poly num{{2 * M, Cyclotomic::root(n, *a0)}};
    LaurentValue::Poly den{{0, Cyclotomic(1, 1)}, {2, Cyclotomic(1, -1)}};
    v = v + LaurentValue(p, num, den);
  }
  return {S.a_squared, v * chi_det};
}

InducedValue induced_closed_form(const PadicSchwartz& S, const Mat2& g, int M) {
  check_depth(S, M);
  const i64 p = S.p;
  const i64 q = ipow(p, M);
  const i64 det = det_mod(g, q);
  if (det % p == 0) throw std::invalid_argument("induced_closed_form: det g is not a unit");
  if (S.spherical()) {
    LaurentValue::Poly den{{0, Cyclotomic(1, 1)}, {2, Cyclotomic(1, -1)}};
    return {S.a_squared, LaurentValue(p, {{0, Cyclotomic(1, 1)}}, den)};
  }
  const auto a = S.angle(g.c, g.d, q);
  if (!a) return {S.a_squared, LaurentValue(p, {}, {{0, Cyclotomic(1, 1)}})};
  // chi(det / (c d)) = chi(det) chi^-1(c' d), which is the support angle
  // shifted by chi(det).
  const int n = S.chi.order();
  return {S.a_squared, LaurentValue::constant(p, Cyclotomic::root(n, *a + S.chi.angle(det)))};
}

// ---------------------------------------------------- orthonormality

OrthonormalityReport basis_orthonormality(i64 p, int k, int f, int M) {
  if (M < k + 1) throw std::invalid_argument("basis_orthonormality: depth M must be at least k+1");
  OrthonormalityReport rep;
  std::vector<PadicSchwartz> basis;
  try {
    basis = schwartz_basis(p, k, f);
  } catch (const std::invalid_argument&) {
    return rep;  // no character of this conductor
  }
  rep.dimension = basis.size();
  const i64 q = ipow(p, M);
  // |f_i f_j| is left invariant under the upper triangular part of
  // GL2(Z_p), so the GL2(Z/p^M) average is the average over P^1(Z/p^M).
  std::vector<Mat2> reps;
  for (i64 d = 0; d < q; ++d) reps.push_back({0, -1 + q, 1, d});
  for (i64 c = 0; c < q; c += p) reps.push_back({1, 0, c, 1});
  const rational weight(1, static_cast<i64>(reps.size()));
  const std::size_t r = basis.size();
  std::vector<std::vector<Cyclotomic>> gram(r, std::vector<Cyclotomic>(r, Cyclotomic(1, 0)));
  std::vector<std::vector<Cyclotomic>> values(reps.size());
  for (std::size_t x = 0; x < reps.size(); ++x)
    for (const auto& S : basis) {
      const InducedValue v = induced_value(S, reps[x], M);
      LaurentValue unit = v.value;
      if (S.spherical()) {
        // Divide by L_p(2s, chi^2) = 1 / (1 - X^2).
        unit = unit * LaurentValue(p, {{0, Cyclotomic(1, 1)}, {2, Cyclotomic(1, -1)}}, {{0, Cyclotomic(1, 1)}});
      }
      values[x].push_back(unit.constant_term());
    }
  for (std::size_t x = 0; x < reps.size(); ++x)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        gram[i][j] = gram[i][j] + (values[x][i] * values[x][j].conj()).scaled(weight);
  rep.gram_squared.assign(r, std::vector<rational>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      // |G_ij|^2 = A_i^2 A_j^2 |g_ij|^2, rational.
      const rational g2 = (gram[i][j] * gram[i][j].conj()).to_rational();
      const rational full = basis[i].a_squared * basis[j].a_squared * g2;
      rep.gram_squared[i][j] = full;
      if (i != j && !gram[i][j].is_zero()) rep.off_diagonal_exact_zero = false;
      const double mag = std::sqrt(full.convert_to<double>());
      rep.max_residual = std::max(rep.max_residual, std::abs(mag - (i == j ? 1.0 : 0.0)));
    }
  return rep;
}

// ------------------------------------------------------- equivariance

EquivarianceReport check_equivariance(const PadicSchwartz& S, int M, std::size_t samples, std::mt19937_64& rng) {
  EquivarianceReport rep;
  const i64 p = S.p;
  const i64 q = ipow(p, M);
  const i64 pk = ipow(p, S.k);
  std::uniform_int_distribution<i64> any(0, q - 1);
  auto random_unit = [&] {
    i64 u;
    do u = any(rng);
    while (u % p == 0);
    return u;
  };
  auto random_gl2 = [&](bool k0) {
    Mat2 g;
    do {
      g = {any(rng), any(rng), k0 ? mod(pk * any(rng), q) : any(rng), any(rng)};
    } while (det_mod(g, q) % p == 0);
    return g;
  };
  const int n = S.chi.order();
  for (std::size_t i = 0; i < samples; ++i) {
    const Mat2 g = random_gl2(false);
    const InducedValue v = induced_value(S, g, M);
    ++rep.samples;
    if (v.value != induced_closed_form(S, g, M).value) ++rep.closed_form_mismatches;
    if (!S.spherical() && !v.value.is_constant()) ++rep.s_dependent;
    if (S.j >= std::max(1, S.f) && mod(g.c, p) != 0 && !v.value.is_zero()) ++rep.vanishing_failures;

    const i64 alpha = random_unit(), delta = random_unit(), x = any(rng);
    const Mat2 b{alpha, mod(static_cast<i64>(static_cast<i128>(alpha) * x % q), q), 0, delta};
    const Cyclotomic factor = Cyclotomic::root(n, S.chi.angle(alpha) - S.chi.angle(delta));
    if (induced_value(S, mul_mod(b, g, q), M).value != v.value * factor) ++rep.left_failures;

    const Mat2 kappa = S.k == 0 ? random_gl2(false) : random_gl2(true);
    if (induced_value(S, mul_mod(g, kappa, q), M).value != v.value) ++rep.right_failures;
  }
  return rep;
}

// ---------------------------------------------------------------- Tate

std::string to_string(SplitType t) {
  switch (t) {
    case SplitType::split: return "split";
    case SplitType::inert: return "inert";
    case SplitType::ramified: return "ramified";
  }
  return "?";
}

i64 local_discriminant(i64 p, SplitType t) {
  if (t != SplitType::ramified) return 1;
  return p == 2 ? 8 : p;
}

rational unit_fraction(i64 p, SplitType t) {
  // O_E / p = F_p[x] / (x^2 + u x + v); a + b x is a unit iff its norm
  // a^2 - u a b + v b^2 is nonzero mod p.
  i64 u = 0, v = 0;
  switch (t) {
    case SplitType::split:
      u = p - 1;  // x (x - 1)
      v = 0;
      break;
    case SplitType::ramified:
      u = 0;
      v = 0;
      break;
    case SplitType::inert:
      for (i64 uu = 0; uu < p && u == 0 && v == 0; ++uu)
        for (i64 vv = 1; vv < p; ++vv) {
          bool has_root = false;
          for (i64 r = 0; r < p; ++r)
            if ((r * r + uu * r + vv) % p == 0) has_root = true;
          if (!has_root) {
            u = uu;
            v = vv;
            break;
          }
        }
      break;
  }
  i64 units = 0;
  for (i64 a = 0; a < p; ++a)
    for (i64 b = 0; b < p; ++b)
      if (mod(a * a - u * a * b + v * b * b, p) != 0) ++units;
  return rational(units, p * p);
}

TateResult tate_unramified(i64 p, SplitType t, cplx s, const UnramifiedCharacter& omega, int M) {
  if (!(s.real() > 0.0)) throw std::invalid_argument("tate_unramified: need Re s > 0");
  if (M < 40) throw std::invalid_argument("tate_unramified: truncation M must be at least 40");
  TateResult res;
  res.local_disc = local_discriminant(p, t);
  const double sqrt_d = std::sqrt(static_cast<double>(res.local_disc));
  const rational P(p);
  rational zeta_e1 = P / (P - 1);
  if (t == SplitType::split) zeta_e1 *= P / (P - 1);
  if (t == SplitType::inert) zeta_e1 = (P * P) / (P * P - 1);
  res.volume = (zeta_e1 * unit_fraction(p, t)).convert_to<double>() / sqrt_d;

  const double r = std::pow(static_cast<double>(p), -s.real());
  auto tail = [&](int m) {
    const double rm = std::pow(r, m);
    if (t == SplitType::split) return res.volume * rm * ((m + 1) - m * r) / ((1 - r) * (1 - r));
    return res.volume * rm / (1 - r);
  };
  while (tail(M) > 1e-15 && M < 100000) ++M;
  res.M = M;
  res.tail_bound = tail(M);

  const cplx X = std::exp(-s * std::log(static_cast<double>(p)));
  const cplx z1 = omega.z1, z2 = omega.z2;
  cplx sum = 0.0;
  cplx Xn = 1.0;
  for (int nn = 0; nn < M; ++nn, Xn *= X) {
    cplx c = 0.0;
    switch (t) {
      case SplitType::split:
        for (int m1 = 0; m1 <= nn; ++m1) c += std::pow(z1, m1) * std::pow(z2, nn - m1);
        break;
      case SplitType::inert:
        if (nn % 2 == 0) c = std::pow(z1, nn / 2);
        break;
      case SplitType::ramified:
        c = std::pow(z1, nn);
        break;
    }
    sum += c * Xn;
  }
  res.truncated = res.volume * sum;
  cplx L;
  switch (t) {
    case SplitType::split: L = 1.0 / ((1.0 - z1 * X) * (1.0 - z2 * X)); break;
    case SplitType::inert: L = 1.0 / (1.0 - z1 * X * X); break;
    case SplitType::ramified: L = 1.0 / (1.0 - z1 * X); break;
  }
  res.closed = L / sqrt_d;
  return res;
}

RamifiedLevelP tate_ramified_level_p(i64 p, cplx s, cplx z) {
  if (!(s.real() > 0.0)) throw std::invalid_argument("tate_ramified_level_p: need Re s > 0");
  const i64 D = local_discriminant(p, SplitType::ramified);
  const double sqrt_d = std::sqrt(static_cast<double>(D));
  const PadicSchwartz psi0 = PadicSchwartz::make(p, 0, 0, 1), psi1 = PadicSchwartz::make(p, 1, 0, 1);
  const double a0 = std::sqrt(psi0.a_squared.convert_to<double>());
  const double a1 = std::sqrt(psi1.a_squared.convert_to<double>());
  const double zeta_e1 = static_cast<double>(p) / static_cast<double>(p - 1);
  // t = a + b delta with delta^2 = p (2 at p = 2): Nm t = a^2 - p b^2 and
  // |t|_E = |Nm t|_p. Both supports have v_E(t) <= 1, which the residues
  // (a, b) mod p^2 determine; each cell has additive volume D^-1/2 p^-4.
  const i64 p2 = p * p;
  const double cell = 1.0 / (sqrt_d * static_cast<double>(p2 * p2));
  const cplx ps = std::exp(-s * std::log(static_cast<double>(p)));
  RamifiedLevelP out{};
  for (i64 a = 0; a < p2; ++a)
    for (i64 b = 0; b < p2; ++b) {
      const i64 w0 = (a % p != 0) ? 1 : 0;
      const i64 w1 = (a % p == 0 && b % p != 0) ? 1 : 0;
      if (w0 == 0 && w1 == 0) continue;
      const i64 nm = a * a - p * b * b;
      const int v = valuation(nm, p, 2);
      if (v > 1) throw std::logic_error("tate_ramified_level_p: cell not locally constant");
      const cplx integrand = std::pow(z, v) * std::pow(ps, v) * zeta_e1 * std::pow(static_cast<double>(p), v) * cell;
      if (w0) out.z_psi0 += a0 * integrand;
      if (w1) out.z_psi1 += a1 * integrand;
    }
  out.expect_psi0 = a0 / sqrt_d;
  out.expect_psi1 = a1 * z * ps / sqrt_d;
  out.bound = zeta_e1 * std::pow(static_cast<double>(p), 0.5 - s.real()) / sqrt_d;
  return out;
}

// --------------------------------------------------------- archimedean

ArchResult arch_tate(cplx s) {
  if (!(s.real() > 0.0)) throw std::invalid_argument("arch_tate: need Re s > 0");
  const auto q = special::exp_sinh(
      [&](double r) { return 4.0 * std::exp(-kPi * r * r) * std::exp((2.0 * s - 1.0) * std::log(r)); }, 1e-13);
  const cplx closed = 2.0 * std::exp(-s * std::log(kPi)) * special::gamma(s);
  return {q.value, closed, std::abs(q.value - closed) / std::max(1.0, std::abs(closed))};
}

ArchResult arch_rs_integral(cplx nu1, cplx nu2, cplx s) {
  if (!(s.real() > std::abs(nu1.real()) + std::abs(nu2.real())))
    throw std::invalid_argument("arch_rs_integral: need Re s > |Re nu1| + |Re nu2|");
  const auto q = special::exp_sinh(
      [&](double y) {
        const double x = 2.0 * kPi * y;
        if (x > 700.0) return cplx(0.0);
        return 8.0 * special::bessel_k(nu1, x) * special::bessel_k(nu2, x) * std::exp((s - 1.0) * std::log(y));
      },
      1e-9);
  cplx closed = 1.0 / special::gamma_r(2.0 * s);
  for (double e1 : {1.0, -1.0})
    for (double e2 : {1.0, -1.0}) closed *= special::gamma_r(s + e1 * nu1 + e2 * nu2);
  return {q.value, closed, std::abs(q.value - closed) / std::max(1.0, std::abs(closed))};
}

ArchResult whittaker_norm(cplx nu) {
  // |y| d^x y = dy and the integrand is even, so the R^x integral is twice
  // the half-line one.
  const bool imaginary = nu.real() == 0.0;
  const cplx nub = imaginary ? -nu : nu;
  const auto q = special::exp_sinh(
      [&](double y) {
        const double x = 2.0 * kPi * y;
        if (x > 700.0) return cplx(0.0);
        return 8.0 * special::bessel_k(nu, x) * special::bessel_k(nub, x);
      },
      1e-9);
  const cplx lhs = special::gamma_r(2.0) * q.value;
  const cplx rhs = special::gamma_r(1.0 + 2.0 * nu) * special::gamma_r(1.0 - 2.0 * nu);
  return {lhs, rhs, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs))};
}

// -------------------------------------------------------------- report

nlohmann::json to_json(const Check& c) {
  return {{"name", c.name}, {"params", c.params}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"residual", c.residual},
          {"pass", c.pass}};
}

namespace {

nlohmann::json cjson(cplx z) { return nlohmann::json::array({z.real(), z.imag()}); }

}  // namespace

std::vector<Check> run_local_suite(const LocalSuiteOptions& opt) {
  std::vector<Check> out;
  std::mt19937_64 rng(opt.seed);

  for (i64 p : opt.primes)
    for (int k = 0; k <= opt.k_max; ++k)
      for (int f = 0; f <= opt.f_max; ++f) {
        std::vector<PadicSchwartz> basis;
        try {
          basis = schwartz_basis(p, k, f);
        } catch (const std::invalid_argument&) {
          continue;
        }
        for (const auto& S : basis) {
          const int M = S.k + 2;
          const EquivarianceReport r = check_equivariance(S, M, opt.samples, rng);
          const std::size_t bad = r.closed_form_mismatches + r.left_failures + r.right_failures +
                                  r.vanishing_failures + r.s_dependent;
          Check c;
          c.name = "induced_closed_form";
          c.params = {{"p", p}, {"j", S.j}, {"f", S.f}, {"k", S.k}, {"M", M}, {"samples", r.samples},
                      {"a_squared", rat_str(S.a_squared)}};
          c.lhs = {{"closed_form_mismatches", r.closed_form_mismatches},
                   {"left_failures", r.left_failures},
                   {"right_failures", r.right_failures},
                   {"vanishing_failures", r.vanishing_failures},
                   {"s_dependent", r.s_dependent}};
          c.rhs = 0;
          c.residual = static_cast<double>(bad);
          c.pass = bad == 0 && r.samples >= opt.samples;
          out.push_back(std::move(c));
        }
        if (!basis.empty()) {
          const OrthonormalityReport o = basis_orthonormality(p, k, f, k + 1);
          Check c;
          c.name = "basis_orthonormality";
          c.params = {{"p", p}, {"k", k}, {"f", f}, {"M", k + 1}};
          nlohmann::json g = nlohmann::json::array();
          for (const auto& row : o.gram_squared) {
            nlohmann::json jr = nlohmann::json::array();
            for (const auto& v : row) jr.push_back(rat_str(v));
            g.push_back(jr);
          }
          c.lhs = {{"gram_abs_squared", g}, {"off_diagonal_exact_zero", o.off_diagonal_exact_zero}};
          c.rhs = "identity";
          c.residual = o.max_residual;
          c.pass = o.max_residual == 0.0 && o.off_diagonal_exact_zero;
          out.push_back(std::move(c));
        }
      }

  for (int k = 0; k <= 5; ++k)
    for (int f = 0; f <= 2; ++f)
      for (i64 p : {2, 3, 5}) {
        // Count basis vectors that are verified K0(p^k)-invariant and
        // equivariant on a small sample.
        std::vector<PadicSchwartz> basis;
        try {
          basis = schwartz_basis(p, k, f);
        } catch (const std::invalid_argument&) {
          continue;  // no character of conductor p^f
        }
        std::size_t exhibited = 0;
        for (const auto& S : basis) {
          const EquivarianceReport r = check_equivariance(S, k + 2, 40, rng);
          if (r.left_failures + r.right_failures + r.closed_form_mismatches == 0) ++exhibited;
        }
        const int dim = invariant_dimension(k, f);
        Check c;
        c.name = "invariant_dimension";
        c.params = {{"p", p}, {"k", k}, {"f", f}};
        c.lhs = dim;
        c.rhs = exhibited;
        c.residual = std::abs(dim - static_cast<double>(exhibited));
        c.pass = c.residual == 0.0;
        out.push_back(std::move(c));
      }

  const std::vector<cplx> tate_s = {{1.0, 0.0}, {0.5, 0.0}, {0.5, 3.0}, {2.0, -1.5}, {0.25, 7.0}};
  for (i64 p : {2, 3, 5, 7})
    for (SplitType t : {SplitType::split, SplitType::inert, SplitType::ramified})
      for (cplx s : tate_s)
        for (cplx z : {cplx(1.0, 0.0), std::polar(1.0, 0.7)}) {
          UnramifiedCharacter w{z, t == SplitType::split ? std::conj(z) : z};
          const TateResult r = tate_unramified(p, t, s, w);
          Check c;
          c.name = "tate_unramified";
          c.params = {{"p", p}, {"type", to_string(t)}, {"s", cjson(s)}, {"omega", cjson(z)}, {"M", r.M}};
          c.lhs = cjson(r.truncated);
          c.rhs = cjson(r.closed);
          c.residual = std::abs(r.truncated - r.closed);
          c.pass = c.residual < 1e-12 && c.residual <= r.tail_bound + 1e-14 &&
                   std::abs(r.volume - 1.0 / std::sqrt(static_cast<double>(r.local_disc))) < 1e-15;
          out.push_back(std::move(c));
        }

  for (i64 p : {2, 3, 5, 7})
    for (cplx s : {cplx(0.5, 0.0), cplx(0.25, 2.0), cplx(0.1, -4.0), cplx(0.5, 10.0)})
      for (cplx z : {cplx(1.0, 0.0), std::polar(1.0, 2.0)}) {
        const RamifiedLevelP r = tate_ramified_level_p(p, s, z);
        const double res = std::max(std::abs(r.z_psi0 - r.expect_psi0), std::abs(r.z_psi1 - r.expect_psi1));
        Check c;
        c.name = "tate_ramified_level_p";
        c.params = {{"p", p}, {"s", cjson(s)}, {"omega", cjson(z)}};
        c.lhs = {{"psi0", cjson(r.z_psi0)}, {"psi1", cjson(r.z_psi1)}};
        c.rhs = {{"psi0", cjson(r.expect_psi0)}, {"psi1", cjson(r.expect_psi1)}, {"bound", r.bound}};
        c.residual = res;
        c.pass = res < 1e-12 && std::abs(r.z_psi0) <= r.bound && std::abs(r.z_psi1) <= r.bound;
        out.push_back(std::move(c));
      }

  for (int i = 0; i < 20; ++i) {
    const cplx s(0.1 + 0.15 * (i % 10), (i < 10 ? 1.0 : -1.0) * (i % 7) * 1.5);
    const ArchResult r = arch_tate(s);
    Check c;
    c.name = "arch_tate";
    c.params = {{"s", cjson(s)}};
    c.lhs = cjson(r.quadrature);
    c.rhs = cjson(r.closed);
    c.residual = r.residual;
    c.pass = r.residual < 1e-10;
    out.push_back(std::move(c));
  }

  const std::vector<std::array<cplx, 3>> rs_grid = {
      {{{0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}}},   {{{0.0, 1.0}, {0.0, 1.0}, {1.0, 0.0}}},
      {{{0.0, 2.5}, {0.0, -0.7}, {0.5, 0.0}}},  {{{0.2, 0.0}, {0.1, 0.0}, {1.0, 0.5}}},
      {{{0.0, 0.3}, {0.25, 0.0}, {0.75, -2.0}}}, {{{0.0, 4.0}, {0.0, 4.0}, {1.0, 0.0}}},
      {{{0.0, 1.3}, {0.0, 0.4}, {1.5, 3.0}}},   {{{0.1, 0.0}, {0.0, 2.0}, {0.5, 1.0}}},
      {{{0.0, 0.0}, {0.0, 3.0}, {2.0, 0.0}}},   {{{0.3, 0.0}, {0.3, 0.0}, {1.0, -1.0}}}};
  for (const auto& [n1, n2, s] : rs_grid) {
    const ArchResult r = arch_rs_integral(n1, n2, s);
    const ArchResult sw = arch_rs_integral(n2, -n1, s);
    Check c;
    c.name = "arch_rs_integral";
    c.params = {{"nu1", cjson(n1)}, {"nu2", cjson(n2)}, {"s", cjson(s)}};
    c.lhs = cjson(r.quadrature);
    c.rhs = cjson(r.closed);
    c.residual = std::max(r.residual, std::abs(r.quadrature - sw.quadrature) / std::max(1.0, std::abs(r.closed)));
    c.pass = c.residual < 1e-6;
    out.push_back(std::move(c));
  }

  for (cplx nu : {cplx(0.0, 0.0), cplx(0.0, 1.0), cplx(0.0, 5.5), cplx(0.2, 0.0)}) {
    const ArchResult r = whittaker_norm(nu);
    Check c;
    c.name = "whittaker_norm";
    c.params = {{"nu", cjson(nu)}};
    c.lhs = cjson(r.quadrature);
    c.rhs = cjson(r.closed);
    c.residual = r.residual;
    c.pass = r.residual < 1e-6;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace equilab::local
