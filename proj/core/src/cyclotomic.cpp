#include "equilab/cyclotomic.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace equilab::exact {

namespace {

using IntPoly = std::vector<long long>;

IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  // den is monic.
  IntPoly q(num.size() - den.size() + 1, 0);
  for (std::size_t i = num.size(); i-- >= den.size();) {
    const long long coef = num[i];
    const std::size_t shift = i - (den.size() - 1);
    q[shift] = coef;
    for (std::size_t k = 0; k < den.size(); ++k) num[shift + k] -= coef * den[k];
    if (i == den.size() - 1) break;
  }
  return q;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(int n) {
  static std::mutex mu;
  static std::map<int, IntPoly> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
  }
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  IntPoly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divide_exact(p, cyclotomic_polynomial(d));
  std::lock_guard<std::mutex> lock(mu);
  return memo.emplace(n, std::move(p)).first->second;
}

Cyclotomic::Cyclotomic(int n, const rational& q) : n_(n) {
  const auto& phi = cyclotomic_polynomial(n);
  c_.assign(phi.size() - 1, 0);
  c_[0] = q;
}

Cyclotomic Cyclotomic::root(int n, long long k) {
  std::vector<rational> full(static_cast<std::size_t>(n), 0);
  long long r = k % n;
  if (r < 0) r += n;
  full[static_cast<std::size_t>(r)] = 1;
  return from_full(n, std::move(full));
}

Cyclotomic Cyclotomic::from_full(int n, std::vector<rational> full) {
  const auto& phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = full.size(); i-- > deg;) {
    const rational coef = full[i];
    if (coef == 0) continue;
    const std::size_t shift = i - deg;
    for (std::size_t k = 0; k <= deg; ++k) full[shift + k] -= coef * phi[k];
  }
  Cyclotomic out(n);
  for (std::size_t i = 0; i < deg; ++i) out.c_[i] = full[i];
  return out;
}

std::vector<rational> Cyclotomic::full() const {
  std::vector<rational> f(static_cast<std::size_t>(n_), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) f[i] = c_[i];
  return f;
}

Cyclotomic Cyclotomic::lifted(int m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) throw std::invalid_argument("cyclotomic lift: order does not divide");
  const int step = m / n_;
  std::vector<rational> f(static_cast<std::size_t>(m), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) f[i * static_cast<std::size_t>(step)] = c_[i];
  return from_full(m, std::move(f));
}

int Cyclotomic::common(const Cyclotomic& a, const Cyclotomic& b) { return std::lcm(a.n_, b.n_); }

bool Cyclotomic::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

rational Cyclotomic::to_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) throw std::domain_error("cyclotomic value is not rational");
  return c_[0];
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(i) / n_;
    acc += c_[i].convert_to<double>() * std::polar(1.0, theta);
  }
  return acc;
}

Cyclotomic Cyclotomic::conj() const {
  auto f = full();
  std::vector<rational> g(f.size(), 0);
  for (std::size_t i = 0; i < f.size(); ++i) g[(f.size() - i) % f.size()] = f[i];
  return from_full(n_, std::move(g));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  const int m = common(*this, o);
  Cyclotomic a = lifted(m), b = o.lifted(m);
  for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return a;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic a = *this;
  for (auto& v : a.c_) v = -v;
  return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  const int m = common(*this, o);
  const Cyclotomic a = lifted(m), b = o.lifted(m);
  std::vector<rational> f(static_cast<std::size_t>(m), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t k = 0; k < b.c_.size(); ++k)
      if (b.c_[k] != 0) f[(i + k) % static_cast<std::size_t>(m)] += a.c_[i] * b.c_[k];
  }
  return from_full(m, std::move(f));
}

Cyclotomic Cyclotomic::scaled(const rational& q) const {
  Cyclotomic a = *this;
  for (auto& v : a.c_) v *= q;
  return a;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  const int m = common(*this, o);
  return lifted(m).c_ == o.lifted(m).c_;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << c_[i];
    if (i > 0) os << "*z" << n_ << "^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------- Laurent

LaurentValue::LaurentValue(long long p, Poly num, Poly den) : p_(p), num_(std::move(num)), den_(std::move(den)) {
  prune(num_);
  prune(den_);
  if (den_.empty()) throw std::domain_error("LaurentValue: zero denominator");
}

LaurentValue LaurentValue::constant(long long p, const Cyclotomic& c) { return monomial(p, 0, c); }

LaurentValue LaurentValue::monomial(long long p, int m, const Cyclotomic& c) {
  Poly num;
  num[m] = c;
  Poly den;
  den[0] = Cyclotomic(1, 1);
  return LaurentValue(p, std::move(num), std::move(den));
}

void LaurentValue::prune(Poly& a) {
  for (auto it = a.begin(); it != a.end();) {
    if (it->second.is_zero())
      it = a.erase(it);
    else
      ++it;
  }
}

LaurentValue::Poly LaurentValue::mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [i, x] : a)
    for (const auto& [k, y] : b) {
      auto it = out.find(i + k);
      if (it == out.end())
        out.emplace(i + k, x * y);
      else
        it->second = it->second + x * y;
    }
  prune(out);
  return out;
}

LaurentValue LaurentValue::operator+(const LaurentValue& o) const {
  if (p_ != o.p_) throw std::invalid_argument("LaurentValue: prime mismatch");
  if (den_ == o.den_) {
    Poly num = num_;
    for (const auto& [k, v] : o.num_) {
      auto it = num.find(k);
      if (it == num.end())
        num.emplace(k, v);
      else
        it->second = it->second + v;
    }
    return LaurentValue(p_, std::move(num), den_);
  }
  Poly num = mul(num_, o.den_);
  for (const auto& [k, v] : mul(o.num_, den_)) {
    auto it = num.find(k);
    if (it == num.end())
      num.emplace(k, v);
    else
      it->second = it->second + v;
  }
  return LaurentValue(p_, std::move(num), mul(den_, o.den_));
}

LaurentValue LaurentValue::operator*(const LaurentValue& o) const {
  if (p_ != o.p_) throw std::invalid_argument("LaurentValue: prime mismatch");
  return LaurentValue(p_, mul(num_, o.num_), mul(den_, o.den_));
}

LaurentValue LaurentValue::operator*(const Cyclotomic& c) const {
  Poly num = num_;
  for (auto& [k, v] : num) v = v * c;
  return LaurentValue(p_, std::move(num), den_);
}

bool LaurentValue::operator==(const LaurentValue& o) const {
  if (p_ != o.p_) return false;
  Poly lhs = mul(num_, o.den_), rhs = mul(o.num_, den_);
  if (lhs.size() != rhs.size()) return false;
  for (auto a = lhs.begin(), b = rhs.begin(); a != lhs.end(); ++a, ++b)
    if (a->first != b->first || a->second != b->second) return false;
  return true;
}

std::optional<Cyclotomic> LaurentValue::constant_value() const {
  if (num_.empty()) return Cyclotomic(1, 0);
  // Candidate from the lowest terms; the denominators built here always
  // have a rational lowest coefficient.
  const auto& [dn, dc] = *den_.begin();
  const auto& [nn, nc] = *num_.begin();
  if (dn != nn) return std::nullopt;
  rational inv;
  try {
    inv = 1 / dc.to_rational();
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
  const Cyclotomic c = nc.scaled(inv);
  Poly scaled = den_;
  for (auto& [k, v] : scaled) v = v * c;
  prune(scaled);
  if (scaled.size() != num_.size()) return std::nullopt;
  auto b = num_.begin();
  for (auto a = scaled.begin(); a != scaled.end(); ++a, ++b)
    if (a->first != b->first || a->second != b->second) return std::nullopt;
  return c;
}

bool LaurentValue::is_constant() const { return constant_value().has_value(); }

Cyclotomic LaurentValue::constant_term() const {
  auto c = constant_value();
  if (!c) throw std::domain_error("LaurentValue depends on s");
  return *c;
}

std::complex<double> LaurentValue::evaluate(std::complex<double> s) const {
  const std::complex<double> X = std::exp(-s * std::log(static_cast<double>(p_)));
  auto ev = [&](const Poly& a) {
    std::complex<double> acc = 0.0;
    for (const auto& [k, v] : a) acc += v.to_complex() * std::pow(X, k);
    return acc;
  };
  return ev(num_) / ev(den_);
}

std::string LaurentValue::to_string() const {
  auto show = [](const Poly& a) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : a) {
      if (!first) os << " + ";
      os << "(" << v.to_string() << ")X^" << k;
      first = false;
    }
    if (first) os << "0";
    return os.str();
  };
  return "[" + show(num_) + "] / [" + show(den_) + "]";
}

}  // namespace equilab::exact
