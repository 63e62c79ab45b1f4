#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "equilab/arith.hpp"
#include "equilab/cyclotomic.hpp"

using namespace equilab;
using exact::Cyclotomic;
using exact::LaurentValue;
using exact::rational;

namespace {

std::complex<double> zeta(int n, long long k) { return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / n); }

// sum c_k zeta_n^k with its complex value computed independently.
struct Sample {
  Cyclotomic value;
  std::complex<double> approx;
};

Sample random_element(int n, std::mt19937_64& rng) {
  Sample s{Cyclotomic(n), 0.0};
  for (int t = 0; t < 4; ++t) {
    const long long k = static_cast<long long>(rng() % 50);
    const long long num = static_cast<long long>(rng() % 21) - 10, den = 1 + static_cast<long long>(rng() % 6);
    s.value = s.value + Cyclotomic::root(n, k).scaled(rational(num, den));
    s.approx += static_cast<double>(num) / static_cast<double>(den) * zeta(n, k);
  }
  return s;
}

std::vector<long long> poly_mul(const std::vector<long long>& a, const std::vector<long long>& b) {
  std::vector<long long> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

}  // namespace

TEST(Cyclotomic, PolynomialsMultiplyToXnMinusOne) {
  EXPECT_EQ(exact::cyclotomic_polynomial(1), (std::vector<long long>{-1, 1}));
  EXPECT_EQ(exact::cyclotomic_polynomial(6), (std::vector<long long>{1, -1, 1}));
  EXPECT_EQ(exact::cyclotomic_polynomial(12), (std::vector<long long>{1, 0, -1, 0, 1}));
  EXPECT_EQ(exact::cyclotomic_polynomial(105)[7], -2);
  for (int n = 1; n <= 60; ++n) {
    std::vector<long long> prod{1};
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) prod = poly_mul(prod, exact::cyclotomic_polynomial(d));
    std::vector<long long> want(static_cast<std::size_t>(n) + 1, 0);
    want[0] = -1;
    want[static_cast<std::size_t>(n)] = 1;
    EXPECT_EQ(prod, want) << n;
  }
}

TEST(Cyclotomic, RootsOfUnity) {
  for (int n : {1, 2, 3, 4, 5, 6, 8, 9, 12, 20}) {
    Cyclotomic sum(n), pw = Cyclotomic(n, 1);
    for (int k = 0; k < n; ++k) {
      sum = sum + Cyclotomic::root(n, k);
      pw = pw * Cyclotomic::root(n, 1);
    }
    EXPECT_EQ(pw, Cyclotomic(n, 1));
    EXPECT_EQ(sum.is_zero(), n > 1);
    EXPECT_EQ(Cyclotomic::root(n, 1).conj(), Cyclotomic::root(n, -1));
    EXPECT_NEAR(std::abs(Cyclotomic::root(n, 3).to_complex() - zeta(n, 3)), 0.0, 1e-14);
  }
  EXPECT_EQ(Cyclotomic::root(2, 1), Cyclotomic(1, -1));
  EXPECT_EQ(Cyclotomic::root(4, 1) * Cyclotomic::root(6, 1), Cyclotomic::root(12, 5));
  EXPECT_EQ(Cyclotomic::root(6, 2), Cyclotomic::root(3, 1));
  EXPECT_EQ(Cyclotomic(5, rational(3, 7)).to_rational(), rational(3, 7));
  EXPECT_THROW(Cyclotomic::root(5, 1).to_rational(), std::domain_error);
}

TEST(Cyclotomic, FieldOperationsAgreeWithComplexValues) {
  std::mt19937_64 rng(31);
  for (int n : {3, 4, 5, 7, 8, 12, 15}) {
    for (int t = 0; t < 30; ++t) {
      const auto a = random_element(n, rng), b = random_element(n, rng);
      EXPECT_NEAR(std::abs((a.value * b.value).to_complex() - a.approx * b.approx), 0.0, 1e-10);
      EXPECT_NEAR(std::abs((a.value + b.value).to_complex() - (a.approx + b.approx)), 0.0, 1e-10);
      EXPECT_NEAR(std::abs(a.value.conj().to_complex() - std::conj(a.approx)), 0.0, 1e-10);
      EXPECT_EQ(a.value * b.value, b.value * a.value);
      EXPECT_EQ((a.value - b.value) + b.value, a.value);
      EXPECT_EQ(a.value * (a.value + b.value), a.value * a.value + a.value * b.value);
    }
  }
}

TEST(Cyclotomic, GaussSumSquares) {
  for (i64 p : {3, 5, 7, 11, 13}) {
    Cyclotomic g(static_cast<int>(p));
    for (i64 a = 1; a < p; ++a) g = g + Cyclotomic::root(static_cast<int>(p), a).scaled(kronecker(a, p));
    EXPECT_EQ((g * g).to_rational(), rational(kronecker(-1, p) * p)) << p;
  }
}

TEST(LaurentValue, RationalFunctionArithmetic) {
  const long long p = 3;
  const Cyclotomic one(1, 1);
  const auto X = LaurentValue::monomial(p, 1, one);
  const auto minus = LaurentValue::constant(p, one) + X * Cyclotomic(1, -1);  // 1 - X
  const LaurentValue geom(p, {{0, one}}, {{0, one}, {1, Cyclotomic(1, -1)}});   // 1 / (1 - X)
  EXPECT_EQ(geom * minus, LaurentValue::constant(p, one));
  EXPECT_TRUE((geom * minus).is_constant());
  EXPECT_EQ((geom * minus).constant_term(), one);
  EXPECT_FALSE(geom.is_constant());
  EXPECT_THROW(geom.constant_term(), std::domain_error);
  // X / X^2 = X^-1.
  const LaurentValue a(p, {{1, one}}, {{2, one}});
  EXPECT_EQ(a, LaurentValue::monomial(p, -1, one));
  // (2 - 2X) / (1 - X) = 2 exactly.
  const LaurentValue two(p, {{0, Cyclotomic(1, 2)}, {1, Cyclotomic(1, -2)}}, {{0, one}, {1, Cyclotomic(1, -1)}});
  ASSERT_TRUE(two.constant_value().has_value());
  EXPECT_EQ(*two.constant_value(), Cyclotomic(1, 2));
  // Evaluation at X = p^-s.
  const std::complex<double> s(0.7, 2.0);
  EXPECT_NEAR(std::abs(geom.evaluate(s) - 1.0 / (1.0 - std::pow(3.0, -s))), 0.0, 1e-14);
  EXPECT_TRUE((geom + geom * Cyclotomic(1, -1)).is_zero());
}
