#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "equilab/arith.hpp"

using namespace equilab;

namespace {

// Euler's criterion, independent of the Jacobi reciprocity used in kronecker.
int legendre_euler(i64 a, i64 p) {
  const i64 r = powmod(a, static_cast<u64>((p - 1) / 2), p);
  return r == 0 ? 0 : (r == 1 ? 1 : -1);
}

}  // namespace

TEST(Arith, GcdAndExtGcd) {
  EXPECT_EQ(gcd(0, 0), 0);
  EXPECT_EQ(gcd(-12, 18), 6);
  EXPECT_EQ(gcd3(12, 18, 27), 3);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<i64> dist(-100000, 100000);
  for (int i = 0; i < 2000; ++i) {
    const i64 a = dist(rng), b = dist(rng);
    const ExtGcd e = ext_gcd(a, b);
    EXPECT_EQ(e.g, gcd(a, b));
    EXPECT_EQ(a * e.x + b * e.y, e.g);
  }
}

TEST(Arith, IsqrtExactOnLargeInputs) {
  for (i64 r : {0LL, 1LL, 2LL, 3037000499LL, 1000000007LL}) {
    EXPECT_EQ(isqrt(r * r), r);
    if (r > 0) EXPECT_EQ(isqrt(r * r - 1), r - 1);
  }
  EXPECT_TRUE(is_square(49));
  EXPECT_FALSE(is_square(50));
  EXPECT_THROW(isqrt(-1), std::domain_error);
}

TEST(Arith, PrimesAndFactorisation) {
  const auto ps = primes_up_to(100);
  EXPECT_EQ(ps.size(), 25u);
  for (i64 n = -5; n < 3000; ++n) {
    bool trial = n >= 2;
    for (i64 q = 2; q * q <= n; ++q)
      if (n % q == 0) trial = false;
    EXPECT_EQ(is_prime(n), trial) << n;
  }
  const auto spf = smallest_prime_factors(1000);
  for (i64 n = 2; n <= 1000; ++n) {
    i64 prod = 1;
    for (auto [p, e] : factorize(n))
      for (int k = 0; k < e; ++k) prod *= p;
    EXPECT_EQ(prod, n);
    EXPECT_EQ(spf[static_cast<std::size_t>(n)], factorize(n).front().first);
  }
  EXPECT_TRUE(is_squarefree(30));
  EXPECT_FALSE(is_squarefree(12));
}

TEST(Arith, KroneckerMatchesEulerCriterion) {
  for (i64 p : primes_up_to(200)) {
    if (p == 2) continue;
    for (i64 a = -300; a <= 300; ++a) EXPECT_EQ(kronecker(a, p), legendre_euler(a, p)) << a << " " << p;
  }
  // (a | 2) for odd a: 1 if a = +-1 mod 8.
  for (i64 a = -41; a <= 41; a += 2) EXPECT_EQ(kronecker(a, 2), (mod(a, 8) == 1 || mod(a, 8) == 7) ? 1 : -1);
}

TEST(Arith, SqrtModPrime) {
  for (i64 p : primes_up_to(300)) {
    if (p == 2) continue;
    for (i64 a = 0; a < p; ++a) {
      const auto r = sqrt_mod_prime(a, p);
      if (legendre_euler(a, p) == -1) {
        EXPECT_FALSE(r.has_value());
      } else {
        ASSERT_TRUE(r.has_value());
        EXPECT_EQ(*r * *r % p, a);
      }
    }
  }
}

TEST(Arith, FundamentalDiscriminants) {
  for (i64 D : {-3, -4, -7, -8, -15, -20, -24, -1003}) EXPECT_TRUE(is_fundamental_discriminant(D)) << D;
  for (i64 D : {-12, -16, -27, -28, -5, -1, 0, 5}) EXPECT_FALSE(is_fundamental_discriminant(D)) << D;
}
