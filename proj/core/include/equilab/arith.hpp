#pragma once

// Small-integer arithmetic shared by every module: gcds, square roots,
// prime sieves, the Kronecker symbol and discriminant predicates.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace equilab {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

i64 gcd(i64 a, i64 b);
i64 gcd3(i64 a, i64 b, i64 c);

/// Extended gcd: returns (g, x, y) with a*x + b*y = g >= 0.
struct ExtGcd {
  i64 g, x, y;
};
ExtGcd ext_gcd(i64 a, i64 b);

/// Floor of the square root, exact for all nonnegative 64-bit inputs.
i64 isqrt(i64 n);
bool is_square(i64 n);

/// Nonnegative residue of a modulo m (m > 0).
inline i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 powmod(i64 base, u64 exp, i64 m);

bool is_prime(i64 n);
bool is_squarefree(i64 n);

/// Primes p <= n in increasing order.
std::vector<i64> primes_up_to(i64 n);

/// Smallest-prime-factor table for 0..n (spf[0] = spf[1] = 0).
std::vector<std::int32_t> smallest_prime_factors(std::int32_t n);

/// Prime factorisation as (prime, exponent) pairs, increasing primes.
std::vector<std::pair<i64, int>> factorize(i64 n);

/// Kronecker symbol (a | n) for any integer a and n.
int kronecker(i64 a, i64 n);

/// Square root of a modulo an odd prime p, if a is a square mod p.
std::optional<i64> sqrt_mod_prime(i64 a, i64 p);

/// disc < 0 and disc = 0, 1 mod 4.
bool is_discriminant(i64 disc);

/// Fundamental discriminant: disc = 1 mod 4 squarefree, or disc = 4m with
/// m = 2, 3 mod 4 squarefree.
bool is_fundamental_discriminant(i64 disc);

}  // namespace equilab
