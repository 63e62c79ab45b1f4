#include "equilab/arith.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace equilab {

i64 gcd(i64 a, i64 b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i64 gcd3(i64 a, i64 b, i64 c) { return gcd(gcd(a, b), c); }

ExtGcd ext_gcd(i64 a, i64 b) {
  i64 old_r = a, r = b;
  i64 old_s = 1, s = 0;
  i64 old_t = 0, t = 1;
  while (r != 0) {
    i64 q = old_r / r;
    i64 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

i64 isqrt(i64 n) {
  if (n < 0) throw std::domain_error("isqrt of negative number");
  i64 r = static_cast<i64>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<i128>(r) * r > n) --r;
  while (static_cast<i128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(i64 n) {
  if (n < 0) return false;
  i64 r = isqrt(n);
  return r * r == n;
}

i64 powmod(i64 base, u64 exp, i64 m) {
  i128 result = 1 % m;
  i128 b = mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = result * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<i64>(result);
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (i64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

bool is_squarefree(i64 n) {
  if (n == 0) return false;
  n = n < 0 ? -n : n;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return false;
    }
  }
  return true;
}

std::vector<i64> primes_up_to(i64 n) {
  std::vector<i64> out;
  if (n < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
  for (i64 i = 2; i <= n; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (i64 j = i * i; j <= n; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return out;
}

std::vector<std::int32_t> smallest_prime_factors(std::int32_t n) {
  std::vector<std::int32_t> spf(static_cast<std::size_t>(n) + 1, 0);
  for (std::int32_t i = 2; i <= n; ++i) {
    if (spf[static_cast<std::size_t>(i)] != 0) continue;
    for (i64 j = i; j <= n; j += i)
      if (spf[static_cast<std::size_t>(j)] == 0) spf[static_cast<std::size_t>(j)] = i;
  }
  return spf;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
  std::vector<std::pair<i64, int>> out;
  n = n < 0 ? -n : n;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

namespace {

// Jacobi symbol (a | n) for odd n > 0.
int jacobi(i64 a, i64 n) {
  a = mod(a, n);
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      i64 r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

}  // namespace

int kronecker(i64 a, i64 n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  int v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  if (v > 0) {
    if (a % 2 == 0) return 0;
    i64 r = mod(a, 8);
    if ((v & 1) && (r == 3 || r == 5)) result = -result;
  }
  if (n == 1) return result;
  return result * jacobi(a, n);
}

std::optional<i64> sqrt_mod_prime(i64 a, i64 p) {
  a = mod(a, p);
  if (a == 0) return 0;
  if (p == 2) return a;
  if (powmod(a, static_cast<u64>((p - 1) / 2), p) != 1) return std::nullopt;
  // Tonelli-Shanks.
  i64 q = p - 1;
  int s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  i64 z = 2;
  while (powmod(z, static_cast<u64>((p - 1) / 2), p) != p - 1) ++z;
  i64 m = s;
  i64 c = powmod(z, static_cast<u64>(q), p);
  i64 t = powmod(a, static_cast<u64>(q), p);
  i64 r = powmod(a, static_cast<u64>((q + 1) / 2), p);
  while (t != 1) {
    i64 i = 0;
    i64 tt = t;
    while (tt != 1) {
      tt = static_cast<i64>(static_cast<i128>(tt) * tt % p);
      ++i;
    }
    i64 b = c;
    for (i64 j = 0; j < m - i - 1; ++j) b = static_cast<i64>(static_cast<i128>(b) * b % p);
    m = i;
    c = static_cast<i64>(static_cast<i128>(b) * b % p);
    t = static_cast<i64>(static_cast<i128>(t) * c % p);
    r = static_cast<i64>(static_cast<i128>(r) * b % p);
  }
  return r;
}

bool is_discriminant(i64 disc) {
  if (disc >= 0) return false;
  i64 r = mod(disc, 4);
  return r == 0 || r == 1;
}

bool is_fundamental_discriminant(i64 disc) {
  if (!is_discriminant(disc)) return false;
  if (mod(disc, 4) == 1) return is_squarefree(disc);
  i64 m = disc / 4;
  i64 r = mod(m, 4);
  return (r == 2 || r == 3) && is_squarefree(m);
}

}  // namespace equilab
