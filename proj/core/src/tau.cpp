#include "equilab/tau.hpp"

#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace equilab::eig {

namespace {

using u32 = std::uint32_t;

constexpr std::array<u32, 5> kPrimes = {2013265921u, 469762049u, 1811939329u, 2113929217u, 167772161u};

u32 mulmod(u32 a, u32 b, u32 m) { return static_cast<u32>(static_cast<u64>(a) * b % m); }

u32 pow_u32(u32 b, u64 e, u32 m) { return static_cast<u32>(powmod(b, e, m)); }

u32 primitive_root(u32 p) {
  std::vector<i64> qs;
  for (auto [q, e] : factorize(p - 1)) qs.push_back(q);
  for (u32 g = 2;; ++g) {
    bool ok = true;
    for (i64 q : qs)
      if (pow_u32(g, (p - 1) / static_cast<u64>(q), p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
}

void ntt(std::vector<u32>& a, bool invert, u32 p, u32 g) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    u32 w = pow_u32(g, (p - 1) / len, p);
    if (invert) w = pow_u32(w, p - 2, p);
    const std::size_t half = len / 2;
    std::vector<u32> ws(half);
    ws[0] = 1;
    for (std::size_t k = 1; k < half; ++k) ws[k] = mulmod(ws[k - 1], w, p);
    for (std::size_t i = 0; i < n; i += len)
      for (std::size_t k = 0; k < half; ++k) {
        const u32 u = a[i + k];
        const u32 v = mulmod(a[i + k + half], ws[k], p);
        a[i + k] = u + v >= p ? u + v - p : u + v;
        a[i + k + half] = u >= v ? u - v : u + p - v;
      }
  }
  if (invert) {
    const u32 inv_n = pow_u32(static_cast<u32>(n % p), p - 2, p);
    for (auto& x : a) x = mulmod(x, inv_n, p);
  }
}

std::vector<u32> mul_mod(const std::vector<u32>& a, const std::vector<u32>& b, std::size_t len, u32 p, u32 g) {
  std::size_t n = 1;
  while (n < a.size() + b.size()) n <<= 1;
  if (((p - 1) % n) != 0) throw std::length_error("ntt: transform length exceeds modulus capacity");
  std::vector<u32> fa(a), fb(b);
  fa.resize(n);
  fb.resize(n);
  ntt(fa, false, p, g);
  ntt(fb, false, p, g);
  for (std::size_t i = 0; i < n; ++i) fa[i] = mulmod(fa[i], fb[i], p);
  ntt(fa, true, p, g);
  fa.resize(len);
  return fa;
}

u32 reduce_residue(const int256& v, u32 p) {
  int256 r = v % p;
  if (r < 0) r += p;
  return static_cast<u32>(r);
}

// Centred CRT by Garner's algorithm.
std::vector<int256> crt(const std::array<std::vector<u32>, 5>& res, std::size_t len) {
  std::array<std::array<u32, 5>, 5> inv{};
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < i; ++j) inv[j][i] = pow_u32(kPrimes[j] % kPrimes[i], kPrimes[i] - 2, kPrimes[i]);
  int256 M = 1;
  for (u32 p : kPrimes) M *= p;
  const int256 half = M / 2;
  std::vector<int256> out(len);
  for (std::size_t n = 0; n < len; ++n) {
    std::array<u32, 5> x{};
    for (std::size_t i = 0; i < 5; ++i) {
      u64 t = res[i][n];
      for (std::size_t j = 0; j < i; ++j) {
        t = (t + kPrimes[i] - x[j] % kPrimes[i]) % kPrimes[i];
        t = t * inv[j][i] % kPrimes[i];
      }
      x[i] = static_cast<u32>(t);
    }
    int256 v = 0, base = 1;
    for (std::size_t i = 0; i < 5; ++i) {
      v += base * x[i];
      base *= kPrimes[i];
    }
    if (v > half) v -= M;
    out[n] = v;
  }
  return out;
}

}  // namespace

std::vector<int> euler_series(std::size_t len) {
  std::vector<int> e(len, 0);
  for (i64 k = 0;; ++k) {
    bool any = false;
    for (i64 kk : {k, -k}) {
      const i64 idx = kk * (3 * kk - 1) / 2;
      if (idx < static_cast<i64>(len)) {
        e[static_cast<std::size_t>(idx)] = (k % 2 == 0) ? 1 : -1;
        any = true;
      }
      if (k == 0) break;
    }
    if (!any) break;
  }
  return e;
}

std::vector<int256> multiply_truncated(const std::vector<int256>& a, const std::vector<int256>& b, std::size_t len) {
  std::array<std::vector<u32>, 5> res;
  for (std::size_t i = 0; i < 5; ++i) {
    const u32 p = kPrimes[i];
    std::vector<u32> ra(a.size()), rb(b.size());
    for (std::size_t k = 0; k < a.size(); ++k) ra[k] = reduce_residue(a[k], p);
    for (std::size_t k = 0; k < b.size(); ++k) rb[k] = reduce_residue(b[k], p);
    res[i] = mul_mod(ra, rb, len, p, primitive_root(p));
  }
  return crt(res, len);
}

TauTable TauTable::build(i64 Y) {
  if (Y < 1 || Y > kMaxTauCutoff) throw std::invalid_argument("build_tau: cutoff out of range");
  const std::size_t len = static_cast<std::size_t>(Y);  // E^24 up to q^(Y-1)
  const auto e = euler_series(len);
  std::array<std::vector<u32>, 5> res;
  for (std::size_t i = 0; i < 5; ++i) {
    const u32 p = kPrimes[i];
    const u32 g = primitive_root(p);
    std::vector<u32> s(len);
    for (std::size_t k = 0; k < len; ++k) s[k] = e[k] >= 0 ? static_cast<u32>(e[k]) : p - 1;
    for (int sq = 0; sq < 3; ++sq) s = mul_mod(s, s, len, p, g);  // E^8
    const auto e16 = mul_mod(s, s, len, p, g);
    res[i] = mul_mod(e16, s, len, p, g);  // E^24
  }
  const auto coeffs = crt(res, len);
  TauTable t;
  t.tau_.assign(len + 1, 0);
  for (std::size_t n = 1; n <= len; ++n) t.tau_[n] = coeffs[n - 1];
  t.fill_lambda();
  return t;
}

void TauTable::fill_lambda() {
  lambda_.assign(tau_.size(), 0.0);
  for (std::size_t n = 1; n < tau_.size(); ++n)
    lambda_[n] = tau_[n].convert_to<double>() * std::exp(-5.5 * std::log(static_cast<double>(n)));
}

void TauTable::save(const std::string& path) const {
  namespace fs = std::filesystem;
  fs::path tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write tau cache " + tmp.string());
    out << cutoff() << '\n';
    for (std::size_t n = 1; n < tau_.size(); ++n) out << tau_[n] << '\n';
  }
  fs::rename(tmp, path);
}

TauTable TauTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open tau cache " + path);
  auto fail = [&](const std::string& why) -> void { throw std::runtime_error("corrupt tau cache " + path + ": " + why); };
  std::string line;
  if (!std::getline(in, line)) fail("missing cutoff line");
  i64 Y = 0;
  try {
    std::size_t pos = 0;
    Y = std::stoll(line, &pos);
    if (pos != line.size()) fail("bad cutoff line");
  } catch (const std::logic_error&) {
    fail("bad cutoff line");
  }
  if (Y < 1 || Y > kMaxTauCutoff) fail("cutoff out of range");
  TauTable t;
  t.tau_.assign(static_cast<std::size_t>(Y) + 1, 0);
  for (i64 n = 1; n <= Y; ++n) {
    if (!std::getline(in, line) || line.empty()) fail("truncated at n=" + std::to_string(n));
    const std::size_t start = (line[0] == '-') ? 1 : 0;
    if (start == line.size() || line.find_first_not_of("0123456789", start) != std::string::npos)
      fail("non-integer entry at n=" + std::to_string(n));
    t.tau_[static_cast<std::size_t>(n)] = int256(line);
  }
  if (std::getline(in, line) && !line.empty()) fail("trailing data");
  if (t.tau_[1] != 1) fail("tau(1) != 1");
  t.fill_lambda();
  return t;
}

TauTable TauTable::load_or_build(i64 Y, const std::string& cache_dir) {
  namespace fs = std::filesystem;
  const fs::path path = fs::path(cache_dir) / ("tau_" + std::to_string(Y) + ".txt");
  if (fs::exists(path)) return load(path.string());
  TauTable t = build(Y);
  fs::create_directories(path.parent_path());
  t.save(path.string());
  return t;
}

}  // namespace equilab::eig
