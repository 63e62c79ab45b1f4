#include "equilab/quadforms.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace equilab::qf {

std::string to_string(const QuadForm& f) {
  return "(" + std::to_string(f.a) + "," + std::to_string(f.b) + "," + std::to_string(f.c) + ")";
}

bool is_positive_definite(const QuadForm& f) { return f.a > 0 && f.disc() < 0; }

bool is_primitive(const QuadForm& f) { return gcd3(f.a, f.b, f.c) == 1; }

bool is_reduced(const QuadForm& f) {
  if (!is_positive_definite(f)) return false;
  i64 ab = f.b < 0 ? -f.b : f.b;
  if (ab > f.a || f.a > f.c) return false;
  if ((ab == f.a || f.a == f.c) && f.b < 0) return false;
  return true;
}

namespace {

// b into (-a, a], c recomputed from the discriminant.
QuadForm normalize(i64 a, i64 b, i64 disc) {
  i64 r = mod(b, 2 * a);
  if (r > a) r -= 2 * a;
  i128 num = static_cast<i128>(r) * r - disc;
  return {a, r, static_cast<i64>(num / (4 * static_cast<i128>(a)))};
}

}  // namespace

QuadForm reduce(const QuadForm& f) {
  if (!is_positive_definite(f))
    throw std::invalid_argument("reduce: form " + to_string(f) + " is not positive definite");
  if (!is_primitive(f)) throw std::invalid_argument("reduce: form " + to_string(f) + " is imprimitive");
  const i64 disc = f.disc();
  QuadForm g = normalize(f.a, f.b, disc);
  while (g.a > g.c) g = normalize(g.c, -g.b, disc);
  if ((g.a == g.c || g.b == -g.a) && g.b < 0) g.b = -g.b;
  return g;
}

QuadForm compose(const QuadForm& f, const QuadForm& g) {
  const i64 disc = f.disc();
  if (g.disc() != disc)
    throw std::invalid_argument("compose: discriminant mismatch " + to_string(f) + " vs " + to_string(g));
  const i64 beta = (f.b + g.b) / 2;
  ExtGcd e1 = ext_gcd(f.a, g.a);
  ExtGcd e2 = ext_gcd(e1.g, beta);
  const i64 e = e2.g;
  const i128 x = static_cast<i128>(e2.x) * e1.x;
  const i128 y = static_cast<i128>(e2.x) * e1.y;
  const i128 z = e2.y;
  const i128 A = static_cast<i128>(f.a / e) * (g.a / e);
  const i128 num = x * f.a * g.b + y * g.a * f.b + z * ((static_cast<i128>(f.b) * g.b + disc) / 2);
  if (num % e != 0) throw std::logic_error("compose: non-integral united form");
  i128 B = (num / e) % (2 * A);
  if (B < 0) B += 2 * A;
  const i128 cnum = B * B - disc;
  if (cnum % (4 * A) != 0) throw std::logic_error("compose: non-integral third coefficient");
  return reduce({static_cast<i64>(A), static_cast<i64>(B), static_cast<i64>(cnum / (4 * A))});
}

QuadForm principal_form(i64 disc) {
  if (!is_discriminant(disc)) throw std::invalid_argument("principal_form: invalid discriminant");
  if (mod(disc, 4) == 0) return {1, 0, -disc / 4};
  return {1, 1, (1 - disc) / 4};
}

std::vector<QuadForm> reduced_forms(i64 disc) {
  if (!is_discriminant(disc))
    throw std::invalid_argument("reduced_forms: " + std::to_string(disc) + " is not a negative discriminant");
  std::vector<QuadForm> out;
  const i64 amax = isqrt(-disc / 3);
  for (i64 a = 1; a <= amax; ++a) {
    for (i64 b = a; b >= -a + 1; --b) {
      if (mod(b - disc, 2) != 0) continue;
      const i64 num = b * b - disc;
      if (num % (4 * a) != 0) continue;
      const i64 c = num / (4 * a);
      if (c < a) continue;
      if (b < 0 && (-b == a || a == c)) continue;
      if (gcd3(a, b, c) != 1) continue;
      out.push_back({a, b, c});
    }
  }
  return out;
}

int roots_of_unity(i64 disc) {
  if (disc == -3) return 6;
  if (disc == -4) return 4;
  return 2;
}

i64 minimal_represented(const QuadForm& f) {
  if (!is_reduced(f))
    throw std::invalid_argument("minimal_represented: " + to_string(f) + " is not reduced");
  return f.a;
}

namespace {

i64 ipow(i64 p, int k) {
  i64 r = 1;
  for (int i = 0; i < k; ++i) r *= p;
  return r;
}

i64 brute_density(const QuadForm& f, i64 n) {
  i64 count = 0;
  for (i64 x = 0; x < n; ++x)
    for (i64 y = 0; y < n; ++y) {
      i128 v = static_cast<i128>(f.a) * x * x + static_cast<i128>(f.b) * x * y + static_cast<i128>(f.c) * y * y;
      if (v % n == 0) ++count;
    }
  return count;
}

// Odd p: count via 4aQ = (2ax + by)^2 - disc*y^2 with a a unit mod p.
i64 odd_density_by_squares(QuadForm f, i64 p, int k) {
  if (f.a % p == 0) {
    if (f.c % p != 0) {
      std::swap(f.a, f.c);
    } else {
      // p divides a and c but not b: substitute x -> x + y.
      f = {f.a + f.b + f.c, f.b + 2 * f.c, f.c};
    }
  }
  const i64 q = ipow(p, k);
  std::vector<i64> roots(static_cast<std::size_t>(q), 0);
  for (i64 t = 0; t < q; ++t)
    ++roots[static_cast<std::size_t>(static_cast<i128>(t) * t % q)];
  const i64 dq = mod(f.disc(), q);
  i64 count = 0;
  for (i64 y = 0; y < q; ++y) {
    i64 target = static_cast<i64>(static_cast<i128>(dq) * (static_cast<i128>(y) * y % q) % q);
    count += roots[static_cast<std::size_t>(target)];
  }
  return count;
}

}  // namespace

i64 density_prime_power(const QuadForm& f, i64 p, int k) {
  if (k == 0) return 1;
  if (p == 2) {
    if (k > 13) throw std::domain_error("density: 2-power exponent beyond brute-force range");
    return brute_density(f, ipow(2, k));
  }
  const i64 disc = f.disc();
  const int chi = kronecker(disc, p);
  if (chi == 1) return (k + 1) * ipow(p, k) - k * ipow(p, k - 1);
  if (chi == -1) return ipow(p, 2 * (k / 2));
  return odd_density_by_squares(f, p, k);
}

i64 density(const QuadForm& f, i64 n) {
  if (n < 1) throw std::invalid_argument("density: n must be positive");
  i64 r = 1;
  for (auto [p, e] : factorize(n)) r *= density_prime_power(f, p, e);
  return r;
}

i64 representation_count(const QuadForm& f, i64 n, i64 bound) {
  if (!is_positive_definite(f)) throw std::invalid_argument("representation_count: form not positive definite");
  if (n < 0) return 0;
  if (n == 0) return 1;
  const i64 D = -f.disc();
  const i64 ry = isqrt(4 * f.a * n / D);
  const i64 rx = isqrt(4 * f.c * n / D);
  if (std::max(rx, ry) > bound)
    throw std::out_of_range("representation_count: search radius exceeds bound");
  i64 count = 0;
  for (i64 y = -ry; y <= ry; ++y) {
    // a x^2 + b y x + (c y^2 - n) = 0
    const i128 delta = 4 * static_cast<i128>(f.a) * n - static_cast<i128>(D) * y * y;
    if (delta < 0) continue;
    const i64 s = isqrt(static_cast<i64>(delta));
    if (static_cast<i128>(s) * s != delta) continue;
    const i64 twoa = 2 * f.a;
    for (i64 sg : {s, -s}) {
      i64 num = -f.b * y + sg;
      if (num % twoa == 0) ++count;
      if (s == 0) break;
    }
  }
  return count;
}

// ---------------------------------------------------------------- ClassGroup

IdealClassId ClassGroup::index_of(const QuadForm& f) const {
  auto it = index_.find(reduce(f));
  if (it == index_.end()) throw std::out_of_range("form " + to_string(f) + " not in class group");
  return it->second;
}

IdealClassId ClassGroup::pow(IdealClassId i, i64 e) const {
  const int o = order(i);
  e = mod(e, o);
  IdealClassId r = identity();
  for (i64 t = 0; t < e; ++t) r = mul(r, i);
  return r;
}

int ClassGroup::order(IdealClassId i) const {
  int n = 1;
  IdealClassId x = i;
  while (x != identity()) {
    x = mul(x, i);
    ++n;
  }
  return n;
}

int ClassGroup::character_angle(int k, IdealClassId g) const {
  const auto& digits = char_digits_.at(static_cast<std::size_t>(k));
  const auto& e = coords(g);
  i64 acc = 0;
  for (std::size_t i = 0; i < structure_.size(); ++i)
    acc += static_cast<i64>(digits[i]) * e[i] * (exponent_ / structure_[i]);
  return static_cast<int>(mod(acc, exponent_));
}

std::complex<double> ClassGroup::character(int k, IdealClassId g) const {
  const int num = character_angle(k, g);
  if (num == 0) return {1.0, 0.0};
  if (2 * num == exponent_) return {-1.0, 0.0};
  if (4 * num == exponent_) return {0.0, 1.0};
  if (4 * num == 3 * exponent_) return {0.0, -1.0};
  const double theta = 2.0 * std::numbers::pi * num / exponent_;
  return {std::cos(theta), std::sin(theta)};
}

int ClassGroup::conjugate_character(int k) const {
  const auto& digits = char_digits_.at(static_cast<std::size_t>(k));
  int idx = 0;
  for (std::size_t i = 0; i < structure_.size(); ++i) {
    int dig = (structure_[i] - digits[i]) % structure_[i];
    idx = idx * structure_[i] + dig;
  }
  return idx;
}

ClassGroup ClassGroup::build(i64 disc) {
  ClassGroup g;
  g.disc_ = disc;
  g.forms_ = reduced_forms(disc);
  const std::size_t h = g.forms_.size();
  for (std::size_t i = 0; i < h; ++i) g.index_[g.forms_[i]] = static_cast<IdealClassId>(i);
  if (g.forms_.front() != principal_form(disc)) throw std::logic_error("principal form not first");
  g.table_.assign(h * h, -1);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = i; j < h; ++j) {
      IdealClassId k = g.index_of(compose(g.forms_[i], g.forms_[j]));
      g.table_[i * h + j] = k;
      g.table_[j * h + i] = k;
    }
  g.finish_from_table();
  return g;
}

void ClassGroup::finish_from_table() {
  const int h = size();
  inverse_.assign(static_cast<std::size_t>(h), -1);
  for (int i = 0; i < h; ++i) {
    inverse_[static_cast<std::size_t>(i)] = index_of(inverse(form(i)));
    if (mul(i, inverse_[static_cast<std::size_t>(i)]) != identity())
      throw std::logic_error("class group: inverse law fails");
  }
  decompose();
  assign_coords();
}

void ClassGroup::decompose() {
  const int h = size();
  std::vector<char> in_sub(static_cast<std::size_t>(h), 0);
  in_sub[0] = 1;
  std::vector<IdealClassId> sub = {identity()};
  structure_.clear();
  generators_.clear();
  while (static_cast<int>(sub.size()) < h) {
    int best_m = 0;
    IdealClassId best = -1;
    for (IdealClassId x = 0; x < h; ++x) {
      if (in_sub[static_cast<std::size_t>(x)]) continue;
      int m = 1;
      IdealClassId y = x;
      while (!in_sub[static_cast<std::size_t>(y)]) {
        y = mul(y, x);
        ++m;
      }
      if (m > best_m && y == identity()) {
        best_m = m;
        best = x;
      }
    }
    if (best < 0) throw std::logic_error("class group: cyclic decomposition failed");
    std::vector<IdealClassId> next;
    next.reserve(sub.size() * static_cast<std::size_t>(best_m));
    IdealClassId power = identity();
    for (int t = 0; t < best_m; ++t) {
      for (IdealClassId s : sub) next.push_back(mul(s, power));
      power = mul(power, best);
    }
    // Cosets of S under powers of best below best_m are distinct by choice of best_m.
    for (IdealClassId s : next) in_sub[static_cast<std::size_t>(s)] = 1;
    sub = std::move(next);
    structure_.push_back(best_m);
    generators_.push_back(best);
  }
  exponent_ = 1;
  for (int n : structure_) exponent_ = std::lcm(exponent_, n);
}

void ClassGroup::assign_coords() {
  const int h = size();
  const std::size_t r = structure_.size();
  coords_.assign(static_cast<std::size_t>(h), {});
  char_digits_.assign(static_cast<std::size_t>(h), std::vector<int>(r, 0));
  std::vector<int> digits(r, 0);
  for (int idx = 0; idx < h; ++idx) {
    int rem = idx;
    for (std::size_t i = r; i-- > 0;) {
      digits[i] = rem % structure_[i];
      rem /= structure_[i];
    }
    char_digits_[static_cast<std::size_t>(idx)] = digits;
    IdealClassId g = identity();
    for (std::size_t i = 0; i < r; ++i) g = mul(g, pow(generators_[i], digits[i]));
    if (!coords_[static_cast<std::size_t>(g)].empty())
      throw std::logic_error("class group: generator coordinates are not unique");
    coords_[static_cast<std::size_t>(g)] = digits;
  }
}

nlohmann::json ClassGroup::to_json() const {
  nlohmann::json j;
  j["disc"] = disc_;
  j["forms"] = nlohmann::json::array();
  for (const auto& f : forms_) j["forms"].push_back({f.a, f.b, f.c});
  const int h = size();
  j["table"] = nlohmann::json::array();
  for (int i = 0; i < h; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < h; ++k) row.push_back(mul(i, k));
    j["table"].push_back(row);
  }
  j["structure"] = structure_;
  j["generators"] = generators_;
  return j;
}

ClassGroup ClassGroup::from_json(const nlohmann::json& j) {
  auto fail = [](const std::string& why) { throw std::runtime_error("corrupt class group data: " + why); };
  try {
    ClassGroup g;
    g.disc_ = j.at("disc").get<i64>();
    auto expected = reduced_forms(g.disc_);
    for (const auto& f : j.at("forms")) {
      if (f.size() != 3) fail("form entry is not a triple");
      g.forms_.push_back({f[0].get<i64>(), f[1].get<i64>(), f[2].get<i64>()});
    }
    if (g.forms_ != expected) fail("form list does not match reduced forms");
    const std::size_t h = g.forms_.size();
    for (std::size_t i = 0; i < h; ++i) g.index_[g.forms_[i]] = static_cast<IdealClassId>(i);
    const auto& table = j.at("table");
    if (table.size() != h) fail("table has wrong row count");
    g.table_.assign(h * h, -1);
    for (std::size_t i = 0; i < h; ++i) {
      if (table[i].size() != h) fail("table row has wrong length");
      for (std::size_t k = 0; k < h; ++k) {
        int v = table[i][k].get<int>();
        if (v < 0 || static_cast<std::size_t>(v) >= h) fail("table entry out of range");
        g.table_[i * h + k] = v;
      }
    }
    for (std::size_t i = 0; i < h; ++i)
      for (std::size_t k = 0; k < h; ++k)
        if (g.table_[i * h + k] != g.index_of(compose(g.forms_[i], g.forms_[k])))
          fail("table entry disagrees with composition");
    g.finish_from_table();
    if (j.at("structure").get<std::vector<int>>() != g.structure_) fail("structure mismatch");
    if (j.contains("generators") && j.at("generators").get<std::vector<int>>() != g.generators_)
      fail("generator mismatch");
    return g;
  } catch (const nlohmann::json::exception& e) {
    fail(e.what());
  } catch (const std::logic_error& e) {
    fail(e.what());
  }
  return {};
}

ClassGroup ClassGroup::load_or_build(i64 disc, const std::string& cache_dir) {
  namespace fs = std::filesystem;
  fs::path path = fs::path(cache_dir) / ("classgroup_" + std::to_string(-disc) + ".json");
  if (fs::exists(path)) {
    std::ifstream in(path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error("corrupt class group cache " + path.string() + ": " + e.what());
    }
    ClassGroup g = from_json(j);
    if (g.disc() != disc) throw std::runtime_error("class group cache " + path.string() + " has wrong disc");
    return g;
  }
  ClassGroup g = build(disc);
  fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << g.to_json().dump() << '\n';
  }
  fs::rename(tmp, path);
  return g;
}

}  // namespace equilab::qf
