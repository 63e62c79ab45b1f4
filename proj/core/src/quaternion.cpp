#include "equilab/quaternion.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace equilab::quat {

Quaternion Quaternion::from_doubled(i64 w2, i64 x2, i64 y2, i64 z2) {
  const i64 par = w2 & 1;
  if ((x2 & 1) != par || (y2 & 1) != par || (z2 & 1) != par)
    throw std::invalid_argument("quaternion: doubled coordinates of mixed parity");
  return {w2, x2, y2, z2};
}

Quaternion Quaternion::operator+(const Quaternion& o) const {
  return from_doubled(e_[0] + o.e_[0], e_[1] + o.e_[1], e_[2] + o.e_[2], e_[3] + o.e_[3]);
}

Quaternion Quaternion::operator-(const Quaternion& o) const {
  return from_doubled(e_[0] - o.e_[0], e_[1] - o.e_[1], e_[2] - o.e_[2], e_[3] - o.e_[3]);
}

Quaternion Quaternion::operator*(const Quaternion& o) const {
  const auto& [a1, b1, c1, d1] = e_;
  const auto& [a2, b2, c2, d2] = o.e_;
  // Product of doubled values is 4 q r; halve it to get the doubled product.
  const i64 w = a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2;
  const i64 x = a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2;
  const i64 y = a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2;
  const i64 z = a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2;
  if ((w | x | y | z) & 1) throw std::logic_error("quaternion product left the Hurwitz order");
  return from_doubled(w / 2, x / 2, y / 2, z / 2);
}

bool Quaternion::divisible_by(i64 n) const {
  if (!std::all_of(e_.begin(), e_.end(), [n](i64 v) { return v % n == 0; })) return false;
  const i64 par = (e_[0] / n) & 1;
  return std::all_of(e_.begin(), e_.end(), [n, par](i64 v) { return ((v / n) & 1) == par; });
}

Quaternion Quaternion::divided_by(i64 n) const {
  for (i64 v : e_)
    if (v % n != 0) throw std::domain_error("quaternion: inexact division");
  return from_doubled(e_[0] / n, e_[1] / n, e_[2] / n, e_[3] / n);
}

std::string Quaternion::to_string() const {
  return "[" + std::to_string(e_[0]) + "," + std::to_string(e_[1]) + "," + std::to_string(e_[2]) + "," +
         std::to_string(e_[3]) + "]/2";
}

Quaternion embed(const sphere::LatticePoint& p) { return Quaternion::integral(0, p.x, p.y, p.z); }

sphere::LatticePoint to_point(const Quaternion& q) {
  const auto& e = q.doubled();
  if (e[0] != 0 || q.half_integral()) throw std::domain_error("quaternion is not an integral pure vector");
  return {e[1] / 2, e[2] / 2, e[3] / 2};
}

const std::vector<Quaternion>& hurwitz_units() {
  static const std::vector<Quaternion> units = [] {
    std::vector<Quaternion> u;
    for (int i = 0; i < 4; ++i)
      for (int s : {2, -2}) {
        std::array<i64, 4> e{0, 0, 0, 0};
        e[static_cast<std::size_t>(i)] = s;
        u.push_back(Quaternion::from_doubled(e[0], e[1], e[2], e[3]));
      }
    for (int mask = 0; mask < 16; ++mask)
      u.push_back(Quaternion::from_doubled(mask & 1 ? -1 : 1, mask & 2 ? -1 : 1, mask & 4 ? -1 : 1,
                                           mask & 8 ? -1 : 1));
    return u;
  }();
  return units;
}

std::vector<Quaternion> norm_p_classes(i64 p) {
  static std::mutex mu;
  static std::map<i64, std::vector<Quaternion>> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(p);
    if (it != memo.end()) return it->second;
  }
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("norm_p_classes: p must be an odd prime");
  const i64 target = 4 * p;
  const i64 r = isqrt(target);
  const auto& units = hurwitz_units();
  std::vector<Quaternion> reps;
  for (i64 a = -r; a <= r; ++a)
    for (i64 b = -r; b <= r; ++b) {
      if (((a ^ b) & 1) != 0) continue;
      const i64 rab = target - a * a - b * b;
      if (rab < 0) continue;
      for (i64 c = -r; c <= r; ++c) {
        if (((a ^ c) & 1) != 0) continue;
        const i64 rd = rab - c * c;
        if (rd < 0) continue;
        const i64 d = isqrt(rd);
        if (d * d != rd || ((a ^ d) & 1) != 0) continue;
        for (i64 dd : {d, -d}) {
          Quaternion q = Quaternion::from_doubled(a, b, c, dd);
          Quaternion best = q;
          for (const auto& u : units) best = std::min(best, u * q);
          if (best == q) reps.push_back(q);
          if (d == 0) break;
        }
      }
    }
  std::sort(reps.begin(), reps.end());
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(p, reps);
  return reps;
}

}  // namespace equilab::quat
