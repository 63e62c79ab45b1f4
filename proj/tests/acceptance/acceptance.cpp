// Acceptance suite: one PASS/FAIL line per criterion. Usage:
//   equilab_acceptance [work_dir]
// The work directory holds the two full CLI runs compared by criterion 9.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "equilab/class_action.hpp"
#include "equilab/eigenvalues.hpp"
#include "equilab/harmonics.hpp"
#include "equilab/local_factors.hpp"
#include "equilab/mixing.hpp"
#include "equilab/quadforms.hpp"
#include "equilab/sphere.hpp"
#include "equilab/tau.hpp"

using namespace equilab;
namespace fs = std::filesystem;

namespace {

// Tolerances and sizes.
constexpr double kParsevalTol = 1e-9;
constexpr int kLmax = 8;
constexpr i64 kSweepMax = 5000;
constexpr std::size_t kSweepCount = 200;
constexpr i64 kMinkowskiMax = 100000;
constexpr int kDensityDiscs = 10;
constexpr int kDensityFormsPerDisc = 3;
constexpr i64 kTauOracleMax = 200;
constexpr i64 kHeckeMax = 100000;
constexpr i64 kInequalityMax = 10000;
constexpr double kTrendFactor = 1.5;
constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double median(std::vector<double> v) {
  if (v.empty()) return std::nan("");
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::vector<i64> sweep_d() {
  std::vector<i64> all;
  for (i64 d = 4; d <= kSweepMax; ++d)
    if (sphere::admissible(d) && is_squarefree(d)) all.push_back(d);
  std::vector<i64> out;
  for (std::size_t i = 0; i < kSweepCount; ++i) out.push_back(all[i * (all.size() - 1) / (kSweepCount - 1)]);
  return out;
}

struct Sweep {
  std::vector<i64> ds;
  std::map<i64, std::vector<action::LabeledPacket>> packets;
};

const Sweep& sweep() {
  static const Sweep s = [] {
    Sweep w;
    w.ds = sweep_d();
    for (i64 d : w.ds) w.packets[d] = action::cover_packets(d);
    return w;
  }();
  return s;
}

Outcome parseval() {
  double worst = 0;
  std::size_t packets = 0, shifts = 0;
  for (const auto& [d, pkts] : sweep().packets)
    for (const auto& pkt : pkts) {
      const auto rep = mix::analyze_packet(pkt, kLmax);
      worst = std::max(worst, rep.parseval_residual);
      ++packets;
      shifts += rep.shifts.size();
    }
  return {worst < kParsevalTol, "max residual " + fmt("%.3g", worst) + " over " + std::to_string(sweep().ds.size()) +
                                    " d, " + std::to_string(packets) + " packets, " + std::to_string(shifts) +
                                    " shifts, all pairs with l <= 8"};
}

Outcome action_laws() {
  std::size_t violations = 0, members = 0;
  std::string first;
  for (const auto& [d, pkts] : sweep().packets)
    for (const auto& pkt : pkts) {
      members += pkt.size();
      const auto v = action::check_action_laws(pkt);
      if (!v.empty() && first.empty()) first = v.front();
      violations += v.size();
    }
  std::string det = std::to_string(violations) + " violations over " + std::to_string(members) + " packet members";
  if (!first.empty()) det += "; first: " + first;
  return {violations == 0, det};
}

Outcome class_numbers() {
  std::size_t mismatches = 0, via_d = 0, via_4d = 0;
  for (const auto& [d, pkts] : sweep().packets)
    for (const auto& pkt : pkts) {
      if (static_cast<i64>(pkt.size()) != qf::class_number(pkt.disc_matched)) ++mismatches;
      (pkt.disc_matched == -d ? via_d : via_4d) += 1;
    }
  std::size_t count_checked = 0, count_bad = 0;
  for (i64 d = 4; d <= kSweepMax; ++d) {
    if (d % 8 != 3 || !is_squarefree(d)) continue;
    ++count_checked;
    if (static_cast<i64>(sphere::enumerate_points(d).size()) != 24 * qf::class_number(-d)) ++count_bad;
  }
  return {mismatches == 0 && count_bad == 0,
          "packet sizes: " + std::to_string(mismatches) + " mismatches (" + std::to_string(via_d) + " matched h(-d), " +
              std::to_string(via_4d) + " matched h(-4d)); |R_d| = 24 h(-d): " + std::to_string(count_bad) +
              " failures over " + std::to_string(count_checked) + " d"};
}

Outcome minkowski() {
  std::size_t discs = 0, classes = 0, bad = 0;
  double worst_ratio = 0;
  for (i64 D = 3; D <= kMinkowskiMax; ++D) {
    if (!is_fundamental_discriminant(-D)) continue;
    ++discs;
    const double bound = 2.0 / std::numbers::pi * std::sqrt(static_cast<double>(D)) + 1.0;
    for (const auto& f : qf::reduced_forms(-D)) {
      ++classes;
      const double q = static_cast<double>(qf::minimal_represented(f));
      if (q > bound) ++bad;
      worst_ratio = std::max(worst_ratio, q / bound);
    }
  }
  return {bad == 0, std::to_string(bad) + " violations over " + std::to_string(discs) + " discriminants, " +
                        std::to_string(classes) + " classes; max q / bound " + fmt("%.4f", worst_ratio)};
}

// Zeros of f modulo p^k counted directly. By homogeneity the number of y
// with f(x, y) = 0 depends only on v_p(x), so one x per valuation suffices.
i64 density_count(const qf::QuadForm& f, i64 p, int k) {
  i64 n = 1;
  for (int i = 0; i < k; ++i) n *= p;
  i64 total = 0, px = 1;
  for (int v = 0; v <= k; ++v, px *= p) {
    const i64 x = v == k ? 0 : px;
    const i64 xs = v == k ? 1 : n / px - n / px / p;
    i64 ys = 0;
    const i64 ax2 = mod(static_cast<i64>(static_cast<i128>(f.a) * x % n * x % n), n);
    const i64 bx = mod(f.b % n * x % n, n), c = mod(f.c, n);
    for (i64 y = 0; y < n; ++y) {
      const i128 val = static_cast<i128>(ax2) + static_cast<i128>(bx) * y + static_cast<i128>(c) * y % n * y;
      if (val % n == 0) ++ys;
    }
    total += xs * ys;
  }
  return total;
}

Outcome density() {
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<i64> pick(3, 20000);
  std::vector<i64> discs;
  while (static_cast<int>(discs.size()) < kDensityDiscs) {
    const i64 D = -pick(rng);
    if (is_discriminant(D) && std::find(discs.begin(), discs.end(), D) == discs.end()) discs.push_back(D);
  }
  std::size_t cases = 0, bad = 0, ramified = 0, split = 0, inert = 0;
  std::string first;
  for (i64 D : discs) {
    const auto forms = qf::reduced_forms(D);
    for (int t = 0; t < kDensityFormsPerDisc; ++t) {
      const auto& f = forms[rng() % forms.size()];
      for (i64 p : primes_up_to(100)) {
        if (p == 2) continue;
        const int chi = kronecker(D, p);
        (chi == 0 ? ramified : chi == 1 ? split : inert) += 1;
        for (int k = 1; k <= 3; ++k) {
          ++cases;
          const i64 want = density_count(f, p, k), got = qf::density_prime_power(f, p, k);
          if (want != got) {
            ++bad;
            if (first.empty())
              first = qf::to_string(f) + " p=" + std::to_string(p) + " k=" + std::to_string(k) + ": " +
                      std::to_string(got) + " vs " + std::to_string(want);
          }
        }
      }
    }
  }
  std::string det = std::to_string(bad) + " disagreements over " + std::to_string(cases) + " (form, p, k) cases on " +
                    std::to_string(discs.size()) + " discriminants (" + std::to_string(split) + " split, " +
                    std::to_string(inert) + " inert, " + std::to_string(ramified) + " ramified form-prime pairs)";
  if (!first.empty()) det += "; first: " + first;
  return {bad == 0, det};
}

Outcome tau_table() {
  // q prod (1 - q^n)^24 by repeated multiplication with (1 - q^n).
  std::vector<eig::bigint> c(kTauOracleMax, 0);
  c[0] = 1;
  for (std::size_t n = 1; n < c.size(); ++n)
    for (int r = 0; r < 24; ++r)
      for (std::size_t i = c.size() - 1; i >= n; --i) c[i] -= c[i - n];
  const auto tab = eig::TauTable::build(kHeckeMax);
  std::size_t oracle_bad = 0;
  for (i64 n = 1; n <= kTauOracleMax; ++n)
    if (eig::bigint(tab.tau(n)) != c[static_cast<std::size_t>(n - 1)]) ++oracle_bad;
  const auto hecke = eig::hecke_relations_check(tab, kHeckeMax);
  const auto deligne = eig::deligne_check(tab, kHeckeMax);
  const auto ineq = eig::hecke_inequality_check(tab, kInequalityMax);
  const bool ok = oracle_bad == 0 && hecke.empty() && deligne.empty() && ineq.empty();
  return {ok, "naive oracle n <= 200: " + std::to_string(oracle_bad) + " mismatches; Hecke n <= 1e5: " +
                  std::to_string(hecke.size()) + "; |lambda(p)| <= 2 for p <= 1e5: " + std::to_string(deligne.size()) +
                  "; Hecke inequality p <= 1e4: " + std::to_string(ineq.size()) + " violations"};
}

Outcome local_identities() {
  const auto checks = local::run_local_suite({});
  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // name -> (total, failed)
  bool samples_ok = true;
  std::set<std::pair<int, int>> dim_grid;
  for (const auto& c : checks) {
    auto& t = tally[c.name];
    ++t.first;
    if (!c.pass) ++t.second;
    if (c.name == "induced_closed_form" && c.params.at("samples").get<std::size_t>() < 1000) samples_ok = false;
    if (c.name == "invariant_dimension") dim_grid.insert({c.params.at("k").get<int>(), c.params.at("f").get<int>()});
  }
  bool ok = samples_ok && dim_grid.size() == 18 && tally["arch_tate"].first == 20 &&
            tally["arch_rs_integral"].first == 10 && tally["induced_closed_form"].first > 0 &&
            tally["tate_unramified"].first > 0;
  std::string det;
  for (const auto& [name, t] : tally) {
    if (t.second != 0) ok = false;
    det += (det.empty() ? "" : ", ") + name + " " + std::to_string(t.first - t.second) + "/" + std::to_string(t.first);
  }
  return {ok, det + (samples_ok ? "" : "; fewer than 1000 samples in some case")};
}

Outcome trends() {
  const auto live = mix::symmetrized_nonvanishing(kLmax);
  std::vector<double> disc_low, disc_high, mix_far, mix_near;
  std::size_t mix_packets = 0;
  for (i64 d = 40; d <= 5000; ++d) {
    if (d > 140 && d < 4000) continue;
    if (!sphere::admissible(d) || !is_squarefree(d)) continue;
    double disc = 0;
    for (const auto& pkt : action::cover_packets(d)) {
      const auto rep = mix::analyze_packet(pkt, kLmax);
      disc = std::max(disc, rep.discrepancy);
      if (d < 4000 || rep.h_class < 8) continue;
      ++mix_packets;
      const double root4 = std::pow(static_cast<double>(-rep.disc_matched), 0.25);
      for (const auto& row : rep.shifts) {
        if (row.shift == pkt.group->identity()) continue;
        for (std::size_t k = 0; k < rep.harmonics.size(); ++k) {
          if (rep.harmonics[k].ell < 1 || !live[k]) continue;
          const double v = std::abs(row.diagonal[k]);
          if (static_cast<double>(row.q) > root4)
            mix_far.push_back(v);
          else if (row.q <= 3)
            mix_near.push_back(v);
        }
      }
    }
    (d <= 140 ? disc_low : disc_high).push_back(disc);
  }
  const double dl = median(disc_low), dh = median(disc_high), mf = median(mix_far), mn = median(mix_near);
  const bool ok = dh * kTrendFactor <= dl && mf * kTrendFactor <= mn;
  return {ok, "exploratory: median discrepancy " + fmt("%.4f", dl) + " on [40,140] vs " + fmt("%.4f", dh) +
                  " on [4000,5000]; median |P| " + fmt("%.5f", mf) + " (q > D^1/4) vs " + fmt("%.5f", mn) +
                  " (q <= 3) over " + std::to_string(mix_packets) + " packets with h >= 8; margin factor " +
                  fmt("%.1f", kTrendFactor)};
}

std::map<std::string, std::string> tree_contents(const fs::path& root) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (!e.is_regular_file()) continue;
    std::ifstream in(e.path(), std::ios::binary);
    out[fs::relative(e.path(), root).generic_string()] = {std::istreambuf_iterator<char>(in), {}};
  }
  return out;
}

Outcome determinism(const fs::path& work) {
  // Each run starts in an empty directory with no flags, so it uses the
  // default configuration, including its own default cache.
  std::vector<fs::path> runs = {work / "run1", work / "run2"};
  for (const auto& dir : runs) {
    fs::remove_all(dir);
    fs::create_directories(dir);
    const std::string cmd = "cd '" + dir.string() + "' && env -u EQUILAB_CACHE_DIR '" EQUILAB_CLI "' all > log.txt 2>&1";
    const int rc = std::system(cmd.c_str());
    if (!WIFEXITED(rc) || WEXITSTATUS(rc) != 0)
      return {false, "'equilab all' failed in " + dir.string() + " (see log.txt)"};
  }
  const auto a = tree_contents(runs[0] / "equilab_out"), b = tree_contents(runs[1] / "equilab_out");
  std::size_t differ = 0;
  std::string first;
  std::set<std::string> names;
  for (const auto& [k, v] : a) names.insert(k);
  for (const auto& [k, v] : b) names.insert(k);
  std::uintmax_t bytes = 0;
  for (const auto& n : names) {
    const auto ia = a.find(n), ib = b.find(n);
    if (ia == a.end() || ib == b.end() || ia->second != ib->second) {
      ++differ;
      if (first.empty()) first = n;
    } else {
      bytes += ia->second.size();
    }
  }
  std::string det = std::to_string(names.size()) + " files, " + std::to_string(bytes) + " identical bytes, " +
                    std::to_string(differ) + " differing";
  if (!first.empty()) det += " (first: " + first + ")";
  return {differ == 0 && !names.empty(), det};
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path work = argc > 1 ? fs::path(argv[1]) : fs::temp_directory_path() / "equilab_acceptance";
  fs::create_directories(work);

  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, parseval},         {2, action_laws},      {3, class_numbers},
      {4, minkowski},        {5, density},          {6, tau_table},
      {7, local_identities}, {8, trends},           {9, [&] { return determinism(work); }},
  };
  int failed = 0;
  for (const auto& [n, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failed;
    std::printf("criterion %d: %s  %s [%.1f s]\n", n, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
