#include "runs.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "equilab/class_action.hpp"
#include "equilab/eigenvalues.hpp"
#include "equilab/harmonics.hpp"
#include "equilab/local_factors.hpp"
#include "equilab/mixing.hpp"
#include "equilab/quadforms.hpp"
#include "equilab/sphere.hpp"
#include "equilab/tau.hpp"
#include "pool.hpp"

namespace equilab::driver {

namespace fs = std::filesystem;
using nlohmann::json;

void RunStatus::fail(const std::string& what) {
  ++hard_failures;
  messages.push_back(what);
  std::cerr << "equilab: " << what << '\n';
}

void RunStatus::merge(const RunStatus& o) {
  hard_failures += o.hard_failures;
  messages.insert(messages.end(), o.messages.begin(), o.messages.end());
}

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::ofstream open_out(const ExperimentConfig& cfg, const std::string& name) {
  fs::create_directories(cfg.out_dir);
  std::ofstream out(fs::path(cfg.out_dir) / name, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + (fs::path(cfg.out_dir) / name).string());
  return out;
}

void write_json(const ExperimentConfig& cfg, const std::string& name, const json& j) {
  auto out = open_out(cfg, name);
  out << j.dump(2) << '\n';
}

std::string cache_dir(const ExperimentConfig& cfg) {
  const std::string dir = cfg.effective_cache_dir();
  fs::create_directories(dir);
  return dir;
}

std::vector<i64> discs_for(i64 d) {
  std::vector<i64> out;
  if (mod(d, 4) == 3) out.push_back(-d);
  out.push_back(-4 * d);
  return out;
}

action::PacketOptions packet_options(const ExperimentConfig& cfg) {
  action::PacketOptions opt;
  opt.prime_cap = cfg.prime_cap;
  opt.cache_dir = cache_dir(cfg);
  return opt;
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

std::vector<i64> d_values(const ExperimentConfig& cfg) {
  std::vector<i64> out;
  for (i64 d = std::max<i64>(cfg.d_min, 4); d <= cfg.d_max; ++d) {
    if (!sphere::admissible(d)) continue;
    if (cfg.squarefree_only && !is_squarefree(d)) continue;
    out.push_back(d);
  }
  return out;
}

// -------------------------------------------------------------- forms

RunStatus run_forms(const ExperimentConfig& cfg) {
  RunStatus st;
  const auto ds = d_values(cfg);
  const std::string cache = cache_dir(cfg);
  auto out = open_out(cfg, "forms.csv");
  out << "d,disc,h,index,a,b,c,q,minkowski_bound\n";
  json discs = json::array();
  struct Item {
    std::string csv;
    json summary;
    std::vector<std::string> errors;
  };
  ordered_parallel(
      ds.size(), cfg.threads,
      [&](std::size_t i) {
        Item it;
        const i64 d = ds[i];
        std::ostringstream os;
        for (i64 disc : discs_for(d)) {
          try {
            const auto G = qf::ClassGroup::load_or_build(disc, cache);
            const double bound = 2.0 / std::numbers::pi * std::sqrt(static_cast<double>(-disc)) + 1.0;
            int bad = 0;
            for (int k = 0; k < G.size(); ++k) {
              const auto& f = G.form(k);
              const i64 q = qf::minimal_represented(f);
              if (static_cast<double>(q) > bound) {
                ++bad;
                it.errors.push_back("Minkowski bound fails for " + qf::to_string(f));
              }
              os << d << ',' << disc << ',' << G.size() << ',' << k << ',' << f.a << ',' << f.b << ',' << f.c << ','
                 << q << ',' << num(bound) << '\n';
            }
            it.summary.push_back({{"d", d}, {"disc", disc}, {"h", G.size()}, {"structure", G.structure()}});
          } catch (const std::exception& e) {
            it.errors.push_back("forms d=" + std::to_string(d) + " disc=" + std::to_string(disc) + ": " + e.what());
          }
        }
        it.csv = os.str();
        return it;
      },
      [&](std::size_t, Item&& it) {
        out << it.csv;
        for (auto& s : it.summary) discs.push_back(std::move(s));
        for (const auto& e : it.errors) st.fail(e);
      });
  write_json(cfg, "forms_summary.json", {{"discriminants", discs}, {"violations", st.hard_failures}});
  return st;
}

// ------------------------------------------------------------- sphere

RunStatus run_sphere(const ExperimentConfig& cfg) {
  RunStatus st;
  const auto ds = d_values(cfg);
  auto pts = open_out(cfg, "sphere_points.csv");
  auto counts = open_out(cfg, "sphere_counts.csv");
  auto plot = open_out(cfg, "sphere_counts.dat");
  pts << "d,x,y,z,canonical,orbit_size\n";
  counts << "d,points,classes,h_minus_d,h_minus_4d\n";
  plot << "# d  points/sqrt(d)\n";
  struct Item {
    std::string pts, counts, plot;
    std::vector<std::string> errors;
  };
  ordered_parallel(
      ds.size(), cfg.threads,
      [&](std::size_t i) {
        Item it;
        const i64 d = ds[i];
        const auto points = sphere::enumerate_points(d);
        std::ostringstream p;
        sphere::write_points_csv(p, d, points);
        it.pts = p.str().substr(p.str().find('\n') + 1);
        const i64 classes = static_cast<i64>(sphere::quotient(d).size());
        const i64 hd = mod(d, 4) == 3 ? qf::class_number(-d) : 0;
        const i64 h4d = qf::class_number(-4 * d);
        it.counts = std::to_string(d) + "," + std::to_string(points.size()) + "," + std::to_string(classes) + "," +
                    std::to_string(hd) + "," + std::to_string(h4d) + "\n";
        it.plot = std::to_string(d) + " " + num(static_cast<double>(points.size()) / std::sqrt(static_cast<double>(d))) +
                  "\n";
        if (is_squarefree(d) && mod(d, 8) == 3 && static_cast<i64>(points.size()) != 24 * hd)
          it.errors.push_back("sphere d=" + std::to_string(d) + ": point count is not 24 h(-d)");
        return it;
      },
      [&](std::size_t, Item&& it) {
        pts << it.pts;
        counts << it.counts;
        plot << it.plot;
        for (const auto& e : it.errors) st.fail(e);
      });
  return st;
}

// -------------------------------------------------------------- orbit

RunStatus run_orbit(const ExperimentConfig& cfg) {
  RunStatus st;
  const auto ds = d_values(cfg);
  const auto opt = packet_options(cfg);
  auto csv = open_out(cfg, "orbits.csv");
  csv << "d,packet_id,disc_matched,h_class,member,x,y,z,label,a,b,c\n";
  json packets = json::array();
  struct Item {
    std::string csv;
    json packets = json::array();
    std::vector<std::string> errors;
  };
  ordered_parallel(
      ds.size(), cfg.threads,
      [&](std::size_t i) {
        Item it;
        const i64 d = ds[i];
        if (!is_squarefree(d)) return it;
        try {
          const auto pkts = action::cover_packets(d, opt);
          std::ostringstream os;
          for (std::size_t id = 0; id < pkts.size(); ++id) {
            const auto& pkt = pkts[id];
            for (const auto& v : action::check_action_laws(pkt)) it.errors.push_back(v);
            json j = action::packet_to_json(pkt);
            j["packet_id"] = id;
            it.packets.push_back(j);
            for (std::size_t m = 0; m < pkt.size(); ++m) {
              const auto& x = pkt.members[m].point;
              const auto& f = pkt.group->form(pkt.labels[m]);
              os << d << ',' << id << ',' << pkt.disc_matched << ',' << pkt.group->size() << ',' << m << ',' << x.x
                 << ',' << x.y << ',' << x.z << ',' << pkt.labels[m] << ',' << f.a << ',' << f.b << ',' << f.c << '\n';
            }
          }
          it.csv = os.str();
        } catch (const std::exception& e) {
          it.errors.push_back("orbit d=" + std::to_string(d) + ": " + e.what());
        }
        return it;
      },
      [&](std::size_t, Item&& it) {
        csv << it.csv;
        for (auto& p : it.packets) packets.push_back(std::move(p));
        for (const auto& e : it.errors) st.fail(e);
      });
  write_json(cfg, "packets.json", packets);
  return st;
}

// ---------------------------------------------------------------- mix

namespace {

std::vector<qf::IdealClassId> selected_shifts(const ExperimentConfig& cfg, const qf::ClassGroup& G) {
  std::vector<qf::IdealClassId> out;
  switch (cfg.shift_policy) {
    case ShiftPolicy::all:
      for (int s = 0; s < G.size(); ++s) out.push_back(s);
      break;
    case ShiftPolicy::minimal: {
      // Least q among non-identity classes; lowest index on ties.
      int best = -1;
      for (int s = 1; s < G.size(); ++s)
        if (best < 0 || qf::minimal_represented(G.form(s)) < qf::minimal_represented(G.form(best))) best = s;
      if (best >= 0) out.push_back(best);
      break;
    }
    case ShiftPolicy::explicit_list:
      for (int s : cfg.shifts)
        if (s < G.size()) out.push_back(s);
      break;
  }
  return out;
}

const std::vector<double> kBinEdges = {0.0, 0.05, 0.1, 0.15, 0.2, 0.3, 0.4, 0.6};

}  // namespace

RunStatus run_mix(const ExperimentConfig& cfg) {
  RunStatus st;
  const auto ds = d_values(cfg);
  const auto opt = packet_options(cfg);
  constexpr double kTol = 1e-9;
  auto csv = open_out(cfg, "mixing.csv");
  auto disc_plot = open_out(cfg, "discrepancy.dat");
  csv << "d,packet_id,h_class,ell,m,chi_index,shift_index,q,value_re,value_im,parseval_residual\n";
  disc_plot << "# d  max discrepancy over packets\n";

  double max_parseval = 0, max_symmetry = 0, max_plancherel = 0, max_conjugation = 0;
  std::vector<std::vector<double>> bins(kBinEdges.size());
  json packets = json::array();
  struct Item {
    std::string csv, plot;
    json packets = json::array();
    double parseval = 0, symmetry = 0, plancherel = 0, conjugation = 0;
    std::vector<std::pair<double, double>> periods;  // (q / sqrt D, |P|)
    std::vector<std::string> errors;
  };
  ordered_parallel(
      ds.size(), cfg.threads,
      [&](std::size_t i) {
        Item it;
        const i64 d = ds[i];
        if (!is_squarefree(d)) return it;
        try {
          const auto pkts = action::cover_packets(d, opt);
          std::ostringstream os;
          double disc_max = 0.0;
          for (std::size_t id = 0; id < pkts.size(); ++id) {
            const auto& pkt = pkts[id];
            const mix::WeylReport rep = mix::analyze_packet(pkt, cfg.L_max);
            const auto shifts = selected_shifts(cfg, *pkt.group);
            double pkt_parseval = 0.0;
            for (auto s : shifts) pkt_parseval = std::max(pkt_parseval, rep.shifts[static_cast<std::size_t>(s)].parseval_residual);
            it.parseval = std::max(it.parseval, pkt_parseval);
            it.symmetry = std::max(it.symmetry, rep.symmetry_residual);
            it.plancherel = std::max(it.plancherel, rep.plancherel_residual);
            it.conjugation = std::max(it.conjugation, rep.conjugation_residual);
            disc_max = std::max(disc_max, rep.discrepancy);
            it.packets.push_back({{"d", d},
                                  {"packet_id", id},
                                  {"disc_matched", rep.disc_matched},
                                  {"h_class", rep.h_class},
                                  {"discrepancy", rep.discrepancy}});
            const std::string prefix = std::to_string(d) + "," + std::to_string(id) + "," + std::to_string(rep.h_class) + ",";
            for (std::size_t c = 0; c < rep.twisted.size(); ++c)
              for (std::size_t k = 0; k < rep.harmonics.size(); ++k) {
                const auto& h = rep.harmonics[k];
                os << prefix << h.ell << ',' << h.m << ',' << c << ",-1,-1," << num(rep.twisted[c][k].real()) << ','
                   << num(rep.twisted[c][k].imag()) << ',' << num(pkt_parseval) << '\n';
              }
            const double sqrtD = std::sqrt(static_cast<double>(-rep.disc_matched));
            const auto live = mix::symmetrized_nonvanishing(cfg.L_max);
            for (auto s : shifts) {
              const auto& row = rep.shifts[static_cast<std::size_t>(s)];
              for (std::size_t k = 0; k < rep.harmonics.size(); ++k) {
                const auto& h = rep.harmonics[k];
                os << prefix << h.ell << ',' << h.m << ",-1," << s << ',' << row.q << ',' << num(row.diagonal[k])
                   << ",0," << num(row.parseval_residual) << '\n';
                if (h.ell >= 1 && s != 0 && live[k]) it.periods.emplace_back(static_cast<double>(row.q) / sqrtD, std::abs(row.diagonal[k]));
              }
            }
          }
          it.csv = os.str();
          it.plot = std::to_string(d) + " " + num(disc_max) + "\n";
        } catch (const std::exception& e) {
          it.errors.push_back("mix d=" + std::to_string(d) + ": " + e.what());
        }
        return it;
      },
      [&](std::size_t, Item&& it) {
        csv << it.csv;
        disc_plot << it.plot;
        for (auto& p : it.packets) packets.push_back(std::move(p));
        max_parseval = std::max(max_parseval, it.parseval);
        max_symmetry = std::max(max_symmetry, it.symmetry);
        max_plancherel = std::max(max_plancherel, it.plancherel);
        max_conjugation = std::max(max_conjugation, it.conjugation);
        for (const auto& [x, v] : it.periods) {
          std::size_t b = 0;
          while (b + 1 < kBinEdges.size() && x >= kBinEdges[b + 1]) ++b;
          bins[b].push_back(v);
        }
        for (const auto& e : it.errors) st.fail(e);
      });

  auto bin_plot = open_out(cfg, "mixing_bins.dat");
  bin_plot << "# q/sqrt(D) bin centre  median |P|\n";
  json bin_json = json::array();
  for (std::size_t b = 0; b < bins.size(); ++b) {
    const double lo = kBinEdges[b];
    const double hi = b + 1 < kBinEdges.size() ? kBinEdges[b + 1] : 1.0;
    const double med = median(bins[b]);
    bin_json.push_back({{"lo", lo}, {"hi", hi}, {"count", bins[b].size()}, {"median_abs_period", med}});
    if (!bins[b].empty()) bin_plot << num(0.5 * (lo + hi)) << ' ' << num(med) << '\n';
  }
  const char* names[] = {"Parseval", "symmetry", "Plancherel", "conjugation"};
  const double values[] = {max_parseval, max_symmetry, max_plancherel, max_conjugation};
  for (int k = 0; k < 4; ++k)
    if (!(values[k] < kTol)) st.fail(std::string("mix: ") + names[k] + " residual " + num(values[k]) + " exceeds 1e-9");
  write_json(cfg, "mix_summary.json",
             {{"d_count", ds.size()},
              {"L_max", cfg.L_max},
              {"shift_policy", to_string(cfg.shift_policy)},
              {"max_parseval_residual", max_parseval},
              {"max_symmetry_residual", max_symmetry},
              {"max_plancherel_residual", max_plancherel},
              {"max_conjugation_residual", max_conjugation},
              {"period_bins", bin_json},
              {"packets", packets},
              {"failures", st.hard_failures}});
  return st;
}

// --------------------------------------------------------------- sums

RunStatus run_sums(const ExperimentConfig& cfg) {
  RunStatus st;
  const eig::TauTable tab = eig::TauTable::load_or_build(cfg.tau_cutoff, cache_dir(cfg));
  const i64 Y = tab.cutoff();
  const auto hecke = eig::hecke_relations_check(tab, Y);
  const auto deligne = eig::deligne_check(tab, Y);
  const auto ineq = eig::hecke_inequality_check(tab, Y);
  for (const auto* list : {&hecke, &deligne, &ineq})
    for (const auto& v : *list) st.fail("sums n=" + std::to_string(v.n) + ": " + v.what);

  {
    auto plot = open_out(cfg, "lambda_p.dat");
    plot << "# p  lambda(p)\n";
    for (i64 p : primes_up_to(Y)) plot << p << ' ' << num(tab.lambda(p)) << '\n';
  }

  const auto ds = d_values(cfg);
  auto csv = open_out(cfg, "sums.csv");
  csv << "d,disc,a,b,c,Y,sparse_sum,sieve_product,l1_euler,squarefree_sum\n";
  const i64 X = std::min<i64>(Y, 1000000);
  ordered_parallel(
      ds.size(), cfg.threads,
      [&](std::size_t i) {
        const i64 d = ds[i];
        const i64 disc = -4 * d;
        const qf::QuadForm f = qf::principal_form(disc);
        const double sparse = eig::sparse_sum(tab, Y, f);
        const eig::SieveProduct sp = eig::sieve_product(f, X);
        const double sq = eig::squarefree_sum(tab, f, X);
        std::ostringstream os;
        os << d << ',' << disc << ',' << f.a << ',' << f.b << ',' << f.c << ',' << Y << ',' << num(sparse) << ','
           << num(sp.product) << ',' << num(sp.l1_euler) << ',' << num(sq) << '\n';
        return os.str();
      },
      [&](std::size_t, std::string&& row) { csv << row; });

  auto primes_csv = open_out(cfg, "prime_sums.csv");
  primes_csv << "disc,x,zeta_sum,zeta_log_euler,sym2_sum,sym2_log_euler\n";
  if (!ds.empty()) {
    const i64 disc = -4 * ds.front();
    const i64 xmax = std::min<i64>(Y, 100000);
    const auto zeta = eig::zeta_family(xmax);
    const auto sym2 = eig::sym2_theta_family(tab, disc, xmax);
    for (i64 x = 16; x <= xmax; x *= 2) {
      const auto z = eig::prime_log_sum(zeta.coeffs, x, zeta.roots);
      const auto s = eig::prime_log_sum(sym2.coeffs, x, sym2.roots);
      primes_csv << disc << ',' << x << ',' << num(z.sum) << ',' << num(z.log_euler) << ',' << num(s.sum) << ','
                 << num(s.log_euler) << '\n';
    }
  }
  write_json(cfg, "sums_summary.json",
             {{"tau_cutoff", Y},
              {"hecke_violations", hecke.size()},
              {"deligne_violations", deligne.size()},
              {"hecke_inequality_violations", ineq.size()},
              {"tau_2", tab.tau(2).str()},
              {"tau_cutoff_value", tab.tau(Y).str()}});
  return st;
}

// -------------------------------------------------------------- local

RunStatus run_local(const ExperimentConfig& cfg) {
  RunStatus st;
  local::LocalSuiteOptions opt;
  opt.samples = cfg.local_samples;
  opt.seed = cfg.seed;
  const auto checks = local::run_local_suite(opt);
  json arr = json::array();
  std::size_t passed = 0;
  for (const auto& c : checks) {
    arr.push_back(local::to_json(c));
    if (c.pass)
      ++passed;
    else
      st.fail("local check " + c.name + " failed: " + c.params.dump());
  }
  write_json(cfg, "local_report.json",
             {{"seed", cfg.seed}, {"samples", cfg.local_samples}, {"passed", passed},
              {"failed", checks.size() - passed}, {"checks", arr}});
  return st;
}

RunStatus run_all(const ExperimentConfig& cfg) {
  RunStatus st;
  for (auto* run : {&run_forms, &run_sphere, &run_orbit, &run_mix, &run_sums, &run_local}) st.merge((*run)(cfg));
  return st;
}

}  // namespace equilab::driver
