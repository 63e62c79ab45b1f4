#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "config.hpp"
#include "runs.hpp"

int main(int argc, char** argv) {
  using namespace equilab::driver;
  CLI::App app{"equilab: class group actions on sphere points, Weyl sums and local identities"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  app.add_option("-c,--config", config_path, "key=value configuration file");
  // Options recorded as strings so that only flags given on the command line
  // override the file and the environment.
  std::map<std::string, std::string> overrides;
  auto flag = [&](const std::string& name, const std::string& help) {
    app.add_option_function<std::string>(
        "--" + name, [&overrides, name](const std::string& v) { overrides[name] = v; }, help);
  };
  flag("d_min", "smallest d");
  flag("d_max", "largest d");
  flag("squarefree_only", "true or false");
  flag("L_max", "largest harmonic degree (<= 16)");
  flag("tau_cutoff", "largest n for tau (<= 10^7)");
  flag("shift_policy", "all, minimal or explicit");
  flag("shifts", "comma separated class indices for the explicit policy");
  flag("prime_cap", "number of split primes tried as generators");
  flag("out_dir", "output directory");
  flag("cache_dir", "cache directory (overrides $EQUILAB_CACHE_DIR)");
  flag("seed", "seed for sampled local checks");
  flag("local_samples", "group elements sampled per local case");
  flag("threads", "worker threads, 0 for all cores");

  using Runner = RunStatus (*)(const ExperimentConfig&);
  Runner runner = nullptr;
  const std::pair<const char*, std::pair<const char*, Runner>> commands[] = {
      {"forms", {"reduced forms, class groups and the Minkowski bound", &run_forms}},
      {"sphere", {"lattice points and their rotation classes", &run_sphere}},
      {"orbit", {"packets labelled by the class group, with action-law checks", &run_orbit}},
      {"mix", {"Weyl sums, twisted sums and joint periods", &run_mix}},
      {"sums", {"Ramanujan tau, Hecke checks and eigenvalue sums", &run_sums}},
      {"local", {"exact local identities report", &run_local}},
      {"all", {"every subcommand in turn", &run_all}},
  };
  for (const auto& [name, info] : commands) {
    auto* sub = app.add_subcommand(name, info.first);
    sub->callback([&runner, r = info.second] { runner = r; });
  }

  CLI11_PARSE(app, argc, argv);

  ExperimentConfig cfg;
  try {
    if (!config_path.empty()) load_config_file(cfg, config_path);
    if (const char* env = std::getenv(kCacheEnv); env != nullptr && *env != '\0') cfg.cache_dir = env;
    for (const auto& [k, v] : overrides) apply_setting(cfg, k, v);
    validate(cfg);
  } catch (const std::exception& e) {
    std::cerr << "equilab: " << e.what() << '\n';
    return 2;
  }

  try {
    const RunStatus st = runner(cfg);
    if (st.hard_failures > 0) {
      std::cerr << "equilab: " << st.hard_failures << " hard invariant failure(s)\n";
      return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "equilab: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
