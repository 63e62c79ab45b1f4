#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "equilab/harmonics.hpp"
#include "equilab/tau.hpp"

namespace equilab::driver {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_int(const std::string& key, const std::string& v) {
  T out{};
  const auto* end = v.data() + v.size();
  auto [ptr, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || ptr != end) throw std::invalid_argument("config: bad integer for " + key + ": '" + v + "'");
  return out;
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw std::invalid_argument("config: bad boolean for " + key + ": '" + v + "'");
}

}  // namespace

std::string ExperimentConfig::effective_cache_dir() const {
  return cache_dir.empty() ? out_dir + "/cache" : cache_dir;
}

std::string to_string(ShiftPolicy p) {
  switch (p) {
    case ShiftPolicy::all: return "all";
    case ShiftPolicy::minimal: return "minimal";
    case ShiftPolicy::explicit_list: return "explicit";
  }
  return "?";
}

void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& raw) {
  const std::string v = trim(raw);
  if (key == "d_min") {
    cfg.d_min = parse_int<i64>(key, v);
  } else if (key == "d_max") {
    cfg.d_max = parse_int<i64>(key, v);
  } else if (key == "squarefree_only") {
    cfg.squarefree_only = parse_bool(key, v);
  } else if (key == "L_max") {
    cfg.L_max = parse_int<int>(key, v);
  } else if (key == "tau_cutoff") {
    cfg.tau_cutoff = parse_int<i64>(key, v);
  } else if (key == "shift_policy") {
    if (v == "all")
      cfg.shift_policy = ShiftPolicy::all;
    else if (v == "minimal")
      cfg.shift_policy = ShiftPolicy::minimal;
    else if (v == "explicit")
      cfg.shift_policy = ShiftPolicy::explicit_list;
    else
      throw std::invalid_argument("config: shift_policy must be all, minimal or explicit");
  } else if (key == "shifts") {
    cfg.shifts.clear();
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!trim(item).empty()) cfg.shifts.push_back(parse_int<int>(key, trim(item)));
  } else if (key == "prime_cap") {
    cfg.prime_cap = parse_int<std::size_t>(key, v);
  } else if (key == "out_dir") {
    cfg.out_dir = v;
  } else if (key == "cache_dir") {
    cfg.cache_dir = v;
  } else if (key == "seed") {
    cfg.seed = parse_int<std::uint64_t>(key, v);
  } else if (key == "local_samples") {
    cfg.local_samples = parse_int<std::size_t>(key, v);
  } else if (key == "threads") {
    cfg.threads = parse_int<unsigned>(key, v);
  } else {
    throw std::invalid_argument("config: unknown key '" + key + "'");
  }
}

void load_config_file(ExperimentConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: " + path + ":" + std::to_string(lineno) + ": expected key=value");
    apply_setting(cfg, trim(line.substr(0, eq)), line.substr(eq + 1));
  }
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.d_min < 1) throw std::invalid_argument("config: d_min must be positive");
  if (cfg.d_min > cfg.d_max) throw std::invalid_argument("config: d range is empty");
  if (cfg.L_max < 0 || cfg.L_max > mix::kMaxDegree) throw std::invalid_argument("config: L_max must be in [0, 16]");
  if (cfg.tau_cutoff < 1 || cfg.tau_cutoff > eig::kMaxTauCutoff)
    throw std::invalid_argument("config: tau_cutoff must be in [1, 10^7]");
  if (cfg.prime_cap < 1) throw std::invalid_argument("config: prime_cap must be positive");
  if (cfg.shift_policy == ShiftPolicy::explicit_list && cfg.shifts.empty())
    throw std::invalid_argument("config: explicit shift policy needs a shifts list");
  if (std::any_of(cfg.shifts.begin(), cfg.shifts.end(), [](int s) { return s < 0; }))
    throw std::invalid_argument("config: shift indices must be nonnegative");
  if (cfg.out_dir.empty()) throw std::invalid_argument("config: out_dir is empty");
}

std::map<std::string, std::string> to_key_values(const ExperimentConfig& cfg) {
  std::string shifts;
  for (std::size_t i = 0; i < cfg.shifts.size(); ++i) shifts += (i ? "," : "") + std::to_string(cfg.shifts[i]);
  return {{"d_min", std::to_string(cfg.d_min)},
          {"d_max", std::to_string(cfg.d_max)},
          {"squarefree_only", cfg.squarefree_only ? "true" : "false"},
          {"L_max", std::to_string(cfg.L_max)},
          {"tau_cutoff", std::to_string(cfg.tau_cutoff)},
          {"shift_policy", to_string(cfg.shift_policy)},
          {"shifts", shifts},
          {"prime_cap", std::to_string(cfg.prime_cap)},
          {"seed", std::to_string(cfg.seed)},
          {"local_samples", std::to_string(cfg.local_samples)}};
}

}  // namespace equilab::driver
