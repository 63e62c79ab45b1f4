#pragma once

// Experiment configuration: a flat key=value file, then the cache-directory
// environment override, then command-line flags.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "equilab/arith.hpp"

namespace equilab::driver {

enum class ShiftPolicy { all, minimal, explicit_list };

struct ExperimentConfig {
  i64 d_min = 10;
  i64 d_max = 500;
  bool squarefree_only = true;
  int L_max = 8;
  i64 tau_cutoff = 100000;
  ShiftPolicy shift_policy = ShiftPolicy::all;
  std::vector<int> shifts;  // class indices for explicit_list
  std::size_t prime_cap = 20;
  std::string out_dir = "equilab_out";
  std::string cache_dir;  // empty: <out_dir>/cache
  std::uint64_t seed = 20240611;
  std::size_t local_samples = 1000;
  unsigned threads = 0;  // 0: hardware concurrency

  std::string effective_cache_dir() const;
};

inline constexpr const char* kCacheEnv = "EQUILAB_CACHE_DIR";

/// Applies one key=value assignment. Throws std::invalid_argument on an
/// unknown key or a malformed value.
void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& value);

/// Reads a key=value file; '#' starts a comment, blank lines are ignored.
void load_config_file(ExperimentConfig& cfg, const std::string& path);

/// Throws std::invalid_argument describing the first violated constraint.
void validate(const ExperimentConfig& cfg);

std::string to_string(ShiftPolicy p);
std::map<std::string, std::string> to_key_values(const ExperimentConfig& cfg);

}  // namespace equilab::driver
