#pragma once

// The experiment subcommands. Each writes its files into cfg.out_dir and
// reports how many hard invariants failed.

#include <cstddef>
#include <string>
#include <vector>

#include "config.hpp"

namespace equilab::driver {

struct RunStatus {
  std::size_t hard_failures = 0;
  std::vector<std::string> messages;

  void fail(const std::string& what);
  void merge(const RunStatus& o);
};

/// Admissible d > 3 in range, squarefree when the config asks for it.
std::vector<i64> d_values(const ExperimentConfig& cfg);

RunStatus run_forms(const ExperimentConfig& cfg);
RunStatus run_sphere(const ExperimentConfig& cfg);
RunStatus run_orbit(const ExperimentConfig& cfg);
RunStatus run_mix(const ExperimentConfig& cfg);
RunStatus run_sums(const ExperimentConfig& cfg);
RunStatus run_local(const ExperimentConfig& cfg);
RunStatus run_all(const ExperimentConfig& cfg);

}  // namespace equilab::driver
