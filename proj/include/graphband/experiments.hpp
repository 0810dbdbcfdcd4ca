#ifndef GRAPHBAND_EXPERIMENTS_HPP
#define GRAPHBAND_EXPERIMENTS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "graphband/graph.hpp"

namespace graphband {

struct ExperimentConfig {
  std::string experiment;  // convergence | geometry | cutoff_mismatch |
                           // bound_sweep | noise | approx_bandlimited
  std::string graph_path;
  double omega = 0.25;
  double omega1 = 0.25;  // cutoff_mismatch; omega2 = 2*omega1
  std::uint64_t seed = 42;         // signal seed
  std::uint64_t sample_seed = 1;   // random sampling set seed
  int max_iterations = 200;
  double rel_tol = 1e-9;
  int k = 0;  // random sampling set size; 0: match the one-hop set
  std::vector<double> snr_db = {10.0, 20.0, 30.0};
  std::vector<double> oob_fractions = {0.0, 0.01, 0.05, 0.2};
  std::vector<double> omega_grid;  // bound_sweep, absolute; empty: relative
  int n_signals = 100;             // bound_sweep
  int sweep_iterations = 20;       // bound_sweep
  bool largest_component = false;

  // Flat "key = value" text file; '#' comments; lists comma-separated.
  static ExperimentConfig load(const std::string& path);
};

// Runs the configured experiment, writing one or more CSV files and a
// manifest.json into out_dir. Returns the paths written.
std::vector<std::string> run_experiment(const ExperimentConfig& cfg,
                                        const std::string& out_dir);

}  // namespace graphband

#endif
