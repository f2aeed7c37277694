#pragma once

#include "setmc/observed_matrix.hpp"
#include "setmc/solver.hpp"
#include "setmc/types.hpp"

#include <filesystem>
#include <vector>

namespace setmc {

/// One Monte-Carlo sweep point: random rank-1 instances at a fixed
/// sampling rate |Omega| / (m n).
struct TrialSpec {
  Index m = 100;
  Index n = 100;
  int r = 1;
  double sampling_rate = 0.1;
  int trials = 50;
  std::uint64_t seed = 0;  // per-trial seeds are seed + trial_index
  bool transfer_enabled = true;

  Index omega_size() const;
  void validate() const;
};

/// A random rank-1 instance: the generating dense matrix and its projection
/// onto a uniformly drawn index set.
struct Instance {
  Eigen::MatrixXd full;
  ObservedMatrix observed;
};

/// X = s * u v^T with u, v isotropic unit vectors and s standard normal;
/// Omega a uniform omega_size-subset of the index grid. Deterministic per
/// seed.
Instance generate_instance(Index m, Index n, int r, Index omega_size, std::uint64_t seed);

struct SweepPoint {
  double sampling_rate;
  int trials;
  int successes;
  double success_rate;
  double mean_iters;
  double mean_transfers;
  double mean_exact_recovery_err;  // mean ||u w^T - X_full||_F / ||X_full||_F
};

struct SweepResult {
  std::vector<SweepPoint> points;
};

/// Runs trials for every spec. Trials are independent; `jobs` > 1 runs them
/// on a thread pool. Aggregation is by trial index, so the result does not
/// depend on completion order.
SweepResult run_sweep(const std::vector<TrialSpec>& specs, const SolverConfig& config,
                      int jobs = 1);

/// CSV with header
/// sampling_rate,trials,successes,success_rate,mean_iters,mean_transfers,mean_exact_recovery_err
/// one row per point, rows ascending in sampling rate. Written atomically.
void emit_csv(const SweepResult& result, const std::filesystem::path& path);

/// Two-column "rate success_rate" series, gnuplot-friendly.
void emit_gnuplot(const SweepResult& result, const std::filesystem::path& path);

}  // namespace setmc
