#pragma once

#include "setmc/objective.hpp"
#include "setmc/observed_matrix.hpp"
#include "setmc/types.hpp"

#include <functional>

namespace setmc {

/// Isotropic random unit vector: normalized vector of independent standard
/// normal draws. Deterministic given the seed.
UnitVector random_init(Index m, std::uint64_t seed);

/// Observer invoked once per outer iteration with the objective value at the
/// iteration start and the running transfer count. Used by the CLI demo; pass
/// an empty function to disable.
using IterationCallback = std::function<void(int iteration, double f, int transfers)>;

/// Runs the full loop: per iteration, detect and cross a barrier if one is
/// ahead (when enabled), then line-search the descent geodesic. Stops on
/// data fit below eps_e * ||X_Omega||_F^2, on a vanishing gradient
/// (stationary point, reported as failure), or after max_outer_iters.
/// Non-convergence is a reported outcome, not an error.
SolveReport solve(const ObservedMatrix& X, const SolverConfig& config,
                  const IterationCallback& on_iteration = {});

/// Coefficient vector completing u to the rank-1 reconstruction u w^T.
Vector reconstruct(const UnitVector& u, const ObservedMatrix& X);

}  // namespace setmc
