#pragma once

#include "setmc/geodesic.hpp"

#include <vector>

namespace setmc {

/// Evidence that column k blocks the line search from reaching the dip of
/// column j: f_k peaks at t_o strictly before f_j bottoms out at t_p, while
/// the total objective is still descending at t_o.
struct BarrierRecord {
  Index blocking_column;      // k
  Index blocked_column;       // j
  double t_o;                 // maximizer of f_k
  double t_p;                 // minimizer of f_j
  double total_slope_at_t_o;  // d/dt f(u(t)) at t_o, negative by construction
};

/// d/dt f(u(t)) via the analytic per-column derivatives.
double total_slope(const GeodesicRay& ray, const ObservedMatrix& X, double t);

/// Scans every ordered pair (k, j) of columns with well-defined extrema and
/// emits a record for each pair satisfying
///   t_max,k < t_min,j < t_max,j   and   d/dt f |_{t_max,k} < 0.
/// Slopes within 1e-12 of zero do not count as descending. Records are
/// ordered by (k, j); an empty list means no barrier ahead.
std::vector<BarrierRecord> detect_barriers(const GeodesicObjective& f);
std::vector<BarrierRecord> detect_barriers(const GeodesicRay& ray, const ObservedMatrix& X);

struct TransferResult {
  double t_st;             // 0 when no barrier was crossed
  UnitVector u_new;        // u(t_st)
  Index blocked_column;    // j*, or -1 when t_st = 0
  Index blocking_column;   // k*, or -1 when t_st = 0
};

/// Crosses the nearest barrier: picks the blocked column j* with the
/// smallest t_p, then the blocking column k* with the largest t_o among
/// those blocking j*, and lands at t_st = t_o,k*. Ties break toward the
/// smallest column index. Returns (0, base) when nothing is detected.
TransferResult transfer(const GeodesicObjective& f);
TransferResult transfer(const GeodesicRay& ray, const ObservedMatrix& X);

}  // namespace setmc
