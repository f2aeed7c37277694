#pragma once

#include "setmc/observed_matrix.hpp"
#include "setmc/types.hpp"

namespace setmc {

/// Coefficients determining one column's atomic term along a geodesic
/// u(t) = u cos t + h sin t:
///
///   f_j(t) = ||x||^2 - (a cos t + b sin t)^2
///                      / (p cos^2 t + 2 q cos t sin t + r sin^2 t)
///
/// with a = <u_Oj, x_Oj>, b = <h_Oj, x_Oj>, p = ||u_Oj||^2,
/// q = <u_Oj, h_Oj>, r = ||h_Oj||^2. When the denominator vanishes the
/// value is ||x||^2 (same 0/0 convention as the direct evaluation).
struct AtomicProfile {
  Index column = 0;
  double a = 0.0;
  double b = 0.0;
  double p = 0.0;
  double q = 0.0;
  double r = 0.0;
  double x_norm_sq = 0.0;
  bool degenerate = false;  // restricted u, h linearly dependent

  double value(double t) const;

  /// d/dt f_j(t). Degenerate columns contribute 0 (their value is constant
  /// away from the measure-zero point where the restriction vanishes).
  double slope(double t) const;

  /// True when the extrema of f_j are well defined and unique in [0, pi):
  /// requires linear independence of the restricted u, h and a nonconstant
  /// numerator (a, b not both zero).
  bool has_unique_extrema() const { return !degenerate && (a != 0.0 || b != 0.0); }
};

/// Builds the profile of column j along the ray. Degeneracy rule:
/// p*r - q^2 <= 1e-14 * max(p*r, 1).
AtomicProfile atomic_profile(const GeodesicRay& ray, const ObservedMatrix& X, Index j);

struct AtomicExtrema {
  double t_min;  // argmin of f_j in [0, pi)
  double t_max;  // argmax of f_j in [0, pi)
};

/// Closed-form extrema of f_j along the geodesic. t_max solves
/// a cos t + b sin t = 0 (the rational term vanishes, so f_j attains
/// ||x||^2 there); t_min is the direction of the top generalized
/// eigenvector of (v v^T, B) with v = (a, b), B = [[p, q], [q, r]],
/// i.e. of adj(B) v. Throws std::invalid_argument when the profile is
/// degenerate or constant.
AtomicExtrema atomic_extrema(const AtomicProfile& profile);

}  // namespace setmc
