#pragma once

#include "setmc/observed_matrix.hpp"
#include "setmc/types.hpp"

namespace setmc {

// Data-fit objective for a candidate column space u:
//   f(u) = min_w ||X_Omega - P_Omega(u w^T)||_F^2,
// which decouples over columns into atomic terms
//   f_j(u) = ||x_{Omega_j}||^2 - <u_{Omega_j}, x_{Omega_j}>^2 / ||u_{Omega_j}||^2,
// with the convention f_j = ||x_{Omega_j}||^2 (and w_j = 0) when the
// restriction of u to Omega_j vanishes.

/// Per-column least-squares coefficients w_j minimizing each atomic term.
Vector optimal_w(const UnitVector& u, const ObservedMatrix& X);

/// f(u) = sum_j f_j(u).
double eval_f(const UnitVector& u, const ObservedMatrix& X);

/// The j-th atomic term f_j(u). Throws std::out_of_range on a bad index.
double eval_atomic(const UnitVector& u, const ObservedMatrix& X, Index j);

/// Euclidean gradient: -2 X_r w_u with X_r the residual on Omega.
/// Tangent to u automatically (each residual column is orthogonal to the
/// restricted u by optimality of w).
Vector gradient(const UnitVector& u, const ObservedMatrix& X);

/// Stationarity threshold on ||grad||: 1e-12 * max(1, ||X_Omega||_F).
double grad_tolerance(const ObservedMatrix& X);

/// Normalized steepest-descent geodesic at u, or nullopt when the gradient
/// vanishes (||grad|| <= grad_tolerance), signalling a stationary point.
std::optional<GeodesicRay> descent_ray(const UnitVector& u, const ObservedMatrix& X);

}  // namespace setmc
