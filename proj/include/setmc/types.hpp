#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace setmc {

using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// A unit-norm vector spanning a one-dimensional column space.
/// Construction enforces ||v|| = 1 to within 1e-12.
class UnitVector {
 public:
  explicit UnitVector(Vector v) : v_(std::move(v)) {
    if (v_.size() < 1) throw std::invalid_argument("UnitVector: empty vector");
    if (std::abs(v_.norm() - 1.0) > 1e-12)
      throw std::invalid_argument("UnitVector: norm deviates from 1 by more than 1e-12");
  }

  /// Builds a UnitVector by normalizing v. Throws if v is (numerically) zero.
  static UnitVector normalized(const Vector& v) {
    const double n = v.norm();
    if (!(n > 0.0) || !std::isfinite(n))
      throw std::invalid_argument("UnitVector: cannot normalize zero or non-finite vector");
    return UnitVector(v / n);
  }

  const Vector& vec() const { return v_; }
  Index size() const { return v_.size(); }
  double operator[](Index i) const { return v_[i]; }

 private:
  Vector v_;
};

/// A geodesic u(t) = u cos t + h sin t on the unit sphere (t in [0, pi)),
/// determined by a base point u and a unit tangent h with <u, h> = 0.
class GeodesicRay {
 public:
  GeodesicRay(UnitVector base, Vector direction)
      : base_(std::move(base)), h_(std::move(direction)) {
    if (h_.size() != base_.size())
      throw std::invalid_argument("GeodesicRay: dimension mismatch");
    if (std::abs(h_.norm() - 1.0) > 1e-12)
      throw std::invalid_argument("GeodesicRay: direction is not unit norm");
    if (std::abs(base_.vec().dot(h_)) > 1e-10)
      throw std::invalid_argument("GeodesicRay: direction is not tangent to base");
  }

  const UnitVector& base() const { return base_; }
  const Vector& direction() const { return h_; }
  Index dim() const { return base_.size(); }

 private:
  UnitVector base_;
  Vector h_;
};

/// Solver parameters. Defaults follow the standard configuration:
/// golden-ratio step growth, ten refinement iterations, 1e-6 fit tolerance.
struct SolverConfig {
  int rank = 1;                   // only rank 1 is supported
  double eps_e = 1e-6;            // relative data-fit tolerance
  int max_outer_iters = 2000;
  double eps_step = 1e-9;         // line-search starting step, as a fraction of pi
  int itN = 10;                   // golden-section refinement iterations
  bool transfer_enabled = true;
  std::uint64_t rng_seed = 0;
  std::optional<Vector> init_u;   // explicit initial vector; normalized on use

  void validate() const {
    if (rank != 1) throw std::invalid_argument("SolverConfig: rank must be 1");
    if (!(eps_e > 0.0)) throw std::invalid_argument("SolverConfig: eps_e must be positive");
    if (max_outer_iters < 1) throw std::invalid_argument("SolverConfig: max_outer_iters must be >= 1");
    if (itN < 1) throw std::invalid_argument("SolverConfig: itN must be >= 1");
    if (!(eps_step > 0.0 && eps_step < 1.0))
      throw std::invalid_argument("SolverConfig: eps_step must lie in (0, 1)");
  }
};

/// Outcome of one solve: the factor pair (u, w), fit statistics, and counters.
struct SolveReport {
  bool success;
  double final_objective;     // ||X_Omega - P_Omega(u w^T)||_F^2
  double relative_residual;   // final_objective / ||X_Omega||_F^2
  int outer_iterations;
  int transfers_performed;
  UnitVector u;
  Vector w;
};

}  // namespace setmc
