#pragma once

#include "setmc/atomic_profile.hpp"
#include "setmc/observed_matrix.hpp"
#include "setmc/types.hpp"

#include <vector>

namespace setmc {

/// Golden-ratio constants used by the line search: c1 = (sqrt(5)-1)/2 and
/// the growth factor c2 = c1 / (1 - c1).
inline constexpr double kGoldenC1 = 0.6180339887498948482;
inline constexpr double kGoldenC2 = kGoldenC1 / (1.0 - kGoldenC1);

/// u(t) = u cos t + h sin t, renormalized to absorb rounding.
UnitVector geodesic_point(const GeodesicRay& ray, double t);

/// f restricted to a geodesic. Building it costs one pass over Omega; each
/// evaluation afterwards is O(n) via the per-column profiles. Evaluations
/// are counted so the line-search call contracts can be asserted.
class GeodesicObjective {
 public:
  GeodesicObjective(const GeodesicRay& ray, const ObservedMatrix& X);

  /// f(u(t)) = sum_j f_j(t).
  double operator()(double t) const;

  /// d/dt f(u(t)); degenerate columns contribute 0.
  double slope(double t) const;

  const std::vector<AtomicProfile>& profiles() const { return profiles_; }
  const GeodesicRay& ray() const { return ray_; }

  long eval_count() const { return eval_count_; }
  void reset_eval_count() { eval_count_ = 0; }

 private:
  GeodesicRay ray_;
  std::vector<AtomicProfile> profiles_;
  mutable long eval_count_ = 0;
};

/// Step A of the line search: starting from t' = eps_step * pi, grow by c2
/// until the objective rises between consecutive probes (return that t'')
/// or the next probe would exceed pi (return pi). The result is in (0, pi].
double bracket_minimum(const GeodesicObjective& f, double eps_step);

/// Convenience overload building the geodesic objective internally.
double bracket_minimum(const GeodesicRay& ray, const ObservedMatrix& X, double eps_step);

struct LineSearchResult {
  double t_star;
  UnitVector u_star;
  double f_star;
};

/// Step B: golden-section refinement of [0, t_max] followed by an argmin
/// over the four retained probe points. Spends exactly itN + 4 objective
/// evaluations. f_base is the (already computed) objective at t = 0; if the
/// best probe exceeds it the base point is returned, so the result never
/// increases the objective.
LineSearchResult golden_section(const GeodesicObjective& f, double t_max, int itN,
                                double f_base);

/// Convenience overload; evaluates f at t = 0 itself to obtain f_base.
LineSearchResult golden_section(const GeodesicRay& ray, const ObservedMatrix& X,
                                double t_max, int itN);

}  // namespace setmc
