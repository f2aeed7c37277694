#include "setmc/geodesic.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace setmc {

UnitVector geodesic_point(const GeodesicRay& ray, double t) {
  const Vector v = ray.base().vec() * std::cos(t) + ray.direction() * std::sin(t);
  return UnitVector::normalized(v);
}

GeodesicObjective::GeodesicObjective(const GeodesicRay& ray, const ObservedMatrix& X)
    : ray_(ray) {
  profiles_.reserve(static_cast<std::size_t>(X.cols()));
  for (Index j = 0; j < X.cols(); ++j) profiles_.push_back(atomic_profile(ray, X, j));
}

double GeodesicObjective::operator()(double t) const {
  ++eval_count_;
  double f = 0.0;
  for (const AtomicProfile& prof : profiles_) f += prof.value(t);
  return f;
}

double GeodesicObjective::slope(double t) const {
  double df = 0.0;
  for (const AtomicProfile& prof : profiles_) df += prof.slope(t);
  return df;
}

double bracket_minimum(const GeodesicObjective& f, double eps_step) {
  const double pi = std::numbers::pi;
  double t_prev = eps_step * pi;
  double f_prev = f(t_prev);
  while (true) {
    const double t_next = kGoldenC2 * t_prev;
    if (t_next > pi) return pi;
    const double f_next = f(t_next);
    if (f_next > f_prev) return t_next;
    t_prev = t_next;
    f_prev = f_next;
  }
}

double bracket_minimum(const GeodesicRay& ray, const ObservedMatrix& X, double eps_step) {
  return bracket_minimum(GeodesicObjective(ray, X), eps_step);
}

LineSearchResult golden_section(const GeodesicObjective& f, double t_max, int itN,
                                double f_base) {
  std::array<double, 4> t = {t_max / (kGoldenC2 * kGoldenC2), t_max / kGoldenC2, 0.0, t_max};
  t[2] = t[0] + kGoldenC1 * (t[3] - t[0]);
  std::array<double, 4> fv = {f(t[0]), f(t[1]), f(t[2]), f(t[3])};

  for (int itn = 1; itn <= itN; ++itn) {
    if (fv[0] > fv[1] && fv[1] > fv[2]) {
      t[0] = t[1];
      t[1] = t[2];
      t[2] = t[0] + kGoldenC1 * (t[3] - t[0]);
      fv[0] = fv[1];
      fv[1] = fv[2];
      fv[2] = f(t[2]);
    } else {
      t[3] = t[2];
      t[2] = t[1];
      t[1] = t[0] + (1.0 - kGoldenC1) * (t[3] - t[0]);
      fv[3] = fv[2];
      fv[2] = fv[1];
      fv[1] = f(t[1]);
    }
  }

  std::size_t best = 0;
  for (std::size_t k = 1; k < 4; ++k)
    if (fv[k] < fv[best]) best = k;

  // The probe interval excludes a neighborhood of 0, so on non-unimodal
  // brackets the best probe can sit above the base point; fall back to the
  // base in that case to keep the outer loop non-increasing.
  if (fv[best] > f_base) return {0.0, f.ray().base(), f_base};
  return {t[best], geodesic_point(f.ray(), t[best]), fv[best]};
}

LineSearchResult golden_section(const GeodesicRay& ray, const ObservedMatrix& X,
                                double t_max, int itN) {
  const GeodesicObjective f(ray, X);
  const double f_base = f(0.0);
  return golden_section(f, t_max, itN, f_base);
}

}  // namespace setmc
