#include "setmc/atomic_profile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace setmc {

double AtomicProfile::value(double t) const {
  const double c = std::cos(t), s = std::sin(t);
  const double den = p * c * c + 2.0 * q * c * s + r * s * s;
  if (!(den > 0.0)) return x_norm_sq;
  const double num = a * c + b * s;
  return std::max(0.0, x_norm_sq - num * num / den);
}

double AtomicProfile::slope(double t) const {
  if (degenerate) return 0.0;
  const double c = std::cos(t), s = std::sin(t);
  const double den = p * c * c + 2.0 * q * c * s + r * s * s;
  if (!(den > 0.0)) return 0.0;
  const double lin = a * c + b * s;
  const double num = lin * lin;
  const double num_dot = 2.0 * lin * (b * c - a * s);
  const double den_dot = (r - p) * std::sin(2.0 * t) + 2.0 * q * std::cos(2.0 * t);
  return -(num_dot * den - num * den_dot) / (den * den);
}

AtomicProfile atomic_profile(const GeodesicRay& ray, const ObservedMatrix& X, Index j) {
  const auto col = X.column(j);  // throws on bad j
  const Vector& u = ray.base().vec();
  const Vector& h = ray.direction();

  AtomicProfile prof;
  prof.column = j;
  prof.x_norm_sq = col.norm_sq;
  for (std::size_t k = 0; k < col.values.size(); ++k) {
    const Index i = col.rows[k];
    const double x = col.values[k];
    prof.a += u[i] * x;
    prof.b += h[i] * x;
    prof.p += u[i] * u[i];
    prof.q += u[i] * h[i];
    prof.r += h[i] * h[i];
  }
  const double gram_det = prof.p * prof.r - prof.q * prof.q;
  prof.degenerate = gram_det <= 1e-14 * std::max(prof.p * prof.r, 1.0);
  return prof;
}

namespace {

// Maps an angle to the representative direction in [0, pi).
double wrap_to_half_period(double t) {
  const double pi = std::numbers::pi;
  t = std::fmod(t, pi);
  if (t < 0.0) t += pi;
  if (t >= pi) t -= pi;  // fmod can land exactly on pi after rounding
  return t;
}

}  // namespace

AtomicExtrema atomic_extrema(const AtomicProfile& prof) {
  if (prof.degenerate)
    throw std::invalid_argument("atomic_extrema: degenerate profile (restricted u, h dependent)");
  if (!prof.has_unique_extrema())
    throw std::invalid_argument("atomic_extrema: constant profile (a = b = 0)");

  // Maximizer: the direction (cos t, sin t) orthogonal to (a, b).
  const double t_max = wrap_to_half_period(std::atan2(prof.a, -prof.b));

  // Minimizer: direction of adj(B) (a, b)^T, a positive multiple of
  // B^{-1} v since det(B) > 0 for non-degenerate profiles.
  const double zx = prof.r * prof.a - prof.q * prof.b;
  const double zy = prof.p * prof.b - prof.q * prof.a;
  const double t_min = wrap_to_half_period(std::atan2(zy, zx));

  return {t_min, t_max};
}

}  // namespace setmc
