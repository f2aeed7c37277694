#pragma once

#include "setmc/observed_matrix.hpp"
#include "setmc/types.hpp"

#include <algorithm>
#include <numbers>
#include <random>
#include <vector>

namespace setmc::testing {

/// The worked 3x2 example: columns (?, 2, 2) and (2, ?, 1). Its rank-1
/// completion is spanned by (2, 1, 1)/sqrt(6).
inline ObservedMatrix fixture_matrix() {
  return ObservedMatrix(3, 2, {{1, 0, 2.0}, {2, 0, 2.0}, {0, 1, 2.0}, {2, 1, 1.0}});
}

inline Vector fixture_u0() {
  Vector u0(3);
  u0 << -10.0, 1.0, 1.0;
  return u0 / u0.norm();
}

inline Vector fixture_ux() {
  Vector ux(3);
  ux << 2.0, 1.0, 1.0;
  return ux / ux.norm();
}

/// Random observed matrix with independent N(0,1) values on a uniform
/// nnz-subset of the index grid.
inline ObservedMatrix random_observed(Index m, Index n, Index nnz, std::mt19937_64& rng) {
  std::vector<Index> linear(static_cast<std::size_t>(m * n));
  for (std::size_t k = 0; k < linear.size(); ++k) linear[k] = static_cast<Index>(k);
  std::vector<Index> picked;
  std::sample(linear.begin(), linear.end(), std::back_inserter(picked), nnz, rng);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Entry> entries;
  entries.reserve(picked.size());
  for (Index lin : picked) entries.push_back({lin % m, lin / m, normal(rng)});
  return ObservedMatrix(m, n, std::move(entries));
}

inline Vector random_gaussian(Index m, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(m);
  for (Index i = 0; i < m; ++i) v[i] = normal(rng);
  return v;
}

inline UnitVector random_unit(Index m, std::mt19937_64& rng) {
  Vector v;
  do {
    v = random_gaussian(m, rng);
  } while (!(v.norm() > 0.0));
  return UnitVector::normalized(v);
}

/// Random unit tangent at u.
inline Vector random_tangent(const UnitVector& u, std::mt19937_64& rng) {
  Vector d;
  double norm = 0.0;
  do {
    d = random_gaussian(u.size(), rng);
    d -= u.vec().dot(d) * u.vec();
    norm = d.norm();
  } while (!(norm > 1e-8));
  return d / norm;
}

inline GeodesicRay random_ray(Index m, std::mt19937_64& rng) {
  UnitVector u = random_unit(m, rng);
  return GeodesicRay(u, random_tangent(u, rng));
}

/// Argmin/argmax of fn over a uniform grid on [0, pi).
template <typename Fn>
std::pair<double, double> grid_extrema(Fn&& fn, int points = 100000) {
  const double pi = std::numbers::pi;
  double best_min_t = 0.0, best_min_v = fn(0.0);
  double best_max_t = 0.0, best_max_v = best_min_v;
  for (int k = 1; k < points; ++k) {
    const double t = pi * k / points;
    const double v = fn(t);
    if (v < best_min_v) { best_min_v = v; best_min_t = t; }
    if (v > best_max_v) { best_max_v = v; best_max_t = t; }
  }
  return {best_min_t, best_max_t};
}

/// Distance between directions, i.e. on the circle of circumference pi.
inline double circular_distance(double s, double t) {
  const double pi = std::numbers::pi;
  double d = std::abs(s - t);
  return std::min(d, pi - d);
}

}  // namespace setmc::testing
