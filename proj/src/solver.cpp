#include "setmc/solver.hpp"

#include "setmc/barrier.hpp"
#include "setmc/geodesic.hpp"

#include <random>

namespace setmc {

UnitVector random_init(Index m, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("random_init: dimension must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(m);
  do {
    for (Index i = 0; i < m; ++i) v[i] = normal(rng);
  } while (!(v.norm() > 0.0));
  return UnitVector::normalized(v);
}

Vector reconstruct(const UnitVector& u, const ObservedMatrix& X) {
  return optimal_w(u, X);
}

namespace {

SolveReport make_report(const UnitVector& u, const ObservedMatrix& X, double eps_e,
                        int iterations, int transfers) {
  const Vector w = optimal_w(u, X);
  const double f = eval_f(u, X);
  const double xsq = X.norm_sq();
  const double rel = xsq > 0.0 ? f / xsq : 0.0;
  const bool success = xsq > 0.0 ? rel < eps_e : true;
  return {success, f, rel, iterations, transfers, u, w};
}

}  // namespace

SolveReport solve(const ObservedMatrix& X, const SolverConfig& config,
                  const IterationCallback& on_iteration) {
  config.validate();

  if (config.init_u && config.init_u->size() != X.rows())
    throw std::invalid_argument("solve: init_u dimension does not match the matrix");
  UnitVector u = config.init_u ? UnitVector::normalized(*config.init_u)
                               : random_init(X.rows(), config.rng_seed);

  int transfers = 0;
  int iterations = 0;

  // Nothing observed (or all zeros): w = 0 fits exactly.
  if (!(X.norm_sq() > 0.0))
    return make_report(u, X, config.eps_e, 0, 0);

  const double fit_threshold = config.eps_e * X.norm_sq();

  for (; iterations < config.max_outer_iters; ++iterations) {
    const double f = eval_f(u, X);
    if (on_iteration) on_iteration(iterations, f, transfers);
    if (f < fit_threshold) break;

    std::optional<GeodesicRay> ray = descent_ray(u, X);
    if (!ray) break;  // stationary point; reported through the success flag

    GeodesicObjective obj(*ray, X);
    double f_base = f;

    if (config.transfer_enabled) {
      const TransferResult tr = transfer(obj);
      if (tr.t_st > 0.0) {
        u = tr.u_new;
        ++transfers;
        // The old ray is no longer tangent at the landing point.
        ray = descent_ray(u, X);
        if (!ray) break;
        obj = GeodesicObjective(*ray, X);
        f_base = obj(0.0);
      }
    }

    const double t_max = bracket_minimum(obj, config.eps_step);
    const LineSearchResult ls = golden_section(obj, t_max, config.itN, f_base);
    u = ls.u_star;
  }

  return make_report(u, X, config.eps_e, iterations, transfers);
}

}  // namespace setmc
