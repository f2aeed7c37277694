#include "setmc/objective.hpp"

#include <algorithm>
#include <cmath>

namespace setmc {

namespace {

// <u_Oj, x_Oj> and ||u_Oj||^2 for one column.
struct ColumnDots {
  double a;
  double p;
};

ColumnDots column_dots(const Vector& u, const ObservedMatrix::ColumnView& col) {
  double a = 0.0, p = 0.0;
  for (std::size_t k = 0; k < col.values.size(); ++k) {
    const double ui = u[col.rows[k]];
    a += ui * col.values[k];
    p += ui * ui;
  }
  return {a, p};
}

}  // namespace

Vector optimal_w(const UnitVector& u, const ObservedMatrix& X) {
  Vector w = Vector::Zero(X.cols());
  for (Index j = 0; j < X.cols(); ++j) {
    const auto [a, p] = column_dots(u.vec(), X.column(j));
    w[j] = p > 0.0 ? a / p : 0.0;
  }
  return w;
}

double eval_atomic(const UnitVector& u, const ObservedMatrix& X, Index j) {
  const auto col = X.column(j);  // throws on bad j
  const auto [a, p] = column_dots(u.vec(), col);
  if (p > 0.0) return std::max(0.0, col.norm_sq - a * a / p);
  return col.norm_sq;
}

double eval_f(const UnitVector& u, const ObservedMatrix& X) {
  double f = 0.0;
  for (Index j = 0; j < X.cols(); ++j) f += eval_atomic(u, X, j);
  return f;
}

Vector gradient(const UnitVector& u, const ObservedMatrix& X) {
  const Vector w = optimal_w(u, X);
  Vector g = Vector::Zero(X.rows());
  for (Index j = 0; j < X.cols(); ++j) {
    if (w[j] == 0.0) continue;  // zero coefficient annihilates the column's contribution
    const auto col = X.column(j);
    for (std::size_t k = 0; k < col.values.size(); ++k) {
      const Index i = col.rows[k];
      const double residual = col.values[k] - w[j] * u[i];
      g[i] -= 2.0 * residual * w[j];
    }
  }
  return g;
}

double grad_tolerance(const ObservedMatrix& X) {
  return 1e-12 * std::max(1.0, std::sqrt(X.norm_sq()));
}

std::optional<GeodesicRay> descent_ray(const UnitVector& u, const ObservedMatrix& X) {
  const Vector g = gradient(u, X);
  if (g.norm() <= grad_tolerance(X)) return std::nullopt;
  Vector h = -g;
  // One re-orthogonalization pass: tangency of g holds to rounding, but the
  // normalized direction must satisfy the ray invariant even when ||g|| is
  // barely above threshold.
  h -= u.vec().dot(h) * u.vec();
  const double hn = h.norm();
  if (hn <= grad_tolerance(X)) return std::nullopt;
  return GeodesicRay(u, h / hn);
}

}  // namespace setmc
