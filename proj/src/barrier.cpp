#include "setmc/barrier.hpp"

#include <cmath>

namespace setmc {

namespace {

constexpr double kSlopeTol = 1e-12;  // slopes this close to zero are non-barriers

struct ColumnExtrema {
  Index column;
  double t_min;
  double t_max;
};

std::vector<ColumnExtrema> well_defined_extrema(const GeodesicObjective& f) {
  std::vector<ColumnExtrema> out;
  for (const AtomicProfile& prof : f.profiles()) {
    if (!prof.has_unique_extrema()) continue;
    const AtomicExtrema ext = atomic_extrema(prof);
    out.push_back({prof.column, ext.t_min, ext.t_max});
  }
  return out;
}

}  // namespace

double total_slope(const GeodesicRay& ray, const ObservedMatrix& X, double t) {
  return GeodesicObjective(ray, X).slope(t);
}

std::vector<BarrierRecord> detect_barriers(const GeodesicObjective& f) {
  const std::vector<ColumnExtrema> ext = well_defined_extrema(f);
  std::vector<BarrierRecord> records;
  for (const ColumnExtrema& k : ext) {
    const double slope_at_peak = f.slope(k.t_max);
    if (!(slope_at_peak < -kSlopeTol)) continue;
    for (const ColumnExtrema& j : ext) {
      if (j.column == k.column) continue;
      if (k.t_max < j.t_min && j.t_min < j.t_max)
        records.push_back({k.column, j.column, k.t_max, j.t_min, slope_at_peak});
    }
  }
  return records;
}

std::vector<BarrierRecord> detect_barriers(const GeodesicRay& ray, const ObservedMatrix& X) {
  return detect_barriers(GeodesicObjective(ray, X));
}

TransferResult transfer(const GeodesicObjective& f) {
  const std::vector<BarrierRecord> records = detect_barriers(f);
  if (records.empty()) return {0.0, f.ray().base(), -1, -1};

  Index j_star = -1;
  double t_p_star = 0.0;
  for (const BarrierRecord& rec : records) {
    if (j_star < 0 || rec.t_p < t_p_star ||
        (rec.t_p == t_p_star && rec.blocked_column < j_star)) {
      j_star = rec.blocked_column;
      t_p_star = rec.t_p;
    }
  }

  Index k_star = -1;
  double t_o_star = 0.0;
  for (const BarrierRecord& rec : records) {
    if (rec.blocked_column != j_star) continue;
    if (k_star < 0 || rec.t_o > t_o_star ||
        (rec.t_o == t_o_star && rec.blocking_column < k_star)) {
      k_star = rec.blocking_column;
      t_o_star = rec.t_o;
    }
  }

  return {t_o_star, geodesic_point(f.ray(), t_o_star), j_star, k_star};
}

TransferResult transfer(const GeodesicRay& ray, const ObservedMatrix& X) {
  return transfer(GeodesicObjective(ray, X));
}

}  // namespace setmc
