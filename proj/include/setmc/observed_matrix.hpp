#pragma once

#include "setmc/types.hpp"

#include <span>
#include <vector>

namespace setmc {

/// One observed entry (i, j, value), 0-based indices.
struct Entry {
  Index row;
  Index col;
  double value;
};

/// An m-by-n matrix known only on an index set Omega, stored as a triplet
/// list grouped by column. The per-column slices are the access pattern the
/// solver uses everywhere, so entries are kept column-major. Immutable after
/// construction and safe to share across threads.
class ObservedMatrix {
 public:
  ObservedMatrix(Index m, Index n, std::vector<Entry> entries);

  Index rows() const { return m_; }
  Index cols() const { return n_; }
  Index nnz() const { return static_cast<Index>(values_.size()); }

  /// View of column j's observed rows and values, plus ||x_{Omega_j}||^2.
  struct ColumnView {
    std::span<const Index> rows;
    std::span<const double> values;
    double norm_sq;
  };
  ColumnView column(Index j) const;

  /// Cached ||X_Omega||_F^2.
  double norm_sq() const { return norm_sq_; }

  /// Materializes the triplet list (column-major order).
  std::vector<Entry> entries() const;

 private:
  Index m_ = 0;
  Index n_ = 0;
  std::vector<Index> col_ptr_;     // size n+1
  std::vector<Index> row_idx_;     // size nnz, grouped by column
  std::vector<double> values_;     // size nnz, aligned with row_idx_
  std::vector<double> col_norm_sq_;
  double norm_sq_ = 0.0;
};

}  // namespace setmc
