#include "setmc/observed_matrix.hpp"

#include <algorithm>
#include <string>

namespace setmc {

ObservedMatrix::ObservedMatrix(Index m, Index n, std::vector<Entry> entries)
    : m_(m), n_(n) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("ObservedMatrix: dimensions must be positive");

  for (const Entry& e : entries) {
    if (e.row < 0 || e.row >= m || e.col < 0 || e.col >= n)
      throw std::out_of_range("ObservedMatrix: entry (" + std::to_string(e.row) + ", " +
                              std::to_string(e.col) + ") outside " + std::to_string(m) +
                              "x" + std::to_string(n));
  }

  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });
  for (std::size_t k = 1; k < entries.size(); ++k) {
    if (entries[k].row == entries[k - 1].row && entries[k].col == entries[k - 1].col)
      throw std::invalid_argument("ObservedMatrix: duplicate index (" +
                                  std::to_string(entries[k].row) + ", " +
                                  std::to_string(entries[k].col) + ")");
  }

  col_ptr_.assign(static_cast<std::size_t>(n) + 1, 0);
  row_idx_.reserve(entries.size());
  values_.reserve(entries.size());
  col_norm_sq_.assign(static_cast<std::size_t>(n), 0.0);

  for (const Entry& e : entries) {
    row_idx_.push_back(e.row);
    values_.push_back(e.value);
    col_ptr_[static_cast<std::size_t>(e.col) + 1]++;
    col_norm_sq_[static_cast<std::size_t>(e.col)] += e.value * e.value;
    norm_sq_ += e.value * e.value;
  }
  for (Index j = 0; j < n; ++j)
    col_ptr_[static_cast<std::size_t>(j) + 1] += col_ptr_[static_cast<std::size_t>(j)];
}

ObservedMatrix::ColumnView ObservedMatrix::column(Index j) const {
  if (j < 0 || j >= n_) throw std::out_of_range("ObservedMatrix::column: index out of range");
  const auto lo = static_cast<std::size_t>(col_ptr_[static_cast<std::size_t>(j)]);
  const auto hi = static_cast<std::size_t>(col_ptr_[static_cast<std::size_t>(j) + 1]);
  return {std::span<const Index>(row_idx_.data() + lo, hi - lo),
          std::span<const double>(values_.data() + lo, hi - lo),
          col_norm_sq_[static_cast<std::size_t>(j)]};
}

std::vector<Entry> ObservedMatrix::entries() const {
  std::vector<Entry> out;
  out.reserve(values_.size());
  for (Index j = 0; j < n_; ++j) {
    const ColumnView col = column(j);
    for (std::size_t k = 0; k < col.values.size(); ++k)
      out.push_back({col.rows[k], j, col.values[k]});
  }
  return out;
}

}  // namespace setmc
