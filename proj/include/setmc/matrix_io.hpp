#pragma once

#include "setmc/observed_matrix.hpp"
#include "setmc/types.hpp"

#include <filesystem>

namespace setmc {

enum class ObservedFormat {
  kMatrixMarket,  // coordinate format, 1-based indices
  kCsvTriplets,   // header "i,j,value", 0-based indices
};

enum class DenseFormat {
  kDenseCsv,           // one row per line, comma separated
  kMatrixMarketArray,  // array format, column-major values
};

/// Parses an observed matrix. Throws std::runtime_error on malformed input,
/// std::out_of_range / std::invalid_argument on bad indices or duplicates.
ObservedMatrix load_observed(const std::filesystem::path& path, ObservedFormat format);

/// Writes the dense rank-1 product u w^T. Entries are printed with enough
/// digits to reload within 1e-12 elementwise. The file is written to a
/// temporary path and renamed into place.
void save_completed(const UnitVector& u, const Vector& w, const std::filesystem::path& path,
                    DenseFormat format);

/// Readers for the dense output formats (round-trip checks, CLI plumbing).
Eigen::MatrixXd load_dense(const std::filesystem::path& path, DenseFormat format);

/// Reads an initial vector: one real per line, blank lines ignored,
/// normalized on load.
UnitVector load_unit_vector(const std::filesystem::path& path);

}  // namespace setmc
