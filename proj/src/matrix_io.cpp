#include "setmc/matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace setmc {

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return in;
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

ObservedMatrix load_matrix_market(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error(path.string() + ": empty file");

  std::istringstream banner(line);
  std::string tag, object, format, field, symmetry;
  banner >> tag >> object >> format >> field >> symmetry;
  if (tag != "%%MatrixMarket" || lower(object) != "matrix")
    throw std::runtime_error(path.string() + ": missing MatrixMarket banner");
  if (lower(format) != "coordinate")
    throw std::runtime_error(path.string() + ": expected coordinate format");
  if (lower(field) != "real" && lower(field) != "integer")
    throw std::runtime_error(path.string() + ": expected a real-valued matrix");
  if (lower(symmetry) != "general")
    throw std::runtime_error(path.string() + ": only general symmetry is supported");

  // Skip comments and blank lines up to the size line.
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '%') continue;
    break;
  }
  std::istringstream size_line(line);
  long long m = 0, n = 0, nnz = 0;
  if (!(size_line >> m >> n >> nnz) || m < 1 || n < 1 || nnz < 0)
    throw std::runtime_error(path.string() + ": malformed size line");

  std::vector<Entry> entries;
  entries.reserve(static_cast<std::size_t>(nnz));
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '%') continue;
    std::istringstream es(line);
    long long i = 0, j = 0;
    double v = 0.0;
    if (!(es >> i >> j >> v))
      throw std::runtime_error(path.string() + ": malformed entry line: " + line);
    // 1-based on disk.
    entries.push_back({static_cast<Index>(i - 1), static_cast<Index>(j - 1), v});
  }
  if (entries.size() != static_cast<std::size_t>(nnz))
    throw std::runtime_error(path.string() + ": entry count does not match the size line");

  return ObservedMatrix(static_cast<Index>(m), static_cast<Index>(n), std::move(entries));
}

ObservedMatrix load_csv_triplets(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error(path.string() + ": empty file");
  // Tolerate surrounding whitespace and a trailing CR in the header.
  std::string header = line;
  while (!header.empty() && (header.back() == '\r' || header.back() == ' ')) header.pop_back();
  if (header != "i,j,value")
    throw std::runtime_error(path.string() + ": expected header 'i,j,value'");

  Index m = 0, n = 0;
  std::vector<Entry> entries;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream es(line);
    long long i = 0, j = 0;
    double v = 0.0;
    if (!(es >> i >> j >> v))
      throw std::runtime_error(path.string() + ": malformed row: " + line);
    if (i < 0 || j < 0) throw std::out_of_range(path.string() + ": negative index");
    entries.push_back({static_cast<Index>(i), static_cast<Index>(j), v});
    m = std::max(m, static_cast<Index>(i + 1));
    n = std::max(n, static_cast<Index>(j + 1));
  }
  if (entries.empty()) throw std::runtime_error(path.string() + ": no entries");
  return ObservedMatrix(m, n, std::move(entries));
}

void write_atomically(const std::filesystem::path& path, const std::string& contents) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << contents;
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

void append_number(std::string& s, double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  s.append(buf, ptr);
}

}  // namespace

ObservedMatrix load_observed(const std::filesystem::path& path, ObservedFormat format) {
  switch (format) {
    case ObservedFormat::kMatrixMarket:
      return load_matrix_market(path);
    case ObservedFormat::kCsvTriplets:
      return load_csv_triplets(path);
  }
  throw std::invalid_argument("load_observed: unknown format");
}

void save_completed(const UnitVector& u, const Vector& w, const std::filesystem::path& path,
                    DenseFormat format) {
  const Index m = u.size();
  const Index n = w.size();
  std::string out;
  out.reserve(static_cast<std::size_t>(m * n) * 20);

  if (format == DenseFormat::kDenseCsv) {
    for (Index i = 0; i < m; ++i) {
      for (Index j = 0; j < n; ++j) {
        if (j > 0) out.push_back(',');
        append_number(out, u[i] * w[j]);
      }
      out.push_back('\n');
    }
  } else {
    out += "%%MatrixMarket matrix array real general\n";
    out += std::to_string(m) + " " + std::to_string(n) + "\n";
    for (Index j = 0; j < n; ++j)
      for (Index i = 0; i < m; ++i) {
        append_number(out, u[i] * w[j]);
        out.push_back('\n');
      }
  }
  write_atomically(path, out);
}

Eigen::MatrixXd load_dense(const std::filesystem::path& path, DenseFormat format) {
  std::ifstream in = open_input(path);
  std::string line;

  if (format == DenseFormat::kDenseCsv) {
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
      if (line.empty() || line == "\r") continue;
      std::replace(line.begin(), line.end(), ',', ' ');
      std::istringstream rs(line);
      std::vector<double> row;
      double v = 0.0;
      while (rs >> v) row.push_back(v);
      if (!rows.empty() && row.size() != rows.front().size())
        throw std::runtime_error(path.string() + ": ragged rows");
      rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error(path.string() + ": no data");
    Eigen::MatrixXd M(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows[i].size(); ++j)
        M(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
    return M;
  }

  if (!std::getline(in, line)) throw std::runtime_error(path.string() + ": empty file");
  std::istringstream banner(line);
  std::string tag, object, fmt;
  banner >> tag >> object >> fmt;
  if (tag != "%%MatrixMarket" || lower(fmt) != "array")
    throw std::runtime_error(path.string() + ": expected a MatrixMarket array file");
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '%') continue;
    break;
  }
  std::istringstream size_line(line);
  long long m = 0, n = 0;
  if (!(size_line >> m >> n) || m < 1 || n < 1)
    throw std::runtime_error(path.string() + ": malformed size line");
  Eigen::MatrixXd M(m, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < m; ++i) {
      double v = 0.0;
      if (!(in >> v)) throw std::runtime_error(path.string() + ": truncated array data");
      M(i, j) = v;
    }
  return M;
}

UnitVector load_unit_vector(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  std::vector<double> vals;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    std::istringstream ls(line);
    double v = 0.0;
    if (!(ls >> v)) throw std::runtime_error(path.string() + ": malformed line: " + line);
    vals.push_back(v);
  }
  if (vals.empty()) throw std::runtime_error(path.string() + ": no values");
  Vector v(static_cast<Index>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i) v[static_cast<Index>(i)] = vals[i];
  return UnitVector::normalized(v);
}

}  // namespace setmc
