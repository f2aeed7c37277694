#include "setmc/matrix_io.hpp"
#include "setmc/observed_matrix.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace setmc;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "setmc_io_tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write_file(const std::string& name, const std::string& contents) {
  const fs::path p = temp_dir() / name;
  std::ofstream out(p);
  out << contents;
  return p;
}

}  // namespace

TEST_CASE("construction validates indices and duplicates") {
  CHECK_THROWS_AS(ObservedMatrix(3, 2, {{4, 0, 1.0}}), std::out_of_range);
  CHECK_THROWS_AS(ObservedMatrix(3, 2, {{0, 2, 1.0}}), std::out_of_range);
  CHECK_THROWS_AS(ObservedMatrix(3, 2, {{-1, 0, 1.0}}), std::out_of_range);
  CHECK_THROWS_AS(ObservedMatrix(3, 2, {{1, 1, 1.0}, {1, 1, 2.0}}), std::invalid_argument);
  CHECK_THROWS_AS(ObservedMatrix(0, 2, {}), std::invalid_argument);
}

TEST_CASE("column views partition the entries and cache norms") {
  const ObservedMatrix X = testing::fixture_matrix();
  CHECK(X.rows() == 3);
  CHECK(X.cols() == 2);
  CHECK(X.nnz() == 4);

  Index total = 0;
  double norm_sq = 0.0;
  for (Index j = 0; j < X.cols(); ++j) {
    const auto col = X.column(j);
    total += static_cast<Index>(col.values.size());
    double col_sq = 0.0;
    for (double v : col.values) col_sq += v * v;
    CHECK(col.norm_sq == doctest::Approx(col_sq).epsilon(1e-12));
    norm_sq += col_sq;
  }
  CHECK(total == X.nnz());
  CHECK(X.norm_sq() == doctest::Approx(norm_sq).epsilon(1e-12));
  CHECK(X.norm_sq() == doctest::Approx(13.0));

  CHECK_THROWS_AS(X.column(2), std::out_of_range);
  CHECK(X.entries().size() == 4);
}

TEST_CASE("empty observation set is allowed") {
  const ObservedMatrix X(1, 1, {});
  CHECK(X.nnz() == 0);
  CHECK(X.norm_sq() == 0.0);
  CHECK(X.column(0).values.empty());
}

TEST_CASE("matrix market coordinate loader") {
  const auto path = write_file("fixture.mtx",
                               "%%MatrixMarket matrix coordinate real general\n"
                               "% the 3x2 example\n"
                               "3 2 4\n"
                               "2 1 2\n"
                               "3 1 2\n"
                               "1 2 2\n"
                               "3 2 1\n");
  const ObservedMatrix X = load_observed(path, ObservedFormat::kMatrixMarket);
  CHECK(X.rows() == 3);
  CHECK(X.cols() == 2);
  CHECK(X.nnz() == 4);
  CHECK(X.norm_sq() == doctest::Approx(13.0));
  const auto col0 = X.column(0);
  REQUIRE(col0.values.size() == 2);
  CHECK(col0.rows[0] == 1);
  CHECK(col0.rows[1] == 2);

  SUBCASE("empty entry list") {
    const auto p = write_file("empty.mtx", "%%MatrixMarket matrix coordinate real general\n1 1 0\n");
    const ObservedMatrix E = load_observed(p, ObservedFormat::kMatrixMarket);
    CHECK(E.norm_sq() == 0.0);
  }
  SUBCASE("out-of-range entry") {
    const auto p = write_file("oob.mtx",
                              "%%MatrixMarket matrix coordinate real general\n3 2 1\n5 1 1.0\n");
    CHECK_THROWS_AS(load_observed(p, ObservedFormat::kMatrixMarket), std::out_of_range);
  }
  SUBCASE("duplicate entry") {
    const auto p = write_file("dup.mtx",
                              "%%MatrixMarket matrix coordinate real general\n3 2 2\n1 1 1\n1 1 2\n");
    CHECK_THROWS_AS(load_observed(p, ObservedFormat::kMatrixMarket), std::invalid_argument);
  }
  SUBCASE("malformed banner") {
    const auto p = write_file("bad.mtx", "%%NotMatrixMarket\n3 2 0\n");
    CHECK_THROWS_AS(load_observed(p, ObservedFormat::kMatrixMarket), std::runtime_error);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(load_observed(temp_dir() / "nope.mtx", ObservedFormat::kMatrixMarket),
                    std::runtime_error);
  }
}

TEST_CASE("csv triplet loader") {
  const auto path = write_file("fixture.csv",
                               "i,j,value\n"
                               "1,0,2\n"
                               "2,0,2\n"
                               "0,1,2\n"
                               "2,1,1\n");
  const ObservedMatrix X = load_observed(path, ObservedFormat::kCsvTriplets);
  CHECK(X.rows() == 3);
  CHECK(X.cols() == 2);
  CHECK(X.norm_sq() == doctest::Approx(13.0));

  const auto bad = write_file("bad.csv", "x,y,z\n0,0,1\n");
  CHECK_THROWS_AS(load_observed(bad, ObservedFormat::kCsvTriplets), std::runtime_error);
}

TEST_CASE("save_completed writes the rank-1 product") {
  Vector uvec(3);
  uvec << 2.0, 1.0, 1.0;
  const UnitVector u = UnitVector::normalized(uvec);
  Vector w(2);
  w << 2.0 * std::sqrt(6.0), std::sqrt(6.0);

  for (DenseFormat fmt : {DenseFormat::kDenseCsv, DenseFormat::kMatrixMarketArray}) {
    const auto path = temp_dir() / (fmt == DenseFormat::kDenseCsv ? "out.csv" : "out.mtx");
    save_completed(u, w, path, fmt);
    const Eigen::MatrixXd M = load_dense(path, fmt);
    REQUIRE(M.rows() == 3);
    REQUIRE(M.cols() == 2);
    Eigen::MatrixXd expected(3, 2);
    expected << 4, 2, 2, 1, 2, 1;  // matches the observed entries of the fixture
    CHECK((M - expected).cwiseAbs().maxCoeff() <= 1e-12);
  }

  SUBCASE("zero coefficients give the zero matrix") {
    Vector e1 = Vector::Zero(3);
    e1[0] = 1.0;
    const auto path = temp_dir() / "zero.csv";
    save_completed(UnitVector(e1), Vector::Zero(2), path, DenseFormat::kDenseCsv);
    const Eigen::MatrixXd M = load_dense(path, DenseFormat::kDenseCsv);
    CHECK(M.cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("round trip is tight for random factors") {
    std::mt19937_64 rng(7);
    const UnitVector ru = testing::random_unit(5, rng);
    const Vector rw = testing::random_gaussian(4, rng) * 3.0;
    const auto path = temp_dir() / "rt.csv";
    save_completed(ru, rw, path, DenseFormat::kDenseCsv);
    const Eigen::MatrixXd M = load_dense(path, DenseFormat::kDenseCsv);
    const Eigen::MatrixXd expected = ru.vec() * rw.transpose();
    CHECK((M - expected).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("unit vector file loader normalizes") {
  const auto path = write_file("u0.txt", "-10\n1\n1\n");
  const UnitVector u = load_unit_vector(path);
  CHECK(u.vec().norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(u[0] == doctest::Approx(-10.0 / std::sqrt(102.0)));

  const auto bad = write_file("u_bad.txt", "1\nnot_a_number\n");
  CHECK_THROWS_AS(load_unit_vector(bad), std::runtime_error);
}

TEST_CASE("type invariants: UnitVector and GeodesicRay") {
  Vector v(2);
  v << 3.0, 4.0;
  CHECK_THROWS_AS(UnitVector(v), std::invalid_argument);
  const UnitVector u = UnitVector::normalized(v);
  CHECK(u.vec().norm() == doctest::Approx(1.0).epsilon(1e-12));

  Vector h(2);
  h << -0.8, 0.6;
  const GeodesicRay ray(u, h);
  CHECK(ray.direction().norm() == doctest::Approx(1.0));

  Vector not_tangent(2);
  not_tangent << 1.0, 0.0;
  CHECK_THROWS_AS(GeodesicRay(u, not_tangent), std::invalid_argument);
  Vector not_unit = h * 0.5;
  CHECK_THROWS_AS(GeodesicRay(u, not_unit), std::invalid_argument);
}
