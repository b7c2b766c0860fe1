#include <doctest.h>

#include <cmath>

#include "support/checks.hpp"
#include "torfan/complex_eigen.hpp"
#include "torfan/perturbation.hpp"

using namespace torfan;

namespace {

MatrixFamily family(std::size_t n) {
  MatrixFamily f;
  f.size = n;
  f.coefficients.assign(n, std::vector<std::vector<Complex>>(n));
  return f;
}

// [[x, 1], [0, 0]]
MatrixFamily exceptional() {
  auto f = family(2);
  f.coefficients[0][0] = {0, 1};
  f.coefficients[0][1] = {1};
  return f;
}

// [[0, 0, 0], [0, x, 1], [0, 0, 0]]
MatrixFamily three_by_three() {
  auto f = family(3);
  f.coefficients[1][1] = {0, 1};
  f.coefficients[1][2] = {1};
  return f;
}

Subspace span_of(std::initializer_list<std::initializer_list<Complex>> columns) {
  const auto cols = static_cast<Eigen::Index>(columns.size());
  const auto rows = static_cast<Eigen::Index>(columns.begin()->size());
  ComplexMatrix m(rows, cols);
  Eigen::Index j = 0;
  for (const auto& c : columns) {
    Eigen::Index i = 0;
    for (auto v : c) m(i++, j) = v;
    ++j;
  }
  return Subspace::span(m);
}

const std::vector<double> decimal_ray{1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};

}  // namespace

TEST_CASE("eigenprojection of a diagonal matrix") {
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(1, 1) = 1;
  auto p = eigenprojection(d, 0.0, 0.5);
  CHECK(std::abs(p.matrix(0, 0) - 1.0) < 1e-12);
  CHECK(std::abs(p.matrix(1, 1)) < 1e-12);
  CHECK(std::abs(p.trace - 1.0) < 1e-12);
  // A node of the circle through radius 1 lands on the eigenvalue 1.
  CHECK_FAILS_WITH(eigenprojection(d, 0.0, 1.0), ErrorKind::ContourHitsSpectrum);
  CHECK_FAILS_WITH(eigenprojection(d, 0.0, -1.0), ErrorKind::InvalidArgument);
}

TEST_CASE("eigenprojections of the exceptional family") {
  auto f = exceptional();
  for (double x : {0.1, 0.01, 0.001}) {
    ComplexMatrix a = f.at(x);
    auto p1 = eigenprojection(a, x, x / 2);
    ComplexMatrix expected(2, 2);
    expected << 1, 1 / x, 0, 0;
    CHECK(operator_norm(p1.matrix - expected) <= 1e-8 * std::max(1.0, 1 / x));
    auto p2 = eigenprojection(a, 0.0, x / 2);
    CHECK(operator_norm(p1.matrix + p2.matrix - ComplexMatrix::Identity(2, 2)) < 1e-8);
    CHECK(p1.idempotency_defect <= 1e-8 * operator_norm(p1.matrix));
    CHECK(p1.commutator_defect <= 1e-8 * std::max(1.0, operator_norm(a)) * operator_norm(p1.matrix));
  }
  auto paths = track_eigenvalues(f, default_ray());
  REQUIRE(paths.size() == 2);
  for (const auto& path : paths) {
    auto pp = path_projection(f, path);
    CHECK(pp.exponent == doctest::Approx(-1.0).epsilon(0.05));
  }
}

TEST_CASE("tracking eigenvalues") {
  auto f = exceptional();
  auto paths = track_eigenvalues(f, default_ray());
  REQUIRE(paths.size() == 2);
  // Sorted by modulus at the first point: 0, then x.
  for (const auto& [x, v] : paths[0].samples) CHECK(std::abs(v) < 1e-12);
  for (const auto& [x, v] : paths[1].samples) CHECK(std::abs(v - x) < 1e-12);

  auto c = family(2);
  c.coefficients[0][0] = {1};
  c.coefficients[1][1] = {2};
  for (const auto& p : track_eigenvalues(c, default_ray()))
    for (const auto& [x, v] : p.samples) CHECK(std::abs(v - p.samples.front().second) < 1e-12);

  auto three = track_eigenvalues(three_by_three(), default_ray());
  int zero_paths = 0;
  for (const auto& p : three) {
    if (std::abs(p.samples.back().second) < 1e-12 && std::abs(p.samples.front().second) < 1e-12) ++zero_paths;
  }
  CHECK(zero_paths == 2);
  CHECK_FAILS_WITH(track_eigenvalues(f, {0.1, 0.2}), ErrorKind::InvalidArgument);
  CHECK_FAILS_WITH(track_eigenvalues(f, {0.1, -0.01}), ErrorKind::InvalidArgument);
}

TEST_CASE("total projections") {
  auto r = total_projection_limit_check(exceptional(), 0.0, default_ray());
  CHECK(r.exact_limit);
  CHECK(r.cluster_size == 2);
  CHECK(operator_norm(r.limit - ComplexMatrix::Identity(2, 2)) < 1e-12);
  CHECK(r.bounded);
  CHECK(r.converges);
  for (double e : r.errors) CHECK(e < 1e-8);

  auto d = family(2);
  d.coefficients[0][0] = {0, 1};
  d.coefficients[1][1] = {1, 1};
  auto rd = total_projection_limit_check(d, 0.0, default_ray());
  CHECK(rd.cluster_size == 1);
  for (double n : rd.norms) CHECK(std::abs(n - 1.0) < 1e-8);

  // For the 3x3 family the 0-generalized eigenspace of A(0) is everything.
  auto r3 = total_projection_limit_check(three_by_three(), 0.0, default_ray());
  CHECK(r3.exact_limit);
  CHECK(operator_norm(r3.limit - ComplexMatrix::Identity(3, 3)) < 1e-12);
  CHECK(r3.converges);
  CHECK_FAILS_WITH(total_projection_limit_check(exceptional(), 5.0, default_ray()), ErrorKind::InvalidArgument);
}

TEST_CASE("derivative spectra") {
  auto d = family(2);
  d.coefficients[0][0] = {0, 1};
  d.coefficients[1][1] = {0, 2};
  auto v = derivative_spectrum(d, 0.0, default_ray());
  REQUIRE(v.size() == 2);
  CHECK(std::abs(v[0] - 1.0) < 1e-8);
  CHECK(std::abs(v[1] - 2.0) < 1e-8);

  auto s = family(2);
  s.coefficients[0][1] = {0, 1};
  s.coefficients[1][0] = {0, 1};
  auto w = derivative_spectrum(s, 0.0, default_ray());
  REQUIRE(w.size() == 2);
  CHECK(std::abs(w[0] - 1.0) < 1e-8);
  CHECK(std::abs(w[1] + 1.0) < 1e-8);

  CHECK_FAILS_WITH(derivative_spectrum(exceptional(), 0.0, default_ray()), ErrorKind::NotSemisimple);
}

TEST_CASE("semisimple eigenline convergence") {
  auto d = family(2);
  d.coefficients[0][0] = {0, 1};
  d.coefficients[1][1] = {0, 2};
  auto r = semisimple_convergence_check(d, 0.0, default_ray());
  CHECK(r.holds);
  CHECK(r.eigenspace_distance < 1e-8);

  auto s = family(2);
  s.coefficients[0][1] = {0, 1};
  s.coefficients[1][0] = {0, 1};
  auto rs = semisimple_convergence_check(s, 0.0, default_ray());
  CHECK(rs.holds);
  REQUIRE(rs.limit_lines.size() == 2);
  const double h = 1 / std::sqrt(2.0);
  // Derivatives sorted by modulus then argument, (1, -1): lines (1, 1) and (1, -1).
  CHECK(std::abs(rs.derivatives[0] - 1.0) < 1e-8);
  CHECK(subspace_distance(rs.limit_lines[0], span_of({{h, h}})) < 1e-8);
  CHECK(subspace_distance(rs.limit_lines[1], span_of({{h, -h}})) < 1e-8);

  auto same = family(2);
  same.coefficients[0][0] = {0, 1};
  same.coefficients[1][1] = {0, 1};
  CHECK_FAILS_WITH(semisimple_convergence_check(same, 0.0, default_ray()), ErrorKind::DerivativesCollide);
  CHECK_FAILS_WITH(semisimple_convergence_check(exceptional(), 0.0, default_ray()), ErrorKind::NotSemisimple);
}

TEST_CASE("subspace distance") {
  auto e1 = span_of({{1, 0}});
  auto e2 = span_of({{0, 1}});
  CHECK(subspace_distance(e1, e1) < 1e-15);
  CHECK(std::abs(subspace_distance(e1, e2) - 1.0) < 1e-15);
  const double x = 0.1;
  auto a = span_of({{0, 1, 0}});
  auto b = span_of({{0, 1, -x}});
  CHECK(std::abs(subspace_distance(a, b) - x / std::sqrt(1 + x * x)) < 1e-12);
  CHECK_FAILS_WITH(subspace_distance(e1, span_of({{1, 0}, {0, 1}})), ErrorKind::DimensionMismatch);
}

TEST_CASE("generalized eigenvector convergence") {
  auto r = gevec_convergence(three_by_three(), decimal_ray);
  CHECK(r.holds);
  REQUIRE(r.clusters.size() == 2);
  auto e1 = span_of({{1, 0, 0}});
  auto e23 = span_of({{0, 1, 0}, {0, 0, 1}});
  for (const auto& c : r.clusters) {
    CHECK(c.monotone);
    if (c.paths.size() == 1) {
      CHECK(subspace_distance(c.jordan_subspace, e1) < 1e-12);
    } else {
      CHECK(c.paths.size() == 2);
      CHECK(subspace_distance(c.jordan_subspace, e23) < 1e-12);
    }
    CHECK(c.distances[3] < 1e-3);
  }

  auto two = gevec_convergence(exceptional(), default_ray());
  CHECK(two.holds);
  REQUIRE(two.clusters.size() == 1);
  CHECK(two.clusters[0].paths.size() == 2);
  CHECK(two.clusters[0].jordan_subspace.dimension() == 2);

  auto constant = family(2);
  constant.coefficients[0][0] = {1};
  constant.coefficients[1][1] = {2};
  auto rc = gevec_convergence(constant, default_ray());
  CHECK(rc.clusters.size() == 2);
  for (const auto& c : rc.clusters)
    for (double d : c.distances) CHECK(d < 1e-12);
}

TEST_CASE("ambiguous clustering is reported") {
  // A = [[1, 200], [0, 2]] has eigenlines (1, 0) and (200, 1), about 0.005
  // apart: neither one cluster nor two.
  auto f = family(2);
  f.coefficients[0][0] = {1};
  f.coefficients[0][1] = {200};
  f.coefficients[1][1] = {2};
  CHECK_FAILS_WITH(gevec_convergence(f, default_ray()), ErrorKind::ClusteringAmbiguous);
}

TEST_CASE("power fits") {
  std::vector<double> xs{1e-1, 1e-2, 1e-3};
  std::vector<double> ys{10, 100, 1000};
  CHECK(fit_power(xs, ys) == doctest::Approx(-1.0));
  CHECK_FAILS_WITH(fit_power({1.0}, {1.0}), ErrorKind::InvalidArgument);
}
