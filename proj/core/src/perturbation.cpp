#include "torfan/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>

#include "torfan/complex_eigen.hpp"
#include "torfan/error.hpp"
#include "torfan/univariate.hpp"

namespace torfan {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kNodes = 256;

void check_ray(const std::vector<double>& ray) {
  if (ray.size() < 2) fail(ErrorKind::InvalidArgument, "ray needs at least two points");
  for (std::size_t i = 0; i < ray.size(); ++i) {
    if (!(ray[i] > 0)) fail(ErrorKind::InvalidArgument, "ray points must be positive reals");
    if (i && !(ray[i] < ray[i - 1])) fail(ErrorKind::InvalidArgument, "ray must decrease strictly");
  }
}

// Distinct eigenvalues of A(0) with algebraic multiplicities.
std::vector<std::pair<Complex, std::size_t>> distinct_spectrum(const ComplexMatrix& a) {
  auto values = eigenvalues(a);
  std::vector<std::pair<Complex, std::size_t>> out;
  for (const auto& g : cluster_values(values, 1e-6)) {
    Complex mean = 0;
    for (auto i : g) mean += values[i];
    out.push_back({mean / static_cast<double>(g.size()), g.size()});
  }
  return out;
}

double gap_to_rest(const std::vector<std::pair<Complex, std::size_t>>& spectrum, Complex lambda) {
  double gap = 1e300;
  for (const auto& [v, m] : spectrum)
    if (std::abs(v - lambda) > 1e-6 * std::max(1.0, std::abs(lambda))) gap = std::min(gap, std::abs(v - lambda));
  return gap == 1e300 ? std::max(1.0, std::abs(lambda)) : gap;
}

// Exact rational copy of a real matrix.
std::optional<RationalMatrix> rational_copy(const ComplexMatrix& a) {
  RationalMatrix r(static_cast<std::size_t>(a.rows()), static_cast<std::size_t>(a.cols()));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j).imag() != 0.0) return std::nullopt;
      r(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = from_double(a(i, j).real());
    }
  return r;
}

// Rational eigenvalue of m within 1e-6 of lambda, if any.
std::optional<BigRational> rational_eigenvalue_near(const RationalMatrix& m, Complex lambda) {
  for (const auto& [p, mult] : factor_rational(characteristic_polynomial(m))) {
    if (p.degree() != 1) continue;
    BigRational root = -p.coeff(0) / p.coeff(1);
    if (std::abs(Complex(root.get_d(), 0) - lambda) <= 1e-6 * std::max(1.0, std::abs(lambda))) return root;
  }
  return std::nullopt;
}

RationalMatrix shifted(const RationalMatrix& m, const BigRational& lambda) {
  return m - RationalMatrix::identity(m.rows()) * lambda;
}

std::size_t numeric_rank(const ComplexMatrix& m, double rel = 1e-8) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const auto& s = svd.singularValues();
  double top = std::max(1.0, s(0));
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rel * top) ++r;
  return r;
}

ComplexMatrix nullspace_basis(const ComplexMatrix& m, std::size_t dim) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
  return svd.matrixV().rightCols(static_cast<Eigen::Index>(dim));
}

bool is_semisimple(const ComplexMatrix& a0, Complex lambda) {
  const auto n = static_cast<std::size_t>(a0.rows());
  if (auto r = rational_copy(a0)) {
    if (auto q = rational_eigenvalue_near(*r, lambda)) {
      RationalMatrix s = shifted(*r, *q);
      return s.rank() == (s * s).rank();
    }
  }
  ComplexMatrix s = a0 - lambda * ComplexMatrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  return numeric_rank(s) == numeric_rank(s * s);
}

ComplexMatrix from_rational_vectors(const std::vector<RationalVector>& vs, std::size_t n) {
  ComplexMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = vs[j][i].get_d();
  return m;
}

// Eigenspace ker(A(0) - lambda), exactly when possible.
Subspace eigenspace(const ComplexMatrix& a0, Complex lambda) {
  const auto n = static_cast<std::size_t>(a0.rows());
  if (auto r = rational_copy(a0))
    if (auto q = rational_eigenvalue_near(*r, lambda))
      return Subspace::span(from_rational_vectors(shifted(*r, *q).nullspace(), n));
  ComplexMatrix s = a0 - lambda * ComplexMatrix::Identity(a0.rows(), a0.cols());
  return Subspace::span(nullspace_basis(s, n - numeric_rank(s)));
}

Eigen::VectorXcd dominant_column(const ComplexMatrix& p) {
  Eigen::JacobiSVD<ComplexMatrix> svd(p, Eigen::ComputeThinU);
  return svd.matrixU().col(0);
}

}  // namespace

ComplexMatrix MatrixFamily::at(Complex x) const {
  ComplexMatrix m(static_cast<Eigen::Index>(size), static_cast<Eigen::Index>(size));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      Complex acc = 0;
      const auto& c = coefficients[i][j];
      for (std::size_t p = c.size(); p-- > 0;) acc = acc * x + c[p];
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = acc;
    }
  return m;
}

std::vector<double> default_ray() {
  std::vector<double> r;
  for (int k = 0; k < 20; ++k) r.push_back(0.1 * std::ldexp(1.0, -k));
  return r;
}

Subspace Subspace::span(const ComplexMatrix& vectors) {
  Subspace s;
  if (vectors.cols() == 0) {
    s.basis = ComplexMatrix(vectors.rows(), 0);
    return s;
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(vectors, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-12 * sv(0)) ++r;
  s.basis = svd.matrixU().leftCols(r);
  return s;
}

double operator_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

Projector eigenprojection(const ComplexMatrix& a, Complex center, double radius) {
  if (a.rows() != a.cols()) fail(ErrorKind::NotSquare, "eigenprojection of a non-square matrix");
  if (!(radius > 0)) fail(ErrorKind::InvalidArgument, "contour radius must be positive");
  const auto n = a.rows();
  const auto spectrum = eigenvalues(a);
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (int k = 0; k < kNodes; ++k) {
    Complex w = std::polar(radius, 2 * kPi * k / kNodes);
    Complex z = center + w;
    for (auto mu : spectrum)
      if (std::abs(z - mu) <= 1e-12) fail(ErrorKind::ContourHitsSpectrum, "quadrature node lies on the spectrum");
    sum += w * (z * id - a).partialPivLu().solve(id);
  }
  Projector p;
  p.matrix = sum / static_cast<double>(kNodes);
  const double scale = std::max(1.0, operator_norm(p.matrix));
  p.idempotency_defect = operator_norm(p.matrix * p.matrix - p.matrix);
  p.commutator_defect = operator_norm(a * p.matrix - p.matrix * a);
  p.trace = p.matrix.trace();
  if (p.idempotency_defect > 1e-8 * scale)
    fail(ErrorKind::IdempotencyFailed, "P^2 - P has norm " + std::to_string(p.idempotency_defect));
  if (std::abs(p.trace - std::round(p.trace.real())) > 1e-6)
    fail(ErrorKind::IdempotencyFailed, "projector trace is not an integer");
  return p;
}

std::vector<EigenPath> track_eigenvalues(const MatrixFamily& family, const std::vector<double>& ray) {
  check_ray(ray);
  std::vector<EigenPath> paths;
  auto first = eigenvalues(family.at(ray[0]));
  sort_by_modulus_then_arg(first);
  for (auto v : first) paths.push_back({{{ray[0], v}}, true});
  for (std::size_t k = 1; k < ray.size(); ++k) {
    auto values = eigenvalues(family.at(ray[k]));
    std::vector<bool> used(values.size(), false);
    for (auto& path : paths) {
      Complex prev = path.samples.back().second;
      std::size_t best = values.size(), second = values.size();
      for (std::size_t j = 0; j < values.size(); ++j) {
        if (used[j]) continue;
        if (best == values.size() || std::abs(values[j] - prev) < std::abs(values[best] - prev)) {
          second = best;
          best = j;
        } else if (second == values.size() || std::abs(values[j] - prev) < std::abs(values[second] - prev)) {
          second = j;
        }
      }
      if (second != values.size()) {
        double d1 = std::abs(values[best] - prev), d2 = std::abs(values[second] - prev);
        double scale = std::max(1.0, std::abs(prev));
        if (d2 - d1 <= 1e-9 * scale && std::abs(values[best] - values[second]) > 1e-9 * scale) path.matched = false;
      }
      used[best] = true;
      path.samples.push_back({ray[k], values[best]});
    }
  }
  return paths;
}

namespace {

// Generalized eigenprojection of A(0) at lambda; exact when A(0) and lambda
// are rational.
ComplexMatrix generalized_projection(const ComplexMatrix& a0, Complex lambda, double radius, bool& exact) {
  const auto n = static_cast<std::size_t>(a0.rows());
  exact = false;
  if (auto r = rational_copy(a0)) {
    if (auto q = rational_eigenvalue_near(*r, lambda)) {
      RationalMatrix s = shifted(*r, *q).pow(static_cast<unsigned>(n));
      auto kernel = s.nullspace();
      auto range = s.column_space();
      std::vector<RationalVector> cols = kernel;
      cols.insert(cols.end(), range.begin(), range.end());
      RationalMatrix basis = RationalMatrix::from_columns(n, cols);
      RationalMatrix select(n, n);
      for (std::size_t i = 0; i < kernel.size(); ++i) select(i, i) = 1;
      exact = true;
      return (basis * select * basis.inverse()).to_complex();
    }
  }
  return eigenprojection(a0, lambda, radius).matrix;
}

}  // namespace

TotalProjectionReport total_projection_limit_check(const MatrixFamily& family, Complex lambda,
                                                   const std::vector<double>& ray) {
  check_ray(ray);
  const ComplexMatrix a0 = family.at(0.0);
  const auto spectrum = distinct_spectrum(a0);
  std::size_t multiplicity = 0;
  for (const auto& [v, m] : spectrum)
    if (std::abs(v - lambda) <= 1e-6 * std::max(1.0, std::abs(lambda))) multiplicity = m;
  if (multiplicity == 0) fail(ErrorKind::InvalidArgument, "lambda is not an eigenvalue of A(0)");
  const double radius = gap_to_rest(spectrum, lambda) / 2;

  TotalProjectionReport rep;
  rep.cluster_size = multiplicity;
  rep.limit = generalized_projection(a0, lambda, radius, rep.exact_limit);
  for (double x : ray) {
    const ComplexMatrix ax = family.at(x);
    std::size_t members = 0;
    for (auto mu : eigenvalues(ax)) {
      double d = std::abs(mu - lambda);
      if (d > 0.8 * radius && d < 1.2 * radius)
        fail(ErrorKind::ClusterAmbiguous, "an eigenvalue sits near the contour at x = " + std::to_string(x));
      if (d < radius) ++members;
    }
    if (members != multiplicity) fail(ErrorKind::ClusterAmbiguous, "cluster size changes along the ray");
    Projector p = eigenprojection(ax, lambda, radius);
    rep.xs.push_back(x);
    rep.norms.push_back(operator_norm(p.matrix));
    rep.errors.push_back(operator_norm(p.matrix - rep.limit));
  }
  const double limit_norm = std::max(1.0, operator_norm(rep.limit));
  rep.bounded = *std::max_element(rep.norms.begin(), rep.norms.end()) <= 2 * limit_norm;
  const double slope = rep.errors.front() / rep.xs.front();
  rep.converges = rep.errors.back() <= std::max(1e-9, 10 * slope * rep.xs.back());
  return rep;
}

std::vector<Complex> derivative_spectrum(const MatrixFamily& family, Complex lambda, const std::vector<double>& ray) {
  check_ray(ray);
  const ComplexMatrix a0 = family.at(0.0);
  if (!is_semisimple(a0, lambda)) fail(ErrorKind::NotSemisimple, "lambda is not semisimple for A(0)");
  const auto spectrum = distinct_spectrum(a0);
  const double radius = gap_to_rest(spectrum, lambda) / 2;
  const auto n = a0.rows();

  // Reduced operator (A(x) - lambda) P / x restricted to the range of P.
  auto reduced = [&](double x) {
    const ComplexMatrix ax = family.at(x);
    Projector p = eigenprojection(ax, lambda, radius);
    const auto m = static_cast<Eigen::Index>(std::llround(p.trace.real()));
    Eigen::JacobiSVD<ComplexMatrix> svd(p.matrix, Eigen::ComputeThinU);
    ComplexMatrix q = svd.matrixU().leftCols(m);
    ComplexMatrix reduced_op = (ax - lambda * ComplexMatrix::Identity(n, n)) * p.matrix / x;
    auto v = eigenvalues(q.adjoint() * reduced_op * q);
    sort_by_modulus_then_arg(v);
    return v;
  };
  const double x1 = ray[ray.size() - 2], x2 = ray.back();
  auto f1 = reduced(x1);
  auto f2 = reduced(x2);
  if (f1.size() != f2.size()) fail(ErrorKind::ClusterAmbiguous, "cluster size changes along the ray");
  // Linear extrapolation to x = 0, pairing values greedily.
  std::vector<Complex> out;
  std::vector<bool> used(f1.size(), false);
  for (auto v2 : f2) {
    std::size_t best = f1.size();
    for (std::size_t j = 0; j < f1.size(); ++j)
      if (!used[j] && (best == f1.size() || std::abs(f1[j] - v2) < std::abs(f1[best] - v2))) best = j;
    used[best] = true;
    out.push_back(v2 - x2 * (f1[best] - v2) / (x1 - x2));
  }
  for (auto& v : out) {
    if (std::abs(v.imag()) < 1e-12) v = {v.real(), 0.0};
    if (std::abs(v.real()) < 1e-12) v = {0.0, v.imag()};
  }
  sort_by_modulus_then_arg(out);
  return out;
}

double subspace_distance(const Subspace& u, const Subspace& v) {
  if (u.dimension() != v.dimension() || u.basis.rows() != v.basis.rows())
    fail(ErrorKind::DimensionMismatch, "subspaces differ in dimension");
  if (u.dimension() == 0) return 0.0;
  // Both orders, so the result is symmetric to the last bit.
  const ComplexMatrix pu = u.basis * u.basis.adjoint(), pv = v.basis * v.basis.adjoint();
  return std::max(operator_norm(pu - pv), operator_norm(pv - pu));
}

SemisimpleReport semisimple_convergence_check(const MatrixFamily& family, Complex lambda,
                                              const std::vector<double>& ray) {
  SemisimpleReport rep;
  rep.derivatives = derivative_spectrum(family, lambda, ray);
  for (std::size_t i = 0; i < rep.derivatives.size(); ++i)
    for (std::size_t j = i + 1; j < rep.derivatives.size(); ++j)
      if (std::abs(rep.derivatives[i] - rep.derivatives[j]) < 1e-6)
        fail(ErrorKind::DerivativesCollide, "derivatives of the eigenvalue paths coincide");
  const ComplexMatrix a0 = family.at(0.0);
  const double radius = gap_to_rest(distinct_spectrum(a0), lambda) / 2;
  const std::size_t m = rep.derivatives.size();
  rep.max_projector_norms.assign(m, 0.0);
  rep.final_step.assign(m, 0.0);
  std::vector<double> last_norms(m, 0.0);
  std::vector<Subspace> previous(m);
  for (std::size_t k = 0; k < ray.size(); ++k) {
    const double x = ray[k];
    const ComplexMatrix ax = family.at(x);
    auto values = eigenvalues(ax);
    std::vector<Subspace> lines(m);
    for (auto mu : values) {
      if (std::abs(mu - lambda) >= radius) continue;
      Complex slope = (mu - lambda) / x;
      std::size_t j = 0;
      for (std::size_t q = 1; q < m; ++q)
        if (std::abs(rep.derivatives[q] - slope) < std::abs(rep.derivatives[j] - slope)) j = q;
      double sep = 1e300;
      for (auto nu : values)
        if (std::abs(nu - mu) > 1e-12 * std::max(1.0, std::abs(mu))) sep = std::min(sep, std::abs(nu - mu));
      Projector p = eigenprojection(ax, mu, std::min(sep / 2, radius));
      double norm = operator_norm(p.matrix);
      rep.max_projector_norms[j] = std::max(rep.max_projector_norms[j], norm);
      last_norms[j] = norm;
      lines[j] = Subspace::span(dominant_column(p.matrix));
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (lines[j].dimension() != 1) fail(ErrorKind::ClusterAmbiguous, "eigenvalue paths could not be separated");
      if (k > 0) rep.final_step[j] = subspace_distance(previous[j], lines[j]);
    }
    previous = lines;
  }
  rep.limit_lines = previous;
  ComplexMatrix limits(a0.rows(), static_cast<Eigen::Index>(m));
  for (std::size_t j = 0; j < m; ++j) limits.col(static_cast<Eigen::Index>(j)) = previous[j].basis.col(0);
  Subspace target = eigenspace(a0, lambda);
  Subspace spanned = Subspace::span(limits);
  rep.eigenspace_distance =
      spanned.dimension() == target.dimension() ? subspace_distance(spanned, target) : 1.0;
  rep.bounded = true;
  for (std::size_t j = 0; j < m; ++j)
    if (rep.max_projector_norms[j] > 2 * std::max(1.0, last_norms[j])) rep.bounded = false;
  rep.holds = rep.bounded && rep.eigenspace_distance <= 1e-4 &&
              std::all_of(rep.final_step.begin(), rep.final_step.end(), [](double d) { return d <= 1e-4; });
  return rep;
}

namespace {

struct LineSample {
  std::vector<Eigen::VectorXcd> lines;  // indexed by path
};

// Eigenlines of A(x), one per path. Repeated eigenvalues get the principal
// vectors of their eigenspace against ker(A(0) - limit).
LineSample eigenlines(const ComplexMatrix& ax, const ComplexMatrix& a0, const std::vector<Complex>& path_values,
                      const std::vector<Complex>& limits) {
  const auto n = ax.rows();
  const std::size_t count = path_values.size();
  LineSample s;
  s.lines.resize(count);
  std::vector<bool> done(count, false);
  for (std::size_t p = 0; p < count; ++p) {
    if (done[p]) continue;
    std::vector<std::size_t> group{p};
    double scale = std::max(1.0, std::abs(path_values[p]));
    for (std::size_t q = p + 1; q < count; ++q)
      if (!done[q] && std::abs(path_values[q] - path_values[p]) <= 1e-9 * scale) group.push_back(q);
    Complex mu = 0;
    for (auto q : group) mu += path_values[q];
    mu /= static_cast<double>(group.size());
    const ComplexMatrix shifted_ax = ax - mu * ComplexMatrix::Identity(n, n);
    Eigen::JacobiSVD<ComplexMatrix> svd(shifted_ax, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const auto g = static_cast<Eigen::Index>(group.size());
    if (sv(n - g) > 1e-8 * std::max(1.0, sv(0)))
      fail(ErrorKind::InvalidArgument, "A(x) is not diagonalizable on the ray");
    ComplexMatrix space = svd.matrixV().rightCols(g);
    if (g > 1) {
      Subspace k0 = eigenspace(a0, limits[p]);
      Eigen::JacobiSVD<ComplexMatrix> pv(space.adjoint() * k0.basis, Eigen::ComputeFullU);
      space = space * pv.matrixU();
    }
    for (Eigen::Index i = 0; i < g; ++i) {
      s.lines[group[static_cast<std::size_t>(i)]] = space.col(i);
      done[group[static_cast<std::size_t>(i)]] = true;
    }
  }
  return s;
}

ComplexMatrix gram_schmidt(const std::vector<Eigen::VectorXcd>& vs) {
  ComplexMatrix q(vs.front().size(), static_cast<Eigen::Index>(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j) {
    Eigen::VectorXcd v = vs[j];
    for (std::size_t i = 0; i < j; ++i) v -= q.col(static_cast<Eigen::Index>(i)).dot(v) * q.col(static_cast<Eigen::Index>(i));
    q.col(static_cast<Eigen::Index>(j)) = v / v.norm();
  }
  return q;
}

}  // namespace

GevecReport gevec_convergence(const MatrixFamily& family, const std::vector<double>& ray) {
  auto paths = track_eigenvalues(family, ray);
  const ComplexMatrix a0 = family.at(0.0);
  const auto spectrum = distinct_spectrum(a0);
  const std::size_t count = paths.size();
  const std::size_t last = ray.size() - 1;

  std::vector<Complex> limits(count);
  for (std::size_t p = 0; p < count; ++p) {
    Complex v = paths[p].samples.back().second;
    Complex best = spectrum.front().first;
    for (const auto& [s, m] : spectrum)
      if (std::abs(s - v) < std::abs(best - v)) best = s;
    limits[p] = best;
  }
  std::vector<LineSample> samples;
  for (std::size_t k = 0; k < ray.size(); ++k) {
    std::vector<Complex> values;
    for (const auto& path : paths) values.push_back(path.samples[k].second);
    samples.push_back(eigenlines(family.at(ray[k]), a0, values, limits));
  }

  // Cluster lines by their projective limits at the smallest x.
  auto line_distance = [&](std::size_t p, std::size_t q) {
    return subspace_distance(Subspace::span(samples[last].lines[p]), Subspace::span(samples[last].lines[q]));
  };
  std::vector<std::size_t> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t p = 0; p < count; ++p)
    for (std::size_t q = p + 1; q < count; ++q) {
      double d = line_distance(p, q);
      if (d > 1e-4 && d <= 1e-2)
        fail(ErrorKind::ClusteringAmbiguous, "eigenlines are neither close nor apart at the smallest x");
      if (d <= 1e-4) parent[find(p)] = find(q);
    }

  GevecReport rep;
  rep.xs = ray;
  rep.holds = true;
  std::vector<bool> seen(count, false);
  for (std::size_t p = 0; p < count; ++p) {
    std::size_t root = find(p);
    if (seen[root]) continue;
    seen[root] = true;
    GevecCluster cl;
    for (std::size_t q = 0; q < count; ++q)
      if (find(q) == root) cl.paths.push_back(q);
    std::stable_sort(cl.paths.begin(), cl.paths.end(), [&](std::size_t a, std::size_t b) {
      return std::abs(paths[a].samples[last].second) > std::abs(paths[b].samples[last].second);
    });
    cl.limit_eigenvalue = limits[cl.paths.front()];
    const auto n = a0.rows();

    // Jordan chain of A(0) from the limit line snapped into the exact kernel.
    Subspace kernel = eigenspace(a0, cl.limit_eigenvalue);
    Eigen::VectorXcd v = kernel.basis * (kernel.basis.adjoint() * samples[last].lines[cl.paths.front()]);
    v /= v.norm();
    const ComplexMatrix shifted_a0 = a0 - cl.limit_eigenvalue * ComplexMatrix::Identity(n, n);
    Eigen::CompleteOrthogonalDecomposition<ComplexMatrix> cod(shifted_a0);
    std::vector<Eigen::VectorXcd> chain{v};
    for (std::size_t j = 1; j < cl.paths.size(); ++j) {
      Eigen::VectorXcd next = cod.solve(chain.back());
      if ((shifted_a0 * next - chain.back()).norm() > 1e-8 * std::max(1.0, chain.back().norm())) break;
      chain.push_back(next);
    }
    ComplexMatrix chain_m(n, static_cast<Eigen::Index>(chain.size()));
    for (std::size_t j = 0; j < chain.size(); ++j) chain_m.col(static_cast<Eigen::Index>(j)) = chain[j];
    cl.jordan_subspace = Subspace::span(chain_m);

    bool complete_chain = chain.size() == cl.paths.size();
    for (std::size_t k = 0; k < ray.size(); ++k) {
      std::vector<Eigen::VectorXcd> vs;
      for (auto q : cl.paths) vs.push_back(samples[k].lines[q]);
      Subspace s = Subspace::span(gram_schmidt(vs));
      cl.distances.push_back(complete_chain && s.dimension() == cl.jordan_subspace.dimension()
                                 ? subspace_distance(s, cl.jordan_subspace)
                                 : 1.0);
    }
    {
      std::vector<Eigen::VectorXcd> vs;
      for (auto q : cl.paths) vs.push_back(samples[last].lines[q]);
      ComplexMatrix q = gram_schmidt(vs);
      for (std::size_t j = 1; j <= cl.paths.size(); ++j) {
        if (j > chain.size()) {
          cl.flag_distances.push_back(1.0);
          continue;
        }
        Subspace a = Subspace::span(q.leftCols(static_cast<Eigen::Index>(j)));
        Subspace b = Subspace::span(chain_m.leftCols(static_cast<Eigen::Index>(j)));
        cl.flag_distances.push_back(a.dimension() == b.dimension() ? subspace_distance(a, b) : 1.0);
      }
    }
    cl.monotone = true;
    for (std::size_t k = 1; k < cl.distances.size(); ++k)
      if (cl.distances[k] > cl.distances[k - 1] + 1e-12) cl.monotone = false;
    if (!cl.monotone || cl.distances.back() > std::max(1e-8, 100 * ray.back())) rep.holds = false;
    rep.clusters.push_back(cl);
  }
  return rep;
}

double fit_power(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2) fail(ErrorKind::InvalidArgument, "fit needs matching samples");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += std::log(xs[i]);
    my += std::log(ys[i]);
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(xs.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double dx = std::log(xs[i]) - mx;
    sxy += dx * (std::log(ys[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

PathProjection path_projection(const MatrixFamily& family, const EigenPath& path) {
  PathProjection out;
  for (const auto& [x, mu] : path.samples) {
    const ComplexMatrix ax = family.at(x);
    double gap = 1e300;
    for (auto nu : eigenvalues(ax))
      if (std::abs(nu - mu) > 1e-9 * std::max(1.0, std::abs(mu))) gap = std::min(gap, std::abs(nu - mu));
    const double radius = gap == 1e300 ? std::max(1.0, std::abs(mu)) : gap / 2;
    out.xs.push_back(std::abs(x));
    out.norms.push_back(operator_norm(eigenprojection(ax, mu, radius).matrix));
  }
  out.exponent = fit_power(out.xs, out.norms);
  return out;
}

}  // namespace torfan
