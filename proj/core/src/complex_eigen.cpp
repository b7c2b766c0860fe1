#include "torfan/complex_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "torfan/error.hpp"

namespace torfan {

EigenDecomposition complex_eigen(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorKind::NotSquare, "complex_eigen of a non-square matrix");
  EigenDecomposition out;
  if (m.rows() == 0) return out;
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(m, true);
  if (solver.info() != Eigen::Success) fail(ErrorKind::NonConvergence, "shifted QR did not converge");
  out.vectors = solver.eigenvectors();
  const double norm = m.norm();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    std::complex<double> lambda = solver.eigenvalues()(i);
    out.values.push_back(lambda);
    ComplexVector v = out.vectors.col(i);
    double vn = v.norm();
    if (vn > 0) out.vectors.col(i) = v / vn;
    double residual = (m * out.vectors.col(i) - lambda * out.vectors.col(i)).norm();
    if (residual > 1e-10 * norm)
      fail(ErrorKind::NonConvergence, "eigenpair residual " + std::to_string(residual) + " exceeds tolerance");
  }
  return out;
}

std::vector<std::complex<double>> eigenvalues(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorKind::NotSquare, "eigenvalues of a non-square matrix");
  if (m.rows() == 0) return {};
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(m, false);
  if (solver.info() != Eigen::Success) fail(ErrorKind::NonConvergence, "shifted QR did not converge");
  std::vector<std::complex<double>> out(solver.eigenvalues().data(),
                                        solver.eigenvalues().data() + solver.eigenvalues().size());
  return out;
}

bool modulus_arg_less(std::complex<double> a, std::complex<double> b) {
  // Keys are rounded so that values equal up to roundoff compare equal.
  auto key = [](std::complex<double> z) {
    double m = std::abs(z);
    double im = std::abs(z.imag()) <= 1e-12 * std::max(1.0, m) ? 0.0 : z.imag();
    double arg = std::atan2(im, z.real());
    if (arg <= -3.14159265358979) arg = 3.14159265358979323846;
    return std::pair<long long, long long>(std::llround(m * 1e8), std::llround(arg * 1e8));
  };
  return key(a) < key(b);
}

void sort_by_modulus_then_arg(std::vector<std::complex<double>>& values) {
  std::stable_sort(values.begin(), values.end(), modulus_arg_less);
}

std::vector<std::vector<std::size_t>> cluster_values(const std::vector<std::complex<double>>& values,
                                                     double rel_tol) {
  // Union-find over the "close" relation.
  std::vector<std::size_t> parent(values.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      double scale = std::max({1.0, std::abs(values[i]), std::abs(values[j])});
      if (std::abs(values[i] - values[j]) <= rel_tol * scale) parent[find(i)] = find(j);
    }
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> slot(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::size_t r = find(i);
    if (slot[r] == values.size()) {
      slot[r] = groups.size();
      groups.emplace_back();
    }
    groups[slot[r]].push_back(i);
  }
  return groups;
}

}  // namespace torfan
