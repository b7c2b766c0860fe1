#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "torfan/rational_matrix.hpp"

namespace torfan {

using Complex = std::complex<double>;

// A(x) with polynomial entries; coefficients[i][j][p] multiplies x^p.
struct MatrixFamily {
  std::size_t size = 0;
  std::vector<std::vector<std::vector<Complex>>> coefficients;

  ComplexMatrix at(Complex x) const;
};

// x_k = 0.1 * 2^-k for k = 0..19.
std::vector<double> default_ray();

struct EigenPath {
  std::vector<std::pair<Complex, Complex>> samples;  // (x, lambda(x))
  bool matched = true;
};

struct Projector {
  ComplexMatrix matrix;
  double idempotency_defect = 0;
  double commutator_defect = 0;
  Complex trace;
};

// Orthonormal columns.
struct Subspace {
  ComplexMatrix basis;
  std::size_t dimension() const { return static_cast<std::size_t>(basis.cols()); }
  // Span of the columns; directions below 1e-12 relative are dropped.
  static Subspace span(const ComplexMatrix& vectors);
};

double operator_norm(const ComplexMatrix& m);

// Trapezoid rule with 256 nodes on the circle |z - center| = radius.
Projector eigenprojection(const ComplexMatrix& a, Complex center, double radius);

std::vector<EigenPath> track_eigenvalues(const MatrixFamily& family, const std::vector<double>& ray);

struct TotalProjectionReport {
  std::vector<double> xs;
  std::vector<double> norms;
  std::vector<double> errors;  // distance to the generalized eigenprojection of A(0)
  ComplexMatrix limit;
  bool exact_limit = false;  // limit computed by rational rank methods
  std::size_t cluster_size = 0;
  bool bounded = false;
  bool converges = false;
};

TotalProjectionReport total_projection_limit_check(const MatrixFamily& family, Complex lambda,
                                                   const std::vector<double>& ray);

// Derivatives of the eigenvalues leaving a semisimple eigenvalue of A(0).
std::vector<Complex> derivative_spectrum(const MatrixFamily& family, Complex lambda, const std::vector<double>& ray);

// Operator norm of the difference of orthogonal projectors.
double subspace_distance(const Subspace& u, const Subspace& v);

struct SemisimpleReport {
  std::vector<Complex> derivatives;
  std::vector<double> max_projector_norms;
  std::vector<double> final_step;       // line movement over the last ray step
  std::vector<Subspace> limit_lines;    // lines at the smallest x
  double eigenspace_distance = 0;      // span of limits vs ker(A(0) - lambda)
  bool bounded = false;
  bool holds = false;
};

SemisimpleReport semisimple_convergence_check(const MatrixFamily& family, Complex lambda,
                                              const std::vector<double>& ray);

struct GevecCluster {
  Complex limit_eigenvalue;
  std::vector<std::size_t> paths;     // eigenvalue paths in Gram-Schmidt order
  Subspace jordan_subspace;            // from a Jordan chain of A(0)
  std::vector<double> distances;       // span of the cluster vs jordan_subspace, along the ray
  std::vector<double> flag_distances;  // first j Gram-Schmidt vectors vs first j chain vectors, at the smallest x
  bool monotone = false;
};

struct GevecReport {
  std::vector<double> xs;
  std::vector<GevecCluster> clusters;
  bool holds = false;
};

GevecReport gevec_convergence(const MatrixFamily& family, const std::vector<double>& ray);

// Least-squares slope of log y against log x.
double fit_power(const std::vector<double>& xs, const std::vector<double>& ys);

struct PathProjection {
  std::vector<double> xs;
  std::vector<double> norms;  // norm of the eigenprojection for the path's value
  double exponent = 0;        // fitted growth rate of the norms in x
};

// Projections onto the eigenvalue followed by `path`, taken over a circle of
// half the gap to the rest of the spectrum at each ray point.
PathProjection path_projection(const MatrixFamily& family, const EigenPath& path);

}  // namespace torfan
