#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "torfan/quantum.hpp"

namespace torfan {

struct SuperpotentialTerm {
  LatticeVector edge;
  BigRational t_exponent;   // -lambda_i
  double s_exponent = 0.0;  // -F(e_i); 0 when untwisted
};

// Sum over edges of s^(s_exponent) t^(t_exponent) z^edge, with s = e.
struct Superpotential {
  std::size_t rank = 0;
  std::vector<SuperpotentialTerm> terms;

  // Rational coefficient of each term at the given t (s-twists are rounded to
  // the dyadic grid 2^-30).
  std::vector<BigRational> coefficients(const BigRational& t_value = 1) const;
  std::string to_string() const;
};

Superpotential build_superpotential(const MomentPolytope& polytope,
                                    const std::optional<std::vector<double>>& twist = std::nullopt);

struct JacAlgebra {
  QuotientAlgebra algebra;  // over z1..zn, u with u*z1*...*zn = 1
  RationalMatrix w_matrix;
  std::vector<BigRational> coefficients;
};

JacAlgebra jacobian_ring(const Superpotential& w, const BigRational& t_value = 1);
JacAlgebra jacobian_ring_with_coefficients(const Superpotential& w, const std::vector<BigRational>& coefficients);

struct CriticalPoint {
  std::vector<std::complex<double>> coordinates;
  std::complex<double> value;
  int hessian_rank = 0;
  bool nondegenerate = false;
  std::size_t multiplicity = 1;
  double gradient_norm = 0;
  bool newton_converged = true;
};

std::vector<CriticalPoint> critical_points(const Superpotential& w, const BigRational& t_value = 1,
                                           std::uint64_t seed = 0);
std::vector<CriticalPoint> critical_points(const Superpotential& w, const JacAlgebra& jac, std::uint64_t seed = 0);

// Values, gradient and Hessian of sum a_i z^e_i at a point of (C*)^n.
std::complex<double> evaluate_w(const Superpotential& w, const std::vector<double>& coefficients,
                                const std::vector<std::complex<double>>& z);
std::vector<std::complex<double>> gradient_w(const Superpotential& w, const std::vector<double>& coefficients,
                                             const std::vector<std::complex<double>>& z);

struct MirrorClause {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct MirrorReport {
  std::vector<MirrorClause> clauses;
  bool holds() const;
};

// `a_side` is QH for compact inputs and SH for bundles. Never throws on a
// failing clause; see require_mirror.
MirrorReport mirror_check(const Presentation& presentation, const QuotientAlgebra& a_side,
                          const MomentPolytope& polytope, const Superpotential& w, const JacAlgebra& jac);
void require_mirror(const MirrorReport& report);

bool family_closure_check(const std::vector<std::complex<double>>& values, const BigInt& index, double tol = 1e-8);

struct LandingReport {
  RationalVector barycentre;
  bool exponent_identity = false;
  double numeric_residual = 0;
  bool holds = false;
};

LandingReport barycentre_landing_check(const MomentPolytope& polytope, const BigInt& index, std::uint64_t seed = 0);

struct GalkinResult {
  std::vector<double> log_point;
  std::vector<double> point;
  double value = 0;
  double gradient_norm = 0;
  double min_hessian_eigenvalue = 0;
  int iterations = 0;
};

GalkinResult galkin_point(const Fan& fan);

struct SeparationReport {
  std::vector<double> perturbed_lambdas;
  std::vector<BigRational> coefficients;
  std::size_t dimension = 0;
  std::vector<CriticalPoint> points;
  bool morse = false;
  double min_gap = 0;
  double min_abs_value = 0;
  bool separated = false;
};

// Throws SeparationFailed when radius > 0 and the perturbed values are not
// Morse, distinct and nonzero.
SeparationReport perturb_and_separate(const MomentPolytope& polytope, std::uint64_t seed, double radius = 1e-2);

// Uniform double in [0,1) from the top 53 bits of a 64-bit Mersenne twister,
// so streams are identical across standard libraries.
class SeededUniform {
 public:
  explicit SeededUniform(std::uint64_t seed) : gen_(seed) {}
  double next() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace torfan
