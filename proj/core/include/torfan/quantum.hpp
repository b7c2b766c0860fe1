#pragma once

#include <complex>
#include <string>
#include <vector>

#include "torfan/fan.hpp"
#include "torfan/polytope.hpp"
#include "torfan/quotient_algebra.hpp"
#include "torfan/univariate.hpp"

namespace torfan {

enum class PresentationMode { compact, nlb, blowup };

std::string mode_name(PresentationMode mode);

// Quantum cohomology presentation over x1..xr and a Novikov variable T of
// degree 2, with t = T^index.
struct Presentation {
  RingPtr ring;            // x1..xr, T (T last)
  RingPtr classical_ring;  // x1..xr
  std::vector<Polynomial> linear_relations;
  std::vector<Polynomial> qsr_relations;
  std::vector<PrimitiveRelation> primitive_relations;
  BigInt index = 1;
  PresentationMode mode = PresentationMode::compact;

  std::size_t novikov_var() const { return ring->nvars() - 1; }
  std::vector<Polynomial> generators() const;
  GroebnerBasis symbolic_ideal() const;
  // Generators with T set to a rational value, over classical_ring.
  std::vector<Polynomial> specialized(const BigRational& t_value = 1) const;
  // Rewrites T^(a*index) as t^a when possible; otherwise prints T.
  std::string render(const Polynomial& relation) const;
};

struct QhResult {
  Presentation presentation;
  QuotientAlgebra algebra;  // at T = 1
};

// Mode is inferred (complete fan: compact, otherwise nlb) unless given.
QhResult qh_presentation(const Fan& fan, const MomentPolytope& polytope);
QhResult qh_presentation(const Fan& fan, const MomentPolytope& polytope, PresentationMode mode);

// Iterated localization at the listed classes.
QuotientAlgebra sh_presentation(const QuotientAlgebra& algebra, const std::vector<Polynomial>& classes);

// sum x_i and -sum lambda_i x_i over `ring` (first polytope.edges.size()
// variables).
Polynomial c1_class(const RingPtr& ring, std::size_t edges);
Polynomial omega_class(const RingPtr& ring, const MomentPolytope& polytope);

RationalMatrix c1_operator(const QuotientAlgebra& algebra, const MomentPolytope& polytope);
RationalMatrix omega_operator(const QuotientAlgebra& algebra, const MomentPolytope& polytope);

struct EigenFamilyReport {
  int zero_multiplicity = 0;
  Univariate cofactor;  // g with chi(x) = x^d0 g(x^index)
  bool holds = false;
};

EigenFamilyReport eigen_family_check(const Univariate& characteristic, const BigInt& index);

struct PhiMap {
  BigInt k;
  Polynomial fiber_class;  // sum n_i x_i in the E ring
};

// Every B relation with T^index replaced by T^(index-k) (fiber class)^k lies in
// the E ideal.
bool phi_check(const Presentation& base, const Presentation& total, const PhiMap& phi);

// The homogenized characteristic polynomial of omega_B, pushed through phi and
// evaluated at omega_E, lies in the E ideal.
bool phi_characteristic_check(const Presentation& base, const Univariate& base_characteristic,
                              const Presentation& total, const Polynomial& total_omega, const PhiMap& phi);

struct TransferReport {
  bool holds = false;
  double worst_residual = 0;
  std::size_t qh_dimension = 0;
  std::size_t sh_dimension = 0;
  std::size_t zero_generalized_dimension = 0;
  std::vector<std::complex<double>> base_invariants;   // mu^index_B
  std::vector<std::complex<double>> total_invariants;  // (mu^E)^(index_B - k) / (-k)^k
  std::string notes;
};

// Eigenvalues with algebraic multiplicity from an exact factorization of the
// characteristic polynomial.
std::vector<std::complex<double>> exact_spectrum(const RationalMatrix& m);

// Throws NotMonotone unless 1 <= k < base_index and ToleranceExceeded when the
// invariants differ by more than 1e-8.
TransferReport eigenvalue_transfer_check(const RationalMatrix& omega_base, const RationalMatrix& omega_total_qh,
                                         const RationalMatrix& omega_total_sh, const BigInt& k,
                                         const BigInt& base_index);

}  // namespace torfan
