#pragma once

#include <vector>

#include "torfan/groebner.hpp"
#include "torfan/rational_matrix.hpp"

namespace torfan {

// Finite-dimensional quotient R/I with its standard-monomial basis.
struct QuotientAlgebra {
  GroebnerBasis groebner;
  // Standard monomials in increasing monomial order.
  std::vector<Monomial> basis;
  // Multiplication by each ring variable, in basis coordinates.
  std::vector<RationalMatrix> mult_matrices;

  const RingPtr& ring() const { return groebner.ring; }
  std::size_t dimension() const { return basis.size(); }

  // Coordinates of the normal form of f. Polynomials over another ring are
  // first embedded by variable name.
  RationalVector coords(const Polynomial& f) const;
  Polynomial element(const RationalVector& coords) const;
  // Column j is coords(f * basis[j]).
  RationalMatrix mult_matrix(const Polynomial& f) const;
};

// Throws InfiniteDimensional when some variable has no pure-power leading term.
QuotientAlgebra quotient_algebra(const GroebnerBasis& basis);

// Adjoins an inverse of f (a new variable z with z*f - 1). The result is
// A modulo the generalized 0-eigenspace of multiplication by f; a nilpotent f
// gives the zero algebra.
QuotientAlgebra localize(const QuotientAlgebra& algebra, const Polynomial& f);

}  // namespace torfan
