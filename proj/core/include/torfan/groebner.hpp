#pragma once

#include <vector>

#include "torfan/polynomial.hpp"

namespace torfan {

// Reduced Groebner basis under the ring's monomial order. Generators are monic
// and sorted by increasing leading monomial; the zero ideal has no generators.
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> generators;

  bool is_zero_ideal() const { return generators.empty(); }
  // True when the ideal is the whole ring.
  bool is_unit() const;
};

GroebnerBasis groebner_basis(RingPtr ring, const std::vector<Polynomial>& generators);
// Ring taken from the first generator; the list must be non-empty.
GroebnerBasis groebner_basis(const std::vector<Polynomial>& generators);

// Fully reduced remainder of f. Throws RingMismatch when f lives elsewhere.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

bool ideal_contains(const GroebnerBasis& basis, const Polynomial& f);
bool same_ideal(const GroebnerBasis& a, const GroebnerBasis& b);

}  // namespace torfan
