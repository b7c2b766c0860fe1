#include "torfan/quotient_algebra.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "torfan/error.hpp"

namespace torfan {

namespace {

Polynomial in_ring(const Polynomial& f, const RingPtr& ring) {
  if (f.ring()->same_as(*ring)) return f;
  return f.embed(ring);
}

}  // namespace

RationalVector QuotientAlgebra::coords(const Polynomial& f) const {
  Polynomial r = normal_form(in_ring(f, ring()), groebner);
  RationalVector v(basis.size());
  for (const auto& t : r.terms()) {
    auto it = std::lower_bound(basis.begin(), basis.end(), t.mono, [&](const Monomial& a, const Monomial& b) {
      return ring()->compare(a, b) < 0;
    });
    if (it == basis.end() || !(*it == t.mono)) fail(ErrorKind::InvalidArgument, "normal form left the standard basis");
    v[static_cast<std::size_t>(it - basis.begin())] = t.coeff;
  }
  return v;
}

Polynomial QuotientAlgebra::element(const RationalVector& c) const {
  if (c.size() != basis.size()) fail(ErrorKind::DimensionMismatch, "coordinate vector length");
  std::vector<Term> terms;
  for (std::size_t i = basis.size(); i-- > 0;)
    if (c[i] != 0) terms.push_back({basis[i], c[i]});
  return Polynomial::from_sorted(ring(), std::move(terms));
}

RationalMatrix QuotientAlgebra::mult_matrix(const Polynomial& f) const {
  Polynomial g = normal_form(in_ring(f, ring()), groebner);
  std::vector<RationalVector> cols;
  cols.reserve(basis.size());
  for (const auto& b : basis) cols.push_back(coords(g.mul_term(b, 1)));
  return RationalMatrix::from_columns(basis.size(), cols);
}

QuotientAlgebra quotient_algebra(const GroebnerBasis& gb) {
  QuotientAlgebra q{gb, {}, {}};
  const RingPtr& ring = gb.ring;
  const std::size_t n = ring->nvars();
  if (!gb.is_unit()) {
    for (std::size_t v = 0; v < n; ++v) {
      bool pure = std::any_of(gb.generators.begin(), gb.generators.end(), [&](const Polynomial& g) {
        const Monomial& lm = g.leading_monomial();
        return lm[v] > 0 && lm.degree() == lm[v];
      });
      if (!pure) fail(ErrorKind::InfiniteDimensional, "no pure power of " + ring->name(v) + " is a leading term");
    }
    auto standard = [&](const Monomial& m) {
      return std::none_of(gb.generators.begin(), gb.generators.end(),
                          [&](const Polynomial& g) { return g.leading_monomial().divides(m); });
    };
    std::unordered_set<Monomial, MonomialHash> seen;
    std::deque<Monomial> queue{Monomial(n)};
    seen.insert(Monomial(n));
    while (!queue.empty()) {
      Monomial m = queue.front();
      queue.pop_front();
      q.basis.push_back(m);
      for (std::size_t v = 0; v < n; ++v) {
        Monomial next = m;
        ++next[v];
        if (seen.count(next) || !standard(next)) continue;
        seen.insert(next);
        queue.push_back(next);
      }
    }
    std::sort(q.basis.begin(), q.basis.end(),
              [&](const Monomial& a, const Monomial& b) { return ring->compare(a, b) < 0; });
  }
  for (std::size_t v = 0; v < n; ++v) q.mult_matrices.push_back(q.mult_matrix(Polynomial::variable(ring, v)));
  return q;
}

QuotientAlgebra localize(const QuotientAlgebra& algebra, const Polynomial& f) {
  const RingPtr& ring = algebra.ring();
  std::string name = "inv";
  while (ring->index_of(name) < ring->nvars()) name += "_";
  std::vector<std::string> names = ring->names();
  names.push_back(name);
  RingPtr bigger = make_ring(names, ring->elimination_block());
  std::vector<Polynomial> gens;
  for (const auto& g : algebra.groebner.generators) gens.push_back(g.embed(bigger));
  Polynomial inv = Polynomial::variable(bigger, names.size() - 1);
  gens.push_back(inv * in_ring(f, ring).embed(bigger) - Polynomial::constant(bigger, 1));
  return quotient_algebra(groebner_basis(bigger, gens));
}

}  // namespace torfan
