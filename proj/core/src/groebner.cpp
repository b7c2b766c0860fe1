#include "torfan/groebner.hpp"

#include <algorithm>

#include "torfan/error.hpp"

namespace torfan {

namespace {

// Full reduction of f against `basis`.
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis) {
  const RingPtr& ring = f.ring();
  std::vector<Term> remainder;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term& lead = p.leading();
    const Polynomial* divisor = nullptr;
    for (const auto& g : basis) {
      if (g.leading_monomial().divides(lead.mono)) {
        divisor = &g;
        break;
      }
    }
    if (divisor != nullptr) {
      p = p.sub_mul_term(lead.mono / divisor->leading_monomial(),
                         lead.coeff / divisor->leading_coeff(), *divisor);
    } else {
      remainder.push_back(lead);
      p = p.tail();
    }
  }
  return Polynomial::from_sorted(ring, std::move(remainder));
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

}  // namespace

bool GroebnerBasis::is_unit() const {
  return generators.size() == 1 && generators[0].is_constant() && !generators[0].is_zero();
}

GroebnerBasis groebner_basis(RingPtr ring, const std::vector<Polynomial>& input) {
  std::vector<Polynomial> basis;
  for (const auto& f : input) {
    if (!f.ring()->same_as(*ring)) fail(ErrorKind::RingMismatch, "generator in a different ring");
    Polynomial r = reduce(f, basis);
    if (!r.is_zero()) basis.push_back(r.monic());
  }
  const Ring& order = *ring;

  std::vector<Pair> pairs;
  auto add_pairs_for = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i)
      pairs.push_back({i, k, basis[i].leading_monomial().lcm(basis[k].leading_monomial())});
  };
  for (std::size_t k = 1; k < basis.size(); ++k) add_pairs_for(k);

  auto pair_pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return std::any_of(pairs.begin(), pairs.end(),
                       [&](const Pair& p) { return p.i == a && p.j == b; });
  };

  while (!pairs.empty()) {
    // normal selection strategy: smallest lcm first
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      return order.compare(a.lcm, b.lcm) < 0;
    });
    Pair pr = *best;
    pairs.erase(best);

    const Polynomial& f = basis[pr.i];
    const Polynomial& g = basis[pr.j];
    // product criterion
    if (f.leading_monomial().coprime(g.leading_monomial())) continue;
    // chain criterion
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (basis[k].leading_monomial().divides(pr.lcm) && !pair_pending(pr.i, k) &&
          !pair_pending(pr.j, k))
        chain = true;
    }
    if (chain) continue;

    Polynomial s = f.mul_term(pr.lcm / f.leading_monomial(), BigRational(1) / f.leading_coeff())
                       .sub_mul_term(pr.lcm / g.leading_monomial(),
                                     BigRational(1) / g.leading_coeff(), g);
    Polynomial r = reduce(s, basis);
    if (r.is_zero()) continue;
    r.make_monic();
    basis.push_back(std::move(r));
    if (basis.back().is_constant()) {
      return {ring, {Polynomial::constant(ring, 1)}};
    }
    add_pairs_for(basis.size() - 1);
  }

  // minimalize
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& li = basis[i].leading_monomial();
      const Monomial& lj = basis[j].leading_monomial();
      if (lj.divides(li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // interreduce
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial head = Polynomial::monomial(ring, minimal[i].leading_monomial(), 1);
    Polynomial rest = reduce(minimal[i].tail(), others);
    reduced.push_back(head + rest);
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return {ring, std::move(reduced)};
}

GroebnerBasis groebner_basis(const std::vector<Polynomial>& generators) {
  if (generators.empty())
    fail(ErrorKind::InvalidArgument, "empty generator list needs an explicit ring");
  return groebner_basis(generators.front().ring(), generators);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  if (!f.ring()->same_as(*basis.ring))
    fail(ErrorKind::RingMismatch, "normal_form: polynomial ring differs from basis ring");
  return reduce(f, basis.generators);
}

bool ideal_contains(const GroebnerBasis& basis, const Polynomial& f) {
  return normal_form(f, basis).is_zero();
}

bool same_ideal(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (!a.ring->same_as(*b.ring)) return false;
  if (a.generators.size() != b.generators.size()) return false;
  for (std::size_t i = 0; i < a.generators.size(); ++i)
    if (a.generators[i] != b.generators[i]) return false;
  return true;
}

}  // namespace torfan
