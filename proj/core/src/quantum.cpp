#include "torfan/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "torfan/complex_eigen.hpp"
#include "torfan/error.hpp"

namespace torfan {

std::string mode_name(PresentationMode mode) {
  switch (mode) {
    case PresentationMode::compact: return "compact";
    case PresentationMode::nlb: return "nlb";
    case PresentationMode::blowup: return "blowup";
  }
  return "compact";
}

std::vector<Polynomial> Presentation::generators() const {
  std::vector<Polynomial> g = linear_relations;
  g.insert(g.end(), qsr_relations.begin(), qsr_relations.end());
  return g;
}

GroebnerBasis Presentation::symbolic_ideal() const { return groebner_basis(ring, generators()); }

std::vector<Polynomial> Presentation::specialized(const BigRational& t_value) const {
  std::vector<std::size_t> map(ring->nvars());
  for (std::size_t i = 0; i + 1 < ring->nvars(); ++i) map[i] = i;
  std::vector<Polynomial> out;
  for (const auto& g : generators()) {
    Polynomial s = g.evaluate(novikov_var(), t_value);
    std::vector<Term> terms;
    Polynomial acc(classical_ring);
    for (const auto& t : s.terms()) {
      Monomial m(classical_ring->nvars());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = t.mono[i];
      acc += Polynomial::monomial(classical_ring, m, t.coeff);
    }
    if (!acc.is_zero()) out.push_back(acc);
  }
  return out;
}

std::string Presentation::render(const Polynomial& relation) const {
  const std::size_t tv = novikov_var();
  bool divisible = std::all_of(relation.terms().begin(), relation.terms().end(),
                               [&](const Term& t) { return BigInt(t.mono[tv]) % index == 0; });
  if (!divisible) return relation.to_string();
  std::vector<std::string> names = ring->names();
  names.back() = "t";
  RingPtr display = make_ring(names);
  Polynomial out(display);
  for (const auto& t : relation.terms()) {
    Monomial m = t.mono;
    m[tv] = static_cast<Exponent>(t.mono[tv] / index.get_si());
    out += Polynomial::monomial(display, m, t.coeff);
  }
  return out.to_string();
}

Polynomial c1_class(const RingPtr& ring, std::size_t edges) {
  Polynomial p(ring);
  for (std::size_t i = 0; i < edges; ++i) p += Polynomial::variable(ring, i);
  return p;
}

Polynomial omega_class(const RingPtr& ring, const MomentPolytope& polytope) {
  Polynomial p(ring);
  for (std::size_t i = 0; i < polytope.lambdas.size(); ++i)
    p -= Polynomial::variable(ring, i) * polytope.lambdas[i];
  return p;
}

QhResult qh_presentation(const Fan& fan, const MomentPolytope& polytope) {
  FanReport report = validate_fan(fan);
  return qh_presentation(fan, polytope, report.complete ? PresentationMode::compact : PresentationMode::nlb);
}

QhResult qh_presentation(const Fan& fan, const MomentPolytope& polytope, PresentationMode mode) {
  FanReport report = validate_fan(fan);
  if (!report.smooth) fail(ErrorKind::InvalidFan, "quantum presentation needs a smooth fan");
  if (polytope.edges.size() != fan.edges.size())
    fail(ErrorKind::DimensionMismatch, "polytope and fan have different edge counts");
  const std::size_t r = fan.edges.size();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < r; ++i) names.push_back("x" + std::to_string(i + 1));
  Presentation pres;
  pres.classical_ring = make_ring(names);
  names.push_back("T");
  pres.ring = make_ring(names);
  pres.mode = mode;
  pres.index = fano_index(fan);
  const RingPtr& ring = pres.ring;

  for (std::size_t c = 0; c < fan.rank; ++c) {
    Polynomial rel(ring);
    for (std::size_t i = 0; i < r; ++i)
      if (fan.edges[i][c] != 0) rel += Polynomial::variable(ring, i) * BigRational(fan.edges[i][c]);
    if (!rel.is_zero()) pres.linear_relations.push_back(rel);
  }
  for (const auto& prim : primitive_collections(fan)) {
    PrimitiveRelation rel = batyrev_decompose(fan, prim, polytope.lambdas);
    Monomial lhs(ring->nvars()), rhs(ring->nvars());
    for (auto i : rel.primitive) ++lhs[i];
    for (std::size_t q = 0; q < rel.targets.size(); ++q)
      rhs[rel.targets[q]] += static_cast<Exponent>(rel.multiplicities[q].get_si());
    const long c1 = rel.curve.c1.get_si();
    if (c1 >= 0)
      rhs[r] += static_cast<Exponent>(c1);
    else
      lhs[r] += static_cast<Exponent>(-c1);
    pres.qsr_relations.push_back(Polynomial::monomial(ring, lhs) - Polynomial::monomial(ring, rhs));
    pres.primitive_relations.push_back(rel);
  }
  QuotientAlgebra algebra = quotient_algebra(groebner_basis(pres.classical_ring, pres.specialized(1)));
  return {std::move(pres), std::move(algebra)};
}

QuotientAlgebra sh_presentation(const QuotientAlgebra& algebra, const std::vector<Polynomial>& classes) {
  QuotientAlgebra out = algebra;
  for (const auto& c : classes) out = localize(out, c);
  return out;
}

RationalMatrix c1_operator(const QuotientAlgebra& algebra, const MomentPolytope& polytope) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < polytope.edges.size(); ++i) names.push_back("x" + std::to_string(i + 1));
  return algebra.mult_matrix(c1_class(make_ring(names), polytope.edges.size()));
}

RationalMatrix omega_operator(const QuotientAlgebra& algebra, const MomentPolytope& polytope) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < polytope.edges.size(); ++i) names.push_back("x" + std::to_string(i + 1));
  return algebra.mult_matrix(omega_class(make_ring(names), polytope));
}

EigenFamilyReport eigen_family_check(const Univariate& chi, const BigInt& index) {
  EigenFamilyReport rep;
  if (chi.is_zero()) return rep;
  const auto& c = chi.coeffs();
  std::size_t d0 = 0;
  while (c[d0] == 0) ++d0;
  rep.zero_multiplicity = static_cast<int>(d0);
  const std::size_t step = index.get_ui();
  std::vector<BigRational> g;
  rep.holds = true;
  for (std::size_t j = d0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    if ((j - d0) % step != 0) {
      rep.holds = false;
      continue;
    }
    std::size_t e = (j - d0) / step;
    if (g.size() <= e) g.resize(e + 1);
    g[e] = c[j];
  }
  if (rep.holds) rep.cofactor = Univariate(g);
  return rep;
}

namespace {

// Maps a B polynomial in x_i and T into the E ring, replacing T^(a index_B)
// by (T^(index_B - k) F^k)^a. Returns false when a T power is not divisible.
bool push_forward(const Polynomial& f, const Presentation& base, const Presentation& total, const PhiMap& phi,
                  Polynomial& out) {
  const std::size_t tb = base.novikov_var();
  const long lb = base.index.get_si();
  const long k = phi.k.get_si();
  out = Polynomial(total.ring);
  for (const auto& t : f.terms()) {
    if (t.mono[tb] % lb != 0) return false;
    const long q = t.mono[tb] / lb;
    Monomial m(total.ring->nvars());
    for (std::size_t i = 0; i < tb; ++i) {
      if (t.mono[i] == 0) continue;
      std::size_t j = total.ring->index_of(base.ring->name(i));
      if (j >= total.ring->nvars()) return false;
      m[j] = t.mono[i];
    }
    m[total.novikov_var()] = static_cast<Exponent>((lb - k) * q);
    out += Polynomial::monomial(total.ring, m, t.coeff) * phi.fiber_class.pow(static_cast<unsigned>(k * q));
  }
  return true;
}

}  // namespace

bool phi_check(const Presentation& base, const Presentation& total, const PhiMap& phi) {
  GroebnerBasis ideal = total.symbolic_ideal();
  for (const auto& g : base.generators()) {
    Polynomial image(total.ring);
    if (!push_forward(g, base, total, phi, image)) return false;
    if (!normal_form(image, ideal).is_zero()) return false;
  }
  return true;
}

bool phi_characteristic_check(const Presentation& base, const Univariate& chi, const Presentation& total,
                              const Polynomial& total_omega, const PhiMap& phi) {
  const long lb = base.index.get_si();
  const long k = phi.k.get_si();
  const long d = chi.degree();
  Polynomial omega = total_omega.embed(total.ring);
  Polynomial image(total.ring);
  for (long j = 0; j <= d; ++j) {
    BigRational c = chi.coeff(static_cast<std::size_t>(j));
    if (c == 0) continue;
    if ((d - j) % lb != 0) return false;
    const long q = (d - j) / lb;
    Monomial tpow(total.ring->nvars());
    tpow[total.novikov_var()] = static_cast<Exponent>((lb - k) * q);
    image += Polynomial::monomial(total.ring, tpow, c) * phi.fiber_class.pow(static_cast<unsigned>(k * q)) *
             omega.pow(static_cast<unsigned>(j));
  }
  return normal_form(image, total.symbolic_ideal()).is_zero();
}

std::vector<std::complex<double>> exact_spectrum(const RationalMatrix& m) {
  std::vector<std::complex<double>> out;
  for (const auto& [p, mult] : factor_rational(characteristic_polynomial(m)))
    for (auto root : p.roots())
      for (int i = 0; i < mult; ++i) out.push_back(root);
  return out;
}

namespace {

struct Cluster {
  std::complex<double> value;
  std::size_t count;
};

std::vector<Cluster> clusters_of(const std::vector<std::complex<double>>& v) {
  std::vector<Cluster> out;
  for (const auto& group : cluster_values(v, 1e-6)) {
    std::complex<double> mean = 0;
    for (auto i : group) mean += v[i];
    out.push_back({mean / static_cast<double>(group.size()), group.size()});
  }
  return out;
}

}  // namespace

TransferReport eigenvalue_transfer_check(const RationalMatrix& omega_base, const RationalMatrix& omega_total_qh,
                                         const RationalMatrix& omega_total_sh, const BigInt& k,
                                         const BigInt& base_index) {
  if (k < 1 || k >= base_index)
    fail(ErrorKind::NotMonotone, "transfer needs 1 <= k < " + to_string(base_index));
  TransferReport rep;
  const long lb = base_index.get_si();
  const long le = lb - k.get_si();
  const double scale = std::pow(-k.get_d(), k.get_d());

  for (auto mu : exact_spectrum(omega_base))
    if (std::abs(mu) > 1e-9) rep.base_invariants.push_back(std::pow(mu, static_cast<int>(lb)));
  for (auto mu : exact_spectrum(omega_total_sh))
    if (std::abs(mu) > 1e-9) rep.total_invariants.push_back(std::pow(mu, static_cast<int>(le)) / scale);

  rep.qh_dimension = omega_total_qh.rows();
  rep.sh_dimension = omega_total_sh.rows();
  rep.zero_generalized_dimension = rep.qh_dimension - omega_total_qh.pow(static_cast<unsigned>(rep.qh_dimension)).rank();

  auto cb = clusters_of(rep.base_invariants);
  auto ce = clusters_of(rep.total_invariants);
  std::ostringstream notes;
  bool ok = cb.size() == ce.size();
  if (!ok) notes << cb.size() << " base families against " << ce.size() << " total families; ";
  std::vector<bool> used(ce.size(), false);
  for (const auto& b : cb) {
    std::size_t best = ce.size();
    double dist = 0;
    for (std::size_t j = 0; j < ce.size(); ++j) {
      if (used[j]) continue;
      double d = std::abs(b.value - ce[j].value) / std::max(1.0, std::abs(b.value));
      if (best == ce.size() || d < dist) {
        best = j;
        dist = d;
      }
    }
    if (best == ce.size()) {
      ok = false;
      notes << "unmatched base family; ";
      continue;
    }
    used[best] = true;
    rep.worst_residual = std::max(rep.worst_residual, dist);
    // Each family with Jordan multiplicity d contributes index_B d eigenvalues
    // to B and (index_B - k) d to E.
    if (b.count * static_cast<std::size_t>(le) != ce[best].count * static_cast<std::size_t>(lb)) {
      ok = false;
      notes << "multiplicity " << b.count << " on B against " << ce[best].count << " on E; ";
    }
  }
  if (rep.qh_dimension != rep.sh_dimension + rep.zero_generalized_dimension) {
    ok = false;
    notes << "dim QH(E) differs from dim SH(E) + dim of the generalized 0-eigenspace; ";
  }
  rep.notes = notes.str();
  if (rep.worst_residual > 1e-8)
    fail(ErrorKind::ToleranceExceeded, "family invariants differ by " + std::to_string(rep.worst_residual));
  rep.holds = ok;
  return rep;
}

}  // namespace torfan
