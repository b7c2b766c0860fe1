#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "support/fixtures.hpp"
#include "support/properties.hpp"
#include "torfan/complex_eigen.hpp"
#include "torfan/error.hpp"
#include "torfan/groebner.hpp"
#include "torfan/perturbation.hpp"
#include "torfan/quantum.hpp"
#include "torfan/superpotential.hpp"
#include "torfan/surgery.hpp"
#include "torfan/univariate.hpp"

using namespace torfan;
using namespace torfan::testing;
using C = std::complex<double>;

namespace {

// Collects failed sub-checks of one criterion.
struct Verdict {
  std::vector<std::string> failures;
  std::string summary;

  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string x(std::size_t i) { return "x" + std::to_string(i); }

std::string label(std::size_t m, std::size_t k) { return "O_P" + std::to_string(m) + "(-" + std::to_string(k) + ")"; }

GroebnerBasis ideal_of(const Presentation& p, const std::vector<std::string>& gens) {
  std::vector<Polynomial> polys;
  for (const auto& g : gens) polys.push_back(Polynomial::parse(p.ring, g));
  return groebner_basis(p.ring, polys);
}

QuotientAlgebra sh_of(const QhResult& q, const MomentPolytope& p) {
  return sh_presentation(q.algebra, {omega_class(q.algebra.ring(), p)});
}

BigInt signed_power(long base, long exponent) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(std::labs(base)), static_cast<unsigned long>(exponent));
  return (base < 0 && exponent % 2 == 1) ? BigInt(-r) : r;
}

// Every shipped base/bundle pair: O_{P^m}(-k) for 1 <= k <= m <= 4 and
// O(-1,-1) over the quadric.
struct BundlePair {
  std::string name;
  Fan base;
  MomentPolytope base_polytope;
  BundleData bundle;
};

std::vector<BundlePair> bundle_pairs() {
  std::vector<BundlePair> out;
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t k = 1; k <= m; ++k)
      out.push_back({label(m, k), projective_space(m), projective_polytope(m),
                     nlb_from_k(projective_space(m), projective_polytope(m), static_cast<long>(k))});
  out.push_back({"O(-1,-1)", quadric(), quadric_polytope(), nlb_from_k(quadric(), quadric_polytope(), 1)});
  return out;
}

struct Compact {
  std::string name;
  Fan fan;
  MomentPolytope polytope;
};

std::vector<Compact> compact_examples() {
  std::vector<Compact> out;
  for (std::size_t m = 1; m <= 4; ++m) out.push_back({"P" + std::to_string(m), projective_space(m), projective_polytope(m)});
  out.push_back({"P1xP1", quadric(), quadric_polytope()});
  return out;
}

void presentations(Verdict& v) {
  auto start = std::chrono::steady_clock::now();
  auto p2 = qh_presentation(projective_space(2), projective_polytope(2));
  v.require(same_ideal(p2.presentation.symbolic_ideal(), ideal_of(p2.presentation, {"x1 - x3", "x2 - x3", "x3^3 - T^3"})),
            "P2 ideal");
  v.require(seconds_since(start) < 5, "P2 time");

  start = std::chrono::steady_clock::now();
  auto q = qh_presentation(quadric(), quadric_polytope());
  v.require(same_ideal(q.presentation.symbolic_ideal(),
                       ideal_of(q.presentation, {"x1 - x2", "x3 - x4", "x1^2 - T^2", "x3^2 - T^2"})),
            "P1xP1 ideal");
  v.require(seconds_since(start) < 5, "P1xP1 time");

  double worst = 0;
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t k = 1; k <= m; ++k) {
      start = std::chrono::steady_clock::now();
      auto b = nlb_from_k(projective_space(m), projective_polytope(m), static_cast<long>(k));
      auto r = qh_presentation(b.fan, b.polytope);
      std::vector<std::string> gens;
      for (std::size_t i = 1; i <= m; ++i) gens.push_back(x(i) + " - " + x(m + 1));
      gens.push_back(x(m + 2) + " + " + std::to_string(k) + "*" + x(m + 1));
      const auto coeff = signed_power(-static_cast<long>(k), static_cast<long>(k));
      gens.push_back(x(m + 1) + "^" + std::to_string(m + 1) + " - " + coeff.get_str() + "*T^" + std::to_string(m + 1 - k) +
                     "*" + x(m + 1) + "^" + std::to_string(k));
      v.require(same_ideal(r.presentation.symbolic_ideal(), ideal_of(r.presentation, gens)), label(m, k) + " ideal");
      const double s = seconds_since(start);
      worst = std::max(worst, s);
      v.require(s < 5, label(m, k) + " time");
    }
  std::ostringstream os;
  os << "12 presentations, slowest " << worst << " s";
  v.summary = os.str();
}

void localization(Verdict& v) {
  double worst = 0;
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t k = 1; k <= m; ++k) {
      auto b = nlb_from_k(projective_space(m), projective_polytope(m), static_cast<long>(k));
      auto q = qh_presentation(b.fan, b.polytope);
      auto sh = sh_of(q, b.polytope);
      v.require(sh.dimension() == m + 1 - k, label(m, k) + " SH dimension");
      const double kk = static_cast<double>(k);
      const C target = std::pow(C(-kk), kk);
      auto spectrum = exact_spectrum(omega_operator(sh, b.polytope));
      v.require(spectrum.size() == m + 1 - k, label(m, k) + " spectrum size");
      for (auto mu : spectrum) {
        const double r = std::abs(std::pow(mu, static_cast<double>(m + 1 - k)) - target) / std::abs(target);
        worst = std::max(worst, r);
        v.require(r <= 1e-8, label(m, k) + " eigenvalue");
      }
    }
  auto b = nlb_from_k(quadric(), quadric_polytope(), 1);
  auto sh = sh_of(qh_presentation(b.fan, b.polytope), b.polytope);
  v.require(sh.dimension() == 1, "O(-1,-1) SH dimension");
  auto omega = omega_operator(sh, b.polytope);
  v.require(omega.rows() == 1 && omega(0, 0) == -4, "O(-1,-1) eigenvalue -4");
  std::ostringstream os;
  os << "worst relative residual " << worst << ", O(-1,-1) eigenvalue exactly -4";
  v.summary = os.str();
}

void char_min(Verdict& v) {
  auto q = qh_presentation(quadric(), quadric_polytope());
  auto cq = char_min_poly(omega_operator(q.algebra, quadric_polytope()));
  v.require(cq.characteristic.to_string() == "X^4 - 4*X^2", "P1xP1 characteristic " + cq.characteristic.to_string());
  v.require(cq.minimal.to_string() == "X^3 - 4*X", "P1xP1 minimal " + cq.minimal.to_string());
  auto b = nlb_from_k(quadric(), quadric_polytope(), 1);
  auto e = qh_presentation(b.fan, b.polytope);
  auto ce = char_min_poly(omega_operator(e.algebra, b.polytope));
  v.require(ce.characteristic.to_string() == "X^4 + 4*X^3", "O(-1,-1) characteristic " + ce.characteristic.to_string());
  v.require(ce.minimal.to_string() == "X^3 + 4*X^2", "O(-1,-1) minimal " + ce.minimal.to_string());
  v.summary = cq.characteristic.to_string() + " / " + cq.minimal.to_string() + "; " + ce.characteristic.to_string() +
              " / " + ce.minimal.to_string();
}

void blowups(Verdict& v) {
  for (std::size_t n = 1; n <= 4; ++n) {
    IndexSet all(n + 1);
    for (std::size_t i = 0; i <= n; ++i) all[i] = i;
    auto bl = blowup_face(affine_space(n + 1), orthant(n + 1), all, static_cast<long>(n));
    auto q = qh_presentation(bl.fan, bl.polytope, PresentationMode::blowup);
    std::vector<std::string> gens;
    for (std::size_t i = 1; i <= n + 1; ++i) gens.push_back(x(i) + " + " + x(n + 2));
    gens.push_back("x1^" + std::to_string(n + 1) + " + T^" + std::to_string(n) + "*x1");
    v.require(same_ideal(q.presentation.symbolic_ideal(), ideal_of(q.presentation, gens)),
              "C^" + std::to_string(n + 1) + " blow-up ideal");
  }
  const auto before = vertices(projective_polytope(2)).vertices.size();
  auto chopped = blowup_face(projective_space(2), projective_polytope(2), {0, 1}, BigRational(1, 3));
  const auto after = vertices(chopped.polytope).vertices.size();
  v.require(before == 3 && after == 4, "chopped P2 vertex count");
  v.summary = "n = 1..4 ideals equal; P2 vertices " + std::to_string(before) + " -> " + std::to_string(after);
}

void mirror(Verdict& v) {
  int checked = 0;
  for (const auto& c : compact_examples()) {
    auto q = qh_presentation(c.fan, c.polytope);
    auto w = build_superpotential(c.polytope);
    auto jac = jacobian_ring(w);
    v.require(jac.algebra.dimension() == q.algebra.dimension(), c.name + " dim Jac = dim QH");
    auto report = mirror_check(q.presentation, q.algebra, c.polytope, w, jac);
    for (const auto& clause : report.clauses) v.require(clause.pass, c.name + " " + clause.name + ": " + clause.detail);
    ++checked;
  }
  for (const auto& pair : bundle_pairs()) {
    const auto& b = pair.bundle;
    auto q = qh_presentation(b.fan, b.polytope);
    auto sh = sh_of(q, b.polytope);
    auto w = build_superpotential(b.polytope);
    auto jac = jacobian_ring(w);
    v.require(jac.algebra.dimension() == sh.dimension(), pair.name + " dim Jac = dim SH");
    auto report = mirror_check(q.presentation, sh, b.polytope, w, jac);
    for (const auto& clause : report.clauses) v.require(clause.pass, pair.name + " " + clause.name + ": " + clause.detail);
    ++checked;
  }
  v.summary = std::to_string(checked) + " spaces, dimensions and critical values agree";
}

void critical(Verdict& v) {
  double worst = 0;
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t k = 1; k <= m; ++k) {
      auto b = nlb_from_k(projective_space(m), projective_polytope(m), static_cast<long>(k));
      auto pts = critical_points(build_superpotential(b.polytope));
      v.require(pts.size() == m + 1 - k, label(m, k) + " point count");
      const double kk = static_cast<double>(k);
      const C target = std::pow(C(-kk), kk);
      for (const auto& p : pts) {
        const C w = p.coordinates[0];
        double r = 0;
        for (std::size_t i = 0; i < m; ++i) r = std::max(r, std::abs(p.coordinates[i] - w) / std::abs(w));
        r = std::max(r, std::abs(p.coordinates[m] + kk * w) / std::abs(w));
        r = std::max(r, std::abs(std::pow(w, static_cast<double>(m + 1 - k)) - target) / std::abs(target));
        r = std::max(r, std::abs(p.value - static_cast<double>(m + 1 - k) * w) / std::abs(p.value));
        worst = std::max(worst, r);
        v.require(r <= 1e-8, label(m, k) + " critical point shape");
      }
    }
  std::ostringstream os;
  os << "10 bundles, worst relative residual " << worst;
  v.summary = os.str();
}

void transfer(Verdict& v) {
  double worst = 0;
  for (const auto& pair : bundle_pairs()) {
    const auto& b = pair.bundle;
    auto qb = qh_presentation(pair.base, pair.base_polytope);
    auto qe = qh_presentation(b.fan, b.polytope);
    auto sh = sh_of(qe, b.polytope);
    auto report = eigenvalue_transfer_check(omega_operator(qb.algebra, pair.base_polytope),
                                            omega_operator(qe.algebra, b.polytope), omega_operator(sh, b.polytope),
                                            *b.spec.k, b.spec.base_index);
    worst = std::max(worst, report.worst_residual);
    v.require(report.holds, pair.name + " transfer: " + report.notes);
    v.require(report.worst_residual <= 1e-8, pair.name + " residual");
    v.require(report.qh_dimension == report.sh_dimension + report.zero_generalized_dimension,
              pair.name + " dimension bookkeeping");
    v.require(report.qh_dimension == qe.algebra.dimension() && report.sh_dimension == sh.dimension(),
              pair.name + " dimensions");
  }
  std::ostringstream os;
  os << bundle_pairs().size() << " pairs, worst residual " << worst;
  v.summary = os.str();
}

void families(Verdict& v) {
  int count = 0;
  auto check = [&](const std::string& name, const QuotientAlgebra& a, const MomentPolytope& p, const BigInt& index) {
    auto r = eigen_family_check(characteristic_polynomial(omega_operator(a, p)), index);
    v.require(r.holds, name + " family pattern");
    ++count;
  };
  for (const auto& c : compact_examples()) {
    auto q = qh_presentation(c.fan, c.polytope);
    check(c.name, q.algebra, c.polytope, q.presentation.index);
  }
  for (const auto& pair : bundle_pairs()) {
    auto q = qh_presentation(pair.bundle.fan, pair.bundle.polytope);
    check(pair.name + " QH", q.algebra, pair.bundle.polytope, q.presentation.index);
    check(pair.name + " SH", sh_of(q, pair.bundle.polytope), pair.bundle.polytope, q.presentation.index);
  }
  v.summary = std::to_string(count) + " characteristic polynomials factor as x^d0 g(x^index)";
}

void galkin(Verdict& v) {
  std::vector<Compact> cases{{"P2", projective_space(2), {}}, {"P1xP1", quadric(), {}}, {"P3", projective_space(3), {}}};
  double slowest = 0;
  for (const auto& c : cases) {
    auto start = std::chrono::steady_clock::now();
    auto g = galkin_point(c.fan);
    const double s = seconds_since(start);
    slowest = std::max(slowest, s);
    bool positive = true;
    for (double p : g.point) positive = positive && p > 0;
    v.require(positive, c.name + " positive real point");
    v.require(g.min_hessian_eigenvalue > 0, c.name + " Hessian positive definite");
    v.require(g.gradient_norm <= 1e-10, c.name + " gradient norm");
    v.require(s < 1.0, c.name + " time");
  }
  for (const auto& pair : bundle_pairs()) {
    bool half_space = false;
    try {
      galkin_point(pair.bundle.fan);
    } catch (const Error& e) {
      half_space = e.kind() == ErrorKind::HalfSpaceFan;
    }
    v.require(half_space, pair.name + " HalfSpaceFan");
  }
  std::ostringstream os;
  os << "3 minima, slowest " << slowest << " s; all NLB fans rejected";
  v.summary = os.str();
}

void barycentres(Verdict& v) {
  for (const auto& c : compact_examples()) {
    auto r = reflexive_polytope(c.fan);
    auto y = barycentre(r, 1);
    bool zero = true;
    for (const auto& yi : y) zero = zero && yi == 0;
    v.require(zero, c.name + " reflexive barycentre");
  }
  v.require(barycentre(projective_polytope(2), 3) == RationalVector{BigRational(1, 3), BigRational(1, 3)}, "P2 barycentre");
  for (const auto& pair : bundle_pairs()) {
    const auto& b = pair.bundle;
    auto y = barycentre(b.polytope, *b.spec.total_index);
    v.require(y.back() == BigRational(1) / BigRational(*b.spec.total_index), pair.name + " fibre coordinate");
    auto landing = barycentre_landing_check(b.polytope, *b.spec.total_index);
    v.require(landing.holds, pair.name + " landing");
  }
  v.summary = "reflexive -> 0, P2 -> (1/3, 1/3), NLB fibre -> 1/index";
}

MatrixFamily family_of(std::size_t n) {
  MatrixFamily f;
  f.size = n;
  f.coefficients.assign(n, std::vector<std::vector<Complex>>(n));
  return f;
}

void perturbation(Verdict& v) {
  auto f = family_of(2);
  f.coefficients[0][0] = {0, 1};
  f.coefficients[0][1] = {1};
  double worst_p1 = 0, worst_sum = 0;
  for (double xv : {0.1, 0.01, 0.001}) {
    ComplexMatrix a = f.at(xv);
    auto p1 = eigenprojection(a, xv, xv / 2);
    auto p2 = eigenprojection(a, 0.0, xv / 2);
    ComplexMatrix expected(2, 2);
    expected << 1, 1 / xv, 0, 0;
    worst_p1 = std::max(worst_p1, operator_norm(p1.matrix - expected) / std::max(1.0, 1 / xv));
    worst_sum = std::max(worst_sum, operator_norm(p1.matrix + p2.matrix - ComplexMatrix::Identity(2, 2)));
  }
  v.require(worst_p1 <= 1e-8, "P1 matches [[1, 1/x], [0, 0]]");
  v.require(worst_sum <= 1e-8, "P1 + P2 = I");
  const std::vector<double> ray{1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  double worst_exponent = 0;
  for (const auto& path : track_eigenvalues(f, ray)) {
    const double e = path_projection(f, path).exponent;
    worst_exponent = std::max(worst_exponent, std::abs(e + 1));
  }
  v.require(worst_exponent <= 0.05, "pole exponent -1 +- 0.05");

  auto g = family_of(3);
  g.coefficients[1][1] = {0, 1};
  g.coefficients[1][2] = {1};
  auto report = gevec_convergence(g, ray);
  v.require(report.clusters.size() == 2, "two clusters for the 3x3 family");
  double at_1e4 = 0;
  for (const auto& c : report.clusters) {
    v.require(c.monotone, "distances decrease along the ray");
    for (std::size_t i = 0; i < report.xs.size(); ++i)
      if (report.xs[i] == 1e-4) at_1e4 = std::max(at_1e4, c.distances[i]);
  }
  v.require(at_1e4 < 1e-3, "distances below 1e-3 at x = 1e-4");
  // The 0-eigenspace of A(x) is span{e1, (0, 1, -x)}; its distance to
  // span{e1, e2} decays like x and shows the line actually moving.
  ComplexMatrix e12 = ComplexMatrix::Zero(3, 2);
  e12(0, 0) = 1;
  e12(1, 1) = 1;
  const double moving = subspace_distance(Subspace::span(eigenprojection(g.at(1e-4), 0.0, 5e-5).matrix), Subspace::span(e12));
  std::ostringstream os;
  os << "P1 rel err " << worst_p1 << ", P1+P2-I " << worst_sum << ", exponent off by " << worst_exponent
     << ", 3x3 distance at 1e-4 " << at_1e4 << " (moving line " << moving << ")";
  v.summary = os.str();
}

void separation(Verdict& v) {
  auto b = nlb_from_k(quadric(), quadric_polytope(), 1);
  const auto unperturbed = jacobian_ring(build_superpotential(b.polytope)).algebra.dimension();
  v.require(unperturbed == 1, "unperturbed O(-1,-1) SH dimension 1");
  double min_gap = 1e300, min_value = 1e300;
  std::size_t max_dim = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto s = std::to_string(seed);
    for (const auto& [name, poly] : {std::pair{std::string("P1xP1"), quadric_polytope()}, std::pair{std::string("O(-1,-1)"), b.polytope}}) {
      auto r = perturb_and_separate(poly, seed, 1e-2);
      v.require(r.morse, name + " seed " + s + " Morse");
      v.require(r.min_gap >= 1e-9, name + " seed " + s + " gaps");
      v.require(r.min_abs_value > 0, name + " seed " + s + " nonzero values");
      min_gap = std::min(min_gap, r.min_gap);
      min_value = std::min(min_value, r.min_abs_value);
      if (name == "O(-1,-1)") {
        v.require(r.dimension > unperturbed, "O(-1,-1) seed " + s + " rank jump");
        max_dim = std::max(max_dim, r.dimension);
      }
    }
  }
  std::ostringstream os;
  os << "min gap " << min_gap << ", min |value| " << min_value << ", perturbed O(-1,-1) dimension up to " << max_dim;
  v.summary = os.str();
}

void properties(Verdict& v) {
  auto start = std::chrono::steady_clock::now();
  auto results = all_properties(1000, 2024);
  const double total = seconds_since(start);
  for (const auto& r : results) {
    v.require(r.cases == 1000, r.name + " case count");
    v.require(r.failures == 0, r.name + ": " + r.first_failure);
  }
  v.require(results.size() == 6, "six suites");
  v.require(total < 120, "total under 2 min");
  std::ostringstream os;
  os << results.size() << " suites x 1000 cases in " << total << " s";
  v.summary = os.str();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria{
      {"presentations", presentations},
      {"localization", localization},
      {"characteristic and minimal polynomials", char_min},
      {"blow-up", blowups},
      {"mirror", mirror},
      {"line bundle critical points", critical},
      {"eigenvalue transfer", transfer},
      {"family pattern", families},
      {"positive critical point", galkin},
      {"barycentre", barycentres},
      {"eigenprojection limits", perturbation},
      {"separation", separation},
      {"property suites", properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      criteria[i].second(v);
    } catch (const std::exception& e) {
      v.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool pass = v.failures.empty();
    if (!pass) ++failed;
    std::printf("%s %zu: %s (%s)\n", pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), v.summary.c_str());
    for (const auto& f : v.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
