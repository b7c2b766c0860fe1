#include <doctest.h>

#include <chrono>
#include <cmath>
#include <complex>

#include "support/checks.hpp"
#include "support/fixtures.hpp"
#include "torfan/groebner.hpp"
#include "torfan/jordan.hpp"
#include "torfan/quantum.hpp"
#include "torfan/surgery.hpp"
#include "torfan/univariate.hpp"

using namespace torfan;
using namespace torfan::testing;

namespace {

GroebnerBasis expected_ideal(const Presentation& p, const std::vector<std::string>& gens) {
  std::vector<Polynomial> polys;
  for (const auto& g : gens) polys.push_back(Polynomial::parse(p.ring, g));
  return groebner_basis(p.ring, polys);
}

std::string x(std::size_t i) { return "x" + std::to_string(i); }

QuotientAlgebra sh_of(const QhResult& q, const MomentPolytope& p) {
  return sh_presentation(q.algebra, {omega_class(q.algebra.ring(), p)});
}

}  // namespace

TEST_CASE("projective plane presentation") {
  auto q = qh_presentation(projective_space(2), projective_polytope(2));
  CHECK(q.presentation.index == 3);
  CHECK(q.presentation.mode == PresentationMode::compact);
  // t = T^3, so x^3 - t is x3^3 - T^3.
  CHECK(same_ideal(q.presentation.symbolic_ideal(), expected_ideal(q.presentation, {"x1 - x3", "x2 - x3", "x3^3 - T^3"})));
  REQUIRE(q.presentation.qsr_relations.size() == 1);
  CHECK(q.presentation.render(q.presentation.qsr_relations[0]) == "x1*x2*x3 - t");
  CHECK(q.algebra.dimension() == 3);
  // c1 = 3x.
  auto c1 = c1_operator(q.algebra, projective_polytope(2));
  CHECK(c1 == q.algebra.mult_matrix(Polynomial::parse(q.algebra.ring(), "x3")) * BigRational(3));
  CHECK(omega_operator(q.algebra, projective_polytope(2)) == q.algebra.mult_matrix(Polynomial::parse(q.algebra.ring(), "x3")));
}

TEST_CASE("quadric presentation and spectrum") {
  auto q = qh_presentation(quadric(), quadric_polytope());
  CHECK(q.presentation.index == 2);
  CHECK(same_ideal(q.presentation.symbolic_ideal(),
                   expected_ideal(q.presentation, {"x1 - x2", "x3 - x4", "x1^2 - T^2", "x3^2 - T^2"})));
  CHECK(q.algebra.dimension() == 4);
  auto omega = omega_operator(q.algebra, quadric_polytope());
  auto cm = char_min_poly(omega);
  CHECK(cm.characteristic.to_string() == "X^4 - 4*X^2");
  CHECK(cm.minimal.to_string() == "X^3 - 4*X");
  auto report = eigen_family_check(characteristic_polynomial(omega), 2);
  CHECK(report.holds);
  CHECK(report.zero_multiplicity == 2);
  CHECK(report.cofactor == Univariate({-4, 1}));
}

TEST_CASE("line bundles over projective space") {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t k = 1; k <= m; ++k) {
      CAPTURE(m);
      CAPTURE(k);
      const auto start = std::chrono::steady_clock::now();
      auto b = nlb_from_k(projective_space(m), projective_polytope(m), static_cast<long>(k));
      auto q = qh_presentation(b.fan, b.polytope);
      CHECK(q.presentation.mode == PresentationMode::nlb);
      CHECK(q.presentation.index == static_cast<long>(m + 1 - k));
      // x_i = x_{m+1}, fibre = -k x_{m+1}, x^{m+1} = T^{1+m-k} (-k x)^k.
      std::vector<std::string> gens;
      for (std::size_t i = 1; i <= m; ++i) gens.push_back(x(i) + " - " + x(m + 1));
      gens.push_back(x(m + 2) + " + " + std::to_string(k) + "*" + x(m + 1));
      const long sign = k % 2 == 0 ? 1 : -1;
      BigInt coeff;
      mpz_ui_pow_ui(coeff.get_mpz_t(), k, k);
      coeff *= sign;
      gens.push_back(x(m + 1) + "^" + std::to_string(m + 1) + " - " + coeff.get_str() + "*T^" + std::to_string(m + 1 - k) +
                     "*" + x(m + 1) + "^" + std::to_string(k));
      CHECK(same_ideal(q.presentation.symbolic_ideal(), expected_ideal(q.presentation, gens)));
      CHECK(q.algebra.dimension() == m + 1);
      CHECK(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() < 5.0);

      auto sh = sh_of(q, b.polytope);
      CHECK(sh.dimension() == m + 1 - k);
      // Eigenvalues of omega on SH: the (m+1-k)-th roots of (-k)^k.
      for (auto mu : exact_spectrum(omega_operator(sh, b.polytope))) {
        auto target = std::pow(std::complex<double>(-static_cast<double>(k)), static_cast<double>(k));
        CHECK(std::abs(std::pow(mu, static_cast<double>(m + 1 - k)) - target) <= 1e-8 * std::abs(target));
      }
    }
  }
}

TEST_CASE("O(-1,-1) over the quadric") {
  auto b = nlb_from_k(quadric(), quadric_polytope(), 1);
  auto q = qh_presentation(b.fan, b.polytope);
  CHECK(q.presentation.index == 1);
  CHECK(same_ideal(q.presentation.symbolic_ideal(),
                   expected_ideal(q.presentation, {"x1 - x2", "x3 - x4", "x2 + x4 + x5", "x1^2 + T*x1 + T*x3",
                                                   "x3^2 + T*x1 + T*x3"})));
  auto omega = omega_operator(q.algebra, b.polytope);
  auto cm = char_min_poly(omega);
  CHECK(cm.characteristic.to_string() == "X^4 + 4*X^3");
  CHECK(cm.minimal.to_string() == "X^3 + 4*X^2");
  // The minimal polynomial X^2 (X + 4) caps the 0-blocks at size 2.
  auto jp = jordan_profile(omega);
  REQUIRE(jp.entries.size() == 2);
  CHECK(jp.entries[0].factor == Univariate({0, 1}));
  CHECK(jp.entries[0].block_sizes == std::vector<int>{2, 1});
  CHECK(jp.entries[1].factor == Univariate({4, 1}));
  CHECK(jp.entries[1].block_sizes == std::vector<int>{1});

  auto sh = sh_of(q, b.polytope);
  CHECK(sh.dimension() == 1);
  auto sh_omega = omega_operator(sh, b.polytope);
  CHECK(sh_omega(0, 0) == -4);
  CHECK(char_min_poly(sh_omega).characteristic.to_string() == "X + 4");
}

TEST_CASE("compact localization matches the Jacobian dimension") {
  auto q = qh_presentation(projective_space(2), projective_polytope(2));
  std::vector<Polynomial> all;
  for (std::size_t i = 0; i < 3; ++i) all.push_back(Polynomial::variable(q.algebra.ring(), i));
  CHECK(sh_presentation(q.algebra, all).dimension() == 3);
}

TEST_CASE("eigenvalue family check") {
  CHECK(eigen_family_check(Univariate({-1, 0, 0, 1}), 3).holds);
  auto r = eigen_family_check(Univariate({-1, 0, 0, 1}), 3);
  CHECK(r.zero_multiplicity == 0);
  CHECK(r.cofactor == Univariate({-1, 1}));
  CHECK_FALSE(eigen_family_check(Univariate({0, -1, 1}), 2).holds);
  CHECK(eigen_family_check(Univariate({0, -1, 1}), 1).holds);
}

TEST_CASE("phi maps base relations into the bundle ideal") {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t k = 1; k <= m; ++k) {
      auto b = nlb_from_k(projective_space(m), projective_polytope(m), static_cast<long>(k));
      auto qb = qh_presentation(projective_space(m), projective_polytope(m));
      auto qe = qh_presentation(b.fan, b.polytope);
      Polynomial fiber(qe.presentation.ring);
      for (std::size_t i = 0; i < b.spec.degrees.size(); ++i)
        fiber += Polynomial::variable(qe.presentation.ring, i) * BigRational(b.spec.degrees[i]);
      PhiMap phi{static_cast<long>(k), fiber};
      CHECK(phi_check(qb.presentation, qe.presentation, phi));
      auto omega_b = omega_operator(qb.algebra, projective_polytope(m));
      CHECK(phi_characteristic_check(qb.presentation, characteristic_polynomial(omega_b), qe.presentation,
                                     omega_class(qe.presentation.classical_ring, b.polytope), phi));
    }
  }
  auto b = nlb_from_k(quadric(), quadric_polytope(), 1);
  auto qb = qh_presentation(quadric(), quadric_polytope());
  auto qe = qh_presentation(b.fan, b.polytope);
  PhiMap phi{1, Polynomial::parse(qe.presentation.ring, "-x2 - x4")};
  CHECK(phi_check(qb.presentation, qe.presentation, phi));
  // A wrong fibre class breaks it.
  PhiMap wrong{1, Polynomial::parse(qe.presentation.ring, "x2 + x4")};
  CHECK_FALSE(phi_check(qb.presentation, qe.presentation, wrong));
  // k = 0 with the same presentation is the identity map.
  PhiMap identity{0, Polynomial::constant(qb.presentation.ring, 1)};
  CHECK(phi_check(qb.presentation, qb.presentation, identity));
}

TEST_CASE("eigenvalue transfer") {
  auto b = nlb_from_k(quadric(), quadric_polytope(), 1);
  auto qb = qh_presentation(quadric(), quadric_polytope());
  auto qe = qh_presentation(b.fan, b.polytope);
  auto sh = sh_of(qe, b.polytope);
  auto omega_b = omega_operator(qb.algebra, quadric_polytope());
  auto report = eigenvalue_transfer_check(omega_b, omega_operator(qe.algebra, b.polytope), omega_operator(sh, b.polytope), 1, 2);
  CHECK(report.holds);
  CHECK(report.qh_dimension == report.sh_dimension + report.zero_generalized_dimension);
  CHECK_FAILS_WITH(eigenvalue_transfer_check(omega_b, omega_b, omega_b, 2, 2), ErrorKind::NotMonotone);
  CHECK_FAILS_WITH(eigenvalue_transfer_check(omega_b, omega_b, omega_b, 0, 2), ErrorKind::NotMonotone);
}

TEST_CASE("blow-up of affine space at the origin") {
  for (std::size_t n = 1; n <= 4; ++n) {
    CAPTURE(n);
    IndexSet all(n + 1);
    for (std::size_t i = 0; i <= n; ++i) all[i] = i;
    auto bl = blowup_face(affine_space(n + 1), orthant(n + 1), all, static_cast<long>(n));
    auto q = qh_presentation(bl.fan, bl.polytope, PresentationMode::blowup);
    std::vector<std::string> gens;
    for (std::size_t i = 1; i <= n + 1; ++i) gens.push_back(x(i) + " + " + x(n + 2));
    gens.push_back("x1^" + std::to_string(n + 1) + " + T^" + std::to_string(n) + "*x1");
    CHECK(same_ideal(q.presentation.symbolic_ideal(), expected_ideal(q.presentation, gens)));
    CHECK(q.algebra.dimension() == n + 1);
  }
}
