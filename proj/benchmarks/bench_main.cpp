#include <benchmark/benchmark.h>

#include "support/fixtures.hpp"
#include "torfan/groebner.hpp"
#include "torfan/jordan.hpp"
#include "torfan/perturbation.hpp"
#include "torfan/quantum.hpp"
#include "torfan/superpotential.hpp"
#include "torfan/surgery.hpp"

using namespace torfan;
using namespace torfan::testing;

namespace {

void projective_presentation(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const Fan f = projective_space(m);
  const MomentPolytope p = projective_polytope(m);
  for (auto _ : state) benchmark::DoNotOptimize(qh_presentation(f, p));
}
BENCHMARK(projective_presentation)->DenseRange(2, 6);

void symbolic_bundle_ideal(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  auto b = nlb_from_k(projective_space(m), projective_polytope(m), static_cast<long>(m));
  auto q = qh_presentation(b.fan, b.polytope);
  for (auto _ : state) benchmark::DoNotOptimize(q.presentation.symbolic_ideal());
}
BENCHMARK(symbolic_bundle_ideal)->DenseRange(1, 4);

void localization(benchmark::State& state) {
  auto b = nlb_from_k(quadric(), quadric_polytope(), 1);
  auto q = qh_presentation(b.fan, b.polytope);
  for (auto _ : state) benchmark::DoNotOptimize(sh_presentation(q.algebra, {omega_class(q.algebra.ring(), b.polytope)}));
}
BENCHMARK(localization);

void jordan_of_omega(benchmark::State& state) {
  auto b = nlb_from_k(projective_space(4), projective_polytope(4), 2);
  auto q = qh_presentation(b.fan, b.polytope);
  auto omega = omega_operator(q.algebra, b.polytope);
  for (auto _ : state) benchmark::DoNotOptimize(jordan_profile(omega));
}
BENCHMARK(jordan_of_omega);

void jacobian_and_critical_points(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  auto w = build_superpotential(projective_polytope(m));
  for (auto _ : state) benchmark::DoNotOptimize(critical_points(w));
}
BENCHMARK(jacobian_and_critical_points)->DenseRange(2, 4);

void separation(benchmark::State& state) {
  auto b = nlb_from_k(quadric(), quadric_polytope(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(perturb_and_separate(b.polytope, 0));
}
BENCHMARK(separation);

void galkin(benchmark::State& state) {
  const Fan f = projective_space(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(galkin_point(f));
}
BENCHMARK(galkin)->DenseRange(2, 5);

void contour_projection(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  ComplexMatrix a = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) a(i, i) = static_cast<double>(i);
  for (Eigen::Index i = 0; i + 1 < n; ++i) a(i, i + 1) = 1;
  for (auto _ : state) benchmark::DoNotOptimize(eigenprojection(a, 0.0, 0.5));
}
BENCHMARK(contour_projection)->RangeMultiplier(2)->Range(2, 32);

void generalized_eigenvectors(benchmark::State& state) {
  MatrixFamily f;
  f.size = 3;
  f.coefficients.assign(3, std::vector<std::vector<Complex>>(3));
  f.coefficients[1][1] = {0, 1};
  f.coefficients[1][2] = {1};
  const auto ray = default_ray();
  for (auto _ : state) benchmark::DoNotOptimize(gevec_convergence(f, ray));
}
BENCHMARK(generalized_eigenvectors);

}  // namespace

BENCHMARK_MAIN();
