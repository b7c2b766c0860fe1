#pragma once

#include "torfan/fan.hpp"
#include "torfan/polytope.hpp"

namespace torfan::testing {

// Fan of P^m: e_1..e_m and -(e_1+...+e_m); every m-subset is a cone.
inline Fan projective_space(std::size_t m) {
  Fan f;
  f.rank = m;
  for (std::size_t i = 0; i < m; ++i) {
    LatticeVector e(m, 0);
    e[i] = 1;
    f.edges.push_back(e);
  }
  f.edges.push_back(LatticeVector(m, -1));
  for (std::size_t skip = 0; skip <= m; ++skip) {
    IndexSet cone;
    for (std::size_t i = 0; i <= m; ++i)
      if (i != skip) cone.push_back(i);
    f.max_cones.push_back(cone);
  }
  return f;
}

// Normalized simplex: lambda = (0, ..., 0, -1).
inline MomentPolytope projective_polytope(std::size_t m) {
  MomentPolytope p;
  p.rank = m;
  p.edges = projective_space(m).edges;
  p.lambdas.assign(m + 1, 0);
  p.lambdas[m] = -1;
  return p;
}

inline MomentPolytope reflexive_polytope(const Fan& f) {
  MomentPolytope p;
  p.rank = f.rank;
  p.edges = f.edges;
  p.lambdas.assign(f.edges.size(), -1);
  return p;
}

inline Fan quadric() {
  Fan f;
  f.rank = 2;
  f.edges = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  f.max_cones = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  return f;
}

inline MomentPolytope quadric_polytope() {
  MomentPolytope p;
  p.rank = 2;
  p.edges = quadric().edges;
  p.lambdas = {0, -1, 0, -1};
  return p;
}

inline Fan affine_space(std::size_t n) {
  Fan f;
  f.rank = n;
  IndexSet cone;
  for (std::size_t i = 0; i < n; ++i) {
    LatticeVector e(n, 0);
    e[i] = 1;
    f.edges.push_back(e);
    cone.push_back(i);
  }
  f.max_cones.push_back(cone);
  return f;
}

inline MomentPolytope orthant(std::size_t n) {
  MomentPolytope p;
  p.rank = n;
  p.edges = affine_space(n).edges;
  p.lambdas.assign(n, 0);
  return p;
}

}  // namespace torfan::testing
