#pragma once

#include <vector>

#include "torfan/fan.hpp"

namespace torfan {

// {y : <y, e_i> >= lambda_i}.
struct MomentPolytope {
  std::size_t rank = 0;
  std::vector<LatticeVector> edges;
  std::vector<BigRational> lambdas;
};

struct VertexSet {
  std::vector<RationalVector> vertices;
  // Tight facet indices per vertex, sorted.
  std::vector<IndexSet> incidence;
};

// Throws Empty when the inequalities are infeasible.
VertexSet vertices(const MomentPolytope& polytope);

bool is_bounded(const MomentPolytope& polytope);

// Throws Unbounded.
bool check_reflexive(const MomentPolytope& polytope);

struct NormalizedPolytope {
  MomentPolytope polytope;
  BigInt index;
};

// Translate the vertex to the origin and divide by the largest integer that
// keeps vertices and support numbers integral.
NormalizedPolytope normalize_monotone(const MomentPolytope& polytope, const RationalVector& vertex);

// Unique y with <y, e_i> = lambda_i + 1/index for all i; Inconsistent otherwise.
RationalVector barycentre(const MomentPolytope& polytope, const BigInt& index);

// Appends e_0 = sum_{i in I} e_i with lambda_0 = epsilon + sum lambda_i.
MomentPolytope chop(const MomentPolytope& polytope, const IndexSet& face, const BigRational& epsilon);

// Lattice points y with <y, e_i> > lambda_i for every i; requires boundedness.
std::vector<LatticeVector> interior_lattice_points(const MomentPolytope& polytope);

}  // namespace torfan
