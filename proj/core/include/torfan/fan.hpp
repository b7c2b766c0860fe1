#pragma once

#include <string>
#include <vector>

#include "torfan/rational.hpp"
#include "torfan/rational_matrix.hpp"

namespace torfan {

using LatticeVector = std::vector<BigInt>;
using IndexSet = std::vector<std::size_t>;

// Simplicial fan given by its maximal cones (0-based edge indices, sorted).
struct Fan {
  std::size_t rank = 0;
  std::vector<LatticeVector> edges;
  std::vector<IndexSet> max_cones;
};

struct FanReport {
  bool smooth = false;
  bool complete = false;
  std::string notes;
};

struct CurveClass {
  std::vector<BigInt> intersections;
  BigInt c1;
  BigRational omega;
};

struct PrimitiveRelation {
  IndexSet primitive;
  IndexSet targets;
  std::vector<BigInt> multiplicities;
  CurveClass curve;
};

// Structural checks (primitive edges, valid indices, independent cone
// generators) throw InvalidFan; cones meeting in a non-face throw
// OverlappingCones.
FanReport validate_fan(const Fan& fan);

// True when the index set spans a cone of the fan (is contained in a maximal
// cone).
bool is_face(const Fan& fan, const IndexSet& subset);

std::vector<IndexSet> primitive_collections(const Fan& fan);

// Lambdas may be empty, in which case omega is reported as 0.
PrimitiveRelation batyrev_decompose(const Fan& fan, const IndexSet& primitive,
                                    const std::vector<BigRational>& lambdas = {});

CurveClass relation_class(const Fan& fan, const std::vector<BigInt>& coefficients,
                          const std::vector<BigRational>& lambdas);

// Z-basis of the relation lattice {m in Z^r : sum m_i e_i = 0}.
std::vector<std::vector<BigInt>> relation_lattice(const Fan& fan);

// gcd of c1 = sum m_i over the relation lattice; 1 when the lattice is zero.
BigInt fano_index(const Fan& fan);

// True when some nonzero u has <u, e_i> <= 0 for every edge.
bool in_closed_half_space(const Fan& fan);

RationalMatrix edge_matrix(const Fan& fan);  // columns are edges

}  // namespace torfan
