#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torfan/polytope.hpp"

namespace torfan {

struct LineBundleSpec {
  std::vector<BigInt> degrees;  // E = O(sum n_i D_i)
  std::optional<BigInt> k;
  BigInt base_index = 1;
  std::optional<BigInt> total_index;  // base_index - k when k is present
};

// Edges (b_i, -n_i) and (0,...,0,1); maximal cones lift base cones and add the
// fibre edge.
Fan line_bundle_fan(const Fan& base, const LineBundleSpec& spec);

struct BundleData {
  Fan fan;
  MomentPolytope polytope;
  LineBundleSpec spec;
};

// n_i = k * lambda_i for a monotone-normalized base; NotMonotone unless
// 1 <= k <= index - 1.
BundleData nlb_from_k(const Fan& base, const MomentPolytope& base_polytope, const BigInt& k);

// Index of the base polytope when c1 = index * [omega] on the relation
// lattice; NotMonotone otherwise.
BigInt monotone_index(const Fan& fan, const MomentPolytope& polytope);

struct BlowupResult {
  Fan fan;
  MomentPolytope polytope;
  std::size_t new_edge = 0;
  // Set when epsilon differs from |I| - 1, the monotone value for lambda = -1
  // data.
  std::vector<std::string> warnings;
};

BlowupResult blowup_face(const Fan& fan, const MomentPolytope& polytope, const IndexSet& face,
                         const BigRational& epsilon);
BlowupResult blowup_point(const Fan& fan, const MomentPolytope& polytope, std::size_t cone,
                          const BigRational& epsilon);

}  // namespace torfan
