#pragma once

#include <string>
#include <vector>

#include "torfan/rational_matrix.hpp"
#include "torfan/univariate.hpp"

namespace torfan {

struct JordanEntry {
  Univariate factor;             // monic irreducible over Q
  std::vector<int> block_sizes;  // non-increasing
};

// Rational Jordan structure: for each irreducible factor p of the
// characteristic polynomial, the sizes of the p-primary blocks.
struct JordanProfile {
  std::vector<JordanEntry> entries;
  std::size_t dimension = 0;

  // Σ deg p · Σ block sizes.
  std::size_t accounted_dimension() const;
  // Predicted rank of p(M)^k for the entry with this factor.
  std::size_t predicted_rank(std::size_t entry, unsigned k) const;
  std::string to_string() const;
};

JordanProfile jordan_profile(const RationalMatrix& m);

}  // namespace torfan
