#pragma once

#include <optional>

#include "torfan/rational_matrix.hpp"

namespace torfan {

// Exact phase-one simplex (Bland's rule): a point x >= 0 with A x = b, or
// nullopt when none exists.
std::optional<RationalVector> nonnegative_solution(const RationalMatrix& a, const RationalVector& b);

}  // namespace torfan
