#include "torfan/jordan.hpp"

#include <algorithm>
#include <sstream>

#include "torfan/error.hpp"

namespace torfan {

std::size_t JordanProfile::accounted_dimension() const {
  std::size_t total = 0;
  for (const auto& e : entries) {
    std::size_t blocks = 0;
    for (int s : e.block_sizes) blocks += static_cast<std::size_t>(s);
    total += static_cast<std::size_t>(e.factor.degree()) * blocks;
  }
  return total;
}

std::size_t JordanProfile::predicted_rank(std::size_t entry, unsigned k) const {
  // p(M)^k kills min(k, size) of each p-block's deg p * size dimensions
  const auto& e = entries.at(entry);
  std::size_t lost = 0;
  for (int s : e.block_sizes)
    lost += static_cast<std::size_t>(e.factor.degree()) * std::min<std::size_t>(k, static_cast<std::size_t>(s));
  return dimension - lost;
}

std::string JordanProfile::to_string() const {
  std::ostringstream os;
  for (const auto& e : entries) {
    os << "(" << e.factor.to_string("x") << "): (";
    for (std::size_t i = 0; i < e.block_sizes.size(); ++i) os << (i ? "," : "") << e.block_sizes[i];
    os << ")\n";
  }
  return os.str();
}

JordanProfile jordan_profile(const RationalMatrix& m) {
  if (!m.is_square()) fail(ErrorKind::NotSquare, "jordan_profile of a non-square matrix");
  JordanProfile profile;
  profile.dimension = m.rows();
  const Univariate chi = characteristic_polynomial(m);
  for (const auto& [p, mult] : factor_rational(chi)) {
    const RationalMatrix pm = p.evaluate(m);
    const auto deg = static_cast<std::size_t>(p.degree());
    std::vector<std::size_t> ranks{m.rows()};
    RationalMatrix power = RationalMatrix::identity(m.rows());
    const std::size_t target = m.rows() - deg * static_cast<std::size_t>(mult);
    while (ranks.back() > target) {
      power = power * pm;
      ranks.push_back(power.rank());
      if (ranks.size() > m.rows() + 1) fail(ErrorKind::InvalidArgument, "rank sequence did not stabilise");
    }
    // blocks of size >= j: (r_{j-1} - r_j) / deg
    std::vector<std::size_t> at_least;
    for (std::size_t j = 1; j < ranks.size(); ++j) at_least.push_back((ranks[j - 1] - ranks[j]) / deg);
    std::vector<int> sizes;
    for (std::size_t j = 0; j < at_least.size(); ++j) {
      std::size_t next = j + 1 < at_least.size() ? at_least[j + 1] : 0;
      for (std::size_t c = 0; c < at_least[j] - next; ++c) sizes.push_back(static_cast<int>(j + 1));
    }
    std::sort(sizes.rbegin(), sizes.rend());
    profile.entries.push_back({p, std::move(sizes)});
  }
  return profile;
}

}  // namespace torfan
