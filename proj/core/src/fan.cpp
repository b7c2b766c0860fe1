#include "torfan/fan.hpp"

#include <algorithm>
#include <numeric>
#include <map>
#include <set>
#include <sstream>

#include "torfan/error.hpp"
#include "torfan/linear_program.hpp"

namespace torfan {

namespace {

std::string set_string(const IndexSet& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i] + 1;
  os << "}";
  return os.str();
}

RationalMatrix cone_matrix(const Fan& fan, const IndexSet& cone) {
  RationalMatrix m(fan.rank, cone.size());
  for (std::size_t j = 0; j < cone.size(); ++j)
    for (std::size_t i = 0; i < fan.rank; ++i) m(i, j) = BigRational(fan.edges[cone[j]][i]);
  return m;
}

// gcd of all k x k minors of the rank x k matrix; 1 means the columns extend
// to a lattice basis.
BigInt minor_gcd(const RationalMatrix& m) {
  const std::size_t n = m.rows(), k = m.cols();
  if (k == 0) return 1;
  BigInt g = 0;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    RationalMatrix sub(k, k);
    std::size_t r = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!pick[i]) continue;
      for (std::size_t j = 0; j < k; ++j) sub(r, j) = m(i, j);
      ++r;
    }
    g = gcd(g, sub.determinant().get_num());
    if (g == 1) break;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return g;
}

// Do cones a and b meet outside the cone on their common edges?
bool overlap_beyond_face(const Fan& fan, const IndexSet& a, const IndexSet& b) {
  IndexSet only_a;
  for (auto i : a)
    if (!std::binary_search(b.begin(), b.end(), i)) only_a.push_back(i);
  if (only_a.empty()) return false;
  // sum_a alpha_i e_i - sum_b beta_j e_j = 0, sum over only_a alpha = 1
  const std::size_t cols = a.size() + b.size();
  RationalMatrix m(fan.rank + 1, cols);
  RationalVector rhs(fan.rank + 1);
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (std::size_t i = 0; i < fan.rank; ++i) m(i, j) = BigRational(fan.edges[a[j]][i]);
    if (std::find(only_a.begin(), only_a.end(), a[j]) != only_a.end()) m(fan.rank, j) = 1;
  }
  for (std::size_t j = 0; j < b.size(); ++j)
    for (std::size_t i = 0; i < fan.rank; ++i) m(i, a.size() + j) = -BigRational(fan.edges[b[j]][i]);
  rhs[fan.rank] = 1;
  return nonnegative_solution(m, rhs).has_value();
}

}  // namespace

RationalMatrix edge_matrix(const Fan& fan) {
  IndexSet all(fan.edges.size());
  std::iota(all.begin(), all.end(), 0);
  return cone_matrix(fan, all);
}

bool is_face(const Fan& fan, const IndexSet& subset) {
  for (const auto& cone : fan.max_cones)
    if (std::includes(cone.begin(), cone.end(), subset.begin(), subset.end())) return true;
  return false;
}

FanReport validate_fan(const Fan& fan) {
  if (fan.rank == 0) fail(ErrorKind::InvalidFan, "rank must be positive");
  for (std::size_t i = 0; i < fan.edges.size(); ++i) {
    const auto& e = fan.edges[i];
    if (e.size() != fan.rank) fail(ErrorKind::InvalidFan, "edge " + std::to_string(i + 1) + " has wrong length");
    BigInt g = 0;
    for (const auto& c : e) g = gcd(g, c);
    if (g != 1) fail(ErrorKind::InvalidFan, "edge " + std::to_string(i + 1) + " is not primitive");
  }
  if (fan.max_cones.empty()) fail(ErrorKind::InvalidFan, "fan has no cones");
  std::vector<bool> used(fan.edges.size(), false);
  for (const auto& cone : fan.max_cones) {
    if (!std::is_sorted(cone.begin(), cone.end()) || std::adjacent_find(cone.begin(), cone.end()) != cone.end())
      fail(ErrorKind::InvalidFan, "cone " + set_string(cone) + " must list distinct sorted indices");
    for (auto i : cone) {
      if (i >= fan.edges.size()) fail(ErrorKind::InvalidFan, "cone index out of range");
      used[i] = true;
    }
    if (cone_matrix(fan, cone).rank() != cone.size())
      fail(ErrorKind::InvalidFan, "cone " + set_string(cone) + " has dependent generators");
  }
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i]) fail(ErrorKind::InvalidFan, "edge " + std::to_string(i + 1) + " lies in no cone");

  for (std::size_t a = 0; a < fan.max_cones.size(); ++a)
    for (std::size_t b = a + 1; b < fan.max_cones.size(); ++b) {
      const auto& ca = fan.max_cones[a];
      const auto& cb = fan.max_cones[b];
      if (overlap_beyond_face(fan, ca, cb) || overlap_beyond_face(fan, cb, ca))
        fail(ErrorKind::OverlappingCones, "cones " + set_string(ca) + " and " + set_string(cb) + " meet in a non-face");
    }

  FanReport report;
  report.smooth = true;
  std::ostringstream notes;
  for (const auto& cone : fan.max_cones)
    if (minor_gcd(cone_matrix(fan, cone)) != 1) {
      report.smooth = false;
      notes << "cone " << set_string(cone) << " is not unimodular; ";
    }

  // Completeness: every ridge of a full-dimensional cone is shared by exactly
  // two cones, and the cones are connected through ridges.
  bool full = std::all_of(fan.max_cones.begin(), fan.max_cones.end(),
                          [&](const IndexSet& c) { return c.size() == fan.rank; });
  bool complete = full;
  if (full) {
    std::map<IndexSet, std::vector<std::size_t>> ridges;
    for (std::size_t c = 0; c < fan.max_cones.size(); ++c)
      for (std::size_t drop = 0; drop < fan.rank; ++drop) {
        IndexSet ridge;
        for (std::size_t j = 0; j < fan.rank; ++j)
          if (j != drop) ridge.push_back(fan.max_cones[c][j]);
        ridges[ridge].push_back(c);
      }
    std::vector<std::size_t> parent(fan.max_cones.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
      while (parent[i] != i) i = parent[i] = parent[parent[i]];
      return i;
    };
    for (const auto& [ridge, owners] : ridges) {
      if (owners.size() != 2) {
        complete = false;
        continue;
      }
      parent[find(owners[0])] = find(owners[1]);
    }
    for (std::size_t c = 0; c < parent.size(); ++c)
      if (find(c) != find(0)) complete = false;
  } else {
    notes << "not every maximal cone is full-dimensional; ";
  }
  report.complete = complete;
  if (!complete) notes << "support is not all of R^" << fan.rank << "; ";
  report.notes = notes.str();
  if (!report.notes.empty()) report.notes.resize(report.notes.size() - 2);
  return report;
}

std::vector<IndexSet> primitive_collections(const Fan& fan) {
  std::set<IndexSet> faces;
  for (const auto& cone : fan.max_cones) {
    const std::size_t k = cone.size();
    for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
      IndexSet s;
      for (std::size_t j = 0; j < k; ++j)
        if (mask & (1ul << j)) s.push_back(cone[j]);
      faces.insert(s);
    }
  }
  std::vector<IndexSet> out;
  const std::size_t r = fan.edges.size();
  for (std::size_t i = 0; i < r; ++i)
    if (!faces.count({i})) out.push_back({i});
  // Candidates of size k+1 extend a face of size k by a larger index; all
  // proper subsets must be faces.
  std::vector<IndexSet> layer;
  for (std::size_t i = 0; i < r; ++i)
    if (faces.count({i})) layer.push_back({i});
  while (!layer.empty()) {
    std::vector<IndexSet> next_faces;
    for (const auto& f : layer)
      for (std::size_t j = f.back() + 1; j < r; ++j) {
        IndexSet s = f;
        s.push_back(j);
        bool subsets_faces = true;
        for (std::size_t drop = 0; drop < s.size() && subsets_faces; ++drop) {
          IndexSet sub;
          for (std::size_t q = 0; q < s.size(); ++q)
            if (q != drop) sub.push_back(s[q]);
          subsets_faces = faces.count(sub) > 0;
        }
        if (!subsets_faces) continue;
        if (faces.count(s))
          next_faces.push_back(s);
        else
          out.push_back(s);
      }
    layer = std::move(next_faces);
  }
  std::sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

CurveClass relation_class(const Fan& fan, const std::vector<BigInt>& n, const std::vector<BigRational>& lambdas) {
  if (n.size() != fan.edges.size()) fail(ErrorKind::DimensionMismatch, "one coefficient per edge expected");
  if (!lambdas.empty() && lambdas.size() != fan.edges.size())
    fail(ErrorKind::DimensionMismatch, "one support number per edge expected");
  for (std::size_t c = 0; c < fan.rank; ++c) {
    BigInt s = 0;
    for (std::size_t i = 0; i < n.size(); ++i) s += n[i] * fan.edges[i][c];
    if (s != 0) fail(ErrorKind::RelationFails, "sum n_i e_i is nonzero in coordinate " + std::to_string(c + 1));
  }
  CurveClass cls{n, 0, 0};
  for (std::size_t i = 0; i < n.size(); ++i) {
    cls.c1 += n[i];
    if (!lambdas.empty()) cls.omega -= lambdas[i] * n[i];
  }
  return cls;
}

PrimitiveRelation batyrev_decompose(const Fan& fan, const IndexSet& primitive, const std::vector<BigRational>& lambdas) {
  RationalVector v(fan.rank);
  for (auto i : primitive)
    for (std::size_t c = 0; c < fan.rank; ++c) v[c] += fan.edges[i][c];
  PrimitiveRelation rel;
  rel.primitive = primitive;
  bool located = std::all_of(v.begin(), v.end(), [](const BigRational& x) { return x == 0; });
  for (std::size_t c = 0; c < fan.max_cones.size() && !located; ++c) {
    const auto& cone = fan.max_cones[c];
    auto sol = cone_matrix(fan, cone).solve(v);
    if (!sol) continue;
    if (std::any_of(sol->begin(), sol->end(), [](const BigRational& x) { return x < 0; })) continue;
    for (std::size_t j = 0; j < cone.size(); ++j) {
      if ((*sol)[j] == 0) continue;
      if ((*sol)[j].get_den() != 1)
        fail(ErrorKind::InvalidFan, "non-integral decomposition; fan is not smooth");
      rel.targets.push_back(cone[j]);
      rel.multiplicities.push_back((*sol)[j].get_num());
    }
    located = true;
  }
  if (!located) fail(ErrorKind::NoConeContains, "sum over " + set_string(primitive) + " lies in no cone");
  std::vector<BigInt> n(fan.edges.size(), 0);
  for (auto i : primitive) n[i] += 1;
  for (std::size_t q = 0; q < rel.targets.size(); ++q) {
    if (std::binary_search(primitive.begin(), primitive.end(), rel.targets[q]))
      fail(ErrorKind::InvalidFan, "decomposition is not disjoint from the primitive set");
    n[rel.targets[q]] -= rel.multiplicities[q];
  }
  rel.curve = relation_class(fan, n, lambdas);
  return rel;
}

std::vector<std::vector<BigInt>> relation_lattice(const Fan& fan) {
  const std::size_t r = fan.edges.size();
  // Column operations on the edge matrix, mirrored on an identity matrix.
  std::vector<std::vector<BigInt>> cols(r, std::vector<BigInt>(fan.rank));
  std::vector<std::vector<BigInt>> u(r, std::vector<BigInt>(r, 0));
  for (std::size_t j = 0; j < r; ++j) {
    cols[j] = fan.edges[j];
    u[j][j] = 1;
  }
  auto axpy = [&](std::size_t dst, std::size_t src, const BigInt& f) {
    for (std::size_t i = 0; i < fan.rank; ++i) cols[dst][i] -= f * cols[src][i];
    for (std::size_t i = 0; i < r; ++i) u[dst][i] -= f * u[src][i];
  };
  std::size_t p = 0;
  for (std::size_t row = 0; row < fan.rank && p < r; ++row) {
    while (true) {
      std::size_t best = r;
      for (std::size_t j = p; j < r; ++j)
        if (cols[j][row] != 0 && (best == r || abs(cols[j][row]) < abs(cols[best][row]))) best = j;
      if (best == r) break;
      std::swap(cols[p], cols[best]);
      std::swap(u[p], u[best]);
      bool others = false;
      for (std::size_t j = p + 1; j < r; ++j) {
        if (cols[j][row] == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), cols[j][row].get_mpz_t(), cols[p][row].get_mpz_t());
        axpy(j, p, q);
        if (cols[j][row] != 0) others = true;
      }
      if (!others) {
        ++p;
        break;
      }
    }
  }
  std::vector<std::vector<BigInt>> basis(u.begin() + static_cast<long>(p), u.end());
  return basis;
}

BigInt fano_index(const Fan& fan) {
  BigInt g = 0;
  for (const auto& m : relation_lattice(fan)) {
    BigInt s = 0;
    for (const auto& x : m) s += x;
    g = gcd(g, s);
  }
  return g == 0 ? BigInt(1) : g;
}

bool in_closed_half_space(const Fan& fan) {
  RationalMatrix e = edge_matrix(fan);
  if (e.rank() < fan.rank) return true;
  // Edges positively span R^n iff some d >= 1 has sum d_i e_i = 0; write
  // d = 1 + d' with d' >= 0.
  RationalVector rhs(fan.rank);
  for (std::size_t c = 0; c < fan.rank; ++c)
    for (const auto& edge : fan.edges) rhs[c] -= edge[c];
  return !nonnegative_solution(e, rhs).has_value();
}

}  // namespace torfan
