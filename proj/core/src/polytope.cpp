#include "torfan/polytope.hpp"

#include <algorithm>
#include <set>

#include "torfan/error.hpp"
#include "torfan/linear_program.hpp"

namespace torfan {

namespace {

BigRational pairing(const RationalVector& y, const LatticeVector& e) {
  BigRational s = 0;
  for (std::size_t i = 0; i < y.size(); ++i) s += y[i] * e[i];
  return s;
}

void check_shape(const MomentPolytope& p) {
  if (p.edges.size() != p.lambdas.size())
    fail(ErrorKind::DimensionMismatch, "one support number per edge expected");
  for (const auto& e : p.edges)
    if (e.size() != p.rank) fail(ErrorKind::DimensionMismatch, "edge length differs from rank");
}

bool feasible(const MomentPolytope& p) {
  // y = y+ - y-, <y, e_i> - s_i = lambda_i with y+, y-, s >= 0
  const std::size_t m = p.edges.size(), n = p.rank;
  RationalMatrix a(m, 2 * n + m);
  RationalVector b(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = BigRational(p.edges[i][j]);
      a(i, n + j) = -BigRational(p.edges[i][j]);
    }
    a(i, 2 * n + i) = -1;
    b[i] = p.lambdas[i];
  }
  return nonnegative_solution(a, b).has_value();
}

Fan normal_fan_shell(const MomentPolytope& p) {
  Fan f;
  f.rank = p.rank;
  f.edges = p.edges;
  return f;
}

}  // namespace

VertexSet vertices(const MomentPolytope& p) {
  check_shape(p);
  if (!feasible(p)) fail(ErrorKind::Empty, "the inequality system is infeasible");
  const std::size_t m = p.edges.size(), n = p.rank;
  VertexSet out;
  std::set<RationalVector> seen;
  if (m < n) return out;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(n), true);
  do {
    IndexSet rows;
    for (std::size_t i = 0; i < m; ++i)
      if (pick[i]) rows.push_back(i);
    RationalMatrix a(n, n);
    RationalVector b(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t j = 0; j < n; ++j) a(r, j) = BigRational(p.edges[rows[r]][j]);
      b[r] = p.lambdas[rows[r]];
    }
    if (a.rank() < n) continue;
    RationalVector y = *a.solve(b);
    bool ok = true;
    IndexSet tight;
    for (std::size_t i = 0; i < m && ok; ++i) {
      BigRational s = pairing(y, p.edges[i]);
      if (s < p.lambdas[i]) ok = false;
      if (s == p.lambdas[i]) tight.push_back(i);
    }
    if (!ok || !seen.insert(y).second) continue;
    out.vertices.push_back(y);
    out.incidence.push_back(tight);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

bool is_bounded(const MomentPolytope& p) {
  check_shape(p);
  return !in_closed_half_space(normal_fan_shell(p));
}

std::vector<LatticeVector> interior_lattice_points(const MomentPolytope& p) {
  if (!is_bounded(p)) fail(ErrorKind::Unbounded, "polytope is unbounded");
  VertexSet vs = vertices(p);
  const std::size_t n = p.rank;
  std::vector<BigInt> lo(n), hi(n);
  for (std::size_t j = 0; j < n; ++j) {
    BigRational mn = vs.vertices[0][j], mx = vs.vertices[0][j];
    for (const auto& v : vs.vertices) {
      mn = std::min(mn, v[j]);
      mx = std::max(mx, v[j]);
    }
    mpz_cdiv_q(lo[j].get_mpz_t(), mn.get_num_mpz_t(), mn.get_den_mpz_t());
    mpz_fdiv_q(hi[j].get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
  }
  std::vector<LatticeVector> out;
  LatticeVector y = lo;
  if (std::any_of(lo.begin(), lo.end(), [&, j = std::size_t{0}](const BigInt& l) mutable { return l > hi[j++]; }))
    return out;
  while (true) {
    bool inside = true;
    for (std::size_t i = 0; i < p.edges.size() && inside; ++i) {
      BigRational s = 0;
      for (std::size_t j = 0; j < n; ++j) s += BigRational(y[j] * p.edges[i][j]);
      inside = s > p.lambdas[i];
    }
    if (inside) out.push_back(y);
    std::size_t j = 0;
    while (j < n && y[j] == hi[j]) {
      y[j] = lo[j];
      ++j;
    }
    if (j == n) break;
    ++y[j];
  }
  return out;
}

bool check_reflexive(const MomentPolytope& p) {
  if (!is_bounded(p)) fail(ErrorKind::Unbounded, "reflexivity needs a bounded polytope");
  if (std::any_of(p.lambdas.begin(), p.lambdas.end(), [](const BigRational& l) { return l != -1; })) return false;
  for (const auto& v : vertices(p).vertices)
    for (const auto& c : v)
      if (c.get_den() != 1) return false;
  auto pts = interior_lattice_points(p);
  return pts.size() == 1 && std::all_of(pts[0].begin(), pts[0].end(), [](const BigInt& c) { return c == 0; });
}

NormalizedPolytope normalize_monotone(const MomentPolytope& p, const RationalVector& vertex) {
  check_shape(p);
  if (vertex.size() != p.rank) fail(ErrorKind::DimensionMismatch, "vertex length differs from rank");
  MomentPolytope shifted = p;
  for (std::size_t i = 0; i < p.edges.size(); ++i) shifted.lambdas[i] -= pairing(vertex, p.edges[i]);
  bool is_vertex = false;
  VertexSet vs = vertices(shifted);
  BigInt g = 0;
  for (const auto& v : vs.vertices) {
    if (std::all_of(v.begin(), v.end(), [](const BigRational& c) { return c == 0; })) is_vertex = true;
    for (const auto& c : v) {
      if (c.get_den() != 1) fail(ErrorKind::DivisibilityFails, "translated polytope has a non-integral vertex");
      g = gcd(g, c.get_num());
    }
  }
  if (!is_vertex) fail(ErrorKind::InvalidArgument, "the given point is not a vertex");
  for (const auto& l : shifted.lambdas) {
    if (l.get_den() != 1) fail(ErrorKind::DivisibilityFails, "translated support numbers are not integral");
    g = gcd(g, l.get_num());
  }
  if (g == 0) g = 1;
  for (auto& l : shifted.lambdas) l /= BigRational(g);
  return {shifted, g};
}

RationalVector barycentre(const MomentPolytope& p, const BigInt& index) {
  check_shape(p);
  if (index <= 0) fail(ErrorKind::InvalidArgument, "index must be positive");
  RationalMatrix a(p.edges.size(), p.rank);
  RationalVector b(p.edges.size());
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    for (std::size_t j = 0; j < p.rank; ++j) a(i, j) = BigRational(p.edges[i][j]);
    b[i] = p.lambdas[i] + BigRational(1) / BigRational(index);
  }
  if (a.rank() < p.rank) fail(ErrorKind::Inconsistent, "edges do not determine a unique point");
  auto y = a.solve(b);
  if (!y) fail(ErrorKind::Inconsistent, "<y, e_i> = lambda_i + 1/index has no common solution");
  return *y;
}

MomentPolytope chop(const MomentPolytope& p, const IndexSet& face, const BigRational& epsilon) {
  check_shape(p);
  if (face.empty()) fail(ErrorKind::InvalidArgument, "chop needs at least one facet");
  if (epsilon <= 0) fail(ErrorKind::InvalidArgument, "epsilon must be positive");
  LatticeVector e0(p.rank, 0);
  BigRational l0 = epsilon;
  for (auto i : face) {
    if (i >= p.edges.size()) fail(ErrorKind::InvalidArgument, "facet index out of range");
    for (std::size_t j = 0; j < p.rank; ++j) e0[j] += p.edges[i][j];
    l0 += p.lambdas[i];
  }
  VertexSet vs = vertices(p);
  bool face_has_vertex = false;
  for (std::size_t v = 0; v < vs.vertices.size(); ++v) {
    const auto& inc = vs.incidence[v];
    bool on_face = std::includes(inc.begin(), inc.end(), face.begin(), face.end());
    if (on_face) {
      face_has_vertex = true;
      continue;
    }
    if (pairing(vs.vertices[v], e0) <= l0)
      fail(ErrorKind::ChopTooDeep, "the new facet reaches a vertex off the chopped face");
  }
  if (!face_has_vertex) fail(ErrorKind::NotAFace, "the facets do not meet in a face with vertices");
  MomentPolytope out = p;
  out.edges.push_back(e0);
  out.lambdas.push_back(l0);
  return out;
}

}  // namespace torfan
