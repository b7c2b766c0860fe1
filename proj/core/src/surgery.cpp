#include "torfan/surgery.hpp"

#include <algorithm>
#include <optional>

#include "torfan/error.hpp"

namespace torfan {

Fan line_bundle_fan(const Fan& base, const LineBundleSpec& spec) {
  if (spec.degrees.size() != base.edges.size())
    fail(ErrorKind::DimensionMismatch, "one bundle degree per base edge expected");
  Fan e;
  e.rank = base.rank + 1;
  for (std::size_t i = 0; i < base.edges.size(); ++i) {
    LatticeVector v = base.edges[i];
    v.push_back(-spec.degrees[i]);
    e.edges.push_back(v);
  }
  LatticeVector fibre(e.rank, 0);
  fibre.back() = 1;
  e.edges.push_back(fibre);
  for (auto cone : base.max_cones) {
    cone.push_back(base.edges.size());
    e.max_cones.push_back(cone);
  }
  return e;
}

BigInt monotone_index(const Fan& fan, const MomentPolytope& polytope) {
  // c1 = index * [omega] on every relation; the ratio is read off the first
  // relation with nonzero area.
  std::optional<BigRational> ratio;
  const auto relations = relation_lattice(fan);
  for (const auto& m : relations) {
    CurveClass cls = relation_class(fan, m, polytope.lambdas);
    if (cls.omega != 0 && !ratio) ratio = BigRational(cls.c1) / cls.omega;
  }
  if (!ratio || *ratio <= 0 || ratio->get_den() != 1)
    fail(ErrorKind::NotMonotone, "c1 is not a positive integer multiple of [omega]");
  for (const auto& m : relations) {
    CurveClass cls = relation_class(fan, m, polytope.lambdas);
    if (BigRational(cls.c1) != *ratio * cls.omega)
      fail(ErrorKind::NotMonotone, "c1 is not " + to_string(*ratio) + " times [omega]");
  }
  return ratio->get_num();
}

BundleData nlb_from_k(const Fan& base, const MomentPolytope& base_polytope, const BigInt& k) {
  BigInt index = monotone_index(base, base_polytope);
  if (k < 1 || k > index - 1)
    fail(ErrorKind::NotMonotone, "k = " + to_string(k) + " outside 1.." + to_string(BigInt(index - 1)));
  LineBundleSpec spec;
  spec.k = k;
  spec.base_index = index;
  spec.total_index = index - k;
  for (const auto& l : base_polytope.lambdas) {
    BigRational n = l * BigRational(k);
    if (n.get_den() != 1) fail(ErrorKind::InvalidArgument, "base support numbers must be integral");
    spec.degrees.push_back(n.get_num());
  }
  BundleData out{line_bundle_fan(base, spec), {}, spec};
  out.polytope.rank = out.fan.rank;
  out.polytope.edges = out.fan.edges;
  out.polytope.lambdas = base_polytope.lambdas;
  out.polytope.lambdas.push_back(0);
  // c1(E) = sum n_i x_i must equal -(k/index) sum x_i modulo linear relations,
  // i.e. their difference pairs to zero with every relation of the total fan.
  for (const auto& m : relation_lattice(out.fan)) {
    BigRational s = 0;
    for (std::size_t i = 0; i < spec.degrees.size(); ++i)
      s += (BigRational(spec.degrees[i]) + BigRational(k) / BigRational(index)) * BigRational(m[i]);
    if (s != 0) fail(ErrorKind::NotMonotone, "bundle degrees do not give c1(E) = -k[omega]");
  }
  return out;
}

BlowupResult blowup_face(const Fan& fan, const MomentPolytope& polytope, const IndexSet& face_in,
                         const BigRational& epsilon) {
  IndexSet face = face_in;
  std::sort(face.begin(), face.end());
  if (face.size() < 2) fail(ErrorKind::NotAFace, "blow-up centre needs at least two facets");
  if (std::adjacent_find(face.begin(), face.end()) != face.end())
    fail(ErrorKind::NotAFace, "repeated facet index");
  if (!is_face(fan, face)) fail(ErrorKind::NotAFace, "the facets do not span a cone of the fan");
  if (epsilon <= 0) fail(ErrorKind::InvalidArgument, "epsilon must be positive");

  BlowupResult out;
  out.polytope = chop(polytope, face, epsilon);
  out.fan.rank = fan.rank;
  out.fan.edges = fan.edges;
  out.fan.edges.push_back(out.polytope.edges.back());
  out.new_edge = fan.edges.size();
  for (const auto& cone : fan.max_cones) {
    if (!std::includes(cone.begin(), cone.end(), face.begin(), face.end())) {
      out.fan.max_cones.push_back(cone);
      continue;
    }
    for (auto drop : face) {
      IndexSet c;
      for (auto i : cone)
        if (i != drop) c.push_back(i);
      c.push_back(out.new_edge);
      out.fan.max_cones.push_back(c);
    }
  }
  if (epsilon != BigRational(static_cast<long>(face.size()) - 1))
    out.warnings.push_back("epsilon differs from the monotone value " + std::to_string(face.size() - 1));
  return out;
}

BlowupResult blowup_point(const Fan& fan, const MomentPolytope& polytope, std::size_t cone,
                          const BigRational& epsilon) {
  if (cone >= fan.max_cones.size()) fail(ErrorKind::InvalidArgument, "cone index out of range");
  if (fan.max_cones[cone].size() != fan.rank)
    fail(ErrorKind::NotAFace, "a fixed point needs a full-dimensional cone");
  return blowup_face(fan, polytope, fan.max_cones[cone], epsilon);
}

}  // namespace torfan
