#include "torfan_cli/commands.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "torfan/complex_eigen.hpp"
#include "torfan/error.hpp"
#include "torfan/jordan.hpp"
#include "torfan/perturbation.hpp"
#include "torfan/polytope.hpp"
#include "torfan/quantum.hpp"
#include "torfan/superpotential.hpp"
#include "torfan/surgery.hpp"
#include "torfan/univariate.hpp"
#include "torfan_cli/document.hpp"

namespace torfan::cli {

using nlohmann::json;

namespace {

json complex_json(std::complex<double> z) {
  // Signed zeros would make otherwise identical reports differ.
  double re = z.real() == 0.0 ? 0.0 : z.real();
  double im = z.imag() == 0.0 ? 0.0 : z.imag();
  return json::array({re, im});
}

json complex_list(std::vector<std::complex<double>> values) {
  sort_by_modulus_then_arg(values);
  json out = json::array();
  for (auto v : values) out.push_back(complex_json(v));
  return out;
}

json rational_list(const std::vector<BigRational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

json index_list(const IndexSet& set) {
  json out = json::array();
  for (auto i : set) out.push_back(i + 1);
  return out;
}

json polynomial_list(const std::vector<Polynomial>& polys) {
  json out = json::array();
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

json spectrum_json(const RationalMatrix& m) {
  json out;
  if (m.rows() == 0) {
    out["characteristic"] = "1";
    out["minimal"] = "1";
    out["eigenvalues"] = json::array();
    out["jordan"] = json::array();
    return out;
  }
  auto cm = char_min_poly(m);
  out["characteristic"] = cm.characteristic.to_string();
  out["minimal"] = cm.minimal.to_string();
  out["eigenvalues"] = complex_list(exact_spectrum(m));
  json jordan = json::array();
  for (const auto& e : jordan_profile(m).entries) jordan.push_back({{"factor", e.factor.to_string("X")}, {"blocks", e.block_sizes}});
  out["jordan"] = jordan;
  return out;
}

json document_json(const Fan& fan, const MomentPolytope& polytope) {
  FanDocument doc;
  doc.fan = fan;
  doc.polytope = polytope;
  return fan_document_json(doc);
}

// The space a fan document describes once its bundle and blow-up are applied.
struct Target {
  Fan fan;
  MomentPolytope polytope;
  PresentationMode mode = PresentationMode::compact;
  std::optional<BundleData> bundle;
  std::optional<BlowupResult> blowup;
  Fan base_fan;
  MomentPolytope base_polytope;
  std::optional<std::vector<double>> twist;
};

Target resolve(const FanDocument& doc, const CommandOptions& options) {
  Target t;
  t.fan = t.base_fan = doc.fan;
  t.polytope = t.base_polytope = doc.polytope;
  t.twist = doc.twist;
  std::optional<BundleOption> bundle = doc.bundle;
  if (options.k) bundle = BundleOption{options.k, {}};
  if (bundle) {
    if (bundle->k) {
      t.bundle = nlb_from_k(doc.fan, doc.polytope, *bundle->k);
    } else {
      LineBundleSpec spec;
      spec.degrees = bundle->degrees;
      BundleData data;
      data.fan = line_bundle_fan(doc.fan, spec);
      data.polytope.rank = data.fan.rank;
      data.polytope.edges = data.fan.edges;
      data.polytope.lambdas = doc.polytope.lambdas;
      data.polytope.lambdas.push_back(0);
      data.spec = spec;
      t.bundle = data;
    }
    t.fan = t.bundle->fan;
    t.polytope = t.bundle->polytope;
    t.mode = PresentationMode::nlb;
    t.twist.reset();
  }
  std::optional<BlowupOption> blowup = doc.blowup;
  if (options.epsilon) {
    if (!blowup) blowup = BlowupOption{t.fan.max_cones.front(), 0};
    blowup->epsilon = *options.epsilon;
  }
  if (blowup) {
    t.blowup = blowup_face(t.fan, t.polytope, blowup->face, blowup->epsilon);
    t.fan = t.blowup->fan;
    t.polytope = t.blowup->polytope;
    t.mode = PresentationMode::blowup;
    t.twist.reset();
  }
  return t;
}

QhResult presentation_of(const Target& t) { return qh_presentation(t.fan, t.polytope, t.mode); }

json presentation_json(const QhResult& qh, bool t_symbolic) {
  const Presentation& p = qh.presentation;
  json out;
  out["mode"] = mode_name(p.mode);
  out["index"] = to_string(p.index);
  json linear = json::array(), qsr = json::array();
  for (const auto& r : p.linear_relations) linear.push_back(p.render(r));
  for (const auto& r : p.qsr_relations) qsr.push_back(p.render(r));
  out["linear_relations"] = linear;
  out["qsr_relations"] = qsr;
  json primitive = json::array();
  for (const auto& r : p.primitive_relations)
    primitive.push_back({{"collection", index_list(r.primitive)},
                         {"targets", index_list(r.targets)},
                         {"c1", to_string(r.curve.c1)},
                         {"omega", to_string(r.curve.omega)}});
  out["primitive_relations"] = primitive;
  if (t_symbolic) {
    json gb = json::array();
    for (const auto& g : p.symbolic_ideal().generators) gb.push_back(p.render(g));
    out["groebner_basis"] = gb;
  } else {
    out["groebner_basis"] = polynomial_list(qh.algebra.groebner.generators);
  }
  out["dimension"] = qh.algebra.dimension();
  json basis = json::array();
  for (const auto& m : qh.algebra.basis) basis.push_back(monomial_to_string(*qh.algebra.ring(), m));
  out["basis"] = basis;
  return out;
}

Report cmd_validate(const FanDocument& doc, const CommandOptions& options) {
  Target t = resolve(doc, options);
  Report r;
  FanReport fr = validate_fan(t.fan);
  r.results["smooth"] = fr.smooth;
  r.results["complete"] = fr.complete;
  if (!fr.notes.empty()) r.results["notes"] = fr.notes;
  r.results["edges"] = t.fan.edges.size();
  r.results["max_cones"] = t.fan.max_cones.size();
  r.results["fano_index"] = to_string(fano_index(t.fan));
  json prim = json::array();
  for (const auto& c : primitive_collections(t.fan)) prim.push_back(index_list(c));
  r.results["primitive_collections"] = prim;
  r.results["half_space"] = in_closed_half_space(t.fan);
  const bool bounded = is_bounded(t.polytope);
  r.results["bounded"] = bounded;
  if (bounded) {
    VertexSet vs = vertices(t.polytope);
    json vj = json::array();
    for (const auto& v : vs.vertices) vj.push_back(rational_list(v));
    r.results["vertices"] = vj;
    r.results["reflexive"] = check_reflexive(t.polytope);
  }
  try {
    r.results["monotone_index"] = to_string(monotone_index(t.fan, t.polytope));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotMonotone) throw;
    r.results["monotone_index"] = nullptr;
  }
  r.results["document"] = document_json(t.fan, t.polytope);
  if (t.blowup) r.warnings = t.blowup->warnings;
  return r;
}

Report cmd_qh(const FanDocument& doc, const CommandOptions& options) {
  Target t = resolve(doc, options);
  QhResult qh = presentation_of(t);
  Report r;
  r.results["presentation"] = presentation_json(qh, options.t_symbolic);
  r.results["omega"] = spectrum_json(omega_operator(qh.algebra, t.polytope));
  r.results["c1"] = spectrum_json(c1_operator(qh.algebra, t.polytope));
  if (t.blowup) r.warnings = t.blowup->warnings;
  return r;
}

Report cmd_sh(const FanDocument& doc, const CommandOptions& options) {
  Target t = resolve(doc, options);
  QhResult qh = presentation_of(t);
  QuotientAlgebra sh = sh_presentation(qh.algebra, {omega_class(qh.algebra.ring(), t.polytope)});
  Report r;
  r.results["qh_dimension"] = qh.algebra.dimension();
  r.results["dimension"] = sh.dimension();
  r.results["kernel_dimension"] = qh.algebra.dimension() - sh.dimension();
  r.results["groebner_basis"] = polynomial_list(sh.groebner.generators);
  r.results["omega"] = spectrum_json(omega_operator(sh, t.polytope));
  if (t.bundle && t.bundle->spec.k && !t.blowup) {
    QhResult base = qh_presentation(t.base_fan, t.base_polytope);
    TransferReport tr = eigenvalue_transfer_check(omega_operator(base.algebra, t.base_polytope),
                                                  omega_operator(qh.algebra, t.polytope),
                                                  omega_operator(sh, t.polytope), *t.bundle->spec.k,
                                                  t.bundle->spec.base_index);
    r.results["transfer"] = {{"holds", tr.holds}, {"worst_residual", tr.worst_residual}, {"tolerance", 1e-8}};
  }
  if (t.mode == PresentationMode::compact) r.warnings.push_back("compact input: localization at omega");
  return r;
}

// The A-side algebra the superpotential is compared with.
QuotientAlgebra a_side(const Target& t, const QhResult& qh) {
  if (t.mode == PresentationMode::nlb) return sh_presentation(qh.algebra, {omega_class(qh.algebra.ring(), t.polytope)});
  return qh.algebra;
}

Report cmd_mirror(const FanDocument& doc, const CommandOptions& options) {
  Target t = resolve(doc, options);
  QhResult qh = presentation_of(t);
  QuotientAlgebra a = a_side(t, qh);
  Superpotential w = build_superpotential(t.polytope, t.twist);
  JacAlgebra jac = jacobian_ring(w);
  MirrorReport mr = mirror_check(qh.presentation, a, t.polytope, w, jac);
  Report r;
  r.results["superpotential"] = w.to_string();
  r.results["a_side"] = t.mode == PresentationMode::nlb ? "SH" : "QH";
  r.results["a_side_dimension"] = a.dimension();
  r.results["jacobian_dimension"] = jac.algebra.dimension();
  json clauses = json::array();
  for (const auto& c : mr.clauses) clauses.push_back({{"clause", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  r.results["clauses"] = clauses;
  r.results["holds"] = mr.holds();
  r.results["tolerance"] = 1e-8;
  return r;
}

json points_json(const std::vector<CriticalPoint>& points) {
  json out = json::array();
  for (const auto& p : points) {
    json coords = json::array();
    for (auto z : p.coordinates) coords.push_back(complex_json(z));
    out.push_back({{"coordinates", coords},
                   {"value", complex_json(p.value)},
                   {"hessian_rank", p.hessian_rank},
                   {"nondegenerate", p.nondegenerate},
                   {"multiplicity", p.multiplicity},
                   {"gradient_norm", p.gradient_norm}});
  }
  return out;
}

Report cmd_critical(const FanDocument& doc, const CommandOptions& options) {
  Target t = resolve(doc, options);
  Superpotential w = build_superpotential(t.polytope, t.twist);
  JacAlgebra jac = jacobian_ring(w);
  auto points = critical_points(w, jac, options.seed);
  Report r;
  r.results["superpotential"] = w.to_string();
  r.results["jacobian_dimension"] = jac.algebra.dimension();
  r.results["seed"] = options.seed;
  r.results["points"] = points_json(points);
  std::vector<std::complex<double>> values;
  for (const auto& p : points)
    for (std::size_t i = 0; i < p.multiplicity; ++i) values.push_back(p.value);
  r.results["values"] = complex_list(values);
  r.results["tolerance"] = 1e-8;
  return r;
}

Report cmd_galkin(const FanDocument& doc, const CommandOptions& options) {
  Target t = resolve(doc, options);
  GalkinResult g = galkin_point(t.fan);
  Report r;
  r.results["point"] = g.point;
  r.results["log_point"] = g.log_point;
  r.results["value"] = g.value;
  r.results["gradient_norm"] = g.gradient_norm;
  r.results["min_hessian_eigenvalue"] = g.min_hessian_eigenvalue;
  r.results["iterations"] = g.iterations;
  r.results["tolerance"] = 1e-10;
  return r;
}

BigInt index_of(const Target& t) {
  if (t.bundle && t.bundle->spec.total_index && !t.blowup) return *t.bundle->spec.total_index;
  return monotone_index(t.fan, t.polytope);
}

Report cmd_barycentre(const FanDocument& doc, const CommandOptions& options) {
  Target t = resolve(doc, options);
  BigInt index = index_of(t);
  LandingReport lr = barycentre_landing_check(t.polytope, index, options.seed);
  Report r;
  r.results["index"] = to_string(index);
  r.results["barycentre"] = rational_list(lr.barycentre);
  r.results["exponent_identity"] = lr.exponent_identity;
  r.results["numeric_residual"] = lr.numeric_residual;
  r.results["holds"] = lr.holds;
  r.results["tolerance"] = 1e-8;
  if (is_bounded(t.polytope)) r.results["reflexive"] = check_reflexive(t.polytope);
  return r;
}

Report cmd_linebundle(const FanDocument& doc, const CommandOptions& options) {
  FanDocument base = doc;
  base.blowup.reset();
  Target t = resolve(base, options);
  if (!t.bundle || !t.bundle->spec.k) fail(ErrorKind::InvalidArgument, "linebundle needs bundle.k in the document or --k");
  const BundleData& b = *t.bundle;
  QhResult qb = qh_presentation(t.base_fan, t.base_polytope);
  QhResult qe = presentation_of(t);
  QuotientAlgebra sh = sh_presentation(qe.algebra, {omega_class(qe.algebra.ring(), t.polytope)});
  RationalMatrix omega_b = omega_operator(qb.algebra, t.base_polytope);
  TransferReport tr = eigenvalue_transfer_check(omega_b, omega_operator(qe.algebra, t.polytope),
                                                omega_operator(sh, t.polytope), *b.spec.k, b.spec.base_index);
  Polynomial fiber(qe.presentation.ring);
  for (std::size_t i = 0; i < b.spec.degrees.size(); ++i)
    fiber += Polynomial::variable(qe.presentation.ring, i) * BigRational(b.spec.degrees[i]);
  PhiMap phi{*b.spec.k, fiber};
  Report r;
  r.results["k"] = to_string(*b.spec.k);
  r.results["base_index"] = to_string(b.spec.base_index);
  r.results["total_index"] = to_string(*b.spec.total_index);
  r.results["degrees"] = rational_list(std::vector<BigRational>(b.spec.degrees.begin(), b.spec.degrees.end()));
  r.results["document"] = document_json(b.fan, b.polytope);
  r.results["presentation"] = presentation_json(qe, options.t_symbolic);
  r.results["qh_dimension"] = tr.qh_dimension;
  r.results["sh_dimension"] = tr.sh_dimension;
  r.results["kernel_dimension"] = tr.zero_generalized_dimension;
  r.results["base_invariants"] = complex_list(tr.base_invariants);
  r.results["total_invariants"] = complex_list(tr.total_invariants);
  r.results["transfer_holds"] = tr.holds;
  r.results["worst_residual"] = tr.worst_residual;
  r.results["tolerance"] = 1e-8;
  r.results["phi_relations"] = phi_check(qb.presentation, qe.presentation, phi);
  r.results["phi_characteristic"] =
      phi_characteristic_check(qb.presentation, characteristic_polynomial(omega_b), qe.presentation,
                               omega_class(qe.presentation.classical_ring, t.polytope), phi);
  return r;
}

Report cmd_blowup(const FanDocument& doc, const CommandOptions& options) {
  if (!doc.blowup && !options.epsilon) fail(ErrorKind::InvalidArgument, "blowup needs a blowup block or --epsilon");
  Target t = resolve(doc, options);
  Target before = t;
  {
    FanDocument plain = doc;
    plain.blowup.reset();
    CommandOptions o = options;
    o.epsilon.reset();
    before = resolve(plain, o);
  }
  QhResult qh = presentation_of(t);
  Report r;
  r.results["new_edge"] = t.blowup->new_edge + 1;
  r.results["document"] = document_json(t.fan, t.polytope);
  if (is_bounded(before.polytope)) r.results["vertices_before"] = vertices(before.polytope).vertices.size();
  if (is_bounded(t.polytope)) r.results["vertices_after"] = vertices(t.polytope).vertices.size();
  r.results["presentation"] = presentation_json(qh, options.t_symbolic);
  r.warnings = t.blowup->warnings;
  return r;
}

Report cmd_separate(const FanDocument& doc, const CommandOptions& options) {
  Target t = resolve(doc, options);
  SeparationReport s = perturb_and_separate(t.polytope, options.seed);
  Report r;
  r.results["seed"] = options.seed;
  r.results["radius"] = 1e-2;
  r.results["perturbed_lambdas"] = s.perturbed_lambdas;
  r.results["coefficients"] = rational_list(s.coefficients);
  r.results["dimension"] = s.dimension;
  r.results["unperturbed_dimension"] = jacobian_ring(build_superpotential(t.polytope)).algebra.dimension();
  r.results["points"] = points_json(s.points);
  r.results["morse"] = s.morse;
  r.results["min_gap"] = s.min_gap;
  r.results["min_abs_value"] = s.min_abs_value;
  r.results["separated"] = s.separated;
  r.results["tolerance"] = 1e-9;
  return r;
}

bool semisimple_at(const MatrixFamily& family, Complex lambda, const std::vector<double>& ray) {
  try {
    derivative_spectrum(family, lambda, ray);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotSemisimple) return false;
    throw;
  }
}

Report cmd_kato(std::string_view input, const CommandOptions& options) {
  FamilyDocument doc = parse_family_document(input);
  const std::vector<double> ray = doc.ray ? *doc.ray : default_ray();
  const MatrixFamily& family = doc.family;
  Report r;
  r.results["size"] = family.size;
  r.results["ray"] = {{"first", ray.front()}, {"last", ray.back()}, {"points", ray.size()}};
  r.results["seed"] = options.seed;

  auto paths = track_eigenvalues(family, ray);
  json pj = json::array();
  for (const auto& p : paths) {
    PathProjection pp = path_projection(family, p);
    pj.push_back({{"first", complex_json(p.samples.front().second)},
                  {"last", complex_json(p.samples.back().second)},
                  {"matched", p.matched},
                  {"max_projector_norm", *std::max_element(pp.norms.begin(), pp.norms.end())},
                  {"pole_exponent", pp.exponent}});
  }
  r.results["paths"] = pj;

  auto values = eigenvalues(family.at(0.0));
  json ej = json::array();
  for (const auto& group : cluster_values(values, 1e-6)) {
    Complex lambda = 0;
    for (auto i : group) lambda += values[i];
    lambda /= static_cast<double>(group.size());
    json entry;
    entry["eigenvalue"] = complex_json(lambda);
    entry["multiplicity"] = group.size();
    TotalProjectionReport tp = total_projection_limit_check(family, lambda, ray);
    entry["total_projection"] = {{"exact_limit", tp.exact_limit},
                                 {"bounded", tp.bounded},
                                 {"converges", tp.converges},
                                 {"final_error", tp.errors.back()}};
    const bool semisimple = semisimple_at(family, lambda, ray);
    entry["semisimple"] = semisimple;
    if (semisimple) {
      entry["derivatives"] = complex_list(derivative_spectrum(family, lambda, ray));
      try {
        SemisimpleReport sr = semisimple_convergence_check(family, lambda, ray);
        entry["eigenlines_converge"] = sr.holds;
        entry["eigenspace_distance"] = sr.eigenspace_distance;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::DerivativesCollide) throw;
        r.warnings.push_back("derivatives collide at eigenvalue; eigenline convergence not checked");
      }
    }
    ej.push_back(entry);
  }
  r.results["spectrum_at_zero"] = ej;

  GevecReport g = gevec_convergence(family, ray);
  json cj = json::array();
  for (const auto& c : g.clusters) {
    json members = json::array();
    for (auto p : c.paths) members.push_back(p + 1);
    cj.push_back({{"limit_eigenvalue", complex_json(c.limit_eigenvalue)},
                  {"paths", members},
                  {"jordan_dimension", c.jordan_subspace.dimension()},
                  {"final_distance", c.distances.back()},
                  {"flag_distances", c.flag_distances},
                  {"monotone", c.monotone}});
  }
  r.results["gevec_clusters"] = cj;
  r.results["gevec_holds"] = g.holds;
  return r;
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_scalar_row(const json& v) {
  if (!v.is_object()) return false;
  return std::all_of(v.begin(), v.end(), [](const json& x) { return !x.is_object(); });
}

void render_text(std::ostringstream& os, const json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = v.begin(); it != v.end(); ++it) {
    const json& x = it.value();
    if (x.is_object()) {
      os << pad << it.key() << ":\n";
      render_text(os, x, indent + 2);
    } else if (x.is_array() && !x.empty() && std::all_of(x.begin(), x.end(), [](const json& e) { return e.is_object(); })) {
      os << pad << it.key() << ":\n";
      for (const auto& row : x) {
        if (is_scalar_row(row)) {
          os << pad << "  -";
          for (auto f = row.begin(); f != row.end(); ++f) os << ' ' << f.key() << '=' << scalar_text(f.value());
          os << '\n';
        } else {
          os << pad << "  -\n";
          render_text(os, row, indent + 4);
        }
      }
    } else if (x.is_array() && !x.empty() && std::all_of(x.begin(), x.end(), [](const json& e) { return e.is_string(); })) {
      os << pad << it.key() << ":\n";
      for (const auto& e : x) os << pad << "  " << e.get<std::string>() << '\n';
    } else {
      os << pad << it.key() << ": " << scalar_text(x) << '\n';
    }
  }
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"validate", "qh",        "sh",      "mirror",   "critical", "galkin",
                                              "barycentre", "linebundle", "blowup", "separate", "kato"};
  return names;
}

Report run_command(const std::string& command, std::string_view input, const CommandOptions& options) {
  Report r;
  if (command == "kato") {
    r = cmd_kato(input, options);
  } else {
    const FanDocument doc = parse_fan_document(input);
    if (command == "validate") r = cmd_validate(doc, options);
    else if (command == "qh") r = cmd_qh(doc, options);
    else if (command == "sh") r = cmd_sh(doc, options);
    else if (command == "mirror") r = cmd_mirror(doc, options);
    else if (command == "critical") r = cmd_critical(doc, options);
    else if (command == "galkin") r = cmd_galkin(doc, options);
    else if (command == "barycentre") r = cmd_barycentre(doc, options);
    else if (command == "linebundle") r = cmd_linebundle(doc, options);
    else if (command == "blowup") r = cmd_blowup(doc, options);
    else if (command == "separate") r = cmd_separate(doc, options);
    else fail(ErrorKind::ParseError, "unknown command '" + command + "'");
  }
  r.command = command;
  return r;
}

std::string render_report(const Report& report, Format format) {
  if (format == Format::json) {
    json out{{"command", report.command}, {"results", report.results}, {"warnings", report.warnings}};
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  os << report.command << '\n';
  render_text(os, report.results, 2);
  for (const auto& w : report.warnings) os << "warning: " << w << '\n';
  return os.str();
}

int exit_status(const std::exception& error) {
  if (const auto* e = dynamic_cast<const Error*>(&error)) {
    return e->kind() == ErrorKind::ParseError || e->kind() == ErrorKind::ValidationError ? 2 : 1;
  }
  if (dynamic_cast<const nlohmann::json::exception*>(&error)) return 2;
  return 1;
}

}  // namespace torfan::cli
