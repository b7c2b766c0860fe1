#include "torfan/superpotential.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include <Eigen/Dense>

#include "torfan/complex_eigen.hpp"
#include "torfan/error.hpp"

namespace torfan {

namespace {

using Complex = std::complex<double>;
constexpr double kPi = 3.14159265358979323846;

Complex monomial_value(const LatticeVector& e, const std::vector<Complex>& z) {
  Complex v = 1.0;
  for (std::size_t j = 0; j < e.size(); ++j) {
    long p = e[j].get_si();
    if (p != 0) v *= std::pow(z[j], static_cast<int>(p));
  }
  return v;
}

std::vector<double> to_doubles(const std::vector<BigRational>& v) {
  std::vector<double> out;
  for (const auto& q : v) out.push_back(q.get_d());
  return out;
}

BigRational rational_power(const BigRational& base, const BigRational& exponent) {
  if (exponent == 0 || base == 1) return 1;
  if (exponent.get_den() != 1) fail(ErrorKind::InvalidArgument, "fractional power of t needs t = 1");
  long e = exponent.get_num().get_si();
  BigRational b = e < 0 ? BigRational(1) / base : base;
  BigRational r = 1;
  for (long i = 0; i < std::labs(e); ++i) r *= b;
  return r;
}

// log-coordinate gradient and Hessian: g_j = sum a_i e_ij z^e_i.
void log_derivatives(const Superpotential& w, const std::vector<double>& a, const std::vector<Complex>& z,
                     Eigen::VectorXcd& g, Eigen::MatrixXcd& h) {
  const auto n = static_cast<Eigen::Index>(w.rank);
  g = Eigen::VectorXcd::Zero(n);
  h = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t i = 0; i < w.terms.size(); ++i) {
    Complex v = a[i] * monomial_value(w.terms[i].edge, z);
    for (Eigen::Index j = 0; j < n; ++j) {
      double ej = w.terms[i].edge[static_cast<std::size_t>(j)].get_d();
      g(j) += ej * v;
      for (Eigen::Index k = 0; k < n; ++k) h(j, k) += ej * w.terms[i].edge[static_cast<std::size_t>(k)].get_d() * v;
    }
  }
}

double term_scale(const Superpotential& w, const std::vector<double>& a, const std::vector<Complex>& z) {
  double s = 0;
  for (std::size_t i = 0; i < w.terms.size(); ++i) s += std::abs(a[i] * monomial_value(w.terms[i].edge, z));
  return std::max(1.0, s);
}

}  // namespace

std::vector<BigRational> Superpotential::coefficients(const BigRational& t_value) const {
  std::vector<BigRational> out;
  for (const auto& t : terms) {
    BigRational c = rational_power(t_value, t.t_exponent);
    if (t.s_exponent != 0.0) c *= dyadic_round(std::exp(t.s_exponent), 30);
    out.push_back(c);
  }
  return out;
}

std::string Superpotential::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    std::vector<std::string> factors;
    if (t.s_exponent != 0.0) {
      std::ostringstream s;
      s << "s^(" << t.s_exponent << ")";
      factors.push_back(s.str());
    }
    if (t.t_exponent != 0) {
      if (t.t_exponent == 1)
        factors.push_back("t");
      else if (t.t_exponent.get_den() == 1)
        factors.push_back("t^" + torfan::to_string(t.t_exponent));
      else
        factors.push_back("t^(" + torfan::to_string(t.t_exponent) + ")");
    }
    for (std::size_t j = 0; j < t.edge.size(); ++j) {
      if (t.edge[j] == 0) continue;
      std::string f = "z" + std::to_string(j + 1);
      if (t.edge[j] != 1) f += "^" + torfan::to_string(t.edge[j]);
      factors.push_back(f);
    }
    if (factors.empty()) factors.push_back("1");
    os << (i ? " + " : "");
    for (std::size_t f = 0; f < factors.size(); ++f) os << (f ? "*" : "") << factors[f];
  }
  return os.str();
}

Superpotential build_superpotential(const MomentPolytope& p, const std::optional<std::vector<double>>& twist) {
  if (twist && twist->size() != p.edges.size())
    fail(ErrorKind::DimensionMismatch, "one twist value per edge expected");
  Superpotential w;
  w.rank = p.rank;
  for (std::size_t i = 0; i < p.edges.size(); ++i)
    w.terms.push_back({p.edges[i], -p.lambdas[i], twist ? -(*twist)[i] : 0.0});
  return w;
}

std::complex<double> evaluate_w(const Superpotential& w, const std::vector<double>& a,
                                const std::vector<std::complex<double>>& z) {
  Complex s = 0;
  for (std::size_t i = 0; i < w.terms.size(); ++i) s += a[i] * monomial_value(w.terms[i].edge, z);
  return s;
}

std::vector<std::complex<double>> gradient_w(const Superpotential& w, const std::vector<double>& a,
                                             const std::vector<std::complex<double>>& z) {
  Eigen::VectorXcd g;
  Eigen::MatrixXcd h;
  log_derivatives(w, a, z, g, h);
  std::vector<Complex> out(w.rank);
  for (std::size_t j = 0; j < w.rank; ++j) out[j] = g(static_cast<Eigen::Index>(j)) / z[j];
  return out;
}

JacAlgebra jacobian_ring(const Superpotential& w, const BigRational& t_value) {
  return jacobian_ring_with_coefficients(w, w.coefficients(t_value));
}

JacAlgebra jacobian_ring_with_coefficients(const Superpotential& w, const std::vector<BigRational>& a) {
  if (a.size() != w.terms.size()) fail(ErrorKind::DimensionMismatch, "one coefficient per term expected");
  const std::size_t n = w.rank;
  std::vector<std::string> names;
  for (std::size_t j = 0; j < n; ++j) names.push_back("z" + std::to_string(j + 1));
  names.push_back("u");
  RingPtr ring = make_ring(names);
  // z^e = u^d z^(e + d) with d large enough to clear negative exponents.
  std::vector<Polynomial> images;
  for (const auto& t : w.terms) {
    long d = 0;
    for (const auto& c : t.edge) d = std::max(d, -c.get_si());
    Monomial m(n + 1);
    for (std::size_t j = 0; j < n; ++j) m[j] = static_cast<Exponent>(t.edge[j].get_si() + d);
    m[n] = static_cast<Exponent>(d);
    images.push_back(Polynomial::monomial(ring, m));
  }
  std::vector<Polynomial> gens;
  for (std::size_t j = 0; j < n; ++j) {
    Polynomial g(ring);
    for (std::size_t i = 0; i < w.terms.size(); ++i)
      if (w.terms[i].edge[j] != 0) g += images[i] * (a[i] * BigRational(w.terms[i].edge[j]));
    gens.push_back(g);
  }
  Monomial all(n + 1);
  for (std::size_t j = 0; j <= n; ++j) all[j] = 1;
  gens.push_back(Polynomial::monomial(ring, all) - Polynomial::constant(ring, 1));
  gens.erase(std::remove_if(gens.begin(), gens.end(), [](const Polynomial& p) { return p.is_zero(); }), gens.end());
  JacAlgebra jac{quotient_algebra(groebner_basis(ring, gens)), {}, a};
  Polynomial wp(ring);
  for (std::size_t i = 0; i < w.terms.size(); ++i) wp += images[i] * a[i];
  jac.w_matrix = jac.algebra.mult_matrix(wp);
  return jac;
}

std::vector<CriticalPoint> critical_points(const Superpotential& w, const BigRational& t_value, std::uint64_t seed) {
  return critical_points(w, jacobian_ring(w, t_value), seed);
}

std::vector<CriticalPoint> critical_points(const Superpotential& w, const JacAlgebra& jac, std::uint64_t seed) {
  const std::size_t n = w.rank;
  const std::size_t dim = jac.algebra.dimension();
  std::vector<CriticalPoint> out;
  if (dim == 0) return out;
  const std::vector<double> a = to_doubles(jac.coefficients);
  std::vector<ComplexMatrix> mz;
  for (std::size_t j = 0; j < n; ++j) mz.push_back(jac.algebra.mult_matrices[j].to_complex().transpose());

  // Left eigenvectors of a random combination: w M_f = f(p) w at each point p.
  SeededUniform rng(seed);
  EigenDecomposition eig;
  std::vector<std::vector<std::size_t>> groups;
  for (int attempt = 0; attempt < 8; ++attempt) {
    ComplexMatrix combo = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t j = 0; j < n; ++j) combo += (0.25 + rng.next()) * mz[j];
    eig = complex_eigen(combo);
    groups = cluster_values(eig.values, 1e-6);
    double closest = 1e300, scale = 1.0;
    for (auto v : eig.values) scale = std::max(scale, std::abs(v));
    for (std::size_t g = 0; g < groups.size(); ++g)
      for (std::size_t h = g + 1; h < groups.size(); ++h)
        closest = std::min(closest, std::abs(eig.values[groups[g][0]] - eig.values[groups[h][0]]));
    if (closest > 1e-4 * scale) break;
  }

  for (const auto& group : groups) {
    CriticalPoint cp;
    cp.multiplicity = group.size();
    Eigen::VectorXcd v = eig.vectors.col(static_cast<Eigen::Index>(group[0]));
    Complex denom = v.dot(v);
    cp.coordinates.resize(n);
    for (std::size_t j = 0; j < n; ++j) cp.coordinates[j] = v.dot(mz[j] * v) / denom;

    // Newton polish in log coordinates, simple points only.
    auto grad_norm = [&](const std::vector<Complex>& z) {
      double s = 0;
      for (auto g : gradient_w(w, a, z)) s += std::norm(g);
      return std::sqrt(s);
    };
    if (cp.multiplicity == 1) {
      std::vector<Complex> z = cp.coordinates;
      const double start = grad_norm(z);
      for (int it = 0; it < 60; ++it) {
        Eigen::VectorXcd g;
        Eigen::MatrixXcd h;
        log_derivatives(w, a, z, g, h);
        if (g.norm() <= 1e-13 * term_scale(w, a, z)) break;
        Eigen::VectorXcd step = h.fullPivLu().solve(-g);
        for (std::size_t j = 0; j < n; ++j) z[j] *= std::exp(step(static_cast<Eigen::Index>(j)));
      }
      if (std::all_of(z.begin(), z.end(), [](Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }) &&
          grad_norm(z) <= std::max(start, 1e-12))
        cp.coordinates = z;
      else
        cp.newton_converged = false;
    }
    cp.gradient_norm = grad_norm(cp.coordinates);
    const double tol = 1e-12 * term_scale(w, a, cp.coordinates) /
                       std::max(1e-300, std::abs(*std::min_element(cp.coordinates.begin(), cp.coordinates.end(),
                                                                  [](Complex x, Complex y) { return std::abs(x) < std::abs(y); })));
    if (cp.multiplicity == 1 && cp.gradient_norm > std::max(tol, 1e-12)) cp.newton_converged = false;
    cp.value = evaluate_w(w, a, cp.coordinates);
    // Rank in log coordinates, where the Hessian is a sum of terms and is
    // measured against their size; z-coordinates scale badly when a
    // coordinate is small.
    Eigen::VectorXcd log_grad;
    Eigen::MatrixXcd log_hess;
    log_derivatives(w, a, cp.coordinates, log_grad, log_hess);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(log_hess);
    const auto& s = svd.singularValues();
    double magnitude = 0;
    for (std::size_t i = 0; i < w.terms.size(); ++i) magnitude += std::abs(a[i] * monomial_value(w.terms[i].edge, cp.coordinates));
    const double top = std::max(s.size() ? s(0) : 0.0, magnitude);
    cp.hessian_rank = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
      if (top > 0 && s(i) >= 1e-6 * top) ++cp.hessian_rank;
    // A point of multiplicity above one has Milnor number above one.
    cp.nondegenerate = cp.hessian_rank == static_cast<int>(n) && cp.multiplicity == 1;
    out.push_back(cp);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const CriticalPoint& x, const CriticalPoint& y) { return modulus_arg_less(x.value, y.value); });
  return out;
}

bool MirrorReport::holds() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const MirrorClause& c) { return c.pass; });
}

namespace {

// Laurent polynomial in t (rational exponents) and z (integer exponents).
using LaurentKey = std::pair<LatticeVector, BigRational>;
using Laurent = std::map<LaurentKey, BigRational>;

void add_to(Laurent& l, const LaurentKey& k, const BigRational& c) {
  BigRational& slot = l[k];
  slot += c;
  if (slot == 0) l.erase(k);
}

bool match_nonzero(std::vector<Complex> a, std::vector<Complex> b, double tol, double& worst) {
  auto nz = [](std::vector<Complex>& v) {
    v.erase(std::remove_if(v.begin(), v.end(), [](Complex c) { return std::abs(c) <= 1e-9; }), v.end());
  };
  nz(a);
  nz(b);
  worst = 0;
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (auto x : a) {
    std::size_t best = b.size();
    double d = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      double e = std::abs(x - b[j]) / std::max(1.0, std::abs(x));
      if (best == b.size() || e < d) {
        best = j;
        d = e;
      }
    }
    used[best] = true;
    worst = std::max(worst, d);
  }
  return worst <= tol;
}

}  // namespace

MirrorReport mirror_check(const Presentation& pres, const QuotientAlgebra& a_side, const MomentPolytope& polytope,
                          const Superpotential& w, const JacAlgebra& jac) {
  MirrorReport rep;
  const std::size_t r = polytope.edges.size();
  if (w.terms.size() != r) fail(ErrorKind::DimensionMismatch, "superpotential and polytope differ in edge count");

  {
    MirrorClause c{"qsr relations map to monomial identities", true, ""};
    for (const auto& rel : pres.primitive_relations) {
      LatticeVector lz(w.rank, 0), rz(w.rank, 0);
      BigRational lt = 0, rt = BigRational(rel.curve.c1) / BigRational(pres.index);
      for (auto i : rel.primitive) {
        for (std::size_t j = 0; j < w.rank; ++j) lz[j] += w.terms[i].edge[j];
        lt += w.terms[i].t_exponent;
      }
      for (std::size_t q = 0; q < rel.targets.size(); ++q) {
        const auto& term = w.terms[rel.targets[q]];
        for (std::size_t j = 0; j < w.rank; ++j) rz[j] += rel.multiplicities[q] * term.edge[j];
        rt += BigRational(rel.multiplicities[q]) * term.t_exponent;
      }
      if (lz != rz || lt != rt) {
        c.pass = false;
        c.detail += "relation over " + std::to_string(rel.primitive.size()) + " divisors: t^" + to_string(lt) +
                    " against t^" + to_string(rt) + "; ";
      }
    }
    if (c.pass) c.detail = std::to_string(pres.primitive_relations.size()) + " relations";
    rep.clauses.push_back(c);
  }
  {
    MirrorClause c{"linear relations map to z_j dW/dz_j", true, ""};
    std::vector<Laurent> from_relations, from_w;
    for (const auto& rel : pres.linear_relations) {
      Laurent l;
      for (const auto& t : rel.terms()) {
        std::size_t i = 0;
        while (t.mono[i] == 0) ++i;
        add_to(l, {w.terms[i].edge, w.terms[i].t_exponent}, t.coeff);
      }
      from_relations.push_back(l);
    }
    for (std::size_t j = 0; j < w.rank; ++j) {
      Laurent l;
      for (const auto& t : w.terms)
        if (t.edge[j] != 0) add_to(l, {t.edge, t.t_exponent}, BigRational(t.edge[j]));
      if (!l.empty()) from_w.push_back(l);
    }
    std::sort(from_relations.begin(), from_relations.end());
    std::sort(from_w.begin(), from_w.end());
    c.pass = from_relations == from_w;
    c.detail = std::to_string(from_w.size()) + " derivatives";
    rep.clauses.push_back(c);
  }
  {
    MirrorClause c{"dimensions agree", a_side.dimension() == jac.algebra.dimension(), ""};
    c.detail = std::to_string(a_side.dimension()) + " vs " + std::to_string(jac.algebra.dimension());
    rep.clauses.push_back(c);
  }
  {
    double worst = 0;
    auto lhs = exact_spectrum(c1_operator(a_side, polytope));
    auto rhs = exact_spectrum(jac.w_matrix);
    MirrorClause c{"nonzero c1 eigenvalues equal critical values", match_nonzero(lhs, rhs, 1e-8, worst), ""};
    std::ostringstream os;
    os << "worst relative residual " << worst;
    c.detail = os.str();
    rep.clauses.push_back(c);
  }
  return rep;
}

void require_mirror(const MirrorReport& report) {
  for (const auto& c : report.clauses)
    if (!c.pass) fail(ErrorKind::MirrorMismatch, c.name + ": " + c.detail);
}

bool family_closure_check(const std::vector<std::complex<double>>& values, const BigInt& index, double tol) {
  if (index <= 1) return true;
  const Complex xi = std::polar(1.0, 2 * kPi / index.get_d());
  std::vector<bool> used(values.size(), false);
  for (auto v : values) {
    Complex target = xi * v;
    std::size_t best = values.size();
    double d = 0;
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (used[j]) continue;
      double e = std::abs(target - values[j]);
      if (best == values.size() || e < d) {
        best = j;
        d = e;
      }
    }
    if (best == values.size() || d > tol * std::max(1.0, std::abs(v))) return false;
    used[best] = true;
  }
  return true;
}

LandingReport barycentre_landing_check(const MomentPolytope& p, const BigInt& index, std::uint64_t seed) {
  LandingReport rep;
  rep.barycentre = barycentre(p, index);
  const BigRational target = BigRational(1) / BigRational(index);
  rep.exponent_identity = true;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    BigRational s = -p.lambdas[i];
    for (std::size_t j = 0; j < p.rank; ++j) s += rep.barycentre[j] * p.edges[i][j];
    if (s != target) rep.exponent_identity = false;
  }
  // Numerically: z = t^y c turns critical points of sum z^e_i into critical
  // points of W_t with value t^(1/index) W_1(c); sampled at t = 2.
  MomentPolytope flat = p;
  std::fill(flat.lambdas.begin(), flat.lambdas.end(), BigRational(0));
  Superpotential w1 = build_superpotential(flat);
  Superpotential wt = build_superpotential(p);
  const double t = 2.0;
  std::vector<double> a1(p.edges.size(), 1.0), at;
  for (const auto& term : wt.terms) at.push_back(std::pow(t, term.t_exponent.get_d()));
  const double factor = std::pow(t, target.get_d());
  for (const auto& cp : critical_points(w1, BigRational(1), seed)) {
    std::vector<Complex> z = cp.coordinates;
    for (std::size_t j = 0; j < p.rank; ++j) z[j] *= std::pow(t, rep.barycentre[j].get_d());
    Complex lhs = evaluate_w(wt, at, z);
    Complex rhs = factor * cp.value;
    rep.numeric_residual = std::max(rep.numeric_residual, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    auto g = gradient_w(wt, at, z);
    for (std::size_t j = 0; j < p.rank; ++j)
      rep.numeric_residual = std::max(rep.numeric_residual, std::abs(g[j] * z[j]) / std::max(1.0, std::abs(rhs)));
  }
  rep.holds = rep.exponent_identity && rep.numeric_residual <= 1e-8;
  return rep;
}

GalkinResult galkin_point(const Fan& fan) {
  if (in_closed_half_space(fan))
    fail(ErrorKind::HalfSpaceFan, "edges lie in a closed half-space; the minimum is not attained");
  const auto n = static_cast<Eigen::Index>(fan.rank);
  Eigen::MatrixXd e(n, static_cast<Eigen::Index>(fan.edges.size()));
  for (std::size_t i = 0; i < fan.edges.size(); ++i)
    for (Eigen::Index j = 0; j < n; ++j) e(j, static_cast<Eigen::Index>(i)) = fan.edges[i][static_cast<std::size_t>(j)].get_d();
  auto value = [&](const Eigen::VectorXd& u) { return (e.transpose() * u).array().exp().sum(); };
  Eigen::VectorXd u = Eigen::VectorXd::Zero(n);
  GalkinResult res;
  for (int it = 0; it < 200; ++it) {
    Eigen::VectorXd w = (e.transpose() * u).array().exp();
    Eigen::VectorXd g = e * w;
    Eigen::MatrixXd h = e * w.asDiagonal() * e.transpose();
    res.iterations = it;
    if (g.norm() <= 1e-10) break;
    Eigen::VectorXd step = h.ldlt().solve(-g);
    double alpha = 1.0, f0 = value(u), slope = g.dot(step);
    while (value(u + alpha * step) > f0 + 1e-4 * alpha * slope && alpha > 1e-12) alpha /= 2;
    u += alpha * step;
  }
  Eigen::VectorXd w = (e.transpose() * u).array().exp();
  Eigen::VectorXd g = e * w;
  Eigen::MatrixXd h = e * w.asDiagonal() * e.transpose();
  res.gradient_norm = g.norm();
  if (res.gradient_norm > 1e-10) fail(ErrorKind::NonConvergence, "damped Newton did not reach gradient 1e-10");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  res.min_hessian_eigenvalue = es.eigenvalues()(0);
  res.value = w.sum();
  for (Eigen::Index j = 0; j < n; ++j) {
    res.log_point.push_back(u(j));
    res.point.push_back(std::exp(u(j)));
  }
  return res;
}

SeparationReport perturb_and_separate(const MomentPolytope& p, std::uint64_t seed, double radius) {
  if (radius < 0) fail(ErrorKind::InvalidArgument, "radius must be non-negative");
  SeparationReport rep;
  SeededUniform rng(seed);
  for (const auto& l : p.lambdas) rep.perturbed_lambdas.push_back(l.get_d() + (2 * rng.next() - 1) * radius);
  Superpotential w = build_superpotential(p, rep.perturbed_lambdas);
  // t = 1, s = e: coefficient exp(-lambda'_i) on the dyadic grid.
  rep.coefficients = w.coefficients(1);
  JacAlgebra jac = jacobian_ring_with_coefficients(w, rep.coefficients);
  rep.dimension = jac.algebra.dimension();
  rep.points = critical_points(w, jac, seed);
  rep.morse = rep.points.size() == rep.dimension &&
              std::all_of(rep.points.begin(), rep.points.end(),
                          [](const CriticalPoint& c) { return c.nondegenerate && c.multiplicity == 1; });
  rep.min_gap = rep.points.size() > 1 ? 1e300 : 0.0;
  rep.min_abs_value = rep.points.empty() ? 0.0 : 1e300;
  for (std::size_t i = 0; i < rep.points.size(); ++i) {
    rep.min_abs_value = std::min(rep.min_abs_value, std::abs(rep.points[i].value));
    for (std::size_t j = i + 1; j < rep.points.size(); ++j)
      rep.min_gap = std::min(rep.min_gap, std::abs(rep.points[i].value - rep.points[j].value));
  }
  // Repeated values inside one multiple point count as a collision.
  bool repeated = std::any_of(rep.points.begin(), rep.points.end(), [](const CriticalPoint& c) { return c.multiplicity > 1; });
  if (repeated) rep.min_gap = 0;
  rep.separated = rep.morse && (rep.points.size() < 2 || rep.min_gap >= 1e-9) && rep.min_abs_value > 1e-9;
  if (radius > 0 && !rep.separated)
    fail(ErrorKind::SeparationFailed, "perturbed critical values are not separated; retry with another seed");
  return rep;
}

}  // namespace torfan
