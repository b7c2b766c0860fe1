#include "torfan/univariate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "torfan/error.hpp"

namespace torfan {

Univariate::Univariate(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Univariate::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Univariate Univariate::monomial(std::size_t degree, const BigRational& c) {
  std::vector<BigRational> v(degree + 1);
  v[degree] = c;
  return Univariate(std::move(v));
}

Univariate Univariate::from_polynomial(const Polynomial& p) {
  std::vector<BigRational> v;
  for (const auto& t : p.terms()) {
    Exponent d = t.mono.degree();
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (t.mono[i] != 0 && t.mono[i] != d)
        fail(ErrorKind::InvalidArgument, "polynomial is not univariate");
    if (v.size() <= static_cast<std::size_t>(d)) v.resize(static_cast<std::size_t>(d) + 1);
    v[static_cast<std::size_t>(d)] += t.coeff;
  }
  return Univariate(std::move(v));
}

Univariate Univariate::operator+(const Univariate& o) const {
  std::vector<BigRational> v(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
  return Univariate(std::move(v));
}

Univariate Univariate::operator-(const Univariate& o) const {
  std::vector<BigRational> v(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
  return Univariate(std::move(v));
}

Univariate Univariate::operator*(const Univariate& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigRational> v(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return Univariate(std::move(v));
}

Univariate Univariate::operator*(const BigRational& c) const {
  std::vector<BigRational> v(c_);
  for (auto& x : v) x *= c;
  return Univariate(std::move(v));
}

std::pair<Univariate, Univariate> Univariate::divmod(const Univariate& o) const {
  if (o.is_zero()) fail(ErrorKind::InvalidArgument, "division by the zero polynomial");
  std::vector<BigRational> rem(c_);
  long dq = degree() - o.degree();
  if (dq < 0) return {Univariate{}, *this};
  std::vector<BigRational> q(static_cast<std::size_t>(dq) + 1);
  const BigRational& lead = o.leading();
  for (long k = dq; k >= 0; --k) {
    BigRational f = rem[static_cast<std::size_t>(k + o.degree())] / lead;
    q[static_cast<std::size_t>(k)] = f;
    if (f == 0) continue;
    for (long j = 0; j <= o.degree(); ++j)
      rem[static_cast<std::size_t>(k + j)] -= f * o.c_[static_cast<std::size_t>(j)];
  }
  return {Univariate(std::move(q)), Univariate(std::move(rem))};
}

Univariate Univariate::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigRational> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
  return Univariate(std::move(v));
}

Univariate Univariate::monic() const {
  if (is_zero()) return *this;
  return *this * (BigRational(1) / leading());
}

Univariate Univariate::pow(unsigned e) const {
  Univariate r = monomial(0);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

BigRational Univariate::evaluate(const BigRational& x) const {
  BigRational acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

std::complex<double> Univariate::evaluate(std::complex<double> x) const {
  std::complex<double> acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].get_d();
  return acc;
}

RationalMatrix Univariate::evaluate(const RationalMatrix& m) const {
  if (!m.is_square()) fail(ErrorKind::NotSquare, "polynomial of a non-square matrix");
  RationalMatrix acc(m.rows(), m.cols());
  RationalMatrix id = RationalMatrix::identity(m.rows());
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * m + id * c_[i];
  return acc;
}

std::vector<std::complex<double>> Univariate::roots() const {
  if (degree() < 1) return {};
  Univariate p = monic();
  const auto n = static_cast<Eigen::Index>(p.degree());
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) companion(i, n - 1) = -p.coeff(static_cast<std::size_t>(i)).get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) fail(ErrorKind::NonConvergence, "companion eigenvalues");
  std::vector<std::complex<double>> out;
  for (Eigen::Index i = 0; i < n; ++i) out.push_back(solver.eigenvalues()(i));
  return out;
}

Polynomial Univariate::to_polynomial(RingPtr ring, std::size_t var) const {
  Polynomial p(ring);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Monomial m(ring->nvars());
    m[var] = static_cast<Exponent>(i);
    p += Polynomial::monomial(ring, m, c_[i]);
  }
  return p;
}

std::string Univariate::to_string(const std::string& var) const {
  RingPtr ring = make_ring({var});
  return to_polynomial(ring).to_string();
}

Univariate gcd(const Univariate& a, const Univariate& b) {
  Univariate x = a, y = b;
  while (!y.is_zero()) {
    Univariate r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

// ----------------------------------------------------------- factorization

namespace {

Univariate exact_quotient(const Univariate& a, const Univariate& b) {
  auto [q, r] = a.divmod(b);
  if (!r.is_zero()) fail(ErrorKind::InvalidArgument, "inexact polynomial division");
  return q;
}

// Primitive integer multiple with positive leading coefficient.
std::vector<BigInt> primitive_integer(const Univariate& f) {
  BigInt l = 1;
  for (const auto& c : f.coeffs()) {
    BigInt d = c.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<BigInt> z;
  BigInt content = 0;
  for (const auto& c : f.coeffs()) {
    BigRational scaled = c * l;
    z.push_back(scaled.get_num());
    content = gcd(content, scaled.get_num());
  }
  if (f.leading() < 0) content = -content;
  for (auto& x : z) x /= content;
  return z;
}

bool near_integer(std::complex<double> c, BigInt& out) {
  double re = c.real();
  double scale = 1.0 + std::abs(re);
  if (std::abs(c.imag()) > 1e-6 * scale) return false;
  double r = std::nearbyint(re);
  if (std::abs(re - r) > 1e-6 * scale) return false;
  out = BigInt(r);
  return true;
}

std::vector<Univariate> factor_squarefree(const Univariate& s) {
  if (s.degree() <= 1) return {s.monic()};
  const long d = s.degree();
  std::vector<BigInt> S = primitive_integer(s);
  const BigInt a = S.back();
  // g(y) = a^(d-1) S(y/a) is monic with integer coefficients
  std::vector<BigRational> g_coeffs(static_cast<std::size_t>(d) + 1);
  for (long j = 0; j <= d; ++j) {
    BigInt p;
    if (j < d) {
      mpz_pow_ui(p.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(d - 1 - j));
      g_coeffs[static_cast<std::size_t>(j)] = BigRational(S[static_cast<std::size_t>(j)] * p);
    } else {
      g_coeffs[static_cast<std::size_t>(j)] = 1;
    }
  }
  Univariate G(g_coeffs);
  std::vector<std::complex<double>> R = G.roots();

  std::vector<Univariate> factors_y;
  while (G.degree() > 1) {
    bool found = false;
    const std::size_t m = R.size();
    for (std::size_t size = 1; size < m && !found; ++size) {
      // subsets of {1..m-1} of size-1, always together with root 0
      std::vector<std::size_t> idx(size - 1);
      for (std::size_t i = 0; i + 1 < size; ++i) idx[i] = i + 1;
      while (true) {
        std::vector<std::complex<double>> prod{1.0};
        auto mul_root = [&](std::complex<double> r) {
          std::vector<std::complex<double>> next(prod.size() + 1, 0.0);
          for (std::size_t i = 0; i < prod.size(); ++i) {
            next[i + 1] += prod[i];
            next[i] -= r * prod[i];
          }
          prod = std::move(next);
        };
        mul_root(R[0]);
        for (auto i : idx) mul_root(R[i]);
        std::vector<BigRational> hc(prod.size());
        bool integral = true;
        for (std::size_t i = 0; i < prod.size() && integral; ++i) {
          BigInt z;
          integral = near_integer(prod[i], z);
          hc[i] = BigRational(z);
        }
        if (integral) {
          Univariate h(hc);
          auto [q, r] = G.divmod(h);
          if (r.is_zero()) {
            factors_y.push_back(h);
            G = q;
            std::vector<std::complex<double>> rest;
            for (std::size_t i = 1; i < m; ++i)
              if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(R[i]);
            R = std::move(rest);
            found = true;
            break;
          }
        }
        // next combination of size-1 elements from {1..m-1}
        std::size_t k = idx.size();
        while (k > 0 && idx[k - 1] == m - 1 - (idx.size() - k)) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (std::size_t j = k; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
      }
    }
    if (!found) break;
  }
  if (G.degree() >= 1) factors_y.push_back(G);

  // back-substitute y = a x
  std::vector<Univariate> out;
  for (const auto& h : factors_y) {
    std::vector<BigRational> v(h.coeffs().size());
    BigRational pw = 1;
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = h.coeffs()[i] * pw;
      pw *= BigRational(a);
    }
    out.push_back(Univariate(v).monic());
  }
  return out;
}

}  // namespace

std::vector<std::pair<Univariate, int>> factor_rational(const Univariate& f) {
  if (f.degree() < 1) return {};
  std::vector<std::pair<Univariate, int>> out;
  // Musser square-free decomposition
  Univariate a = f.monic();
  Univariate c = gcd(a, a.derivative());
  Univariate w = exact_quotient(a, c);
  int mult = 1;
  while (c.degree() > 0) {
    Univariate y = gcd(w, c);
    Univariate z = exact_quotient(w, y);
    if (z.degree() > 0)
      for (auto& p : factor_squarefree(z)) out.emplace_back(std::move(p), mult);
    ++mult;
    w = y;
    c = exact_quotient(c, y);
  }
  if (w.degree() > 0)
    for (auto& p : factor_squarefree(w)) out.emplace_back(std::move(p), mult);

  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first.degree() != y.first.degree()) return x.first.degree() < y.first.degree();
    const auto& a = x.first.coeffs();
    const auto& b = y.first.coeffs();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  });
  return out;
}

Univariate characteristic_polynomial(const RationalMatrix& a) {
  if (!a.is_square()) fail(ErrorKind::NotSquare, "characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  // Faddeev-LeVerrier
  std::vector<BigRational> c(n + 1);
  c[n] = 1;
  RationalMatrix am(n, n);
  const RationalMatrix id = RationalMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    RationalMatrix m = am + id * c[n - k + 1];
    am = a * m;
    c[n - k] = -am.trace() / static_cast<long>(k);
  }
  return Univariate(std::move(c));
}

Univariate minimal_polynomial(const RationalMatrix& a) {
  if (!a.is_square()) fail(ErrorKind::NotSquare, "minimal polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  const std::size_t nn = n * n;
  struct Row {
    std::size_t pivot;
    std::vector<BigRational> vec;
    std::vector<BigRational> comb;
  };
  std::vector<Row> rows;
  RationalMatrix power = RationalMatrix::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<BigRational> v(nn);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v[i * n + j] = power(i, j);
    std::vector<BigRational> comb(n + 1);
    comb[k] = 1;
    for (const auto& r : rows) {
      if (v[r.pivot] == 0) continue;
      BigRational f = v[r.pivot];
      for (std::size_t i = 0; i < nn; ++i)
        if (r.vec[i] != 0) v[i] -= f * r.vec[i];
      for (std::size_t i = 0; i <= n; ++i)
        if (r.comb[i] != 0) comb[i] -= f * r.comb[i];
    }
    auto nz = std::find_if(v.begin(), v.end(), [](const BigRational& x) { return x != 0; });
    if (nz == v.end()) {
      comb.resize(k + 1);
      return Univariate(std::move(comb)).monic();
    }
    std::size_t pivot = static_cast<std::size_t>(nz - v.begin());
    BigRational inv = 1 / v[pivot];
    for (auto& x : v) x *= inv;
    for (auto& x : comb) x *= inv;
    rows.push_back({pivot, std::move(v), std::move(comb)});
    power = power * a;
  }
  fail(ErrorKind::InvalidArgument, "minimal polynomial search exceeded matrix size");
}

CharMinPoly char_min_poly(const RationalMatrix& m) {
  RingPtr ring = make_ring({"X"});
  return {characteristic_polynomial(m).to_polynomial(ring), minimal_polynomial(m).to_polynomial(ring)};
}

}  // namespace torfan
