#include "torfan/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "torfan/error.hpp"

namespace torfan {

// ---------------------------------------------------------------- Monomial

Exponent Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), Exponent{0});
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0 && other.exps_[i] > 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= other.exps_[i];
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    out.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Exponent e : m.exponents()) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

// -------------------------------------------------------------------- Ring

Ring::Ring(std::vector<std::string> names, std::size_t elimination_block)
    : names_(std::move(names)), elim_(elimination_block) {
  if (elim_ > names_.size())
    fail(ErrorKind::InvalidArgument, "elimination block larger than variable count");
}

std::size_t Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return names_.size();
}

namespace {

// grevlex on the half-open index range [lo, hi)
int grevlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  Exponent da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int Ring::compare(const Monomial& a, const Monomial& b) const {
  if (elim_ == 0) return grevlex(a, b, 0, names_.size());
  if (int c = grevlex(a, b, 0, elim_); c != 0) return c;
  return grevlex(a, b, elim_, names_.size());
}

bool Ring::same_as(const Ring& other) const {
  return this == &other || (names_ == other.names_ && elim_ == other.elim_);
}

RingPtr make_ring(std::vector<std::string> names, std::size_t elimination_block) {
  return std::make_shared<const Ring>(std::move(names), elimination_block);
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial Polynomial::from_sorted(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::tail() const {
  if (terms_.empty()) return *this;
  return from_sorted(ring_, std::vector<Term>(terms_.begin() + 1, terms_.end()));
}

Polynomial Polynomial::constant(RingPtr ring, const BigRational& c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({Monomial(ring->nvars()), c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Monomial m(ring->nvars());
  m[index] = 1;
  return monomial(std::move(ring), std::move(m), 1);
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, const BigRational& c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (!ring_->same_as(*other.ring_))
    fail(ErrorKind::RingMismatch, "polynomials belong to different rings");
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Exponent Polynomial::total_degree() const {
  Exponent d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

BigRational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return 0;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  check_ring(other);
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  const Ring& r = *ring_;
  while (i < terms_.size() && j < other.terms_.size()) {
    int c = r.compare(terms_[i].mono, other.terms_[j].mono);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(other.terms_[j++]);
    } else {
      BigRational s = terms_[i].coeff + other.terms_[j].coeff;
      if (s != 0) out.push_back({terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < other.terms_.size(); ++j) out.push_back(other.terms_[j]);
  return from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const BigRational& c) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial p(*this);
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Polynomial Polynomial::mul_term(const Monomial& m, const BigRational& c) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial p(*this);
  for (auto& t : p.terms_) {
    t.mono = t.mono * m;
    t.coeff *= c;
  }
  return p;
}

Polynomial Polynomial::sub_mul_term(const Monomial& m, const BigRational& c,
                                    const Polynomial& other) const {
  check_ring(other);
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  const Ring& r = *ring_;
  std::size_t i = 0, j = 0;
  Monomial shifted;
  bool have = false;
  auto next_other = [&]() {
    if (j < other.terms_.size()) {
      shifted = other.terms_[j].mono * m;
      have = true;
    } else {
      have = false;
    }
  };
  next_other();
  while (i < terms_.size() && have) {
    int cmp = r.compare(terms_[i].mono, shifted);
    if (cmp > 0) {
      out.push_back(terms_[i++]);
    } else if (cmp < 0) {
      out.push_back({shifted, -c * other.terms_[j].coeff});
      ++j;
      next_other();
    } else {
      BigRational s = terms_[i].coeff - c * other.terms_[j].coeff;
      if (s != 0) out.push_back({terms_[i].mono, std::move(s)});
      ++i;
      ++j;
      next_other();
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  while (have) {
    out.push_back({shifted, -c * other.terms_[j].coeff});
    ++j;
    next_other();
  }
  return from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_ring(other);
  std::unordered_map<Monomial, BigRational, MonomialHash> acc;
  for (const auto& a : terms_)
    for (const auto& b : other.terms_) acc[a.mono * b.mono] += a.coeff * b.coeff;
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back({m, c});
  const Ring& r = *ring_;
  std::sort(out.begin(), out.end(),
            [&](const Term& x, const Term& y) { return r.compare(x.mono, y.mono) > 0; });
  return from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

void Polynomial::make_monic() {
  if (terms_.empty()) return;
  BigRational lc = terms_.front().coeff;
  if (lc == 1) return;
  for (auto& t : terms_) t.coeff /= lc;
}

Polynomial Polynomial::monic() const {
  Polynomial p(*this);
  p.make_monic();
  return p;
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& value) const {
  check_ring(value);
  Polynomial result(ring_);
  std::vector<Polynomial> powers{constant(ring_, 1)};
  for (const auto& t : terms_) {
    Monomial rest = t.mono;
    Exponent e = rest[var];
    rest[var] = 0;
    while (static_cast<Exponent>(powers.size()) <= e) powers.push_back(powers.back() * value);
    result += powers[static_cast<std::size_t>(e)].mul_term(rest, t.coeff);
  }
  return result;
}

Polynomial Polynomial::map_to(RingPtr target, const std::vector<std::size_t>& var_map) const {
  std::unordered_map<Monomial, BigRational, MonomialHash> acc;
  for (const auto& t : terms_) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (i >= var_map.size() || var_map[i] >= target->nvars())
        fail(ErrorKind::RingMismatch, "variable " + ring_->name(i) + " has no image");
      m[var_map[i]] += t.mono[i];
    }
    acc[m] += t.coeff;
  }
  std::vector<Term> out;
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back({m, c});
  const Ring& r = *target;
  std::sort(out.begin(), out.end(),
            [&](const Term& x, const Term& y) { return r.compare(x.mono, y.mono) > 0; });
  return from_sorted(std::move(target), std::move(out));
}

Polynomial Polynomial::embed(RingPtr target) const {
  std::vector<std::size_t> var_map(ring_->nvars());
  for (std::size_t i = 0; i < ring_->nvars(); ++i) var_map[i] = target->index_of(ring_->name(i));
  return map_to(std::move(target), var_map);
}

Polynomial Polynomial::evaluate(std::size_t var, const BigRational& value) const {
  return substitute(var, constant(ring_, value));
}

bool Polynomial::is_homogeneous(const std::vector<Exponent>& weights) const {
  if (terms_.empty()) return true;
  auto weighted = [&](const Monomial& m) {
    long long d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<long long>(weights[i]) * m[i];
    return d;
  };
  long long d0 = weighted(terms_.front().mono);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return weighted(t.mono) == d0; });
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (!ring_->same_as(*other.ring_)) return false;
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != other.terms_[i].mono || terms_[i].coeff != other.terms_[i].coeff)
      return false;
  return true;
}

std::string monomial_to_string(const Ring& ring, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.name(i);
    if (m[i] != 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    BigRational c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += torfan::to_string(c);
    } else {
      if (c != 1) out += torfan::to_string(c) + "*";
      out += monomial_to_string(*ring_, t.mono);
    }
  }
  return out;
}

// ------------------------------------------------------------------ parser

namespace {

class Parser {
 public:
  Parser(RingPtr ring, std::string_view text) : ring_(std::move(ring)), s_(text) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void error(const std::string& msg) {
    fail(ErrorKind::ParseError, "polynomial '" + std::string(s_) + "' at " +
                                    std::to_string(pos_) + ": " + msg);
  }

  Polynomial expr() {
    skip();
    Polynomial acc(ring_);
    bool negate = false;
    if (eat('-')) negate = true;
    else eat('+');
    Polynomial t = term();
    acc = negate ? -t : t;
    while (true) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      if (eat('*')) {
        acc *= factor();
      } else if (eat('/')) {
        Polynomial d = factor();
        if (!d.is_constant() || d.is_zero()) error("division by non-constant");
        acc = acc * (BigRational(1) / d.constant_term());
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) error("expected exponent");
      b = b.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return b;
  }

  Polynomial base() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) error("expected ')'");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Polynomial::constant(ring_, BigRational(BigInt(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      std::size_t idx = ring_->index_of(name);
      if (idx == ring_->nvars()) error("unknown variable '" + name + "'");
      return Polynomial::variable(ring_, idx);
    }
    error("unexpected character");
  }

  RingPtr ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(RingPtr ring, std::string_view text) {
  return Parser(std::move(ring), text).parse();
}

}  // namespace torfan
