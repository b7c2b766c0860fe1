#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "torfan/rational.hpp"

namespace torfan {

using Exponent = std::int32_t;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  Exponent degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  // Exact quotient; requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

// Ordered variable names plus the monomial order. Variables declared first have
// higher priority. The first `elimination_block` variables (0 = none) form a
// block compared before the rest, which gives an elimination order.
class Ring {
 public:
  Ring(std::vector<std::string> names, std::size_t elimination_block = 0);

  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::size_t elimination_block() const { return elim_; }
  // Index of a variable by name, or nvars() when absent.
  std::size_t index_of(std::string_view name) const;

  // Negative, zero, or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;

  bool same_as(const Ring& other) const;

 private:
  std::vector<std::string> names_;
  std::size_t elim_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names, std::size_t elimination_block = 0);

struct Term {
  Monomial mono;
  BigRational coeff;
};

// Sparse polynomial with rational coefficients. Terms are kept sorted in
// strictly decreasing monomial order with no zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, const BigRational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, Monomial m, const BigRational& c = 1);
  // Parses expressions such as "x1^2 - 3/2*x2*t + 1" over `ring`.
  static Polynomial parse(RingPtr ring, std::string_view text);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const Term& leading() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const BigRational& leading_coeff() const { return terms_.front().coeff; }
  Exponent total_degree() const;
  // Constant term (0 when absent).
  BigRational constant_term() const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const BigRational& c) const;
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

  // Trusts the caller: terms strictly decreasing, no zero coefficients.
  static Polynomial from_sorted(RingPtr ring, std::vector<Term> terms);
  // The polynomial without its leading term.
  Polynomial tail() const;

  Polynomial mul_term(const Monomial& m, const BigRational& c) const;
  // this - c*m*other, without forming the intermediate product.
  Polynomial sub_mul_term(const Monomial& m, const BigRational& c,
                          const Polynomial& other) const;
  Polynomial pow(unsigned e) const;

  void make_monic();
  Polynomial monic() const;

  // Replaces variable `var` by `value` (same ring).
  Polynomial substitute(std::size_t var, const Polynomial& value) const;
  // Maps variable i to variable var_map[i] of `target`.
  Polynomial map_to(RingPtr target, const std::vector<std::size_t>& var_map) const;
  // Maps variables by name; every variable with a nonzero exponent must exist
  // in `target`.
  Polynomial embed(RingPtr target) const;
  // Sets variable `var` to the rational `value`.
  Polynomial evaluate(std::size_t var, const BigRational& value) const;

  // True iff every term has the same weighted degree under `weights`.
  bool is_homogeneous(const std::vector<Exponent>& weights) const;

  std::string to_string() const;

  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

 private:
  void check_ring(const Polynomial& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

std::string monomial_to_string(const Ring& ring, const Monomial& m);

}  // namespace torfan
