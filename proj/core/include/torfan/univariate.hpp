#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "torfan/polynomial.hpp"
#include "torfan/rational_matrix.hpp"

namespace torfan {

// Dense univariate polynomial, coefficients from degree 0 upwards, trimmed.
class Univariate {
 public:
  Univariate() = default;
  explicit Univariate(std::vector<BigRational> coeffs);
  static Univariate monomial(std::size_t degree, const BigRational& c = 1);
  static Univariate from_polynomial(const Polynomial& p);

  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<BigRational>& coeffs() const { return c_; }
  BigRational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigRational(0); }
  const BigRational& leading() const { return c_.back(); }

  Univariate operator+(const Univariate& o) const;
  Univariate operator-(const Univariate& o) const;
  Univariate operator*(const Univariate& o) const;
  Univariate operator*(const BigRational& c) const;
  bool operator==(const Univariate& o) const = default;

  // Quotient and remainder; o must be nonzero.
  std::pair<Univariate, Univariate> divmod(const Univariate& o) const;
  Univariate derivative() const;
  Univariate monic() const;
  Univariate pow(unsigned e) const;

  BigRational evaluate(const BigRational& x) const;
  std::complex<double> evaluate(std::complex<double> x) const;
  RationalMatrix evaluate(const RationalMatrix& m) const;

  // Numerical roots (companion eigenvalues).
  std::vector<std::complex<double>> roots() const;

  Polynomial to_polynomial(RingPtr ring, std::size_t var = 0) const;
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<BigRational> c_;
};

Univariate gcd(const Univariate& a, const Univariate& b);

// Monic irreducible factors over Q with multiplicities, sorted by degree then
// coefficients.
std::vector<std::pair<Univariate, int>> factor_rational(const Univariate& f);

Univariate characteristic_polynomial(const RationalMatrix& m);
Univariate minimal_polynomial(const RationalMatrix& m);

struct CharMinPoly {
  Polynomial characteristic;
  Polynomial minimal;
};

// Both returned in the one-variable ring {X}. Throws NotSquare.
CharMinPoly char_min_poly(const RationalMatrix& m);

}  // namespace torfan
