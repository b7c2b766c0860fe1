#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace torfan {

using BigInt = mpz_class;
using BigRational = mpq_class;

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);

// Accepts "p", "p/q", and finite decimals such as "-0.125" (exactly).
BigRational parse_rational(std::string_view text);

// Exact rational value of a finite double.
BigRational from_double(double x);

// Nearest rational on the dyadic grid 2^-bits.
BigRational dyadic_round(double x, int bits);

inline double to_double(const BigRational& q) { return q.get_d(); }

BigInt gcd(const BigInt& a, const BigInt& b);

}  // namespace torfan
