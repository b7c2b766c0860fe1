#include "torfan/rational.hpp"

#include <cctype>
#include <cmath>

#include "torfan/error.hpp"

namespace torfan {

std::string to_string(const BigRational& value) {
  BigRational q = value;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

BigRational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) fail(ErrorKind::ParseError, "empty rational literal");

  auto parse_int = [&](const std::string& digits) {
    BigInt z;
    if (digits.empty() || z.set_str(digits, 10) != 0)
      fail(ErrorKind::ParseError, "invalid rational literal '" + std::string(text) + "'");
    return z;
  };

  if (auto slash = s.find('/'); slash != std::string::npos) {
    BigInt num = parse_int(s.substr(0, slash));
    BigInt den = parse_int(s.substr(slash + 1));
    if (den == 0) fail(ErrorKind::ParseError, "zero denominator in '" + s + "'");
    BigRational q(num, den);
    q.canonicalize();
    return q;
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    bool negative = !s.empty() && s[0] == '-';
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (whole == "-" || whole == "+" || whole.empty()) whole += "0";
    BigInt w = parse_int(whole[0] == '+' ? whole.substr(1) : whole);
    BigInt f = frac.empty() ? BigInt(0) : parse_int(frac);
    if (f < 0) fail(ErrorKind::ParseError, "invalid decimal '" + s + "'");
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    BigRational q(f, scale);
    q.canonicalize();
    BigRational whole_q(w);
    return negative ? BigRational(whole_q - q) : BigRational(whole_q + q);
  }
  return BigRational(parse_int(s[0] == '+' ? s.substr(1) : s));
}

BigRational from_double(double x) {
  if (!std::isfinite(x)) fail(ErrorKind::InvalidArgument, "non-finite double");
  BigRational q(x);
  q.canonicalize();
  return q;
}

BigRational dyadic_round(double x, int bits) {
  double scaled = std::ldexp(x, bits);
  BigInt num(std::nearbyint(scaled));
  BigInt den = 1;
  den <<= bits;
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace torfan
