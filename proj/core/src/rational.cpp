#include "toricmld/rational.hpp"

#include <cstddef>

namespace toricmld {

Rational make_rational(Int num, Int den) {
  if (den == 0) throw InputError("denominator must be nonzero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;  // truncates toward zero
  if (a % b != 0 && a < 0) --q;
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

Int floor_rational(const Rational& q) {
  return floor_div(numerator(q), denominator(q));
}

Int ceil_rational(const Rational& q) {
  return ceil_div(numerator(q), denominator(q));
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Int parse_int(std::string_view text) {
  std::size_t pos = 0;
  if (pos < text.size() && text[pos] == '-') ++pos;
  if (pos == text.size()) throw ParseError("not an integer: '" + std::string(text) + "'");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw ParseError("not an integer: '" + std::string(text) + "'");
  }
  return Int(std::string(text));
}

Rational parse_rational(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den <= 0) throw ParseError("denominator must be positive: '" + std::string(text) + "'");
  return make_rational(std::move(num), std::move(den));
}

}  // namespace toricmld
