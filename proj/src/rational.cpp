#include "barth/rational.hpp"

#include "barth/errors.hpp"

#include <cctype>

namespace barth {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1)
    return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view text, std::size_t offset) {
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-')
    ++i;
  if (i == text.size())
    throw ParseError("expected an integer", offset + i);
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      throw ParseError("unexpected character in integer", offset + k);
  }
  return Integer(std::string(text));
}

} // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_integer(text, 0));
  const Integer num = parse_integer(text.substr(0, slash), 0);
  const Integer den = parse_integer(text.substr(slash + 1), slash + 1);
  if (den == 0)
    throw ParseError("zero denominator", slash + 1);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer int_pow(long base, unsigned long exponent) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), Integer(base).get_mpz_t(), exponent);
  return result;
}

} // namespace barth
