#include "gim/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gim {

Rational parse_rational(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::size_t digits_start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
    ++pos;
  if (pos == digits_start)
    throw std::invalid_argument("not a rational: '" + text + "'");
  mpz_class num(text.substr(digits_start, pos - digits_start));
  mpz_class den(1);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::size_t den_start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == den_start)
      throw std::invalid_argument("not a rational: '" + text + "'");
    den = mpz_class(text.substr(den_start, pos - den_start));
    if (den == 0)
      throw std::invalid_argument("zero denominator: '" + text + "'");
  }
  if (pos != text.size())
    throw std::invalid_argument("trailing characters in rational: '" + text +
                                "'");
  Rational q(num, den);
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace gim
