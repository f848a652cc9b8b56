#ifndef GIM_RATIONAL_HPP
#define GIM_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace gim {

// Exact arbitrary-precision rational. GMP keeps values canonical:
// denominator > 0 and numerator/denominator coprime.
using Rational = mpq_class;

inline int sign_of(const Rational& q) { return sgn(q); }

inline Rational rational_abs(const Rational& q) { return abs(q); }

/// Canonical fraction from a numerator/denominator pair. The raw two-value
/// mpq_class constructor does not reduce, and GMP arithmetic silently
/// assumes reduced operands, so every num/den construction must go through
/// here (or call canonicalize()).
inline Rational make_rational(long num, unsigned long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parse "n" or "n/d" (optional leading + or -). Throws std::invalid_argument
/// on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical form: "n" when the denominator is 1, else "n/d".
std::string to_string(const Rational& q);

}  // namespace gim

#endif  // GIM_RATIONAL_HPP
