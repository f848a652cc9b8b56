#ifndef GIM_INTERVAL_HPP
#define GIM_INTERVAL_HPP

#include <string>

#include "gim/rational.hpp"

namespace gim {

/*
 * One closed connected nonempty subset of the real line. Five shapes:
 *
 *   Constant(a)      {a}
 *   Bounded(a,b)     [a,b] with a < b strictly
 *   LeftBounded(a)   [a,+inf)
 *   RightBounded(b)  (-inf,b]
 *   Unbounded        (-inf,+inf)
 *
 * A degenerate [a,a] is normalized to Constant(a) at construction, so the
 * constant/nonconstant distinction is never ambiguous.
 */
class GInterval {
 public:
  enum class Kind { Constant, Bounded, LeftBounded, RightBounded, Unbounded };

  GInterval() : kind_(Kind::Constant), lo_(0), hi_(0) {}

  static GInterval constant(Rational a);
  /// [lo,hi]; throws std::invalid_argument if lo > hi; collapses lo == hi.
  static GInterval bounded(Rational lo, Rational hi);
  static GInterval left_bounded(Rational lo);
  static GInterval right_bounded(Rational hi);
  static GInterval unbounded();

  Kind kind() const { return kind_; }
  bool is_constant() const { return kind_ == Kind::Constant; }
  bool is_bounded() const { return kind_ == Kind::Bounded; }
  bool is_left_bounded() const { return kind_ == Kind::LeftBounded; }
  bool is_right_bounded() const { return kind_ == Kind::RightBounded; }
  bool is_half_bounded() const {
    return kind_ == Kind::LeftBounded || kind_ == Kind::RightBounded;
  }
  bool is_unbounded() const { return kind_ == Kind::Unbounded; }
  bool is_nonconstant() const { return kind_ != Kind::Constant; }

  /// Finite lower endpoint (Constant, Bounded, LeftBounded).
  const Rational& lower() const;
  /// Finite upper endpoint (Constant, Bounded, RightBounded).
  const Rational& upper() const;
  /// The single value of a Constant entry.
  const Rational& value() const;
  /// The finite endpoint of a half-bounded entry.
  const Rational& finite_endpoint() const;

  bool contains(const Rational& x) const;

  bool operator==(const GInterval& other) const;
  bool operator!=(const GInterval& other) const { return !(*this == other); }

  /// Canonical text form, identical to the input grammar of the parser.
  std::string str() const;

 private:
  GInterval(Kind kind, Rational lo, Rational hi)
      : kind_(kind), lo_(std::move(lo)), hi_(std::move(hi)) {}

  Kind kind_;
  Rational lo_;  // meaningful for Constant, Bounded, LeftBounded
  Rational hi_;  // meaningful for Constant, Bounded, RightBounded
};

}  // namespace gim

#endif  // GIM_INTERVAL_HPP
