#include "gim/interval.hpp"

#include <stdexcept>

namespace gim {

GInterval GInterval::constant(Rational a) {
  return GInterval(Kind::Constant, a, a);
}

GInterval GInterval::bounded(Rational lo, Rational hi) {
  if (lo > hi)
    throw std::invalid_argument("empty interval [" + to_string(lo) + "," +
                                to_string(hi) + "]");
  if (lo == hi) return constant(std::move(lo));
  return GInterval(Kind::Bounded, std::move(lo), std::move(hi));
}

GInterval GInterval::left_bounded(Rational lo) {
  return GInterval(Kind::LeftBounded, std::move(lo), 0);
}

GInterval GInterval::right_bounded(Rational hi) {
  return GInterval(Kind::RightBounded, 0, std::move(hi));
}

GInterval GInterval::unbounded() { return GInterval(Kind::Unbounded, 0, 0); }

const Rational& GInterval::lower() const {
  switch (kind_) {
    case Kind::Constant:
    case Kind::Bounded:
    case Kind::LeftBounded:
      return lo_;
    default:
      throw std::logic_error("interval has no finite lower endpoint");
  }
}

const Rational& GInterval::upper() const {
  switch (kind_) {
    case Kind::Constant:
    case Kind::Bounded:
    case Kind::RightBounded:
      return hi_;
    default:
      throw std::logic_error("interval has no finite upper endpoint");
  }
}

const Rational& GInterval::value() const {
  if (kind_ != Kind::Constant)
    throw std::logic_error("interval is not constant");
  return lo_;
}

const Rational& GInterval::finite_endpoint() const {
  if (kind_ == Kind::LeftBounded) return lo_;
  if (kind_ == Kind::RightBounded) return hi_;
  throw std::logic_error("interval is not half-bounded");
}

bool GInterval::contains(const Rational& x) const {
  switch (kind_) {
    case Kind::Constant:
      return x == lo_;
    case Kind::Bounded:
      return lo_ <= x && x <= hi_;
    case Kind::LeftBounded:
      return lo_ <= x;
    case Kind::RightBounded:
      return x <= hi_;
    case Kind::Unbounded:
      return true;
  }
  return false;  // unreachable
}

bool GInterval::operator==(const GInterval& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::Constant:
      return lo_ == other.lo_;
    case Kind::Bounded:
      return lo_ == other.lo_ && hi_ == other.hi_;
    case Kind::LeftBounded:
      return lo_ == other.lo_;
    case Kind::RightBounded:
      return hi_ == other.hi_;
    case Kind::Unbounded:
      return true;
  }
  return false;  // unreachable
}

std::string GInterval::str() const {
  switch (kind_) {
    case Kind::Constant:
      return to_string(lo_);
    case Kind::Bounded:
      return "[" + to_string(lo_) + "," + to_string(hi_) + "]";
    case Kind::LeftBounded:
      return "[" + to_string(lo_) + ",inf)";
    case Kind::RightBounded:
      return "(-inf," + to_string(hi_) + "]";
    case Kind::Unbounded:
      return "(-inf,inf)";
  }
  return {};  // unreachable
}

}  // namespace gim
