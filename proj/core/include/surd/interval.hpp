#pragma once

#include <iosfwd>
#include <string>

#include "surd/rational.hpp"

namespace surd {

/// Closed interval [lo, hi] with rational endpoints, used to enclose
/// irrational quantities. Arithmetic returns the exact image hull of the
/// operands, which is always an enclosure of the true result.
class Interval {
 public:
  Interval() = default;
  Interval(const Rational& point)  // NOLINT(google-explicit-constructor)
      : lo_(point), hi_(point) {}
  /// Throws ArgumentError when lo > hi.
  Interval(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }
  bool is_point() const { return lo_ == hi_; }

  bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
  bool contains(const Interval& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }

  /// Grows both ends by `slack` (>= 0).
  Interval widened(const Rational& slack) const;
  /// Largest absolute value attained on the interval.
  Rational magnitude() const;
  /// Throws DomainError when the interval contains zero.
  Interval reciprocal() const;

  std::string str() const;

  Interval operator-() const { return {-hi_, -lo_}; }
  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Rational lo_;
  Rational hi_;
};

std::ostream& operator<<(std::ostream& os, const Interval& value);

Interval hull(const Interval& a, const Interval& b);

}  // namespace surd
