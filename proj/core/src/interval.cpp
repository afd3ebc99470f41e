#include "surd/interval.hpp"

#include <algorithm>
#include <array>
#include <ostream>

#include "surd/errors.hpp"

namespace surd {

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) {
    throw ArgumentError("interval with lo > hi: [" + lo_.str() + ", " + hi_.str() + "]");
  }
}

Interval Interval::widened(const Rational& slack) const {
  if (slack.sign() < 0) throw ArgumentError("negative interval slack");
  return {lo_ - slack, hi_ + slack};
}

Rational Interval::magnitude() const { return max(lo_.abs(), hi_.abs()); }

Interval Interval::reciprocal() const {
  if (contains_zero()) throw DomainError("reciprocal of an interval containing zero");
  return {hi_.reciprocal(), lo_.reciprocal()};
}

std::string Interval::str() const { return "[" + lo_.str() + ", " + hi_.str() + "]"; }

Interval operator+(const Interval& a, const Interval& b) {
  return {a.lo_ + b.lo_, a.hi_ + b.hi_};
}

Interval operator-(const Interval& a, const Interval& b) {
  return {a.lo_ - b.hi_, a.hi_ - b.lo_};
}

Interval operator*(const Interval& a, const Interval& b) {
  if (a.is_point() && b.is_point()) return Interval(a.lo_ * b.lo_);
  std::array<Rational, 4> p{a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
  auto [lo, hi] = std::minmax_element(p.begin(), p.end());
  return {*lo, *hi};
}

Interval operator/(const Interval& a, const Interval& b) { return a * b.reciprocal(); }

std::ostream& operator<<(std::ostream& os, const Interval& value) { return os << value.str(); }

Interval hull(const Interval& a, const Interval& b) {
  return {min(a.lo(), b.lo()), max(a.hi(), b.hi())};
}

}  // namespace surd
