#include "surd/series.hpp"

#include "surd/errors.hpp"
#include "surd/roots.hpp"

namespace surd {

Rational binomial_coefficient(const Rational& alpha, int j) {
  if (j < 0) throw ArgumentError("binomial coefficient index must be >= 0");
  Rational c = 1;
  for (int i = 0; i < j; ++i) c = c * (alpha - i) / (i + 1);
  return c;
}

Rational SeriesTruncation::operator()(const Rational& t) const {
  Rational sum;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) sum = sum * t + *it;
  return sum;
}

SeriesTruncation make_truncation(const Rational& alpha, int order) {
  if (order < 0) throw ArgumentError("series order must be >= 0");
  SeriesTruncation s{alpha, order, {}};
  s.coefficients.reserve(static_cast<size_t>(order) + 1);
  Rational c = 1;
  for (int j = 0; j <= order; ++j) {
    s.coefficients.push_back(c);
    c = c * (alpha - j) / (j + 1);
  }
  return s;
}

Rational truncated_series(const Rational& alpha, int order, const Rational& t) {
  return make_truncation(alpha, order)(t);
}

Interval remainder_enclosure(const Rational& alpha, int order, const Rational& t,
                             int digits) {
  if (alpha.sign() <= 0 || alpha >= 1) {
    throw ArgumentError("remainder enclosure needs alpha in (0,1), got " + alpha.str());
  }
  if (order < 0) throw ArgumentError("series order must be >= 0");
  if ((1 + t).sign() <= 0) throw DomainError("remainder enclosure needs 1 + t > 0");
  if (t.is_zero()) return Interval(Rational(0));

  const Rational scale = binomial_coefficient(alpha, order + 1) * t.pow(order + 1);
  const Rational exponent = alpha - order - 1;
  const Interval at_t = rational_pow_interval(1 + t, exponent, pow10(-(digits + 10)));
  return hull(Interval(scale), Interval(scale) * at_t);
}

}  // namespace surd
