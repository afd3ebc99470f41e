#pragma once

#include <vector>

#include "surd/interval.hpp"
#include "surd/rational.hpp"

namespace surd {

/// Generalized binomial coefficient alpha(alpha-1)...(alpha-j+1)/j!.
/// Throws ArgumentError for j < 0.
Rational binomial_coefficient(const Rational& alpha, int j);

/// Maclaurin polynomial of (1+t)^alpha through t^order.
struct SeriesTruncation {
  Rational alpha;
  int order = 0;
  /// coefficients[j] = binomial_coefficient(alpha, j), j = 0..order.
  std::vector<Rational> coefficients;

  /// Horner evaluation at t.
  Rational operator()(const Rational& t) const;
};

SeriesTruncation make_truncation(const Rational& alpha, int order);

/// Sum of binomial_coefficient(alpha, j) * t^j for j = 0..order.
Rational truncated_series(const Rational& alpha, int order, const Rational& t);

/// Enclosure of the Lagrange remainder
///
///   binomial_coefficient(alpha, order+1) * (1+X)^(alpha-order-1) * t^(order+1)
///
/// over every X between 0 and t. For alpha in (0,1) the power of (1+X) is
/// strictly decreasing in X, so the two endpoints X = 0 and X = t give the
/// extremes. `digits` sets the power-enclosure width to 10^-(digits+10).
///
/// Throws DomainError when 1 + t <= 0, ArgumentError when alpha is outside
/// (0,1) or order < 0.
Interval remainder_enclosure(const Rational& alpha, int order, const Rational& t,
                             int digits = 30);

}  // namespace surd
