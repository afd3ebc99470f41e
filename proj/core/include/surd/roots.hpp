#pragma once

#include "surd/interval.hpp"
#include "surd/rational.hpp"

namespace surd {

/// floor(value^(1/n)) for value >= 0, n >= 1.
Integer floor_root(const Integer& value, unsigned long n);

/// Enclosure [lo, hi] of the real n-th root of `value` with
/// lo^n <= value <= hi^n and hi - lo <= eps. Perfect powers come back as
/// point intervals. Odd roots of negative values are supported.
///
/// Throws DomainError for an even root of a negative value and
/// ArgumentError for n < 1 or eps <= 0.
Interval nth_root_interval(const Rational& value, long n, const Rational& eps);

/// Enclosure of base^exponent for base > 0 and rational exponent p/q, of
/// width <= eps. Computed as the q-th root of base^|p| (or of
/// (1/base)^|p| for negative p).
Interval rational_pow_interval(const Rational& base, const Rational& exponent,
                               const Rational& eps);

}  // namespace surd
