#pragma once

#include <string>

#include "surd/rational.hpp"

namespace surd {

/// Fixed-point rendering of a Rational, truncated toward zero.
struct DecimalString {
  bool negative = false;
  std::string integer_digits = "0";
  std::string fraction_digits;
  /// True iff nothing was cut off by the truncation.
  bool exact = true;

  /// Always signed: "+0.250", "-0.000000000000000005", "+3".
  std::string str() const;
  /// The truncated value as an exact Rational.
  Rational value() const;
};

/// Truncates toward zero after `places` fractional digits. The sign follows
/// the source value even when every rendered digit is zero.
DecimalString to_decimal(const Rational& value, int places);

/// Scientific rendering with `significant` digits, truncated toward zero,
/// e.g. "-5.695655e-18". Zero renders as "0".
std::string to_scientific(const Rational& value, int significant);

}  // namespace surd
