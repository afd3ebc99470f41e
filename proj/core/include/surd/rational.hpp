#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <concepts>
#include <string>
#include <string_view>

namespace surd {

using Integer = mpz_class;

/// Exact fraction num/den with den > 0 and gcd(|num|, den) = 1.
///
/// Every operation is exact; the representation is canonical after each one,
/// so structural equality is numeric equality.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value)  // NOLINT(google-explicit-constructor)
      : value_(static_cast<long>(value)) {}

  Rational(const Integer& value)  // NOLINT(google-explicit-constructor)
      : value_(value) {}

  /// Throws ArgumentError when `den` is zero.
  Rational(const Integer& num, const Integer& den);

  /// Accepts "p/q", integer and decimal literals ("10001", "-0.05336",
  /// "+1.5"), and decimal literals with a power-of-ten exponent ("1e-4").
  /// Parsing is exact; no binary floating point is involved.
  static Rational parse(std::string_view text);

  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const;
  /// Throws DomainError for zero.
  Rational reciprocal() const;
  /// Exact integer power; negative exponents go through reciprocal().
  Rational pow(long exponent) const;
  /// Largest integer not exceeding the value.
  Integer floor() const;

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws DomainError on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

/// 10^exponent, exact for either sign of the exponent.
Rational pow10(long exponent);

std::ostream& operator<<(std::ostream& os, const Rational& value);

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace surd
