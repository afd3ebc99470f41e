#include "surd/decimal.hpp"

#include "surd/errors.hpp"

namespace surd {
namespace {

Integer ten_to(long e) { return pow10(e).num(); }

}  // namespace

std::string DecimalString::str() const {
  std::string out(1, negative ? '-' : '+');
  out += integer_digits;
  if (!fraction_digits.empty()) {
    out += '.';
    out += fraction_digits;
  }
  return out;
}

Rational DecimalString::value() const {
  Rational v = Rational::parse(integer_digits + (fraction_digits.empty() ? "" : "." + fraction_digits));
  return negative ? -v : v;
}

DecimalString to_decimal(const Rational& value, int places) {
  if (places < 0) throw ArgumentError("negative decimal places");
  const Integer scale = ten_to(places);
  Integer scaled = abs(value.num()) * scale;
  Integer quotient, remainder;
  mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), scaled.get_mpz_t(),
              value.den().get_mpz_t());

  DecimalString out;
  out.negative = value.sign() < 0;
  out.exact = remainder == 0;
  Integer whole, frac;
  mpz_tdiv_qr(whole.get_mpz_t(), frac.get_mpz_t(), quotient.get_mpz_t(), scale.get_mpz_t());
  out.integer_digits = whole.get_str();
  if (places > 0) {
    std::string f = frac.get_str();
    out.fraction_digits = std::string(static_cast<size_t>(places) - f.size(), '0') + f;
  }
  return out;
}

std::string to_scientific(const Rational& value, int significant) {
  if (significant < 1) throw ArgumentError("significant digits must be >= 1");
  if (value.is_zero()) return "0";
  const Rational a = value.abs();

  // Decimal exponent e with 10^e <= a < 10^(e+1); the digit-count estimate
  // is off by at most one in either direction.
  long e = static_cast<long>(a.num().get_str().size()) -
           static_cast<long>(a.den().get_str().size());
  while (pow10(e) > a) --e;
  while (pow10(e + 1) <= a) ++e;

  const Integer mantissa = (a * pow10(significant - 1 - e)).floor();
  std::string digits = mantissa.get_str();
  std::string out = value.sign() < 0 ? "-" : "";
  out += digits.substr(0, 1);
  if (digits.size() > 1) out += "." + digits.substr(1);
  out += "e" + std::to_string(e);
  return out;
}

}  // namespace surd
