#include "surd/roots.hpp"

#include <cstdlib>

#include "surd/errors.hpp"

namespace surd {
namespace {

Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// Exact root of a perfect n-th power, or false.
bool exact_root(const Integer& value, unsigned long n, Integer& root) {
  root = floor_root(value, n);
  return ipow(root, n) == value;
}

}  // namespace

Integer floor_root(const Integer& value, unsigned long n) {
  if (value < 0) throw DomainError("floor_root of a negative integer");
  if (n == 0) throw ArgumentError("root index must be >= 1");
  if (n == 1 || value < 2) return value;

  // Seed above the root from the bit length, then run integer Newton, which
  // decreases monotonically to floor(value^(1/n)) from any upper start.
  const size_t bits = mpz_sizeinbase(value.get_mpz_t(), 2);
  Integer x = Integer(1) << static_cast<mp_bitcnt_t>((bits + n - 1) / n);
  const Integer nn = static_cast<unsigned long>(n);
  while (true) {
    Integer y = ((nn - 1) * x + value / ipow(x, n - 1)) / nn;
    if (y >= x) break;
    x = std::move(y);
  }
  return x;
}

Interval nth_root_interval(const Rational& value, long n, const Rational& eps) {
  if (n < 1) throw ArgumentError("root index must be >= 1");
  if (eps.sign() <= 0) throw ArgumentError("enclosure width eps must be > 0");
  if (value.sign() < 0) {
    if (n % 2 == 0) throw DomainError("even root of a negative number");
    return -nth_root_interval(-value, n, eps);
  }
  if (value.is_zero() || n == 1) return Interval(value);

  const auto un = static_cast<unsigned long>(n);
  Integer num_root, den_root;
  if (exact_root(value.num(), un, num_root) && exact_root(value.den(), un, den_root)) {
    return Interval(Rational(num_root, den_root));
  }

  // Work on the dyadic grid 2^-b with 2^-b <= eps: r = floor((value*2^(bn))^(1/n))
  // gives (r/2^b)^n <= value < ((r+1)/2^b)^n.
  const Integer inv_eps = (eps.reciprocal()).floor() + 1;
  const auto b = static_cast<mp_bitcnt_t>(mpz_sizeinbase(inv_eps.get_mpz_t(), 2));
  const Integer scaled = (value.num() << static_cast<mp_bitcnt_t>(b * un)) / value.den();
  const Integer r = floor_root(scaled, un);
  const Integer grid = Integer(1) << b;
  return {Rational(r, grid), Rational(r + 1, grid)};
}

Interval rational_pow_interval(const Rational& base, const Rational& exponent,
                               const Rational& eps) {
  if (base.sign() <= 0) throw DomainError("rational power of a non-positive base");
  if (eps.sign() <= 0) throw ArgumentError("enclosure width eps must be > 0");
  if (exponent.is_zero()) return Interval(Rational(1));

  const Integer p = exponent.num();
  const Integer q = exponent.den();
  if (!q.fits_slong_p() || !p.fits_slong_p()) {
    throw ArgumentError("exponent " + exponent.str() + " too large");
  }
  const long p_abs = std::abs(p.get_si());
  const Rational power = (p < 0 ? base.reciprocal() : base).pow(p_abs);
  return nth_root_interval(power, q.get_si(), eps);
}

}  // namespace surd
