#include "surd/approximant.hpp"

#include <string>

#include "surd/errors.hpp"
#include "surd/series.hpp"

namespace surd {
namespace {

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace

SurdForm SurdForm::from_coefficients(int k, const Coefficients& raw) {
  if (k < 2) throw ArgumentError("root index must be >= 2, got " + std::to_string(k));
  if (raw.a + raw.b != 1) throw ArgumentError("A + B must equal 1");
  if ((raw.d + raw.e).is_zero()) throw ArgumentError("D + E must be nonzero");
  if (raw.c.is_zero() && raw.d.is_zero() && raw.e.is_zero()) {
    throw ArgumentError("C, D, E are all zero");
  }

  // Clear denominators, strip the common factor, then fix the sign so D > 0
  // (or E > 0 when D = 0).
  const Integer l = lcm(lcm(raw.c.den(), raw.d.den()), raw.e.den());
  Integer c = (raw.c * l).num();
  Integer d = (raw.d * l).num();
  Integer e = (raw.e * l).num();
  const Integer g = gcd(gcd(c, d), e);
  c /= g;
  d /= g;
  e /= g;
  if (d < 0 || (d == 0 && e < 0)) {
    c = -c;
    d = -d;
    e = -e;
  }
  return SurdForm(k, Coefficients{raw.a, raw.b, c, d, e});
}

Rational SurdForm::correction_weight() const { return coeffs_.c / (coeffs_.d + coeffs_.e); }

Rational SurdForm::pole_ratio() const { return coeffs_.d / (coeffs_.d + coeffs_.e); }

SurdForm derive(int k) {
  if (k < 2) throw ArgumentError("root index must be >= 2, got " + std::to_string(k));
  const Rational alpha = Rational(1) / k;
  const auto series = make_truncation(alpha, 3);
  const Rational& c1 = series.coefficients[1];
  const Rational& c2 = series.coefficients[2];
  const Rational& c3 = series.coefficients[3];

  // t^2: -C'r = c2, t^3: C'r^2 = c3, t^1: B + C' = c1, t^0: A + B = 1.
  const Rational r = -c3 / c2;
  const Rational weight = -c2 / r;
  const Rational b = c1 - weight;
  const Rational a = 1 - b;
  // Representative with D + E = 1.
  return SurdForm::from_coefficients(k, Coefficients{a, b, weight, r, 1 - r});
}

Rational evaluate(int k, const Coefficients& raw, const Rational& n, const Rational& x) {
  if (n.sign() <= 0) throw DomainError("N must be > 0");
  const Rational nk = n.pow(k);
  const Rational m = nk + x;
  const Rational pole = raw.d * m + raw.e * nk;
  if (pole.is_zero()) throw DomainError("pole of the rational term: D*M + E*N^k = 0");
  return raw.a * n + raw.b * m / n.pow(k - 1) + raw.c * n * x / pole;
}

Rational evaluate(const SurdForm& form, const Rational& n, const Rational& x) {
  return evaluate(form.root(), form.coefficients(), n, x);
}

std::vector<Rational> expand(const Coefficients& raw, int order) {
  if (order < 0) throw ArgumentError("expansion order must be >= 0");
  const Rational sum = raw.d + raw.e;
  if (sum.is_zero()) throw DomainError("D + E == 0: rational term has no expansion at t = 0");
  const Rational weight = raw.c / sum;
  const Rational r = raw.d / sum;

  std::vector<Rational> out;
  out.reserve(static_cast<size_t>(order) + 1);
  out.push_back(raw.a + raw.b);
  // C' t / (1 + r t) = sum_{j>=1} C' (-r)^(j-1) t^j
  Rational geometric = weight;
  for (int j = 1; j <= order; ++j) {
    out.push_back(j == 1 ? raw.b + geometric : geometric);
    geometric *= -r;
  }
  return out;
}

std::vector<Rational> expand(const SurdForm& form, int order) {
  return expand(form.coefficients(), order);
}

ConsistencyReport check_next_order(const SurdForm& form) {
  const auto series = make_truncation(Rational(1) / form.root(), 4);
  ConsistencyReport report;
  // t^3: C'r^2 = c3 and t^4: -C'r^3 = c4 together force r = -c4/c3.
  report.required_ratio = -series.coefficients[4] / series.coefficients[3];
  report.actual_ratio = form.pole_ratio();
  report.consistent = report.required_ratio == report.actual_ratio;
  return report;
}

}  // namespace surd
