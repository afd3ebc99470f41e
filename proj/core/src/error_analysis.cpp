#include "surd/error_analysis.hpp"

#include "surd/errors.hpp"
#include "surd/roots.hpp"
#include "surd/series.hpp"

namespace surd {
namespace {

const Rational kRemainderCoefficient{-77, 2048};  // C(1/4, 4)
const Rational kReferenceNumerator{28, 33};
const Rational kReferencePole{7, 12};
const Rational kRemainderExponent{-15, 4};
const Rational kWindowLower{-20, 77};

Rational ratio_t(const Rational& n, const Rational& x, int k) {
  if (n.sign() <= 0) throw DomainError("N must be > 0");
  return x / n.pow(k);
}

}  // namespace

Interval true_error(const SurdForm& form, const Rational& n, const Rational& x, int digits) {
  const int k = form.root();
  const Rational m = n.pow(k) + x;
  if (m.sign() < 0 && k % 2 == 0) throw DomainError("M = N^k + x < 0 for an even root");
  const Rational s = evaluate(form, n, x);
  return nth_root_interval(m, k, pow10(-digits)) - Interval(s);
}

Rational window_reference(const Rational& t) {
  return kReferenceNumerator / (1 + kReferencePole * t);
}

Interval formula_enclosure(const Rational& n, const Rational& x, int digits) {
  const Rational t = ratio_t(n, x, 4);
  if ((1 + t).sign() <= 0) throw DomainError("formula enclosure needs 1 + x/N^4 > 0");
  if (kReferencePole * t.abs() >= 1) throw DomainError("formula enclosure needs (7/12)|x|/N^4 < 1");
  if (x.is_zero()) return Interval(Rational(0));

  const Rational q = window_reference(t);
  const Interval at_zero(1 - q);
  const Interval at_t =
      rational_pow_interval(1 + t, kRemainderExponent, pow10(-(digits + 10))) - Interval(q);
  // x^4/N^15 = N t^4
  const Rational scale = kRemainderCoefficient * n * t.pow(4);
  return Interval(scale) * hull(at_zero, at_t);
}

Interval remainder_error_enclosure(const SurdForm& form, const Rational& n, const Rational& x,
                                   int digits) {
  const int k = form.root();
  const Rational t = ratio_t(n, x, k);
  const Rational r = form.pole_ratio();
  if ((1 + t).sign() <= 0) throw DomainError("error enclosure needs 1 + x/N^k > 0");
  if (r.abs() * t.abs() >= 1) throw DomainError("error enclosure needs r|x|/N^k < 1");
  if (x.is_zero()) return Interval(Rational(0));

  const Interval remainder = remainder_enclosure(Rational(1) / k, 3, t, digits);
  const Rational weight = form.correction_weight();
  const Rational tail = weight * (-r).pow(3) * t.pow(4) / (1 + r * t);
  return Interval(n) * (remainder - Interval(tail));
}

int window_function_sign(const Rational& t) {
  if ((1 + t).sign() <= 0) throw DomainError("window function needs t > -1");
  // Both terms are positive here; compare fourth powers.
  const Rational lhs = (1 + t).pow(15) * window_reference(t).pow(4);
  if (lhs < 1) return 1;
  if (lhs > 1) return -1;
  return 0;
}

bool overestimation_proven(const Rational& t) {
  if (t.sign() < 0) return t > kWindowLower;
  if (t.sign() > 0) return window_function_sign(t) > 0;
  return false;
}

bool in_window(const Rational& t) { return t.is_zero() || overestimation_proven(t); }

Window overestimate_window() {
  static const Window window = [] {
    // g(0) = 5/33 > 0 and g(1/8) < 0; bisect on dyadic midpoints.
    Rational lo = 0;
    Rational hi{1, 8};
    const Rational tol = pow10(-8);
    while (hi - lo > tol) {
      const Rational mid = (lo + hi) / 2;
      const int s = window_function_sign(mid);
      if (s == 0) {
        lo = hi = mid;
      } else if (s > 0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return Window{kWindowLower, Interval(lo, hi)};
  }();
  return window;
}

Interval percent_bound(const Rational& p, Side side) {
  if (p.sign() <= 0) throw ArgumentError("percentage must be > 0");
  const Rational fraction = p / 100;
  const Rational lead = -kRemainderCoefficient;
  if (side == Side::positive) {
    return Interval(lead * (1 - window_reference(fraction)) * fraction.pow(4));
  }
  const Interval growth = rational_pow_interval(1 + fraction, -kRemainderExponent, pow10(-40));
  const Rational shrink = (p / (100 + p)).pow(4);
  return Interval(lead * shrink) * (growth - Interval(kReferenceNumerator));
}

bool percent_within_window(const Rational& p, Side side) {
  if (p.sign() <= 0) throw ArgumentError("percentage must be > 0");
  if (side == Side::positive) return overestimation_proven(p / 100);
  return overestimation_proven(-p / (100 + p));
}

ErrorReport analyze(const SurdForm& form, const Rational& n, const Rational& x, int digits) {
  ErrorReport report;
  report.n_value = n;
  report.x_value = x;
  report.root = form.root();
  report.true_error = true_error(form, n, x, digits);
  if (form.root() == 4 && form == derive(4)) {
    report.formula_enclosure = formula_enclosure(n, x, digits);
    const Rational t = x / n.pow(4);
    if (x.is_zero()) {
      report.overestimates = false;
    } else if (overestimation_proven(t)) {
      report.overestimates = true;
    }
  } else {
    report.formula_enclosure = remainder_error_enclosure(form, n, x, digits);
  }
  return report;
}

}  // namespace surd
