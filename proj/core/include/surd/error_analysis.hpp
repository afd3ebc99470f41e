#pragma once

#include <optional>

#include "surd/approximant.hpp"
#include "surd/interval.hpp"
#include "surd/rational.hpp"

namespace surd {

/// Enclosure of k-th-root(N^k + x) - S(N, x), width <= 10^-digits.
Interval true_error(const SurdForm& form, const Rational& n, const Rational& x, int digits);

// Fourth-root error theory
// ------------------------
// With t = x/N^4 and Q(t) = (28/33)/(1 + 7t/12), the error of the k = 4 form
// is exactly
//
//   E = -(77/2048) * ((1+X)^(-15/4) - Q(t)) * x^4/N^15
//
// for some X strictly between 0 and t, provided (7/12)|t| < 1.

/// Outward hull of the closed-form error as X sweeps [min(0,t), max(0,t)].
/// Throws DomainError unless 1 + t > 0 and (7/12)|t| < 1.
Interval formula_enclosure(const Rational& n, const Rational& x, int digits = 30);

/// The same error bracket for any derived form, assembled from the binomial
/// remainder after t^3 minus the exact geometric tail of the rational term:
/// E = N * (R_3(t) - C'(-r)^3 t^4 / (1 + r t)). Throws DomainError unless
/// 1 + t > 0 and r|t| < 1.
Interval remainder_error_enclosure(const SurdForm& form, const Rational& n,
                                   const Rational& x, int digits = 30);

/// Q(t) = (28/33)/(1 + 7t/12).
Rational window_reference(const Rational& t);

/// Exact sign of g(t) = (1+t)^(-15/4) - Q(t) for t > -1, decided by
/// comparing (1+t)^15 * Q(t)^4 against 1.
int window_function_sign(const Rational& t);

/// True iff the k = 4 approximant provably overestimates the root at this
/// t = x/N^4: t > -20/77 for t < 0 (bracket > 1 - Q(t) > 0), and g(t) > 0
/// for t > 0 (bracket > g(t)). False at t = 0 where the error vanishes.
bool overestimation_proven(const Rational& t);

/// Membership of t in the proven window (-20/77, upper root of g), t = 0
/// included. Decided exactly, without the bisected enclosure.
bool in_window(const Rational& t);

struct Window {
  /// -20/77, the zero of 1 - Q(t).
  Rational lower;
  /// Enclosure of the positive zero of g(t), width <= 10^-8.
  Interval upper;
};

/// The range of t = x/N^4 on which the fourth-root approximant overestimates.
Window overestimate_window();

enum class Side { positive, negative };

/// Per-N coefficient b with |E| < b*N when |x| is below p percent of M and
/// of N^4. The positive side is an exact rational (point interval); the
/// negative side encloses (1+p/100)^(15/4). Throws ArgumentError for p <= 0.
Interval percent_bound(const Rational& p, Side side);

/// Whether the extreme t reachable at p percent lies inside the proven
/// overestimation window (the regime in which percent_bound was derived).
bool percent_within_window(const Rational& p, Side side);

struct ErrorReport {
  Rational n_value;
  Rational x_value;
  int root = 4;
  Interval true_error;
  Interval formula_enclosure;
  /// Set for k = 4: true when overestimation is proven, false at x = 0.
  /// Empty outside the window or for other root indices.
  std::optional<bool> overestimates;
};

/// true_error and the error bracket in one report. Uses the closed form for
/// k = 4 and remainder_error_enclosure otherwise.
ErrorReport analyze(const SurdForm& form, const Rational& n, const Rational& x, int digits);

}  // namespace surd
