#pragma once

#include <vector>

#include "surd/rational.hpp"

namespace surd {

/// Raw coefficients of
///
///   S = A*N + B*M/N^(k-1) + C*N*x/(D*M + E*N^k),   M = N^k + x.
///
/// No normalization or validity constraints; see SurdForm for those.
struct Coefficients {
  Rational a, b, c, d, e;
  friend bool operator==(const Coefficients&, const Coefficients&) = default;
};

/// A surd approximant of the k-th root in canonical form: C, D, E coprime
/// integers with D > 0, A + B = 1, D + E != 0.
class SurdForm {
 public:
  /// Scales (C, D, E) to canonical form. Throws ArgumentError when k < 2,
  /// A + B != 1, D + E == 0, or C, D, E are all zero.
  static SurdForm from_coefficients(int k, const Coefficients& raw);

  int root() const { return k_; }
  const Coefficients& coefficients() const { return coeffs_; }
  const Rational& a() const { return coeffs_.a; }
  const Rational& b() const { return coeffs_.b; }
  const Rational& c() const { return coeffs_.c; }
  const Rational& d() const { return coeffs_.d; }
  const Rational& e() const { return coeffs_.e; }

  /// C/(D+E): weight of the rational term in t = x/N^k.
  Rational correction_weight() const;
  /// D/(D+E): the pole ratio r in C'*t/(1 + r*t).
  Rational pole_ratio() const;

  friend bool operator==(const SurdForm&, const SurdForm&) = default;

 private:
  SurdForm(int k, Coefficients coeffs) : k_(k), coeffs_(std::move(coeffs)) {}

  int k_ = 2;
  Coefficients coeffs_;
};

/// Matches the approximant to the binomial series of (1+t)^(1/k) through
/// t^3. Throws ArgumentError for k < 2.
SurdForm derive(int k);

/// Exact value of the approximant at (N, x). Throws DomainError at the pole
/// D*M + E*N^k = 0 or when N <= 0.
Rational evaluate(const SurdForm& form, const Rational& n, const Rational& x);
Rational evaluate(int k, const Coefficients& raw, const Rational& n, const Rational& x);

/// Formal power-series coefficients of S/N in t = x/N^k, t^0..t^order. The
/// rational term is expanded as a geometric series; no convergence check.
std::vector<Rational> expand(const SurdForm& form, int order);
/// Same expansion for unnormalized coefficients. Throws DomainError when
/// D + E == 0.
std::vector<Rational> expand(const Coefficients& raw, int order);

/// Outcome of trying to also match the t^4 coefficient.
struct ConsistencyReport {
  /// D/(D+E) forced by the t^3 and t^4 equations.
  Rational required_ratio;
  /// D/(D+E) of the form.
  Rational actual_ratio;
  bool consistent = false;
};

ConsistencyReport check_next_order(const SurdForm& form);

}  // namespace surd
