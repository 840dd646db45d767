#pragma once

#include <map>
#include <optional>
#include <string>

#include "specta/arith/rational.hpp"
#include "specta/arith/upoly.hpp"

namespace specta::paths {

/// Order of a series: finite, +infinity (exact zero) or indeterminate (every
/// coefficient below the precision vanishes).
struct SeriesOrder {
  enum class Kind { Finite, Infinite, Indeterminate };
  Kind kind = Kind::Infinite;
  Rational value;

  bool finite() const { return kind == Kind::Finite; }
  std::string toString() const;
  bool operator==(const SeriesOrder&) const = default;
};

/// Truncated Puiseux series sum c_n t^(n/e).
///
/// A series is either exact (a finite closed form) or known only below its
/// precision T: every stored exponent is < T and the coefficients of all
/// exponents < T are exactly the stored ones. No zero coefficient is stored
/// and the ramification e is reduced to the gcd-normal form.
class PuiseuxSeries {
 public:
  using Terms = std::map<long, Rational>;

  /// Exact zero.
  PuiseuxSeries() = default;
  static PuiseuxSeries exact(Terms terms, long ramification = 1);
  static PuiseuxSeries truncated(Terms terms, long ramification, const Rational& precision);
  static PuiseuxSeries constant(const Rational& c);
  static PuiseuxSeries monomial(const Rational& c, const Rational& exponent);
  static PuiseuxSeries fromPolynomial(const UPoly& p);
  /// Zero known below the given exponent.
  static PuiseuxSeries zeroBelow(const Rational& precision);

  long ramification() const { return e_; }
  const Terms& terms() const { return terms_; }
  bool isExact() const { return !precision_.has_value(); }
  /// Exponent below which the series is known; requires !isExact().
  const Rational& precision() const { return *precision_; }
  /// Precision, or nullopt for +infinity.
  const std::optional<Rational>& precisionBound() const { return precision_; }

  bool isExactZero() const { return isExact() && terms_.empty(); }
  /// No nonzero coefficient is known.
  bool isKnownZero() const { return terms_.empty(); }

  SeriesOrder order() const;
  /// Coefficient of the least exponent; requires a finite order.
  const Rational& leadingCoefficient() const;
  /// Least exponent that may carry a nonzero coefficient (order, or the
  /// precision when indeterminate); nullopt for exact zero.
  std::optional<Rational> orderLowerBound() const;
  /// Coefficient of t^exponent; throws IndeterminateOrder at or above the
  /// precision.
  Rational coefficient(const Rational& exponent) const;

  /// Drops the terms of exponent >= bound; the result is known below bound.
  PuiseuxSeries truncate(const Rational& bound) const;
  /// Substitution t -> t^p, p >= 1.
  PuiseuxSeries substitutePower(long p) const;
  /// Equal coefficients below the smaller of the two precisions.
  bool agreesWith(const PuiseuxSeries& o) const;

  PuiseuxSeries operator-() const;
  friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator*(const Rational& s, const PuiseuxSeries& a);
  bool operator==(const PuiseuxSeries&) const = default;

  /// "3*t^2 - t^3 + O(t^5)"; exact series carry no O-term.
  std::string toString(const std::string& var = "t") const;

 private:
  PuiseuxSeries(Terms terms, long e, std::optional<Rational> precision);
  PuiseuxSeries rescaled(long e) const;
  void normalize();

  Terms terms_;
  long e_ = 1;
  std::optional<Rational> precision_;
};

/// 1/a known below min(T_a - 2 ord(a), cap). Throws IndeterminateDenominator
/// when the order of a is unknown and InputError when a is exactly zero.
PuiseuxSeries inverse(const PuiseuxSeries& a, const Rational& cap);
PuiseuxSeries divide(const PuiseuxSeries& a, const PuiseuxSeries& b, const Rational& cap);
/// Square root with positive leading coefficient, known below
/// min(T_a - ord(a)/2, cap). Throws NegativeLeadingSqrt, IrrationalCoefficient
/// (leading coefficient not a rational square) or IndeterminateOrder.
PuiseuxSeries sqrt(const PuiseuxSeries& a, const Rational& cap);
/// Sign flip by the leading coefficient; an indeterminate series stays as is.
PuiseuxSeries abs(const PuiseuxSeries& a);
PuiseuxSeries pow(const PuiseuxSeries& a, unsigned n);

}  // namespace specta::paths
