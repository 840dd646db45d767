#pragma once

#include <string>
#include <vector>

#include "specta/arith/rational.hpp"
#include "specta/arith/upoly.hpp"

namespace specta {

/// A real algebraic number given by a squarefree defining polynomial and a
/// rational interval. Either lo == hi (the number is that rational) or the
/// open interval (lo, hi) contains exactly one root of the defining
/// polynomial and neither endpoint is a root.
class AlgebraicNumber {
 public:
  explicit AlgebraicNumber(const Rational& value);
  /// Validates the isolation invariant; throws InputError otherwise.
  AlgebraicNumber(UPoly defining, Rational lo, Rational hi);

  const UPoly& defining() const { return defining_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool isRational() const { return lo_ == hi_; }
  /// Requires isRational().
  const Rational& rationalValue() const;

  /// Copy whose isolating interval has width <= width (possibly exact).
  AlgebraicNumber refined(const Rational& width) const;
  /// Copy with one bisection step applied.
  AlgebraicNumber bisected() const;

  double approx() const;
  std::string toString() const;

 private:
  struct Unchecked {};
  AlgebraicNumber(UPoly defining, Rational lo, Rational hi, Unchecked);
  UPoly defining_;
  Rational lo_;
  Rational hi_;
};

/// Ordered, pairwise distinct real roots of p (p nonzero). Rational roots are
/// returned exactly.
std::vector<AlgebraicNumber> isolateRealRoots(const UPoly& p);

/// Sign of p at a, exact.
int signAt(const UPoly& p, const AlgebraicNumber& a);

/// True when the factor g of a's defining polynomial vanishes at a.
bool factorVanishesAt(const UPoly& g, const AlgebraicNumber& a);

/// -1, 0, +1 for a < q, a == q, a > q.
int compare(const AlgebraicNumber& a, const Rational& q);
int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);

}  // namespace specta
