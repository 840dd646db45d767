#pragma once

#include <memory>

#include "specta/arith/algebraic.hpp"
#include "specta/arith/upoly.hpp"

namespace specta {

/// Q(alpha) for a real algebraic alpha, as a Field for field_poly.hpp.
///
/// Elements are rational polynomials in alpha. The modulus starts as the
/// (squarefree, possibly reducible) defining polynomial of alpha; whenever a
/// zero test or inversion meets a nontrivial common factor, the modulus is
/// replaced by the factor that vanishes at alpha (dynamic evaluation), so the
/// quotient ring behaves as a field along every computation. The modulus is
/// per-object state: use one AlgebraicField per thread.
class AlgebraicField {
 public:
  using Elem = UPoly;

  explicit AlgebraicField(AlgebraicNumber alpha);

  const AlgebraicNumber& alpha() const { return alpha_; }
  const UPoly& modulus() const { return modulus_; }

  Elem zero() const { return UPoly(); }
  Elem one() const { return UPoly::constant(1); }
  Elem fromRational(const Rational& q) const { return UPoly::constant(q); }
  Elem generator() const;

  bool isZero(const Elem& a) const;
  int sign(const Elem& a) const;
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const;
  Rational absUpperBound(const Elem& a) const;
  /// Requires a != 0.
  Rational absLowerBound(const Elem& a) const;

  /// Rational enclosure [lo, hi] of a(alpha).
  void enclose(const Elem& a, Rational& lo, Rational& hi) const;

 private:
  Elem reduce(const Elem& a) const;
  // Splits the modulus along g = gcd(a, modulus); returns whether a vanishes
  // at alpha.
  bool splitOn(const UPoly& a) const;

  mutable AlgebraicNumber alpha_;
  mutable UPoly modulus_;
};

}  // namespace specta
