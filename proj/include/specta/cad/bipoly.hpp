#pragma once

#include <vector>

#include "specta/arith/polynomial.hpp"
#include "specta/arith/upoly.hpp"

namespace specta::cad {

/// Polynomial in Q[x][y]: coefficients of y^0, y^1, ... as polynomials in x.
/// Trimmed (no zero leading coefficient).
struct BiPoly {
  std::vector<UPoly> c;

  static BiPoly from(const Polynomial& p);
  Polynomial toPolynomial() const;

  bool isZero() const { return c.empty(); }
  int degreeY() const { return static_cast<int>(c.size()) - 1; }
  const UPoly& leading() const { return c.back(); }
  /// F(r, y) as a polynomial in y.
  UPoly atX(const Rational& r) const;
  BiPoly derivativeY() const;
  void trim();
};

/// lc(b)^k * a mod b in y for some k <= deg a - deg b + 1; b nonzero.
BiPoly pseudoRemainder(const BiPoly& a, const BiPoly& b);
/// gcd of the x-coefficients (monic), zero for the zero polynomial.
UPoly content(const BiPoly& a);
BiPoly primitivePart(const BiPoly& a);
/// Primitive gcd in y via the primitive PRS, times the gcd of the contents.
BiPoly gcd(const BiPoly& a, const BiPoly& b);
/// Squarefree part: product of the distinct irreducible factors.
BiPoly squarefreePart(const BiPoly& a);

}  // namespace specta::cad
