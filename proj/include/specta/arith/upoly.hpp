#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "specta/arith/field_poly.hpp"
#include "specta/arith/rational.hpp"

namespace specta {

/// The rationals as a Field for the algorithms in field_poly.hpp.
struct RationalField {
  using Elem = Rational;
  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
  Elem fromRational(const Rational& q) const { return q; }
  bool isZero(const Elem& a) const { return sgn(a) == 0; }
  int sign(const Elem& a) const { return sgn(a); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return 1 / a; }
  Rational absUpperBound(const Elem& a) const { return abs(a); }
  Rational absLowerBound(const Elem& a) const { return abs(a); }
};

/// Dense univariate polynomial over Q, coefficients stored low degree first.
class UPoly {
 public:
  UPoly() = default;
  UPoly(std::initializer_list<Rational> coeffs);
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c);
  static UPoly monomial(const Rational& c, unsigned degree);
  /// x - root
  static UPoly linear(const Rational& root);

  bool isZero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(unsigned i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }
  bool isConstant() const { return c_.size() <= 1; }

  Rational operator()(const Rational& x) const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const Rational& s);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
  friend UPoly operator*(UPoly a, const Rational& s) { return a *= s; }
  friend UPoly operator*(const Rational& s, UPoly a) { return a *= s; }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  UPoly derivative() const;
  UPoly monic() const;
  UPoly pow(unsigned e) const;
  /// Composition this(inner(x)).
  UPoly compose(const UPoly& inner) const;
  /// Integer coefficients with gcd 1 and positive leading coefficient.
  UPoly primitive() const;

  std::string toString(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
UPoly operator/(const UPoly& a, const UPoly& b);
UPoly operator%(const UPoly& a, const UPoly& b);
/// Monic gcd.
UPoly gcd(const UPoly& a, const UPoly& b);
/// Monic squarefree part.
UPoly squarefreePart(const UPoly& a);
/// Exact division; throws if b does not divide a.
UPoly divExact(const UPoly& a, const UPoly& b);
/// s*a + t*b = gcd(a, b) (monic).
UPoly extendedGcd(const UPoly& a, const UPoly& b, UPoly& s, UPoly& t);

/// Interval image of p over [lo, hi] by Horner evaluation in interval
/// arithmetic; returns an enclosure [outLo, outHi].
void intervalEval(const UPoly& p, const Rational& lo, const Rational& hi, Rational& outLo,
                  Rational& outHi);

}  // namespace specta
