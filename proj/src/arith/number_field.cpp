#include "specta/arith/number_field.hpp"

#include "specta/error.hpp"

namespace specta {

AlgebraicField::AlgebraicField(AlgebraicNumber alpha)
    : alpha_(std::move(alpha)), modulus_(alpha_.defining().monic()) {
  if (alpha_.isRational()) modulus_ = UPoly::linear(alpha_.lo());
}

UPoly AlgebraicField::generator() const { return reduce(UPoly({Rational(0), Rational(1)})); }

UPoly AlgebraicField::reduce(const UPoly& a) const {
  if (a.degree() < modulus_.degree()) return a;
  return a % modulus_;
}

bool AlgebraicField::splitOn(const UPoly& a) const {
  UPoly r = reduce(a);
  if (r.isZero()) return true;
  UPoly g = gcd(r, modulus_);
  if (g.isConstant()) return false;
  if (factorVanishesAt(g, alpha_)) {
    modulus_ = g;
    return true;
  }
  modulus_ = divExact(modulus_, g).monic();
  return false;
}

bool AlgebraicField::isZero(const Elem& a) const {
  if (a.isZero()) return true;
  if (a.isConstant()) return false;
  return splitOn(a);
}

int AlgebraicField::sign(const Elem& a) const {
  if (isZero(a)) return 0;
  UPoly r = reduce(a);
  if (r.isConstant()) return sgn(r.leading());
  while (true) {
    if (alpha_.isRational()) return sgn(r(alpha_.lo()));
    Rational lo, hi;
    intervalEval(r, alpha_.lo(), alpha_.hi(), lo, hi);
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    alpha_ = alpha_.bisected();
  }
}

UPoly AlgebraicField::mul(const Elem& a, const Elem& b) const { return reduce(a * b); }

UPoly AlgebraicField::inv(const Elem& a) const {
  if (isZero(a)) throw Error(ErrorKind::InputError, "AlgebraicField: inverse of zero");
  UPoly r = reduce(a);
  if (r.isConstant()) return UPoly::constant(1 / r.leading());
  UPoly s, t;
  UPoly g = extendedGcd(r, modulus_, s, t);
  if (!g.isConstant())
    throw Error(ErrorKind::DecompositionFailure, "AlgebraicField: modulus not split");
  return reduce(s);
}

void AlgebraicField::enclose(const Elem& a, Rational& lo, Rational& hi) const {
  UPoly r = reduce(a);
  if (alpha_.isRational()) {
    lo = hi = r(alpha_.lo());
    return;
  }
  intervalEval(r, alpha_.lo(), alpha_.hi(), lo, hi);
}

Rational AlgebraicField::absUpperBound(const Elem& a) const {
  Rational lo, hi;
  enclose(a, lo, hi);
  return std::max(abs(lo), abs(hi));
}

Rational AlgebraicField::absLowerBound(const Elem& a) const {
  int s = sign(a);
  if (s == 0) throw Error(ErrorKind::InputError, "AlgebraicField: lower bound of zero");
  while (true) {
    Rational lo, hi;
    enclose(a, lo, hi);
    if (lo > 0) return lo;
    if (hi < 0) return -hi;
    alpha_ = alpha_.bisected();
  }
}

}  // namespace specta
