#include "specta/arith/algebraic.hpp"

#include <sstream>

#include "specta/arith/field_poly.hpp"
#include "specta/error.hpp"

namespace specta {

namespace {

const RationalField kQ{};

// Refines an isolating interval until no rational with denominator <= |an|
// other than the root itself can lie in it, then tests the simplest rational
// of the interval. Any rational root of an integer polynomial has a
// denominator dividing the leading coefficient.
AlgebraicNumber detectRationalRoot(const AlgebraicNumber& a) {
  if (a.isRational()) return a;
  UPoly prim = a.defining().primitive();
  Integer an = abs(prim.leading().get_num());
  Rational width = makeRational(Integer(1), 2 * an * an);
  AlgebraicNumber r = a.refined(width);
  if (r.isRational()) return r;
  Rational candidate = simplestBetween(r.lo(), r.hi());
  if (candidate > r.lo() && candidate < r.hi() && sgn(prim(candidate)) == 0)
    return AlgebraicNumber(candidate);
  return r;
}

}  // namespace

AlgebraicNumber::AlgebraicNumber(const Rational& value)
    : defining_(UPoly::linear(value)), lo_(value), hi_(value) {}

AlgebraicNumber::AlgebraicNumber(UPoly defining, Rational lo, Rational hi, Unchecked)
    : defining_(std::move(defining)), lo_(std::move(lo)), hi_(std::move(hi)) {}

AlgebraicNumber::AlgebraicNumber(UPoly defining, Rational lo, Rational hi)
    : defining_(std::move(defining)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (defining_.isZero() || defining_.isConstant())
    throw Error(ErrorKind::InputError, "algebraic number needs a nonconstant defining polynomial");
  if (lo_ > hi_) throw Error(ErrorKind::InputError, "algebraic number: lo > hi");
  if (lo_ == hi_) {
    if (sgn(defining_(lo_)) != 0)
      throw Error(ErrorKind::InputError, "algebraic number: exact value is not a root");
    return;
  }
  if (squarefreePart(defining_).degree() != defining_.degree())
    throw Error(ErrorKind::InputError, "algebraic number: defining polynomial not squarefree");
  if (sgn(defining_(lo_)) == 0 || sgn(defining_(hi_)) == 0)
    throw Error(ErrorKind::InputError, "algebraic number: interval endpoint is a root");
  auto seq = fpoly::sturmSequence(kQ, defining_.coeffs());
  if (fpoly::countRoots(kQ, seq, lo_, hi_) != 1)
    throw Error(ErrorKind::InputError, "algebraic number: interval does not isolate one root");
}

const Rational& AlgebraicNumber::rationalValue() const {
  if (!isRational()) throw Error(ErrorKind::InputError, "algebraic number is not rational");
  return lo_;
}

AlgebraicNumber AlgebraicNumber::bisected() const {
  if (isRational()) return *this;
  fpoly::RootInterval iv{lo_, hi_};
  fpoly::bisect(kQ, defining_.coeffs(), iv);
  if (iv.exact()) return AlgebraicNumber(iv.lo);
  return AlgebraicNumber(defining_, iv.lo, iv.hi, Unchecked{});
}

AlgebraicNumber AlgebraicNumber::refined(const Rational& width) const {
  AlgebraicNumber r = *this;
  while (!r.isRational() && r.hi_ - r.lo_ > width) r = r.bisected();
  return r;
}

double AlgebraicNumber::approx() const {
  AlgebraicNumber r = refined(Rational(1, 1u << 30));
  return Rational((r.lo_ + r.hi_) / 2).get_d();
}

std::string AlgebraicNumber::toString() const {
  if (isRational()) return lo_.get_str();
  std::ostringstream os;
  os << "root(" << defining_.toString("x") << "; " << lo_.get_str() << ", " << hi_.get_str()
     << ")";
  return os.str();
}

std::vector<AlgebraicNumber> isolateRealRoots(const UPoly& p) {
  if (p.isZero()) throw Error(ErrorKind::InputError, "isolateRealRoots: zero polynomial");
  UPoly s = squarefreePart(p);
  std::vector<AlgebraicNumber> out;
  for (const auto& iv : fpoly::isolateRoots(kQ, s.coeffs())) {
    if (iv.exact())
      out.emplace_back(iv.lo);
    else
      out.push_back(detectRationalRoot(AlgebraicNumber(s, iv.lo, iv.hi)));
  }
  return out;
}

bool factorVanishesAt(const UPoly& g, const AlgebraicNumber& a) {
  if (g.isZero()) return true;
  if (g.isConstant()) return false;
  if (a.isRational()) return sgn(g(a.lo())) == 0;
  return sgn(g(a.lo())) * sgn(g(a.hi())) < 0;
}

int signAt(const UPoly& p, const AlgebraicNumber& a) {
  if (p.isZero()) return 0;
  if (a.isRational()) return sgn(p(a.lo()));
  if (p.isConstant()) return sgn(p.leading());
  UPoly g = gcd(p, a.defining());
  if (factorVanishesAt(g, a)) return 0;
  AlgebraicNumber r = a;
  while (true) {
    if (r.isRational()) return sgn(p(r.lo()));
    Rational lo, hi;
    intervalEval(p, r.lo(), r.hi(), lo, hi);
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    r = r.bisected();
  }
}

int compare(const AlgebraicNumber& a, const Rational& q) {
  AlgebraicNumber r = a;
  while (true) {
    if (r.isRational()) return sgn(r.lo() - q) > 0 ? 1 : (r.lo() == q ? 0 : -1);
    if (q <= r.lo()) return 1;
    if (q >= r.hi()) return -1;
    if (sgn(r.defining()(q)) == 0) return 0;
    r = r.bisected();
  }
}

int compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (b.isRational()) return compare(a, b.lo());
  if (a.isRational()) return -compare(b, a.lo());
  UPoly g = gcd(a.defining(), b.defining());
  bool maybeEqual = factorVanishesAt(g, a) && factorVanishesAt(g, b);
  std::vector<fpoly::Poly<RationalField>> seq;
  if (maybeEqual) seq = fpoly::sturmSequence(kQ, g.coeffs());
  AlgebraicNumber x = a, y = b;
  while (true) {
    if (x.isRational()) return compare(y, x.lo()) * -1;
    if (y.isRational()) return compare(x, y.lo());
    if (x.hi() <= y.lo()) return -1;
    if (y.hi() <= x.lo()) return 1;
    if (maybeEqual) {
      Rational lo = std::min(x.lo(), y.lo());
      Rational hi = std::max(x.hi(), y.hi());
      if (fpoly::countRoots(kQ, seq, lo, hi) == 1) return 0;
    }
    x = x.bisected();
    y = y.bisected();
  }
}

}  // namespace specta
