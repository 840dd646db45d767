#include "specta/cad/bipoly.hpp"

#include "specta/error.hpp"

namespace specta::cad {

BiPoly BiPoly::from(const Polynomial& p) {
  BiPoly b;
  for (const auto& coeff : p.coefficientsIn("y")) b.c.push_back(coeff.toUnivariate("x"));
  b.trim();
  return b;
}

Polynomial BiPoly::toPolynomial() const {
  std::vector<Polynomial> coeffs;
  for (const auto& u : c) coeffs.push_back(Polynomial::fromUnivariate(u, "x"));
  return Polynomial::fromCoefficients(coeffs, "y");
}

UPoly BiPoly::atX(const Rational& r) const {
  std::vector<Rational> v;
  for (const auto& u : c) v.push_back(u(r));
  return UPoly(std::move(v));
}

BiPoly BiPoly::derivativeY() const {
  BiPoly d;
  for (std::size_t i = 1; i < c.size(); ++i) d.c.push_back(c[i] * Rational(static_cast<long>(i)));
  d.trim();
  return d;
}

void BiPoly::trim() {
  while (!c.empty() && c.back().isZero()) c.pop_back();
}

BiPoly pseudoRemainder(const BiPoly& a, const BiPoly& b) {
  if (b.isZero()) throw Error(ErrorKind::InputError, "pseudo-remainder by zero");
  BiPoly r = a;
  const int db = b.degreeY();
  while (!r.isZero() && r.degreeY() >= db) {
    const int shift = r.degreeY() - db;
    UPoly lr = r.leading();
    BiPoly next;
    next.c.assign(r.c.size(), UPoly());
    for (std::size_t i = 0; i < r.c.size(); ++i) next.c[i] = r.c[i] * b.leading();
    for (std::size_t i = 0; i < b.c.size(); ++i) next.c[i + shift] -= b.c[i] * lr;
    next.trim();
    r = std::move(next);
  }
  return r;
}

UPoly content(const BiPoly& a) {
  UPoly g;
  for (const auto& u : a.c) {
    g = gcd(g, u);
    if (g.isConstant() && !g.isZero()) return UPoly::constant(1);
  }
  return g;
}

BiPoly primitivePart(const BiPoly& a) {
  if (a.isZero()) return a;
  UPoly g = content(a);
  BiPoly p;
  for (const auto& u : a.c) p.c.push_back(divExact(u, g));
  // Leading coefficient made monic in x.
  Rational s = 1 / p.leading().leading();
  for (auto& u : p.c) u *= s;
  p.trim();
  return p;
}

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  if (a.isZero()) return primitivePart(b);
  if (b.isZero()) return primitivePart(a);
  UPoly cg = gcd(content(a), content(b));
  BiPoly x = primitivePart(a), y = primitivePart(b);
  if (x.degreeY() < y.degreeY()) std::swap(x, y);
  while (!y.isZero() && y.degreeY() > 0) {
    BiPoly r = pseudoRemainder(x, y);
    x = std::move(y);
    y = primitivePart(r);
  }
  BiPoly g;
  if (y.isZero())
    g = x;
  else
    g.c = {UPoly::constant(1)};
  g = primitivePart(g);
  for (auto& u : g.c) u *= cg;
  g.trim();
  return g;
}

BiPoly squarefreePart(const BiPoly& a) {
  if (a.isZero()) throw Error(ErrorKind::InputError, "squarefree part of zero");
  UPoly cont = content(a);
  BiPoly pp = primitivePart(a);
  BiPoly out;
  if (pp.degreeY() > 0) {
    BiPoly g = gcd(pp, pp.derivativeY());
    Polynomial q = divExact(pp.toPolynomial(), g.toPolynomial());
    out = primitivePart(BiPoly::from(q));
  } else {
    out.c = {UPoly::constant(1)};
  }
  UPoly sc = squarefreePart(cont);
  for (auto& u : out.c) u *= sc;
  out.trim();
  return out;
}

}  // namespace specta::cad
