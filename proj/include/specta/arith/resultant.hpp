#pragma once

// Subresultant PRS over an integral domain with exact division.
//
// C must provide +, -, *, unary -, isZero() and a free divExact(a, b).
// Polynomials are coefficient vectors in the main variable, low degree first,
// trimmed.

#include <vector>

#include "specta/error.hpp"

namespace specta::subres {

template <class C>
using Coeffs = std::vector<C>;

template <class C>
void trim(Coeffs<C>& p) {
  while (!p.empty() && p.back().isZero()) p.pop_back();
}

template <class C>
C power(const C& base, unsigned e, const C& one) {
  C r = one;
  for (unsigned i = 0; i < e; ++i) r = r * base;
  return r;
}

/// lc(b)^(deg a - deg b + 1) * a  mod  b
template <class C>
Coeffs<C> pseudoRemainder(Coeffs<C> a, const Coeffs<C>& b, const C& one) {
  const int db = static_cast<int>(b.size()) - 1;
  int e = static_cast<int>(a.size()) - db;
  const C& lb = b.back();
  while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
    const std::size_t shift = a.size() - b.size();
    C la = a.back();
    for (auto& c : a) c = c * lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = a[i + shift] - la * b[i];
    a.pop_back();
    trim(a);
    --e;
  }
  if (e > 0) {
    C f = power(lb, static_cast<unsigned>(e), one);
    for (auto& c : a) c = c * f;
  }
  return a;
}

/// Standard resultant (Sylvester determinant, a rows first).
template <class C>
C resultant(Coeffs<C> a, Coeffs<C> b, const C& one) {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) throw Error(ErrorKind::InputError, "resultant of a zero polynomial");
  int da = static_cast<int>(a.size()) - 1;
  int db = static_cast<int>(b.size()) - 1;
  if (da == 0) return power(a[0], static_cast<unsigned>(db), one);
  if (db == 0) return power(b[0], static_cast<unsigned>(da), one);
  bool negate = false;
  if (da < db) {
    std::swap(a, b);
    std::swap(da, db);
    if ((da % 2 == 1) && (db % 2 == 1)) negate = true;
  }
  C g = one;
  C h = one;
  while (true) {
    const int delta = da - db;
    if ((da % 2 == 1) && (db % 2 == 1)) negate = !negate;
    Coeffs<C> r = pseudoRemainder(a, b, one);
    a = b;
    if (r.empty()) return one - one;
    C divisor = g * power(h, static_cast<unsigned>(delta), one);
    for (auto& c : r) c = divExact(c, divisor);
    b = std::move(r);
    g = a.back();
    // h <- g^delta / h^(delta-1); unchanged when delta == 0
    if (delta > 0) {
      h = divExact(power(g, static_cast<unsigned>(delta), one),
                   power(h, static_cast<unsigned>(delta - 1), one));
    }
    da = static_cast<int>(a.size()) - 1;
    db = static_cast<int>(b.size()) - 1;
    if (db == 0) {
      C res = divExact(power(b.back(), static_cast<unsigned>(da), one),
                       power(h, static_cast<unsigned>(da - 1), one));
      return negate ? -res : res;
    }
  }
}

}  // namespace specta::subres
