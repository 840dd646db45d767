#pragma once

// Dense univariate polynomial algorithms over an exact ordered field.
//
// A Field supplies: Elem, zero(), one(), fromRational(q), isZero(a),
// sign(a), add, sub, mul, neg, inv, and absUpperBound(a) / absLowerBound(a)
// (rational bounds on |a|; the lower bound requires a != 0). Coefficient
// vectors are stored low degree first and trimmed so the zero polynomial is
// empty.

#include <cstddef>
#include <utility>
#include <vector>

#include "specta/arith/rational.hpp"
#include "specta/error.hpp"

namespace specta::fpoly {

template <class Field>
using Poly = std::vector<typename Field::Elem>;

template <class Field>
void trim(const Field& F, Poly<Field>& p) {
  while (!p.empty() && F.isZero(p.back())) p.pop_back();
}

template <class Field>
int degree(const Poly<Field>& p) {
  return static_cast<int>(p.size()) - 1;
}

template <class Field>
Poly<Field> add(const Field& F, const Poly<Field>& a, const Poly<Field>& b) {
  Poly<Field> r(std::max(a.size(), b.size()), F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
  trim(F, r);
  return r;
}

template <class Field>
Poly<Field> sub(const Field& F, const Poly<Field>& a, const Poly<Field>& b) {
  Poly<Field> r(std::max(a.size(), b.size()), F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  trim(F, r);
  return r;
}

template <class Field>
Poly<Field> mul(const Field& F, const Poly<Field>& a, const Poly<Field>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<Field> r(a.size() + b.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  trim(F, r);
  return r;
}

template <class Field>
Poly<Field> scale(const Field& F, const Poly<Field>& a, const typename Field::Elem& s) {
  Poly<Field> r;
  r.reserve(a.size());
  for (const auto& c : a) r.push_back(F.mul(c, s));
  trim(F, r);
  return r;
}

template <class Field>
Poly<Field> derivative(const Field& F, const Poly<Field>& a) {
  Poly<Field> r;
  for (std::size_t i = 1; i < a.size(); ++i)
    r.push_back(F.mul(a[i], F.fromRational(Rational(static_cast<long>(i)))));
  trim(F, r);
  return r;
}

/// a = q*b + r with deg r < deg b; b must be nonzero (trimmed).
template <class Field>
void divmod(const Field& F, const Poly<Field>& a, const Poly<Field>& b, Poly<Field>& q,
            Poly<Field>& r) {
  if (b.empty()) throw Error(ErrorKind::InputError, "polynomial division by zero");
  r = a;
  trim(F, r);
  q.clear();
  if (r.size() < b.size()) return;
  q.assign(r.size() - b.size() + 1, F.zero());
  auto lcInv = F.inv(b.back());
  while (!r.empty() && r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    auto factor = F.mul(r.back(), lcInv);
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i)
      r[i + shift] = F.sub(r[i + shift], F.mul(factor, b[i]));
    r.pop_back();
    trim(F, r);
  }
  trim(F, q);
}

template <class Field>
Poly<Field> rem(const Field& F, const Poly<Field>& a, const Poly<Field>& b) {
  Poly<Field> q, r;
  divmod(F, a, b, q, r);
  return r;
}

template <class Field>
Poly<Field> quo(const Field& F, const Poly<Field>& a, const Poly<Field>& b) {
  Poly<Field> q, r;
  divmod(F, a, b, q, r);
  return q;
}

template <class Field>
Poly<Field> monic(const Field& F, const Poly<Field>& a) {
  if (a.empty()) return a;
  return scale(F, a, F.inv(a.back()));
}

/// Monic gcd; gcd(0, 0) = 0.
template <class Field>
Poly<Field> gcd(const Field& F, Poly<Field> a, Poly<Field> b) {
  trim(F, a);
  trim(F, b);
  while (!b.empty()) {
    Poly<Field> r = rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

template <class Field>
Poly<Field> squarefreePart(const Field& F, const Poly<Field>& a) {
  if (a.size() <= 1) return monic(F, a);
  Poly<Field> g = gcd(F, a, derivative(F, a));
  return monic(F, quo(F, a, g));
}

template <class Field>
typename Field::Elem evalAt(const Field& F, const Poly<Field>& p, const Rational& x) {
  auto acc = F.zero();
  auto fx = F.fromRational(x);
  for (std::size_t i = p.size(); i-- > 0;) acc = F.add(F.mul(acc, fx), p[i]);
  return acc;
}

template <class Field>
std::vector<Poly<Field>> sturmSequence(const Field& F, const Poly<Field>& p) {
  std::vector<Poly<Field>> seq;
  if (p.empty()) return seq;
  seq.push_back(p);
  Poly<Field> d = derivative(F, p);
  if (d.empty()) return seq;
  seq.push_back(d);
  while (true) {
    Poly<Field> r = rem(F, seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (auto& c : r) c = F.neg(c);
    seq.push_back(std::move(r));
  }
  return seq;
}

template <class Field>
int signVariationsAt(const Field& F, const std::vector<Poly<Field>>& seq, const Rational& x) {
  int variations = 0;
  int last = 0;
  for (const auto& p : seq) {
    int s = F.sign(evalAt(F, p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

/// Sign variations at +infinity (dir = +1) or -infinity (dir = -1).
template <class Field>
int signVariationsAtInfinity(const Field& F, const std::vector<Poly<Field>>& seq, int dir) {
  int variations = 0;
  int last = 0;
  for (const auto& p : seq) {
    if (p.empty()) continue;
    int s = F.sign(p.back());
    if (dir < 0 && degree<Field>(p) % 2 == 1) s = -s;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

/// Number of distinct real roots in (a, b], a not a root of seq[0].
template <class Field>
int countRoots(const Field& F, const std::vector<Poly<Field>>& seq, const Rational& a,
               const Rational& b) {
  if (seq.empty()) return 0;
  return signVariationsAt(F, seq, a) - signVariationsAt(F, seq, b);
}

template <class Field>
int countAllRealRoots(const Field& F, const std::vector<Poly<Field>>& seq) {
  if (seq.empty()) return 0;
  return signVariationsAtInfinity(F, seq, -1) - signVariationsAtInfinity(F, seq, +1);
}

/// Cauchy bound: every root has |root| < bound.
template <class Field>
Rational rootBound(const Field& F, const Poly<Field>& p) {
  Rational lead = F.absLowerBound(p.back());
  Rational worst = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    Rational c = F.absUpperBound(p[i]);
    if (c > worst) worst = c;
  }
  Rational bound = 1 + worst / lead;
  // Round up to an integer to keep bisection endpoints dyadic.
  return Rational(ceilOf(bound) + 1);
}

/// Open interval (lo, hi) holding exactly one simple root, or lo == hi when
/// the root is exactly lo.
struct RootInterval {
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
};

namespace detail {

template <class Field>
void isolateIn(const Field& F, const Poly<Field>& p, const std::vector<Poly<Field>>& seq,
               const Rational& a, const Rational& b, int count, std::vector<RootInterval>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back({a, b});
    return;
  }
  Rational mid = (a + b) / 2;
  if (!F.isZero(evalAt(F, p, mid))) {
    int left = countRoots(F, seq, a, mid);
    isolateIn(F, p, seq, a, mid, left, out);
    isolateIn(F, p, seq, mid, b, count - left, out);
    return;
  }
  // mid is a root: fence it off with non-root endpoints.
  Rational eps = (b - a) / 4;
  while (true) {
    Rational l = mid - eps, r = mid + eps;
    if (!F.isZero(evalAt(F, p, l)) && !F.isZero(evalAt(F, p, r)) &&
        countRoots(F, seq, l, r) == 1) {
      int left = countRoots(F, seq, a, l);
      isolateIn(F, p, seq, a, l, left, out);
      out.push_back({mid, mid});
      isolateIn(F, p, seq, r, b, count - left - 1, out);
      return;
    }
    eps /= 2;
  }
}

}  // namespace detail

/// Isolates the distinct real roots of a squarefree nonzero polynomial, in
/// increasing order.
template <class Field>
std::vector<RootInterval> isolateRoots(const Field& F, const Poly<Field>& p) {
  std::vector<RootInterval> out;
  if (p.size() <= 1) return out;
  auto seq = sturmSequence(F, p);
  Rational bound = rootBound(F, p);
  int total = countRoots(F, seq, -bound, bound);
  detail::isolateIn(F, p, seq, -bound, bound, total, out);
  return out;
}

/// Halves an isolating interval of a squarefree polynomial using the sign
/// change across the root.
template <class Field>
void bisect(const Field& F, const Poly<Field>& p, RootInterval& iv) {
  if (iv.exact()) return;
  Rational mid = (iv.lo + iv.hi) / 2;
  int sm = F.sign(evalAt(F, p, mid));
  if (sm == 0) {
    iv.lo = iv.hi = mid;
    return;
  }
  int slo = F.sign(evalAt(F, p, iv.lo));
  if (slo == sm)
    iv.lo = mid;
  else
    iv.hi = mid;
}

}  // namespace specta::fpoly
