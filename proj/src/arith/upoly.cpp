#include "specta/arith/upoly.hpp"

#include <algorithm>
#include <sstream>

namespace specta {

namespace {
const RationalField kQ{};
}

UPoly::UPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly({c}); }

UPoly UPoly::monomial(const Rational& c, unsigned degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return UPoly(std::move(v));
}

UPoly UPoly::linear(const Rational& root) { return UPoly({-root, Rational(1)}); }

void UPoly::trim() { fpoly::trim(kQ, c_); }

Rational UPoly::operator()(const Rational& x) const { return fpoly::evalAt(kQ, c_, x); }

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  c_ = fpoly::add(kQ, c_, o.c_);
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  c_ = fpoly::sub(kQ, c_, o.c_);
  return *this;
}

UPoly& UPoly::operator*=(const UPoly& o) {
  c_ = fpoly::mul(kQ, c_, o.c_);
  return *this;
}

UPoly& UPoly::operator*=(const Rational& s) {
  c_ = fpoly::scale(kQ, c_, s);
  return *this;
}

UPoly UPoly::derivative() const { return UPoly(fpoly::derivative(kQ, c_)); }

UPoly UPoly::monic() const { return UPoly(fpoly::monic(kQ, c_)); }

UPoly UPoly::pow(unsigned e) const {
  UPoly result = UPoly::constant(1);
  UPoly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

UPoly UPoly::compose(const UPoly& inner) const {
  UPoly acc;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc *= inner;
    acc += UPoly::constant(c_[i]);
  }
  return acc;
}

UPoly UPoly::primitive() const {
  if (c_.empty()) return *this;
  Integer den = 1;
  for (const auto& c : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  Integer g = 0;
  for (const auto& c : c_) {
    Integer n = c.get_num() * (den / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  Rational factor = makeRational(den, g);
  if (c_.back() < 0) factor = -factor;
  return *this * factor;
}

std::string UPoly::toString(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1);
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (!unit) os << mag.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  std::vector<Rational> qv, rv;
  fpoly::divmod(kQ, a.coeffs(), b.coeffs(), qv, rv);
  q = UPoly(std::move(qv));
  r = UPoly(std::move(rv));
}

UPoly operator/(const UPoly& a, const UPoly& b) {
  UPoly q, r;
  divmod(a, b, q, r);
  return q;
}

UPoly operator%(const UPoly& a, const UPoly& b) {
  UPoly q, r;
  divmod(a, b, q, r);
  return r;
}

UPoly gcd(const UPoly& a, const UPoly& b) { return UPoly(fpoly::gcd(kQ, a.coeffs(), b.coeffs())); }

UPoly squarefreePart(const UPoly& a) { return UPoly(fpoly::squarefreePart(kQ, a.coeffs())); }

UPoly divExact(const UPoly& a, const UPoly& b) {
  UPoly q, r;
  divmod(a, b, q, r);
  if (!r.isZero()) throw Error(ErrorKind::InputError, "divExact: remainder is nonzero");
  return q;
}

UPoly extendedGcd(const UPoly& a, const UPoly& b, UPoly& s, UPoly& t) {
  UPoly r0 = a, r1 = b;
  UPoly s0 = UPoly::constant(1), s1;
  UPoly t0, t1 = UPoly::constant(1);
  while (!r1.isZero()) {
    UPoly q, r;
    divmod(r0, r1, q, r);
    UPoly s2 = s0 - q * s1;
    UPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.isZero()) {
    s = UPoly();
    t = UPoly();
    return r0;
  }
  Rational inv = 1 / r0.leading();
  s = s0 * inv;
  t = t0 * inv;
  return r0 * inv;
}

void intervalEval(const UPoly& p, const Rational& lo, const Rational& hi, Rational& outLo,
                  Rational& outHi) {
  outLo = 0;
  outHi = 0;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    // [outLo, outHi] * [lo, hi]
    Rational a = outLo * lo, b = outLo * hi, d = outHi * lo, e = outHi * hi;
    outLo = std::min({a, b, d, e});
    outHi = std::max({a, b, d, e});
    outLo += c[i];
    outHi += c[i];
  }
}

}  // namespace specta
