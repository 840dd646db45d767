#include "specta/paths/puiseux.hpp"

#include <numeric>
#include <vector>

#include "specta/error.hpp"

namespace specta::paths {

namespace {

std::optional<Rational> minBound(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

std::optional<Rational> plusBound(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

Rational exponentOf(long n, long e) { return makeRational(n, e); }

// Number of indices i >= 0 with (offset + i) / e < bound.
long countBelow(const Rational& bound, long e, long offset) {
  Integer c = ceilOf(bound * e - offset);
  return c <= 0 ? 0 : c.get_si();
}

// Dense coefficients b[i] of t^((n0 + i)/e), i < count.
std::vector<Rational> dense(const PuiseuxSeries& a, long n0, long count) {
  std::vector<Rational> out(static_cast<std::size_t>(count));
  for (const auto& [n, c] : a.terms())
    if (n - n0 < count) out[static_cast<std::size_t>(n - n0)] = c;
  return out;
}

}  // namespace

std::string SeriesOrder::toString() const {
  switch (kind) {
    case Kind::Finite: return specta::toString(value);
    case Kind::Infinite: return "+inf";
    case Kind::Indeterminate: return "indeterminate";
  }
  return "";
}

PuiseuxSeries::PuiseuxSeries(Terms terms, long e, std::optional<Rational> precision)
    : terms_(std::move(terms)), e_(e), precision_(std::move(precision)) {
  if (e_ <= 0) throw Error(ErrorKind::InputError, "ramification must be positive");
  normalize();
}

PuiseuxSeries PuiseuxSeries::exact(Terms terms, long ramification) {
  return PuiseuxSeries(std::move(terms), ramification, std::nullopt);
}

PuiseuxSeries PuiseuxSeries::truncated(Terms terms, long ramification, const Rational& precision) {
  return PuiseuxSeries(std::move(terms), ramification, precision);
}

PuiseuxSeries PuiseuxSeries::constant(const Rational& c) { return exact({{0, c}}); }

PuiseuxSeries PuiseuxSeries::monomial(const Rational& c, const Rational& exponent) {
  long e = exponent.get_den().get_si();
  return exact({{exponent.get_num().get_si(), c}}, e);
}

PuiseuxSeries PuiseuxSeries::fromPolynomial(const UPoly& p) {
  Terms t;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) t[static_cast<long>(i)] = p.coeffs()[i];
  return exact(std::move(t));
}

PuiseuxSeries PuiseuxSeries::zeroBelow(const Rational& precision) { return truncated({}, 1, precision); }

void PuiseuxSeries::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    bool drop = sgn(it->second) == 0 || (precision_ && exponentOf(it->first, e_) >= *precision_);
    it = drop ? terms_.erase(it) : std::next(it);
  }
  long g = e_;
  for (const auto& [n, c] : terms_) g = std::gcd(g, n);
  if (g > 1) {
    Terms reduced;
    for (auto& [n, c] : terms_) reduced.emplace(n / g, c);
    terms_ = std::move(reduced);
    e_ /= g;
  }
}

PuiseuxSeries PuiseuxSeries::rescaled(long e) const {
  PuiseuxSeries out = *this;
  long f = e / e_;
  if (f == 1) return out;
  out.terms_.clear();
  for (const auto& [n, c] : terms_) out.terms_.emplace(n * f, c);
  out.e_ = e;
  return out;
}

SeriesOrder PuiseuxSeries::order() const {
  if (!terms_.empty()) return {SeriesOrder::Kind::Finite, exponentOf(terms_.begin()->first, e_)};
  if (isExact()) return {SeriesOrder::Kind::Infinite, Rational(0)};
  return {SeriesOrder::Kind::Indeterminate, Rational(0)};
}

const Rational& PuiseuxSeries::leadingCoefficient() const {
  if (terms_.empty()) throw Error(ErrorKind::IndeterminateOrder, "series has no known nonzero term");
  return terms_.begin()->second;
}

std::optional<Rational> PuiseuxSeries::orderLowerBound() const {
  if (!terms_.empty()) return exponentOf(terms_.begin()->first, e_);
  return precision_;
}

Rational PuiseuxSeries::coefficient(const Rational& exponent) const {
  if (precision_ && exponent >= *precision_)
    throw Error(ErrorKind::IndeterminateOrder,
                "coefficient of t^" + specta::toString(exponent) + " lies beyond the precision " +
                    specta::toString(*precision_));
  Rational scaled = exponent * e_;
  if (scaled.get_den() != 1) return 0;
  auto it = terms_.find(scaled.get_num().get_si());
  return it == terms_.end() ? Rational(0) : it->second;
}

PuiseuxSeries PuiseuxSeries::truncate(const Rational& bound) const {
  return PuiseuxSeries(terms_, e_, minBound(precision_, bound));
}

PuiseuxSeries PuiseuxSeries::substitutePower(long p) const {
  if (p < 1) throw Error(ErrorKind::InputError, "substitution power must be positive");
  Terms t;
  for (const auto& [n, c] : terms_) t.emplace(n * p, c);
  std::optional<Rational> prec;
  if (precision_) prec = *precision_ * p;
  return PuiseuxSeries(std::move(t), e_, prec);
}

bool PuiseuxSeries::agreesWith(const PuiseuxSeries& o) const {
  auto bound = minBound(precision_, o.precision_);
  long e = std::lcm(e_, o.e_);
  PuiseuxSeries a = rescaled(e), b = o.rescaled(e);
  auto below = [&](long n) { return !bound || exponentOf(n, e) < *bound; };
  for (const auto& [n, c] : a.terms_)
    if (below(n) && b.coefficient(exponentOf(n, e)) != c) return false;
  for (const auto& [n, c] : b.terms_)
    if (below(n) && a.coefficient(exponentOf(n, e)) != c) return false;
  return true;
}

PuiseuxSeries PuiseuxSeries::operator-() const {
  PuiseuxSeries out = *this;
  for (auto& [n, c] : out.terms_) c = -c;
  return out;
}

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  long e = std::lcm(a.e_, b.e_);
  PuiseuxSeries x = a.rescaled(e), y = b.rescaled(e);
  for (const auto& [n, c] : y.terms_) x.terms_[n] += c;
  return PuiseuxSeries(std::move(x.terms_), e, minBound(a.precision_, b.precision_));
}

PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + (-b); }

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  if (a.isExactZero() || b.isExactZero()) return PuiseuxSeries();
  // a*b is known below min(ord a + T_b, ord b + T_a).
  auto prec = minBound(plusBound(a.orderLowerBound(), b.precision_), plusBound(b.orderLowerBound(), a.precision_));
  long e = std::lcm(a.e_, b.e_);
  PuiseuxSeries x = a.rescaled(e), y = b.rescaled(e);
  PuiseuxSeries::Terms out;
  for (const auto& [n, c] : x.terms_)
    for (const auto& [m, d] : y.terms_) {
      if (prec && exponentOf(n + m, e) >= *prec) break;
      out[n + m] += c * d;
    }
  return PuiseuxSeries(std::move(out), e, prec);
}

PuiseuxSeries operator*(const Rational& s, const PuiseuxSeries& a) { return PuiseuxSeries::constant(s) * a; }

std::string PuiseuxSeries::toString(const std::string& var) const {
  std::string out;
  for (const auto& [n, c] : terms_) {
    Rational ex = exponentOf(n, e_);
    bool neg = sgn(c) < 0;
    Rational mag = abs(c);
    if (out.empty())
      out = neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (ex == 0) {
      out += specta::toString(mag);
      continue;
    }
    if (mag != 1) out += specta::toString(mag) + "*";
    out += var;
    if (ex != 1) out += ex.get_den() == 1 ? "^" + specta::toString(ex) : "^(" + specta::toString(ex) + ")";
  }
  if (precision_) {
    Rational p = *precision_;
    std::string big = "O(" + var + (p == 1 ? "" : p.get_den() == 1 ? "^" + specta::toString(p) : "^(" + specta::toString(p) + ")") + ")";
    out += out.empty() ? big : " + " + big;
  }
  return out.empty() ? "0" : out;
}

PuiseuxSeries inverse(const PuiseuxSeries& a, const Rational& cap) {
  if (a.isExactZero()) throw Error(ErrorKind::InputError, "division by a series that is identically zero");
  if (a.isKnownZero())
    throw Error(ErrorKind::IndeterminateDenominator,
                "denominator vanishes below t^" + toString(a.precision()) + "; raise the truncation");
  long e = a.ramification();
  long n0 = a.terms().begin()->first;
  Rational q = makeRational(n0, e);
  if (a.isExact() && a.terms().size() == 1) return PuiseuxSeries::exact({{-n0, 1 / a.leadingCoefficient()}}, e);
  Rational prec = a.isExact() ? cap : std::min<Rational>(cap, a.precision() - 2 * q);
  long count = countBelow(prec, e, -n0);
  std::vector<Rational> b = dense(a, n0, count);
  std::vector<Rational> c(static_cast<std::size_t>(count));
  Rational inv0 = 1 / a.leadingCoefficient();
  for (long i = 0; i < count; ++i) {
    Rational s = i == 0 ? Rational(1) : Rational(0);
    for (long j = 1; j <= i; ++j) s -= b[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(i - j)];
    c[static_cast<std::size_t>(i)] = s * inv0;
  }
  PuiseuxSeries::Terms out;
  for (long i = 0; i < count; ++i) out[i - n0] = c[static_cast<std::size_t>(i)];
  return PuiseuxSeries::truncated(std::move(out), e, prec);
}

PuiseuxSeries divide(const PuiseuxSeries& a, const PuiseuxSeries& b, const Rational& cap) {
  if (a.isExactZero()) {
    inverse(b, cap);  // surfaces the denominator errors
    return a;
  }
  PuiseuxSeries q = a * inverse(b, cap);
  return q.isExact() ? q : q.truncate(cap);
}

PuiseuxSeries sqrt(const PuiseuxSeries& a, const Rational& cap) {
  if (a.isExactZero()) return a;
  if (a.isKnownZero()) return PuiseuxSeries::zeroBelow(std::min<Rational>(cap, a.precision() / 2));
  if (sgn(a.leadingCoefficient()) < 0)
    throw Error(ErrorKind::NegativeLeadingSqrt, "square root of a series with leading term " +
                                                    toString(a.leadingCoefficient()) + "*t^" + a.order().toString());
  Rational root0;
  if (!rationalSqrt(a.leadingCoefficient(), root0))
    throw Error(ErrorKind::IrrationalCoefficient,
                "leading coefficient " + toString(a.leadingCoefficient()) + " is not a rational square");
  long e = a.ramification();
  long n0 = a.terms().begin()->first;
  if (n0 % 2 != 0) {
    e *= 2;
    n0 *= 2;
  }
  Rational q = makeRational(n0, e);
  Rational prec = a.isExact() ? cap : std::min<Rational>(cap, a.precision() - q / 2);
  long half = n0 / 2;
  long count = countBelow(prec, e, half);
  std::vector<Rational> b(static_cast<std::size_t>(count));
  long f = e / a.ramification();
  for (const auto& [n, c] : a.terms())
    if (n * f - n0 < count) b[static_cast<std::size_t>(n * f - n0)] = c;
  std::vector<Rational> d(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) {
    if (i == 0) {
      d[0] = root0;
      continue;
    }
    Rational s = b[static_cast<std::size_t>(i)];
    for (long j = 1; j < i; ++j) s -= d[static_cast<std::size_t>(j)] * d[static_cast<std::size_t>(i - j)];
    d[static_cast<std::size_t>(i)] = s / (2 * root0);
  }
  PuiseuxSeries::Terms out;
  for (long i = 0; i < count; ++i) out[half + i] = d[static_cast<std::size_t>(i)];
  PuiseuxSeries r = PuiseuxSeries::truncated(out, e, prec);
  if (a.isExact()) {
    PuiseuxSeries candidate = PuiseuxSeries::exact(std::move(out), e);
    if (candidate * candidate == a) return candidate;
  }
  return r;
}

PuiseuxSeries abs(const PuiseuxSeries& a) {
  if (a.isKnownZero() || sgn(a.leadingCoefficient()) > 0) return a;
  return -a;
}

PuiseuxSeries pow(const PuiseuxSeries& a, unsigned n) {
  PuiseuxSeries result = PuiseuxSeries::constant(1);
  PuiseuxSeries base = a;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

}  // namespace specta::paths
