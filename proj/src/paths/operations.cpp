#include "specta/paths/operations.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

#include "specta/error.hpp"

namespace specta::paths {

namespace {

bool indeterminate(const Error& e) { return e.kind() == ErrorKind::IndeterminateDenominator; }

struct Evaluated {
  PuiseuxSeries value;
  Rational truncation;
};

Evaluated evaluateAdaptive(const SAFunction& f, const FormalPath& alpha, const Rational& T) {
  if (T <= 0) throw Error(ErrorKind::InputError, "truncation must be positive");
  if (f.arity() > alpha.size())
    throw Error(ErrorKind::InputError, "function uses x" + std::to_string(f.arity()) + " but the path has " +
                                           std::to_string(alpha.size()) + " components");
  try {
    PuiseuxSeries s = f.evaluate(alpha.expand(T), T);
    return {s.isExact() ? s : s.truncate(T), T};
  } catch (const Error& e) {
    if (!indeterminate(e)) throw;
  }
  Rational raised = 2 * T;
  try {
    PuiseuxSeries s = f.evaluate(alpha.expand(raised), raised);
    return {s.isExact() ? s : s.truncate(raised), raised};
  } catch (const Error& e) {
    if (!indeterminate(e)) throw;
    throw Error(e.kind(), std::string(e.what()) + " (also at T = " + toString(raised) + ")");
  }
}

Rational constantOf(const PuiseuxSeries& s) {
  SeriesOrder w = s.order();
  if (w.finite() && w.value < 0)
    throw Error(ErrorKind::UnboundedAlongPath, "order " + w.toString() + " along the path");
  if (!s.isExact() && s.precision() <= 0)
    throw Error(ErrorKind::IndeterminateOrder,
                "value known only below t^" + toString(s.precision()) + "; raise the truncation");
  return s.coefficient(0);
}

// Order and sign of P along `at`; throws unless the leading coefficient is
// known and positive.
Rational positiveOrder(const Polynomial& p, const std::vector<PuiseuxSeries>& at, const Rational& T) {
  PuiseuxSeries s = SAFunction::polynomial(p).evaluate(at, T);
  SeriesOrder w = s.order();
  if (w.kind == SeriesOrder::Kind::Infinite)
    throw Error(ErrorKind::NotPositiveOnPath, p.toString() + " vanishes identically on the path");
  if (w.kind == SeriesOrder::Kind::Indeterminate)
    throw Error(ErrorKind::IndeterminateOrder, p.toString() + " vanishes below t^" + toString(s.precision()) +
                                                   " on the path; raise the truncation");
  if (sgn(s.leadingCoefficient()) <= 0)
    throw Error(ErrorKind::NotPositiveOnPath, p.toString() + " has leading term " +
                                                  toString(s.leadingCoefficient()) + "*t^" + w.toString());
  return w.value;
}

UPoly toUPoly(const PuiseuxSeries& s, const Rational& below) {
  if (s.ramification() != 1)
    throw Error(ErrorKind::InputError, "component has fractional exponents; reparametrize the path first");
  std::vector<Rational> c;
  for (const auto& [n, v] : s.terms()) {
    if (n >= below) break;
    if (c.size() <= static_cast<std::size_t>(n)) c.resize(static_cast<std::size_t>(n) + 1);
    c[static_cast<std::size_t>(n)] = v;
  }
  return UPoly(std::move(c));
}

bool isMonomialPath(const PuiseuxSeries& s, long& j) {
  if (!s.isExact() || s.terms().size() != 1 || s.ramification() != 1) return false;
  const auto& [n, c] = *s.terms().begin();
  j = n;
  return c == 1 && n >= 1;
}

}  // namespace

Rational defaultTruncation() {
  const char* env = std::getenv("SPECTA_TRUNCATION");
  if (env == nullptr || *env == '\0') return 32;
  long value = 0;
  auto [end, ec] = std::from_chars(env, env + std::strlen(env), value);
  if (ec != std::errc() || *end != '\0' || value <= 0)
    throw Error(ErrorKind::InputError, std::string("SPECTA_TRUNCATION must be a positive integer, got '") + env + "'");
  return value;
}

SeriesOrder seriesOrder(const PuiseuxSeries& s) { return s.order(); }

PuiseuxSeries evalOnPath(const SAFunction& f, const FormalPath& alpha, const Rational& T) {
  return evaluateAdaptive(f, alpha, T).value;
}

PuiseuxSeries evalOnPath(const SAFunction& f, const FormalPath& alpha) {
  return evalOnPath(f, alpha, defaultTruncation());
}

Rational constantTerm(const SAFunction& f, const FormalPath& alpha, const Rational& T) {
  return constantOf(evalOnPath(f, alpha, T));
}

const char* idealStatusName(IdealStatus s) {
  switch (s) {
    case IdealStatus::InIdealUpToT: return "IN_IDEAL_UP_TO_T";
    case IdealStatus::NotInIdeal: return "NOT_IN_IDEAL";
    case IdealStatus::ExactlyInIdeal: return "EXACTLY_IN_IDEAL";
  }
  return "";
}

IdealVerdict idealMembership(const SAFunction& f, const FormalPath& alpha, IdealKind which, const Rational& T) {
  Evaluated ev = evaluateAdaptive(f, alpha, T);
  const PuiseuxSeries& s = ev.value;
  IdealVerdict v;
  v.truncation = ev.truncation;
  if (s.order().finite()) v.witnessOrder = s.order().value;
  if (which == IdealKind::MStar) {
    Rational c = constantOf(s);
    if (sgn(c) != 0) {
      v.status = IdealStatus::NotInIdeal;
      v.witness = c;
      return v;
    }
  } else if (!s.isKnownZero()) {
    v.status = IdealStatus::NotInIdeal;
    v.witness = s.leadingCoefficient();
    return v;
  }
  v.status = s.isExactZero() ? IdealStatus::ExactlyInIdeal : IdealStatus::InIdealUpToT;
  return v;
}

long positivityBound(const std::vector<Polynomial>& polys, const FormalPath& alpha, const Rational& T) {
  if (polys.empty()) throw Error(ErrorKind::InputError, "positivityBound needs at least one polynomial");
  auto at = alpha.expand(T);
  Rational maxOrder = 0;
  for (const auto& p : polys) maxOrder = std::max(maxOrder, positiveOrder(p, at, T));
  return floorOf(maxOrder).get_si() + 1;
}

bool positiveAlong(const std::vector<Polynomial>& polys, const std::vector<PuiseuxSeries>& at, const Rational& T) {
  for (const auto& p : polys) {
    try {
      positiveOrder(p, at, T);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotPositiveOnPath) throw;
      return false;
    }
  }
  return true;
}

CarrierData compactCarrier(const FormalPath& alpha, const std::vector<Polynomial>& positive,
                           const std::optional<Polynomial>& equation, const Rational& T) {
  CarrierData out;
  out.k = positivityBound(positive, alpha, T);
  auto at = alpha.expand(T);
  if (equation) {
    PuiseuxSeries g = SAFunction::polynomial(*equation).evaluate(at, T);
    if (!g.isKnownZero())
      throw Error(ErrorKind::NotOnVariety, equation->toString() + " has leading term " +
                                               toString(g.leadingCoefficient()) + "*t^" + g.order().toString());
  }
  Rational next = out.k + 1;
  for (const auto& s : at) {
    out.mu.push_back(toUPoly(s, next));
    out.s0.push_back(s.coefficient(next));
    auto rest = (s - PuiseuxSeries::fromPolynomial(out.mu.back())).orderLowerBound();
    if (rest && *rest < next) throw Error(ErrorKind::InputError, "truncation does not reach t^(k+1)");
  }
  // Grid s0 + {-1/2, 0, 1/2}^m inside the unit ball.
  std::size_t m = at.size();
  std::vector<int> digits(m, 0);
  while (true) {
    Rational norm = 0;
    std::vector<PuiseuxSeries> gamma;
    for (std::size_t i = 0; i < m; ++i) {
      Rational offset = makeRational(digits[i] - 1, 2);
      norm += offset * offset;
      gamma.push_back(PuiseuxSeries::fromPolynomial(out.mu[i]) +
                      PuiseuxSeries::monomial(out.s0[i] + offset, next));
    }
    if (norm <= 1) {
      if (!positiveAlong(positive, gamma, T))
        throw Error(ErrorKind::NotPositiveOnPath, "carrier sample path leaves the positivity region");
      ++out.samplesChecked;
    }
    std::size_t i = 0;
    while (i < m && digits[i] == 2) digits[i++] = 0;
    if (i == m) break;
    ++digits[i];
  }
  return out;
}

NeighborhoodElement neighborhoodElement(const FormalPath& alpha, long ell, long k, const Rational& T) {
  if (ell < 1 || k < 1) throw Error(ErrorKind::InputError, "ell and k must be at least 1");
  if (alpha.size() < 1) throw Error(ErrorKind::InputError, "empty path");
  auto at = alpha.expand(T);
  if (!(at[0] == PuiseuxSeries::monomial(1, 1)))
    throw Error(ErrorKind::NormalizationRequired, "first component must be t, got " + at[0].toString());
  NeighborhoodElement u;
  u.ell = ell;
  u.k = k;
  Rational below = ell + 2;
  Polynomial x1 = Polynomial::variable("x1");
  Polynomial f = x1.pow(static_cast<unsigned>(2 * ell + 2));
  u.gamma.push_back(UPoly{0, 1});
  for (std::size_t j = 1; j < at.size(); ++j) {
    if (!at[j].isExact() && at[j].precision() < below)
      throw Error(ErrorKind::IndeterminateOrder, "truncation below t^" + toString(below));
    u.gamma.push_back(toUPoly(at[j], below));
    Polynomial d = Polynomial::variable("x" + std::to_string(j + 1)) - Polynomial::fromUnivariate(u.gamma.back(), "x1");
    f -= d * d;
  }
  u.f = SAFunction::polynomial(f);
  u.h = SAFunction::polynomial(Polynomial::constant(makeRational(1, k * k)) - x1 * x1);
  return u;
}

NeighborhoodMembership neighborhoodMembership(const NeighborhoodElement& u, const std::vector<PuiseuxSeries>& mu,
                                              const Rational& T) {
  NeighborhoodMembership m;
  m.fValue = u.f.evaluate(mu, T);
  m.hValue = u.h.evaluate(mu, T);
  auto positive = [](const PuiseuxSeries& s) {
    if (s.isExactZero()) return false;
    if (s.isKnownZero())
      throw Error(ErrorKind::IndeterminateOrder,
                  "sign unknown below t^" + toString(s.precision()) + "; raise the truncation");
    return sgn(s.leadingCoefficient()) > 0;
  };
  m.member = positive(m.fValue) && positive(m.hValue);
  return m;
}

NeighborhoodMembership neighborhoodMembership(const NeighborhoodElement& u, const FormalPath& mu, const Rational& T) {
  return neighborhoodMembership(u, mu.expand(T), T);
}

UPoly factorialPolynomial(long k) {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(k, 1L) + 1));
  for (long n = 2; n <= k; ++n) c[static_cast<std::size_t>(n)] = Rational(factorial(static_cast<unsigned long>(n)));
  return UPoly(std::move(c));
}

SAFunction factorialSeparator(long k) {
  if (k < 2) throw Error(ErrorKind::InputError, "separator index must be at least 2");
  Polynomial x = Polynomial::variable("x1");
  Polynomial d = Polynomial::variable("x2") - Polynomial::fromUnivariate(factorialPolynomial(k), "x1");
  SAFunction num = SAFunction::polynomial(d * d);
  return num / (num + SAFunction::polynomial(x.pow(static_cast<unsigned>(2 * k))));
}

std::optional<Separation> separateFromAlgebraic(const FormalPath& alpha, const FormalPath& mu, long kMax,
                                                const Rational& T) {
  if (alpha.size() < 2 || mu.size() < 2) throw Error(ErrorKind::InputError, "paths must have two components");
  long j = 0;
  if (!isMonomialPath(mu.component(0).expand(T), j))
    throw Error(ErrorKind::NormalizationRequired, "first component of mu must be t^j exactly");
  std::optional<Rational> difference;
  {
    PuiseuxSeries d = alpha.reparametrize(j).component(1).expand(T) - mu.component(1).expand(T);
    if (d.order().finite()) difference = d.order().value;
  }
  for (long k = 2; k <= kMax; ++k) {
    Rational c = constantTerm(factorialSeparator(k), mu, T);
    if (sgn(c) != 0) return Separation{k, c, difference};
  }
  return std::nullopt;
}

}  // namespace specta::paths
