#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "specta/error.hpp"
#include "specta/io/parse.hpp"
#include "specta/paths/operations.hpp"

using namespace specta;
using namespace specta::paths;
using specta::io::parseFunction;
using specta::io::parsePathComponents;
using specta::io::parsePathFile;
using specta::io::parsePolynomialList;

namespace {

const Rational kT = 32;

FormalPath factorialPath() {
  return FormalPath({PathComponent::polynomial(UPoly{0, 1}), PathComponent::factorial()});
}

FormalPath path(const std::string& text) { return parsePathComponents(text); }

ErrorKind kindOf(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InputError;
}

// Dense power series oracle: coefficients of t^0 .. t^(n-1).
using Dense = std::vector<Rational>;

Dense convolve(const Dense& a, const Dense& b) {
  Dense c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

Polynomial randomPolynomial(std::mt19937& rng, unsigned vars, unsigned degree, int range) {
  std::uniform_int_distribution<int> coeff(-range, range);
  std::uniform_int_distribution<unsigned> deg(0, degree);
  Polynomial p;
  for (int term = 0; term < 4; ++term) {
    std::map<std::string, unsigned> powers;
    unsigned left = deg(rng);
    for (unsigned v = 1; v <= vars && left > 0; ++v) {
      unsigned e = std::uniform_int_distribution<unsigned>(0, left)(rng);
      if (e > 0) powers["x" + std::to_string(v)] = e;
      left -= e;
    }
    p += Polynomial::monomial(coeff(rng), powers);
  }
  return p;
}

UPoly randomSeriesPolynomial(std::mt19937& rng, int minOrder, int degree, int range) {
  std::uniform_int_distribution<int> coeff(-range, range);
  std::vector<Rational> c(static_cast<std::size_t>(degree + 1));
  for (int i = minOrder; i <= degree; ++i) c[static_cast<std::size_t>(i)] = coeff(rng);
  return UPoly(std::move(c));
}

FormalPath randomPath(std::mt19937& rng) {
  std::vector<PathComponent> comps;
  for (int i = 0; i < 2; ++i) {
    int kind = static_cast<int>(rng() % 4);
    if (kind == 0 && i == 1)
      comps.push_back(PathComponent::factorial());
    else if (kind == 1)
      comps.push_back(PathComponent::ratio(randomSeriesPolynomial(rng, 0, 3, 4), UPoly{1, -1}));
    else
      comps.push_back(PathComponent::polynomial(randomSeriesPolynomial(rng, 0, 4, 4)));
  }
  return FormalPath(std::move(comps));
}

// Built from bounded pieces: g/(1+g^2), g^2/(1+g^2), 1/(1+g^2), abs, sums and products.
SAFunction randomBounded(std::mt19937& rng, int depth) {
  SAFunction g = SAFunction::polynomial(randomPolynomial(rng, 2, 2, 3));
  SAFunction one = SAFunction::constant(1);
  unsigned pick = rng() % 3;
  SAFunction leaf = pick == 0 ? g / (one + g * g) : pick == 1 ? (g * g) / (one + g * g) : one / (one + g * g);
  if (depth == 0) return leaf;
  SAFunction other = randomBounded(rng, depth - 1);
  switch (rng() % 3) {
    case 0: return leaf + other;
    case 1: return leaf * other;
    default: return abs(leaf - other);
  }
}

SAFunction randomFunction(std::mt19937& rng) {
  SAFunction p = SAFunction::polynomial(randomPolynomial(rng, 2, 3, 4));
  SAFunction q = SAFunction::polynomial(randomPolynomial(rng, 2, 2, 3));
  switch (rng() % 4) {
    case 0: return p;
    case 1: return p / (SAFunction::constant(1) + q * q);
    case 2: return abs(p) + q;
    default: return sqrt(q * q) * p;
  }
}

}  // namespace

TEST(Puiseux, OrdersAndNormalForm) {
  auto s = PuiseuxSeries::fromPolynomial(UPoly{0, 0, 3, -1});
  EXPECT_EQ(seriesOrder(s), (SeriesOrder{SeriesOrder::Kind::Finite, 2}));
  EXPECT_EQ(seriesOrder(PuiseuxSeries()).kind, SeriesOrder::Kind::Infinite);
  EXPECT_EQ(seriesOrder(PuiseuxSeries::zeroBelow(5)).kind, SeriesOrder::Kind::Indeterminate);
  EXPECT_EQ(seriesOrder(factorialPath().component(1).expand(kT)), (SeriesOrder{SeriesOrder::Kind::Finite, 2}));

  auto half = PuiseuxSeries::exact({{2, 1}}, 4);
  EXPECT_EQ(half.ramification(), 2);
  EXPECT_EQ(half, PuiseuxSeries::monomial(1, Rational(1, 2)));
  auto mixed = PuiseuxSeries::monomial(1, Rational(1, 2)) + PuiseuxSeries::monomial(1, Rational(1, 3));
  EXPECT_EQ(mixed.ramification(), 6);
  EXPECT_EQ(mixed.order().value, Rational(1, 3));
}

TEST(Puiseux, PrecisionRules) {
  auto known = PuiseuxSeries::truncated({{1, 1}, {2, 5}}, 1, 10);  // t + 5t^2 + O(t^10)
  auto prod = known * PuiseuxSeries::monomial(1, 3);
  EXPECT_EQ(prod.precision(), 13);
  auto sq = known * known;
  EXPECT_EQ(sq.precision(), 11);  // ord + T
  EXPECT_EQ(sq.coefficient(3), 10);
  EXPECT_EQ(kindOf([&] { sq.coefficient(11); }), ErrorKind::IndeterminateOrder);
  auto inv = inverse(known, 100);
  EXPECT_EQ(inv.precision(), 8);  // T - 2 ord
  EXPECT_EQ(inv.order().value, -1);
  EXPECT_TRUE((inv * known).agreesWith(PuiseuxSeries::constant(1)));
  EXPECT_EQ((known + PuiseuxSeries::zeroBelow(4)).precision(), 4);
}

TEST(Puiseux, InverseAndSqrtAreConsistent) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    UPoly p = randomSeriesPolynomial(rng, static_cast<int>(rng() % 3), 5, 5);
    if (p.isZero()) continue;
    auto s = PuiseuxSeries::fromPolynomial(p);
    auto inv = inverse(s, 20);
    EXPECT_TRUE((s * inv).agreesWith(PuiseuxSeries::constant(1))) << p.toString("t");
    auto sq = s * s;
    auto root = sqrt(sq, 20);
    auto expected = sgn(s.leadingCoefficient()) > 0 ? s : -s;
    EXPECT_EQ(root, expected) << "exact square roots stay exact";
    auto perturbed = sq + PuiseuxSeries::monomial(1, 15);
    auto r = sqrt(perturbed, 20);
    EXPECT_FALSE(r.isExact());
    EXPECT_TRUE((r * r).agreesWith(perturbed));
  }
}

TEST(Puiseux, SqrtOfOddOrderRamifies) {
  auto r = sqrt(PuiseuxSeries::fromPolynomial(UPoly{0, 0, 0, 4, 4}), 10);  // 4t^3 (1 + t)
  EXPECT_EQ(r.ramification(), 2);
  EXPECT_EQ(r.order().value, Rational(3, 2));
  EXPECT_EQ(r.leadingCoefficient(), 2);
  EXPECT_TRUE((r * r).agreesWith(PuiseuxSeries::fromPolynomial(UPoly{0, 0, 0, 4, 4})));
}

TEST(Puiseux, Errors) {
  EXPECT_EQ(kindOf([] { sqrt(PuiseuxSeries::constant(-1), 5); }), ErrorKind::NegativeLeadingSqrt);
  EXPECT_EQ(kindOf([] { sqrt(PuiseuxSeries::constant(2), 5); }), ErrorKind::IrrationalCoefficient);
  EXPECT_EQ(kindOf([] { inverse(PuiseuxSeries::zeroBelow(4), 5); }), ErrorKind::IndeterminateDenominator);
  EXPECT_EQ(kindOf([] { inverse(PuiseuxSeries(), 5); }), ErrorKind::InputError);
  EXPECT_TRUE(sqrt(PuiseuxSeries(), 5).isExactZero());
  EXPECT_EQ(sqrt(PuiseuxSeries::zeroBelow(8), 5).precision(), 4);
}

TEST(EvalOnPath, HandExamples) {
  auto v = evalOnPath(parseFunction("x1^2"), path("t, t^3"), kT);
  EXPECT_TRUE(v.isExact());
  EXPECT_EQ(v, PuiseuxSeries::monomial(1, 2));

  // f_4 along mu = (t, 2t^2 + 6t^3); oracle by dense convolution.
  FormalPath mu = path("t, 2t^2 + 6t^3");
  auto f4 = evalOnPath(factorialSeparator(4), mu, kT);
  Dense diff(16);
  diff[2] = 2 - 2;
  diff[3] = 6 - 6;
  diff[4] = -24;  // y - p_4(x) along mu
  Dense num = convolve(diff, diff);
  Dense xpow(16);
  xpow[8] = 1;
  ASSERT_EQ(num[8], 576);
  Rational oracle = num[8] / (num[8] + xpow[8]);
  EXPECT_EQ(oracle, Rational(576, 577));
  EXPECT_EQ(f4.order().value, 0);
  EXPECT_EQ(f4.coefficient(0), oracle);
  EXPECT_EQ(f4, PuiseuxSeries::constant(oracle));  // monomial over monomial stays exact

  auto identity = evalOnPath(parseFunction("x^2 + y"), path("t, 1/(1 - t)"), kT);
  EXPECT_EQ(identity.coefficient(0), 1);
  EXPECT_EQ(identity.coefficient(2), 2);
  EXPECT_EQ(identity.coefficient(5), 1);
}

TEST(EvalOnPath, SeparatorOrderAlongFactorialPath) {
  // Numerator order 2k + 2 over denominator order 2k.
  for (long k = 2; k <= 15; ++k) {
    auto v = evalOnPath(factorialSeparator(k), factorialPath(), kT);
    ASSERT_TRUE(v.order().finite()) << k;
    EXPECT_EQ(v.order().value, 2) << k;
    Rational c = factorial(static_cast<unsigned long>(k + 1));
    EXPECT_EQ(v.leadingCoefficient(), c * c) << k;
  }
}

TEST(EvalOnPath, RaisesTruncationOnce) {
  SAFunction f = SAFunction::constant(1) /
                 (SAFunction::variable(2) - SAFunction::polynomial(Polynomial::fromUnivariate(factorialPolynomial(20), "x1")));
  auto v = evalOnPath(f, factorialPath(), 16);
  EXPECT_EQ(v.order().value, -21);
  EXPECT_EQ(kindOf([&] { evalOnPath(f, factorialPath(), 8); }), ErrorKind::IndeterminateDenominator);
}

TEST(EvalOnPath, DefaultTruncationFromEnvironment) {
  ::unsetenv("SPECTA_TRUNCATION");
  EXPECT_EQ(defaultTruncation(), 32);
  ::setenv("SPECTA_TRUNCATION", "48", 1);
  EXPECT_EQ(defaultTruncation(), 48);
  ::setenv("SPECTA_TRUNCATION", "abc", 1);
  EXPECT_EQ(kindOf([] { defaultTruncation(); }), ErrorKind::InputError);
  ::unsetenv("SPECTA_TRUNCATION");
}

TEST(ConstantTerm, HandExamples) {
  EXPECT_EQ(constantTerm(parseFunction("x1"), path("t, t"), kT), 0);
  EXPECT_EQ(constantTerm(factorialSeparator(4), path("t, 2t^2 + 6t^3"), kT), Rational(576, 577));
  EXPECT_EQ(constantTerm(parseFunction("1/(1 + x1^2)"), path("t, 0"), kT), 1);
  EXPECT_EQ(kindOf([] { constantTerm(parseFunction("1/x1"), path("t, 0"), kT); }), ErrorKind::UnboundedAlongPath);
}

TEST(IdealMembership, HandExamples) {
  auto exact = idealMembership(parseFunction("x2 - x1^2"), path("t, t^2"), IdealKind::PAlpha, kT);
  EXPECT_EQ(exact.status, IdealStatus::ExactlyInIdeal);

  for (long k = 2; k <= 12; ++k) {
    auto v = idealMembership(factorialSeparator(k), factorialPath(), IdealKind::MStar, kT);
    EXPECT_EQ(v.status, IdealStatus::InIdealUpToT) << k;
    EXPECT_EQ(v.witnessOrder, Rational(2)) << k;
  }

  auto no = idealMembership(factorialSeparator(4), path("t, 2t^2 + 6t^3"), IdealKind::MStar, kT);
  EXPECT_EQ(no.status, IdealStatus::NotInIdeal);
  EXPECT_EQ(no.witness, Rational(576, 577));

  auto upToT = idealMembership(parseFunction("x2 - x2"), factorialPath(), IdealKind::PAlpha, kT);
  EXPECT_EQ(upToT.status, IdealStatus::ExactlyInIdeal);  // the polynomial itself is zero
  auto truncated = idealMembership(
      SAFunction::variable(2) - SAFunction::polynomial(Polynomial::fromUnivariate(factorialPolynomial(40), "x1")),
      factorialPath(), IdealKind::PAlpha, kT);
  EXPECT_EQ(truncated.status, IdealStatus::InIdealUpToT);
  auto notP = idealMembership(parseFunction("x2 - 2x1^2"), factorialPath(), IdealKind::PAlpha, kT);
  EXPECT_EQ(notP.status, IdealStatus::NotInIdeal);
  EXPECT_EQ(notP.witnessOrder, Rational(3));
  EXPECT_EQ(notP.witness, Rational(6));
}

TEST(PositivityBound, HandExamples) {
  EXPECT_EQ(positivityBound(parsePolynomialList("x1"), path("t, 0"), kT), 2);
  EXPECT_EQ(positivityBound(parsePolynomialList("x1, x2"), path("t, t^3"), kT), 4);
  EXPECT_EQ(positivityBound(parsePolynomialList("1 + x1^2"), path("t^5 + 3, 7t"), kT), 1);
  EXPECT_EQ(kindOf([] { positivityBound(parsePolynomialList("x2"), path("t, 0"), kT); }),
            ErrorKind::NotPositiveOnPath);
  EXPECT_EQ(kindOf([] { positivityBound(parsePolynomialList("-x1"), path("t, 0"), kT); }),
            ErrorKind::NotPositiveOnPath);
}

TEST(CompactCarrier, HandExamples) {
  auto a = compactCarrier(path("t, t^2"), parsePolynomialList("x, y"), std::nullopt, kT);
  EXPECT_EQ(a.k, 3);
  EXPECT_EQ(a.mu, (std::vector<UPoly>{UPoly{0, 1}, UPoly{0, 0, 1}}));
  EXPECT_EQ(a.s0, (std::vector<Rational>{0, 0}));
  EXPECT_GT(a.samplesChecked, 0u);

  auto b = compactCarrier(path("t, t + t^5"), parsePolynomialList("x, y"), std::nullopt, kT);
  EXPECT_EQ(b.k, 2);
  EXPECT_EQ(b.mu, (std::vector<UPoly>{UPoly{0, 1}, UPoly{0, 1}}));
  EXPECT_EQ(b.s0, (std::vector<Rational>{0, 0}));

  auto c = compactCarrier(path("t, t^2 + 3t^4"), parsePolynomialList("x"), parsePolynomialList("y - x^2 - 3x^4")[0], kT);
  EXPECT_EQ(c.k, 2);
  EXPECT_EQ(c.s0, (std::vector<Rational>{0, 0}));
  auto d = compactCarrier(path("t, t + 5t^2"), parsePolynomialList("x"), std::nullopt, kT);
  EXPECT_EQ(d.s0, (std::vector<Rational>{0, 0}));
  auto e = compactCarrier(path("t, t + 5t^3"), parsePolynomialList("x"), std::nullopt, kT);
  EXPECT_EQ(e.s0, (std::vector<Rational>{0, 5}));

  EXPECT_EQ(kindOf([] { compactCarrier(path("t, 0"), parsePolynomialList("x2"), std::nullopt, kT); }),
            ErrorKind::NotPositiveOnPath);
  EXPECT_EQ(kindOf([] { compactCarrier(path("t, t"), parsePolynomialList("x"), parsePolynomialList("y")[0], kT); }),
            ErrorKind::NotOnVariety);
}

TEST(Neighborhood, HandExamples) {
  auto u = neighborhoodElement(factorialPath(), 2, 4, kT);
  EXPECT_EQ(u.gamma[1], (UPoly{0, 0, 2, 6}));
  EXPECT_EQ(u.f.asPolynomial(), parsePolynomialList("x1^6 - (x2 - 2x1^2 - 6x1^3)^2")[0]);
  auto self = neighborhoodMembership(u, factorialPath(), kT);
  EXPECT_TRUE(self.member);
  EXPECT_EQ(self.fValue.order().value, 6);
  EXPECT_EQ(self.fValue.leadingCoefficient(), 1);

  auto close = neighborhoodMembership(u, path("t, 2t^2 + 6t^3 + t^4"), kT);
  EXPECT_TRUE(close.member);
  EXPECT_EQ(close.fValue, PuiseuxSeries::fromPolynomial(UPoly{0, 0, 0, 0, 0, 0, 1, 0, -1}));

  auto far = neighborhoodMembership(u, path("t, 0"), kT);
  EXPECT_FALSE(far.member);
  EXPECT_EQ(far.fValue.order().value, 4);
  EXPECT_EQ(far.fValue.leadingCoefficient(), -4);

  EXPECT_EQ(kindOf([] { neighborhoodElement(path("2t, t"), 2, 2, kT); }), ErrorKind::NormalizationRequired);
}

TEST(Neighborhood, BoundaryOrderIsNotSufficient) {
  // Deviation of order exactly ell + 1 can cancel the leading term of f.
  auto u = neighborhoodElement(factorialPath(), 2, 4, kT);
  auto m = neighborhoodMembership(u, path("t, 2t^2 + 6t^3 + 2t^3"), kT);
  EXPECT_FALSE(m.member);
  EXPECT_EQ(m.fValue.leadingCoefficient(), -3);
}

TEST(FactorialSeparator, Shape) {
  EXPECT_EQ(factorialPolynomial(2), (UPoly{0, 0, 2}));
  EXPECT_EQ(factorialPolynomial(4), (UPoly{0, 0, 2, 6, 24}));
  for (long k = 2; k <= 8; ++k) {
    FormalPath graph({PathComponent::polynomial(UPoly{0, 1}), PathComponent::polynomial(factorialPolynomial(k))});
    EXPECT_TRUE(evalOnPath(factorialSeparator(k), graph, kT).isExactZero()) << k;
  }
  EXPECT_EQ(kindOf([] { factorialSeparator(1); }), ErrorKind::InputError);
}

TEST(SeparateFromAlgebraic, HandExamples) {
  auto a = separateFromAlgebraic(factorialPath(), path("t, 2t^2 + 6t^3"), 12, kT);
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(a->k, 4);
  EXPECT_EQ(a->value, Rational(576, 577));
  EXPECT_EQ(a->differenceOrder, Rational(4));

  auto b = separateFromAlgebraic(factorialPath(), path("t, 2t^2"), 12, kT);
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ(b->k, 3);
  EXPECT_EQ(b->value, Rational(36, 37));

  FormalPath p6({PathComponent::polynomial(UPoly{0, 1}), PathComponent::polynomial(factorialPolynomial(6))});
  auto c = separateFromAlgebraic(factorialPath(), p6, 12, kT);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->k, 7);
  Rational f7 = factorial(7);
  EXPECT_EQ(c->value, f7 * f7 / (f7 * f7 + 1));

  EXPECT_FALSE(separateFromAlgebraic(factorialPath(), p6, 6, kT).has_value());
  EXPECT_EQ(kindOf([] { separateFromAlgebraic(factorialPath(), path("t + t^2, t"), 12, kT); }),
            ErrorKind::NormalizationRequired);
}

TEST(SeparateFromAlgebraic, ReparametrizedPaths) {
  // mu_1 = t^2 and mu_2 = p_4(t^2): the difference order is 10, so k = 5.
  UPoly p4 = factorialPolynomial(4);
  FormalPath mu({PathComponent::polynomial(UPoly{0, 0, 1}), PathComponent::polynomial(p4.compose(UPoly{0, 0, 1}))});
  auto s = separateFromAlgebraic(factorialPath(), mu, 12, kT);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->differenceOrder, Rational(10));
  EXPECT_EQ(s->k, 5);
  EXPECT_EQ(factorialPath().reparametrize(2).component(1).expand(10), PuiseuxSeries::truncated({{4, 2}, {6, 6}, {8, 24}}, 1, 10));
}

// Property suites.

TEST(Properties, HomomorphismLaws) {
  std::mt19937 rng(2024);
  int checked = 0;
  for (int trial = 0; trial < 220; ++trial) {
    SAFunction f = randomFunction(rng), g = randomFunction(rng);
    FormalPath alpha = randomPath(rng);
    PuiseuxSeries ef, eg;
    try {
      ef = evalOnPath(f, alpha, kT);
      eg = evalOnPath(g, alpha, kT);
    } catch (const Error& e) {
      ADD_FAILURE() << e.what();
      continue;
    }
    EXPECT_TRUE(evalOnPath(f * g, alpha, kT).agreesWith(ef * eg)) << f.toString() << " ; " << g.toString();
    EXPECT_TRUE(evalOnPath(f + g, alpha, kT).agreesWith(ef + eg)) << f.toString() << " ; " << g.toString();
    ++checked;
  }
  EXPECT_GE(checked, 200);
}

TEST(Properties, OrderAdditivity) {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    FormalPath alpha = randomPath(rng);
    auto a = evalOnPath(randomFunction(rng), alpha, kT);
    auto b = evalOnPath(SAFunction::polynomial(randomPolynomial(rng, 2, 2, 3)), alpha, kT);
    if (!a.order().finite() || !b.order().finite()) continue;
    auto ab = a * b;
    ASSERT_TRUE(ab.order().finite());
    EXPECT_EQ(ab.order().value, a.order().value + b.order().value);
  }
}

TEST(Properties, BoundedFunctionsHaveNonNegativeOrder) {
  std::mt19937 rng(5);
  int tested = 0;
  for (int trial = 0; trial < 200; ++trial) {
    SAFunction f = randomBounded(rng, static_cast<int>(rng() % 3));
    FormalPath alpha = randomPath(rng);
    auto v = evalOnPath(f, alpha, kT);
    auto bound = v.orderLowerBound();
    if (!bound) continue;
    EXPECT_GE(*bound, 0) << f.toString();
    ++tested;
  }
  EXPECT_GT(tested, 150);
  for (long k = 2; k <= 12; ++k)
    for (const char* mu : {"t, 0", "t, 2t^2", "t^2, t^3 - t", "t, 1/(1 - t)"})
      EXPECT_GE(*evalOnPath(factorialSeparator(k), path(mu), kT).orderLowerBound(), 0) << k << " " << mu;
}

TEST(Properties, PositivityCertificate) {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> coeff(-5, 5);
  int instances = 0, failures = 0;
  while (instances < 20) {
    FormalPath alpha = randomPath(rng);
    auto at = alpha.expand(kT);
    std::vector<Polynomial> polys;
    for (int i = 0; i < 2; ++i) {
      Polynomial p = randomPolynomial(rng, 2, 3, 3);
      auto v = SAFunction::polynomial(p).evaluate(at, kT);
      if (!v.order().finite()) continue;
      polys.push_back(sgn(v.leadingCoefficient()) > 0 ? p : -p);
    }
    if (polys.empty()) continue;
    long k = positivityBound(polys, alpha, kT);
    ++instances;
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<PuiseuxSeries> gamma = at;
      for (auto& comp : gamma) {
        std::vector<Rational> beta(4);
        for (auto& b : beta) b = coeff(rng);
        comp = comp + PuiseuxSeries::fromPolynomial(UPoly(beta)) * PuiseuxSeries::monomial(1, k);
      }
      if (!positiveAlong(polys, gamma, kT)) ++failures;
    }
  }
  EXPECT_EQ(failures, 0);
}

TEST(Properties, NeighborhoodContainment) {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> coeff(-5, 5);
  int members = 0;
  for (long ell = 2; ell <= 4; ++ell) {
    auto u = neighborhoodElement(factorialPath(), ell, 3, kT);
    for (long p = 1; p <= 3; ++p) {
      auto base = factorialPath().reparametrize(p).expand(kT);
      for (int trial = 0; trial < 20; ++trial) {
        // |mu - alpha(t^p)|^2 has order > 2 (ell + 1) p.
        long shift = (ell + 1) * p + 1;
        std::vector<PuiseuxSeries> mu = base;
        for (auto& comp : mu) {
          std::vector<Rational> beta(3);
          for (auto& b : beta) b = coeff(rng);
          comp = comp + PuiseuxSeries::fromPolynomial(UPoly(beta)) * PuiseuxSeries::monomial(1, shift);
        }
        auto m = neighborhoodMembership(u, mu, kT);
        EXPECT_TRUE(m.member) << "ell=" << ell << " p=" << p << " f=" << m.fValue.toString();
        members += m.member;
      }
    }
  }
  EXPECT_EQ(members, 180);
}

TEST(Properties, SeparatorConsistency) {
  for (long k = 2; k <= 12; ++k)
    EXPECT_EQ(idealMembership(factorialSeparator(k), factorialPath(), IdealKind::MStar, kT).status,
              IdealStatus::InIdealUpToT);
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> coeff(-6, 6);
  int grid = 0;
  for (long j = 2; j <= 6; ++j)
    for (int i = 1; i <= 6; ++i)
      for (int c : {-1, 1, 3}) {
        UPoly mu2 = factorialPolynomial(j) + UPoly::monomial(c, static_cast<unsigned>(i));
        FormalPath mu({PathComponent::polynomial(UPoly{0, 1}), PathComponent::polynomial(mu2)});
        auto s = separateFromAlgebraic(factorialPath(), mu, 12, kT);
        ASSERT_TRUE(s.has_value()) << mu2.toString("t");
        ASSERT_TRUE(s->differenceOrder.has_value());
        EXPECT_EQ(Rational(s->k), std::max<Rational>(2, *s->differenceOrder)) << mu2.toString("t");
        ++grid;
      }
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rational> c(7);
    for (auto& x : c) x = coeff(rng);
    FormalPath mu({PathComponent::polynomial(UPoly{0, 1}), PathComponent::polynomial(UPoly(c))});
    auto s = separateFromAlgebraic(factorialPath(), mu, 12, kT);
    ASSERT_TRUE(s.has_value());
    EXPECT_LE(s->k, 7);
    ++grid;
  }
  EXPECT_EQ(grid, 130);
}

// Parsers.

TEST(Parse, Functions) {
  SAFunction f = parseFunction("abs(x - y) / (1 + x^2) + sqrt(1 + y^2)");
  auto v = evalOnPath(f, path("t, 2t"), kT);
  EXPECT_EQ(v.coefficient(0), 1);
  EXPECT_EQ(v.coefficient(1), 1);  // |t - 2t| = t
  EXPECT_EQ(v.coefficient(2), 2);  // sqrt(1 + 4t^2) = 1 + 2t^2 - ...
  EXPECT_TRUE(parseFunction("x3 * z").isPolynomial());
  EXPECT_EQ(kindOf([] { parseFunction("x + w"); }), ErrorKind::ParseError);
  EXPECT_EQ(kindOf([] { parseFunction("sqrt x"); }), ErrorKind::ParseError);
  EXPECT_EQ(kindOf([] { parseFunction("x / 0"); }), ErrorKind::ParseError);
  EXPECT_EQ(kindOf([] { evalOnPath(parseFunction("x3"), path("t, t"), kT); }), ErrorKind::InputError);
}

TEST(Parse, PathFiles) {
  auto file = parsePathFile(
      "# demo\n"
      "path m=4 T=40\n"
      "poly: t\n"
      "factorial\n"
      "ratio: t/(1 - t)  # geometric\n"
      "coeffs: 1:1 3:-1/2 @e=2\n");
  EXPECT_EQ(file.truncation, Rational(40));
  ASSERT_EQ(file.path.size(), 4u);
  EXPECT_EQ(file.path.component(1).generator, Generator::Factorial);
  EXPECT_EQ(file.path.component(2).generator, Generator::RationalFunction);
  auto at = file.path.expand(10);
  EXPECT_EQ(at[2].coefficient(9), 1);
  EXPECT_EQ(at[3], PuiseuxSeries::exact({{1, 1}, {3, Rational(-1, 2)}}, 2));
  EXPECT_EQ(at[3].order().value, Rational(1, 2));

  auto round = parsePathFile(file.path.toString());
  EXPECT_EQ(round.path.expand(12), file.path.expand(12));

  auto rep = parsePathFile("path m=1\nfactorial @p=2\n");
  EXPECT_EQ(rep.path.component(0).power, 2);
  EXPECT_FALSE(rep.truncation.has_value());

  auto message = [](const std::string& text) {
    try {
      parsePathFile(text);
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ParseError);
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("path m=1\npoly: t +\n").find("line 2, column 10"), std::string::npos);
  EXPECT_NE(message("path m=2\npoly: t\n").find("expected 2 components"), std::string::npos);
  EXPECT_NE(message("poly: t\n").find("line 1, column 1"), std::string::npos);
  EXPECT_NE(message("path m=1\nwave: t\n").find("unknown component kind"), std::string::npos);
  EXPECT_NE(message("path m=1\nratio: 1/t\n").find("t = 0"), std::string::npos);
  EXPECT_NE(message("path m=1\ncoeffs: 1:x\n").find("line 2, column 11"), std::string::npos);
}
