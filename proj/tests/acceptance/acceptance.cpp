// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hand_complexes.hpp"
#include "specta/cad/decompose.hpp"
#include "specta/io/parse.hpp"
#include "specta/paths/operations.hpp"
#include "specta/topology/analysis.hpp"
#include "specta/topology/corpus.hpp"

using namespace specta;
using namespace specta::topology;
using namespace specta::paths;
using specta::testing::interval;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int number;
  const char* name;
  double limitSeconds;  // 0: no limit
  std::function<Outcome()> check;
};

// Collects failed expectations; the first few are kept for the report.
class Checker {
 public:
  void expect(bool condition, const std::string& what) {
    ++checks_;
    if (condition) return;
    ++failures_;
    if (failures_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream os;
    os << summary << ", " << checks_ << " checks";
    if (failures_) os << ", " << failures_ << " failed: " << notes_;
    return {failures_ == 0, os.str()};
  }

 private:
  long checks_ = 0, failures_ = 0;
  std::string notes_;
};

std::vector<bool> subsetOf(const CellComplex& k, const std::vector<CellId>& ids) {
  std::vector<bool> s(k.size(), false);
  for (CellId id : ids) s[k.indexOf(id)] = true;
  return s;
}

std::vector<CellComplex> corpus(int count, CorpusOptions opts = {}) {
  std::vector<CellComplex> out;
  // Every other complex uses a larger vertex set and more simplices.
  CorpusOptions large = opts;
  large.maxVertices = 14;
  large.maxSimplices = 14;
  for (int i = 0; i < count; ++i)
    out.push_back(randomSimplicialComplex(5000 + static_cast<std::uint64_t>(i), i % 2 ? large : opts));
  return out;
}

// ---- 1 ----------------------------------------------------------------------

Outcome intervalTrio() {
  Checker c;
  auto closed = spectralFingerprint(interval(true, true));
  auto half = spectralFingerprint(interval(false, true));
  auto open = spectralFingerprint(interval(false, false));
  c.expect(closed.minusEta == half.minusEta, "[0,1]-eta vs (0,1]-eta");
  c.expect(half.minusEta == open.minusEta, "(0,1]-eta vs (0,1)-eta");
  c.expect(closed.minusEta == open.minusEta, "[0,1]-eta vs (0,1)-eta");
  c.expect(closed.base.compact && !open.base.compact, "compactness of [0,1] vs (0,1)");
  auto diff = recordDifferences(closed.base, open.base);
  c.expect(std::find(diff.begin(), diff.end(), "compact") != diff.end(), "compact not among differing fields");
  return c.outcome("minusEta records identical; base differs in {" + [&] {
    std::string s;
    for (const auto& d : diff) s += (s.empty() ? "" : ",") + d;
    return s;
  }() + "}");
}

// ---- 2 ----------------------------------------------------------------------

Outcome mixedNecessaryCondition() {
  Checker c;
  auto r = compareSpectralTypes(interval(false, true), interval(false, false));
  c.expect(r.mixed.verdict == Verdict::RuledOut, "S(N) ~ S*(M) not ruled out");
  c.expect(std::find(r.mixed.mismatched.begin(), r.mixed.mismatched.end(), "M1.compact") != r.mixed.mismatched.end(),
           "non-compactness of N not reported");
  c.expect(r.boundedSpectrum.verdict == Verdict::Consistent, "S* not consistent");
  return c.outcome(std::string("S(N)~S*(M) ") + verdictName(r.mixed.verdict) + ", S* " +
                   verdictName(r.boundedSpectrum.verdict));
}

// ---- 3 ----------------------------------------------------------------------

Outcome brickAxioms() {
  Checker c;
  auto ks = corpus(60);
  std::size_t maxCells = 0;
  int maxDim = 0;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const auto& k = ks[i];
    maxCells = std::max(maxCells, k.size());
    maxDim = std::max(maxDim, k.dimension());
    std::string tag = "complex " + std::to_string(i);
    c.expect(k.size() <= 200 && k.dimension() <= 3, tag + " outside corpus bounds");
    auto v = brickAxiomViolations(k, bricks(k));
    c.expect(v.empty(), tag + ": " + (v.empty() ? "" : v.front()));
    auto w = closureCompatibilityViolations(k);
    c.expect(w.empty(), tag + ": " + (w.empty() ? "" : w.front()));
    c.expect(spectralFingerprint(barycentricSubdivision(k)) == spectralFingerprint(k),
             tag + ": subdivision changed the fingerprint");
  }
  return c.outcome(std::to_string(ks.size()) + " complexes, max " + std::to_string(maxCells) + " cells, max dim " +
                   std::to_string(maxDim));
}

// ---- 4 ----------------------------------------------------------------------

Outcome locallyCompactPart() {
  Checker c;
  long readded = 0, compactUpper = 0;
  for (const auto& k : corpus(60)) {
    auto rho = rhoSequence(k);
    auto lc = subsetOf(k, rho.locallyCompactPart);
    c.expect(isLocallyCompact(k, lc), "M_lc not locally compact");
    for (CellId id : rho.rho1) {
      auto grown = lc;
      grown[k.indexOf(id)] = true;
      ++readded;
      c.expect(!isLocallyCompact(k, grown), "re-adding cell " + std::to_string(id) + " kept local compactness");
    }
    std::vector<bool> upper(k.size(), false);
    for (const auto& b : bricks(k))
      if (b.dimension >= 2)
        for (CellId id : b.cells) upper[k.indexOf(id)] = true;
    if (isCompact(k, upper)) {
      ++compactUpper;
      c.expect(rho.rho1.empty(), "compact upper part with nonempty rho1");
    }
  }
  CorpusOptions curves;
  curves.maxDim = 1;
  for (const auto& k : corpus(60, curves)) c.expect(rhoSequence(k).rho1.empty(), "1-complex with nonempty rho1");
  return c.outcome(std::to_string(readded) + " rho1 cells re-added, 60 one-dimensional complexes, " +
                   std::to_string(compactUpper) + " with compact dim>=2 part");
}

// ---- 5 ----------------------------------------------------------------------

const Rational kT = 32;

UPoly randomSeriesPolynomial(std::mt19937& rng, int degree, int range) {
  std::uniform_int_distribution<int> coeff(-range, range);
  std::vector<Rational> c(static_cast<std::size_t>(degree + 1));
  for (auto& x : c) x = coeff(rng);
  return UPoly(std::move(c));
}

FormalPath randomPath(std::mt19937& rng) {
  std::vector<PathComponent> comps;
  for (int i = 0; i < 2; ++i) {
    int kind = static_cast<int>(rng() % 4);
    if (kind == 0 && i == 1)
      comps.push_back(PathComponent::factorial());
    else if (kind == 1)
      comps.push_back(PathComponent::ratio(randomSeriesPolynomial(rng, 3, 4), UPoly{1, -1}));
    else
      comps.push_back(PathComponent::polynomial(randomSeriesPolynomial(rng, 4, 4)));
  }
  return FormalPath(std::move(comps));
}

Polynomial randomPolynomial(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<unsigned> deg(0, 3);
  Polynomial p;
  for (int term = 0; term < 4; ++term) {
    unsigned left = deg(rng);
    unsigned e1 = std::uniform_int_distribution<unsigned>(0, left)(rng);
    std::map<std::string, unsigned> powers;
    if (e1) powers["x1"] = e1;
    if (left - e1) powers["x2"] = left - e1;
    p += Polynomial::monomial(coeff(rng), powers);
  }
  return p;
}

std::vector<PuiseuxSeries> shifted(const std::vector<PuiseuxSeries>& at, const std::vector<UPoly>& beta, long order) {
  std::vector<PuiseuxSeries> out;
  for (std::size_t i = 0; i < at.size(); ++i)
    out.push_back(at[i] + PuiseuxSeries::fromPolynomial(beta[i]) * PuiseuxSeries::monomial(1, order));
  return out;
}

Outcome positivityCertificate() {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> coeff(-5, 5);
  int instances = 0;
  long failures = 0, adversarialFailures = 0;
  while (instances < 20) {
    FormalPath alpha = randomPath(rng);
    auto at = alpha.expand(kT);
    std::vector<Polynomial> polys;
    for (int i = 0; i < 2; ++i) {
      Polynomial p = randomPolynomial(rng);
      auto v = SAFunction::polynomial(p).evaluate(at, kT);
      if (!v.order().finite()) continue;
      polys.push_back(sgn(v.leadingCoefficient()) > 0 ? p : -p);
    }
    if (polys.empty()) continue;
    long k = positivityBound(polys, alpha, kT);
    ++instances;
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<UPoly> beta;
      for (std::size_t i = 0; i < at.size(); ++i) beta.push_back(randomSeriesPolynomial(rng, 3, 5));
      if (!positiveAlong(polys, shifted(at, beta, k), kT)) ++failures;
    }
    // One adversarial perturbation at order k - 1: the first constant shift
    // (b1, b2) in [-8, 8]^2 that breaks positivity, if any.
    bool broken = false;
    for (int b1 = -8; b1 <= 8 && !broken; ++b1)
      for (int b2 = -8; b2 <= 8 && !broken; ++b2)
        broken = !positiveAlong(polys, shifted(at, {UPoly::constant(b1), UPoly::constant(b2)}, k - 1), kT);
    adversarialFailures += broken;
  }
  Checker c;
  c.expect(failures == 0, std::to_string(failures) + " positivity failures at order k");
  c.expect(adversarialFailures >= 1, "no adversarial failure at order k-1");
  return c.outcome("2000 perturbations at order k: " + std::to_string(failures) + " failures; " +
                   std::to_string(adversarialFailures) + "/20 adversarial at k-1 fail");
}

// ---- 6 ----------------------------------------------------------------------

FormalPath factorialPath() {
  return FormalPath({PathComponent::polynomial(UPoly{0, 1}), PathComponent::factorial()});
}

Outcome separatorReproduction() {
  Checker c;
  FormalPath alpha = factorialPath();
  for (long k = 2; k <= 12; ++k) {
    auto v = idealMembership(factorialSeparator(k), alpha, IdealKind::MStar, kT);
    c.expect(v.status == IdealStatus::InIdealUpToT, "f_" + std::to_string(k) + " status " + idealStatusName(v.status));
  }
  auto s = separateFromAlgebraic(alpha, io::parsePathComponents("t, 2t^2+6t^3"), 12, kT);
  c.expect(s && s->k == 4 && s->value == makeRational(576, 577),
           "mu = (t, 2t^2+6t^3) gave " + (s ? "k=" + std::to_string(s->k) + " value " + toString(s->value) : "none"));
  std::string ks;
  for (const char* mu2 : {"2t^2", "2t^2+6t^3", "2t^2+6t^3+24t^4", "2t^2+6t^3+24t^4+120t^5",
                          "2t^2+6t^3+24t^4+120t^5+720t^6"}) {
    auto r = separateFromAlgebraic(alpha, io::parsePathComponents(std::string("t, ") + mu2), 12, kT);
    c.expect(r && r->k <= 7, std::string("mu2 = ") + mu2 + " not separated with k <= 7");
    ks += (ks.empty() ? "" : ",") + (r ? std::to_string(r->k) : std::string("none"));
  }
  return c.outcome("f_2..f_12 in m*_alpha up to T=32; 576/577 at k=4; k for the five mu = " + ks);
}

// ---- 7 ----------------------------------------------------------------------

Outcome neighborhoodFamily() {
  Checker c;
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> coeff(-5, 5);
  FormalPath alpha = factorialPath();
  auto at = alpha.expand(kT);
  long members = 0, trials = 0;
  for (long ell = 2; ell <= 4; ++ell) {
    auto u = neighborhoodElement(alpha, ell, 1, kT);
    c.expect(paths::neighborhoodMembership(u, alpha, kT).member, "alpha not in U_" + std::to_string(ell));
    for (long order = ell + 2; order <= ell + 4; ++order)
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<UPoly> beta;
        for (std::size_t i = 0; i < at.size(); ++i) beta.push_back(randomSeriesPolynomial(rng, 2, 5));
        ++trials;
        bool m = paths::neighborhoodMembership(u, shifted(at, beta, order), kT).member;
        members += m;
        c.expect(m, "perturbation at order " + std::to_string(order) + " rejected for ell " + std::to_string(ell));
      }
  }
  auto u2 = neighborhoodElement(alpha, 2, 1, kT);
  auto off = paths::neighborhoodMembership(u2, io::parsePathComponents("t, 0"), kT);
  c.expect(!off.member, "(t, 0) accepted");
  c.expect(off.fValue.leadingCoefficient() == -4, "leading coefficient " + toString(off.fValue.leadingCoefficient()));
  return c.outcome(std::to_string(members) + "/" + std::to_string(trials) +
                   " perturbations are members; (t,0) rejected with f(mu) = " + off.fValue.toString());
}

// ---- 8 ----------------------------------------------------------------------

// Open annulus: outer circle (vertices 0, 1; arcs 2, 3), inner circle
// (vertices 4, 5; arcs 6, 7), radial segments 8 (0-4) and 9 (1-5), 2-cells 10, 11.
CellComplex openAnnulus() {
  return parseComplex(
      "complex ambient=2 bounded=1\n"
      "cell 0 dim=0 inM=0\ncell 1 dim=0 inM=0\ncell 2 dim=1 inM=0\ncell 3 dim=1 inM=0\n"
      "cell 4 dim=0 inM=0\ncell 5 dim=0 inM=0\ncell 6 dim=1 inM=0\ncell 7 dim=1 inM=0\n"
      "cell 8 dim=1 inM=1\ncell 9 dim=1 inM=1\ncell 10 dim=2 inM=1\ncell 11 dim=2 inM=1\n"
      "face 0 2\nface 1 2\nface 0 3\nface 1 3\nface 4 6\nface 5 6\nface 4 7\nface 5 7\n"
      "face 0 8\nface 4 8\nface 1 9\nface 5 9\n"
      "face 2 10\nface 6 10\nface 8 10\nface 9 10\nface 3 11\nface 7 11\nface 8 11\nface 9 11\n");
}

struct Golden {
  const char* formula;
  std::vector<int> brickDims;
  bool rho0Empty;
  std::size_t rho1;
  std::size_t eta;
  long euler;
  int components;
  CellComplex hand;
};

std::vector<std::pair<Rational, Rational>> testPoints(unsigned seed, std::size_t count) {
  std::vector<std::pair<Rational, Rational>> out;
  const int triples[][3] = {{3, 4, 5}, {5, 12, 13}, {8, 15, 17}};
  for (auto [a, b, h] : triples)
    for (int sx : {-1, 1})
      for (int sy : {-1, 1})
        for (int r : {1, 2}) out.emplace_back(makeRational(sx * a * r, h), makeRational(sy * b * r, h));
  for (int n = -6; n <= 6; ++n) {
    out.emplace_back(makeRational(n, 2), Rational(0));
    out.emplace_back(Rational(0), makeRational(n, 2));
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-250, 250);
  while (out.size() < count) out.emplace_back(makeRational(num(rng), 100), makeRational(num(rng), 100));
  out.resize(count);
  return out;
}

Outcome cadSoundness() {
  using namespace specta::testing;
  std::vector<Golden> golden = {
      {"x^2 + y^2 < 1", {2}, false, 0, 0, 1, 1, openDisk()},
      {"x^2 + y^2 < 1 OR (x = 1 AND y = 0)", {2}, false, 1, 0, 2, 1, openDiskWithBoundaryPoint()},
      {"x^2 + y^2 > 1 AND x^2 + y^2 < 4", {2}, false, 0, 0, 0, 1, openAnnulus()},
      {"x^2 + y^2 <= 1 OR (y = 0 AND x^2 - 2x <= 0)", {2, 1}, true, 0, 1, 1, 1, closedDiskWithWhisker()},
  };
  Checker c;
  long disagreements = 0;
  for (const auto& g : golden) {
    std::string tag = g.formula;
    cad::Formula phi = io::parseFormula(g.formula);
    cad::Decomposition d = cad::decompose(phi);
    CellComplex k = parseComplex(serialize(d.complex()));
    std::vector<int> dims;
    for (const auto& b : bricks(k)) dims.push_back(b.dimension);
    auto rho = rhoSequence(k);
    auto fp = fingerprintRecord(k);
    c.expect(dims == g.brickDims, tag + ": brick dimensions");
    c.expect(rho.rho0.empty() == g.rho0Empty, tag + ": rho0");
    c.expect(rho.rho1.size() == g.rho1, tag + ": rho1 size " + std::to_string(rho.rho1.size()));
    c.expect(etaSet(k).size() == g.eta, tag + ": eta");
    c.expect(fp.euler == g.euler, tag + ": euler " + std::to_string(fp.euler));
    c.expect(fp.components == g.components, tag + ": components");
    c.expect(spectralFingerprint(k) == spectralFingerprint(g.hand), tag + ": fingerprint differs from hand complex");
    long local = 0;
    for (const auto& [x, y] : testPoints(31, 500))
      if (d.inM(d.locate(x, y)) != cad::containsPoint(phi, x, y)) ++local;
    c.expect(local == 0, tag + ": " + std::to_string(local) + " point disagreements");
    disagreements += local;
  }
  return c.outcome("4 golden formulas, 2000 sample points, " + std::to_string(disagreements) + " disagreements");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "interval trio fingerprints", 1.0, intervalTrio},
      {2, "S(N) ~ S*(M) needs N compact", 1.0, mixedNecessaryCondition},
      {3, "brick axioms and subdivision invariance", 30.0, brickAxioms},
      {4, "locally compact part is maximal", 0.0, locallyCompactPart},
      {5, "positivity bound certificate", 10.0, positivityCertificate},
      {6, "factorial path separator", 5.0, separatorReproduction},
      {7, "neighbourhood membership", 0.0, neighborhoodFamily},
      {8, "decomposition soundness on golden formulas", 60.0, cadSoundness},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool inTime = cr.limitSeconds == 0 || seconds < cr.limitSeconds;
    bool pass = o.ok && inTime;
    failed += !pass;
    char timing[64];
    if (cr.limitSeconds > 0)
      std::snprintf(timing, sizeof timing, "%.3f s, limit %.0f s", seconds, cr.limitSeconds);
    else
      std::snprintf(timing, sizeof timing, "%.3f s", seconds);
    std::printf("criterion %d: %s  %s (%s) [%s]\n", cr.number, pass ? "PASS" : "FAIL", cr.name, o.detail.c_str(),
                timing);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
