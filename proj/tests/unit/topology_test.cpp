#include <gtest/gtest.h>

#include <algorithm>

#include "hand_complexes.hpp"
#include "specta/error.hpp"
#include "specta/topology/analysis.hpp"
#include "specta/topology/corpus.hpp"

using namespace specta;
using namespace specta::topology;
using specta::testing::circle;
using specta::testing::closedDisk;
using specta::testing::closedDiskWithWhisker;
using specta::testing::interval;
using specta::testing::openDisk;
using specta::testing::openDiskWithBoundaryPoint;
using specta::testing::openDiskWithIsolatedPoint;

namespace {

ErrorKind kindOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InputError;
}

std::vector<bool> subsetOf(const CellComplex& k, const std::vector<CellId>& ids) {
  std::vector<bool> s(k.size(), false);
  for (CellId id : ids) s[k.indexOf(id)] = true;
  return s;
}

std::vector<CellComplex> corpus(int count, CorpusOptions opts = {}) {
  std::vector<CellComplex> out;
  for (int i = 0; i < count; ++i) out.push_back(randomSimplicialComplex(1000 + i, opts));
  return out;
}

}  // namespace

TEST(CellComplex, RoundTripIsByteIdentical) {
  std::string text =
      "complex ambient=2 bounded=1\n"
      "# out of order, with comments and a transitive pair\n"
      "cell 4 dim=2 inM=1\ncell 0 dim=0 inM=0\ncell 1 dim=0 inM=0\n"
      "cell 2 dim=1 inM=0   # lower arc\ncell 3 dim=1 inM=0\n"
      "face 3 4\nface 0 2\nface 1 2\nface 0 3\nface 1 3\nface 2 4\nface 0 4\n";
  CellComplex k = parseComplex(text);
  std::string canonical = serialize(k);
  EXPECT_EQ(canonical.rfind("complex ambient=2 bounded=1\ncell 0 dim=0 inM=0\n", 0), 0u);
  EXPECT_EQ(serialize(parseComplex(canonical)), canonical);
  EXPECT_TRUE(k.isFaceOf(k.indexOf(1), k.indexOf(4)));
}

TEST(CellComplex, RejectsMalformedInput) {
  // A loop: one 0-cell bounding a 1-cell.
  EXPECT_EQ(kindOf([] {
              parseComplex("complex ambient=1 bounded=1\ncell 0 dim=0 inM=1\ncell 1 dim=1 inM=1\nface 0 1\n");
            }),
            ErrorKind::RegularityViolation);
  EXPECT_EQ(kindOf([] {
              parseComplex("complex ambient=1 bounded=1\ncell 0 dim=0 inM=1\ncell 0 dim=0 inM=1\n");
            }),
            ErrorKind::RegularityViolation);
  EXPECT_EQ(kindOf([] {
              parseComplex(
                  "complex ambient=2 bounded=1\ncell 0 dim=1 inM=1\ncell 1 dim=1 inM=1\nface 0 1\n");
            }),
            ErrorKind::RegularityViolation);
  // A cell outside M that bounds nothing in M.
  EXPECT_EQ(kindOf([] { parseComplex("complex ambient=1 bounded=1\ncell 0 dim=0 inM=0\n"); }),
            ErrorKind::RegularityViolation);
  EXPECT_EQ(kindOf([] { parseComplex("complex ambient=1 bounded=1\ncell x dim=0 inM=1\n"); }),
            ErrorKind::ParseError);
  EXPECT_EQ(kindOf([] { parseComplex("cell 0 dim=0 inM=1\n"); }), ErrorKind::ParseError);
  EXPECT_EQ(kindOf([] { parseComplex("complex ambient=1 bounded=2\n"); }), ErrorKind::ParseError);
  EXPECT_EQ(kindOf([] { parseComplex("complex ambient=1 bounded=1\nface 0 1\n"); }),
            ErrorKind::RegularityViolation);
}

TEST(LocalDimension, WhiskerAndIsolatedPoint) {
  CellComplex w = closedDiskWithWhisker();
  EXPECT_EQ(localDimension(w, 0), 2);  // attachment point
  EXPECT_EQ(localDimension(w, 5), 1);
  EXPECT_EQ(localDimension(w, 6), 1);
  CellComplex p = openDiskWithIsolatedPoint();
  EXPECT_EQ(localDimension(p, 5), 0);
  EXPECT_EQ(kindOf([&] { localDimension(p, 0); }), ErrorKind::NotInM);
}

TEST(Bricks, HandExamples) {
  auto seg = bricks(interval(true, true));
  ASSERT_EQ(seg.size(), 1u);
  EXPECT_EQ(seg[0].dimension, 1);

  auto w = bricks(closedDiskWithWhisker());
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w[0].dimension, 2);
  EXPECT_EQ(w[0].cells, (std::vector<CellId>{0, 1, 2, 3, 4}));
  EXPECT_EQ(w[1].dimension, 1);
  EXPECT_EQ(w[1].cells, (std::vector<CellId>{0, 5, 6}));

  auto p = bricks(openDiskWithIsolatedPoint());
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[0].dimension, 2);
  EXPECT_EQ(p[1].dimension, 0);
  EXPECT_EQ(p[1].cells, (std::vector<CellId>{5}));

  // A boundary point of the open disk has local dimension 2.
  auto bp = bricks(openDiskWithBoundaryPoint());
  ASSERT_EQ(bp.size(), 1u);
  EXPECT_EQ(bp[0].cells, (std::vector<CellId>{0, 4}));
}

TEST(RhoSequence, HandExamples) {
  auto open = rhoSequence(interval(false, false));
  EXPECT_EQ(open.rho0, (std::vector<CellId>{0, 1}));
  EXPECT_TRUE(open.rho1.empty());
  EXPECT_EQ(open.locallyCompactPart, (std::vector<CellId>{2}));

  auto dp = rhoSequence(openDiskWithBoundaryPoint());
  EXPECT_EQ(dp.rho0, (std::vector<CellId>{1, 2, 3}));
  EXPECT_EQ(dp.rho1, (std::vector<CellId>{0}));
  EXPECT_EQ(dp.locallyCompactPart, (std::vector<CellId>{4}));

  auto cd = rhoSequence(closedDisk());
  EXPECT_TRUE(cd.rho0.empty());
  EXPECT_EQ(cd.locallyCompactPart.size(), 5u);
}

TEST(EtaSet, HandExamples) {
  EXPECT_EQ(etaSet(interval(true, true)), (std::vector<CellId>{0, 1}));
  EXPECT_EQ(etaSet(interval(false, true)), (std::vector<CellId>{1}));
  EXPECT_TRUE(etaSet(circle()).empty());
  EXPECT_EQ(etaSet(closedDiskWithWhisker()), (std::vector<CellId>{6}));
  EXPECT_TRUE(etaSet(openDiskWithBoundaryPoint()).empty());
}

TEST(Compactness, HandExamples) {
  EXPECT_TRUE(isCompact(closedDisk()));
  EXPECT_FALSE(isCompact(openDisk()));
  EXPECT_TRUE(isCompact(closedDiskWithWhisker()));
  EXPECT_FALSE(isCompact(interval(true, false)));
}

TEST(Core, HandExamples) {
  EXPECT_EQ(serialize(core(interval(true, false))), serialize(interval(false, false)));
  EXPECT_EQ(serialize(core(openDiskWithBoundaryPoint())), serialize(openDisk()));
  EXPECT_EQ(serialize(core(closedDisk())), serialize(closedDisk()));
}

TEST(Fingerprint, HandExamples) {
  auto open = spectralFingerprint(interval(false, false)).base;
  EXPECT_EQ(open.bricks.size(), 1u);
  EXPECT_EQ(open.dimension, 1);
  EXPECT_EQ(open.euler, -1);
  EXPECT_EQ(open.components, 1);
  EXPECT_FALSE(open.compact);
  EXPECT_EQ(open.etaCount, 0);

  auto closed = spectralFingerprint(interval(true, true));
  EXPECT_EQ(closed.base.euler, 1);
  EXPECT_TRUE(closed.base.compact);
  EXPECT_EQ(closed.base.etaCount, 2);
  EXPECT_EQ(closed.minusEta, open);

  auto c = spectralFingerprint(circle()).base;
  EXPECT_EQ(c.euler, 0);
  EXPECT_TRUE(c.compact);
  EXPECT_EQ(c.etaCount, 0);
  EXPECT_EQ(c.components, 1);

  auto w = spectralFingerprint(closedDiskWithWhisker()).base;
  ASSERT_EQ(w.bricks.size(), 2u);
  EXPECT_EQ(w.euler, 1);
  EXPECT_EQ(w.bricks[1].etaCount, 1);
}

TEST(Compare, HandExamples) {
  auto r1 = compareSpectralTypes(interval(true, true), interval(false, false));
  EXPECT_EQ(r1.spectrum.verdict, Verdict::RuledOut);
  EXPECT_NE(std::find(r1.spectrum.mismatched.begin(), r1.spectrum.mismatched.end(), "compact"),
            r1.spectrum.mismatched.end());
  EXPECT_EQ(r1.boundedSpectrum.verdict, Verdict::Consistent);

  auto r2 = compareSpectralTypes(interval(false, true), interval(false, false));
  EXPECT_EQ(r2.boundedSpectrum.verdict, Verdict::Consistent);
  EXPECT_EQ(r2.mixed.verdict, Verdict::RuledOut);

  auto r3 = compareSpectralTypes(closedDisk(), closedDisk());
  for (const auto* v : {&r3.spectrum, &r3.boundedSpectrum, &r3.mixed, &r3.coreSpectrum})
    EXPECT_EQ(v->verdict, Verdict::Consistent);
}

TEST(CorpusProperties, BrickAxiomsAndClosureCompatibility) {
  for (const auto& k : corpus(80)) {
    auto b = bricks(k);
    EXPECT_TRUE(brickAxiomViolations(k, b).empty()) << serialize(k);
    EXPECT_TRUE(closureCompatibilityViolations(k).empty()) << serialize(k);
  }
}

TEST(CorpusProperties, LocallyCompactPartIsMaximal) {
  for (const auto& k : corpus(80)) {
    auto rho = rhoSequence(k);
    auto lc = subsetOf(k, rho.locallyCompactPart);
    EXPECT_TRUE(isLocallyCompact(k, lc));
    for (CellId c : rho.rho1) {
      auto grown = lc;
      grown[k.indexOf(c)] = true;
      EXPECT_FALSE(isLocallyCompact(k, grown)) << "cell " << c << "\n" << serialize(k);
    }
  }
}

TEST(CorpusProperties, LowDimensionalAndCompactUpperPartAreLocallyCompact) {
  CorpusOptions curves;
  curves.maxDim = 1;
  for (const auto& k : corpus(60, curves)) EXPECT_TRUE(rhoSequence(k).rho1.empty());
  int exercised = 0;
  for (const auto& k : corpus(120)) {
    std::vector<bool> upper(k.size(), false);
    for (const auto& b : bricks(k))
      if (b.dimension >= 2)
        for (CellId c : b.cells) upper[k.indexOf(c)] = true;
    if (!isCompact(k, upper)) continue;
    ++exercised;
    EXPECT_TRUE(rhoSequence(k).rho1.empty()) << serialize(k);
  }
  EXPECT_GT(exercised, 10);
}

TEST(CorpusProperties, EtaAndCore) {
  for (const auto& k : corpus(80)) {
    auto rho = rhoSequence(k);
    for (CellId e : etaSet(k))
      EXPECT_TRUE(std::binary_search(rho.locallyCompactPart.begin(), rho.locallyCompactPart.end(), e));
    CellComplex c = core(k);
    if (etaSet(c).empty()) EXPECT_EQ(serialize(core(c)), serialize(c));
  }
}

TEST(CorpusProperties, SubdivisionPreservesFingerprint) {
  for (const auto& k : corpus(40)) {
    CellComplex s = barycentricSubdivision(k);
    EXPECT_GT(s.size(), k.size() - 1);
    EXPECT_EQ(spectralFingerprint(s), spectralFingerprint(k)) << serialize(k);
  }
  CellComplex w = barycentricSubdivision(closedDiskWithWhisker());
  EXPECT_EQ(spectralFingerprint(w), spectralFingerprint(closedDiskWithWhisker()));
}

TEST(CorpusProperties, ComparisonSymmetry) {
  auto ks = corpus(12);
  ks.push_back(interval(true, false));
  ks.push_back(interval(false, false));
  for (const auto& a : ks)
    for (const auto& b : ks) {
      auto ab = compareSpectralTypes(a, b), ba = compareSpectralTypes(b, a);
      EXPECT_EQ(ab.spectrum.verdict, ba.spectrum.verdict);
      EXPECT_EQ(ab.boundedSpectrum.verdict, ba.boundedSpectrum.verdict);
      EXPECT_EQ(ab.coreSpectrum.verdict, ba.coreSpectrum.verdict);
    }
  auto a = compareSpectralTypes(interval(false, true), interval(false, false));
  auto b = compareSpectralTypes(interval(false, false), interval(false, true));
  EXPECT_EQ(a.mixed.verdict, Verdict::RuledOut);
  EXPECT_EQ(b.mixed.verdict, Verdict::RuledOut);
  auto c = compareSpectralTypes(interval(true, true), interval(false, true));
  EXPECT_EQ(c.mixed.verdict, Verdict::Consistent);
  EXPECT_EQ(compareSpectralTypes(interval(false, true), interval(true, true)).mixed.verdict,
            Verdict::RuledOut);
}
