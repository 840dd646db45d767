#include "specta/topology/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "specta/error.hpp"

namespace specta::topology {

namespace {

using Subset = std::vector<bool>;

std::vector<CellId> idsOf(const CellComplex& k, const Subset& s) {
  std::vector<CellId> out;
  for (std::size_t i = 0; i < k.size(); ++i)
    if (s[i]) out.push_back(k.cell(i).id);
  return out;
}

Subset subsetOf(const CellComplex& k, const std::vector<CellId>& ids) {
  Subset s(k.size(), false);
  for (CellId id : ids) s[k.indexOf(id)] = true;
  return s;
}

int localDim(const CellComplex& k, std::size_t i) {
  int d = k.cell(i).dim;
  for (std::size_t g : k.starOf(i))
    if (k.cell(g).inM) d = std::max(d, k.cell(g).dim);
  return d;
}

// Bricks as index subsets, by decreasing dimension.
std::vector<std::pair<int, Subset>> brickSubsets(const CellComplex& k) {
  std::vector<int> ldim(k.size(), -1);
  std::vector<int> dims;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (!k.cell(i).inM) continue;
    ldim[i] = localDim(k, i);
    dims.push_back(ldim[i]);
  }
  std::sort(dims.begin(), dims.end(), std::greater<>());
  dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
  std::vector<std::pair<int, Subset>> out;
  for (int d : dims) {
    Subset s(k.size(), false);
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (ldim[i] != d) continue;
      s[i] = true;
      for (std::size_t f : k.closureOf(i))
        if (k.cell(f).inM) s[f] = true;
    }
    out.emplace_back(d, std::move(s));
  }
  return out;
}

std::vector<std::size_t> etaIndices(const CellComplex& k) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (!k.cell(i).inM || k.cell(i).dim != 0) continue;
    int edges = 0;
    bool higher = false;
    for (std::size_t g : k.starOf(i)) {
      if (!k.cell(g).inM) continue;
      if (k.cell(g).dim == 1)
        ++edges;
      else
        higher = true;
    }
    if (edges == 1 && !higher) out.push_back(i);
  }
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

Subset inMSubset(const CellComplex& k) { return k.membership(); }

}  // namespace

int localDimension(const CellComplex& k, CellId id) {
  std::size_t i = k.indexOf(id);
  if (!k.cell(i).inM)
    throw Error(ErrorKind::NotInM, "cell " + std::to_string(id) + " is not in M");
  return localDim(k, i);
}

std::vector<std::string> brickAxiomViolations(const CellComplex& k, const std::vector<Brick>& b) {
  std::vector<std::string> v;
  std::vector<Subset> sets;
  for (const auto& br : b) sets.push_back(subsetOf(k, br.cells));
  Subset covered(k.size(), false);
  for (std::size_t bi = 0; bi < b.size(); ++bi) {
    const Subset& s = sets[bi];
    const int d = b[bi].dimension;
    const std::string tag = "brick " + std::to_string(bi) + " (dim " + std::to_string(d) + ")";
    if (bi > 0 && b[bi - 1].dimension <= d) v.push_back(tag + ": dimensions not strictly decreasing");
    if (b[bi].cells.empty()) v.push_back(tag + ": empty");
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (!s[i]) continue;
      covered[i] = true;
      const std::string cell = tag + ", cell " + std::to_string(k.cell(i).id);
      if (!k.cell(i).inM) v.push_back(cell + ": not in M");
      if (k.cell(i).dim > d) v.push_back(cell + ": exceeds brick dimension");
      // Purity: the cell lies in the closure of a top-dimensional cell of the brick.
      bool pure = k.cell(i).dim == d;
      for (std::size_t g : k.starOf(i))
        if (s[g] && k.cell(g).dim == d) pure = true;
      if (!pure) v.push_back(cell + ": not in the closure of a " + std::to_string(d) + "-cell");
      // Closed in M.
      for (std::size_t f : k.closureOf(i))
        if (k.cell(f).inM && !s[f])
          v.push_back(cell + ": face " + std::to_string(k.cell(f).id) + " of M missing");
      // Density of the part not shared with other bricks.
      auto exclusive = [&](std::size_t e) {
        if (!s[e]) return false;
        for (std::size_t bj = 0; bj < b.size(); ++bj)
          if (bj != bi && sets[bj][e]) return false;
        return true;
      };
      bool dense = exclusive(i);
      for (std::size_t g : k.starOf(i))
        if (exclusive(g)) dense = true;
      if (!dense) v.push_back(cell + ": not in the closure of the brick's exclusive part");
    }
  }
  for (std::size_t i = 0; i < k.size(); ++i)
    if (k.cell(i).inM && !covered[i])
      v.push_back("cell " + std::to_string(k.cell(i).id) + " of M lies in no brick");
  return v;
}

std::vector<std::string> closureCompatibilityViolations(const CellComplex& k) {
  std::vector<std::string> v;
  if (k.empty()) return v;
  auto bm = brickSubsets(k);
  auto bx = brickSubsets(k.withMembership(Subset(k.size(), true)));
  if (bm.size() != bx.size()) {
    v.push_back("brick counts of M and its closure differ");
    return v;
  }
  for (std::size_t bi = 0; bi < bm.size(); ++bi) {
    if (bm[bi].first != bx[bi].first) v.push_back("brick " + std::to_string(bi) + ": dimensions differ");
    for (std::size_t i = 0; i < k.size(); ++i) {
      bool inter = bx[bi].second[i] && k.cell(i).inM;
      if (inter != bm[bi].second[i])
        v.push_back("brick " + std::to_string(bi) + ", cell " + std::to_string(k.cell(i).id) +
                    ": closure brick restricted to M disagrees");
      // Closure of the M-brick inside the closure complex.
      bool inClosure = bm[bi].second[i];
      for (std::size_t g : k.starOf(i))
        if (bm[bi].second[g]) inClosure = true;
      if (inClosure != bx[bi].second[i])
        v.push_back("brick " + std::to_string(bi) + ", cell " + std::to_string(k.cell(i).id) +
                    ": closure of the M-brick disagrees");
    }
  }
  return v;
}

std::vector<Brick> bricks(const CellComplex& k) {
  if (k.empty()) throw Error(ErrorKind::InputError, "bricks: empty complex");
  std::vector<Brick> out;
  for (auto& [d, s] : brickSubsets(k)) out.push_back({d, idsOf(k, s)});
  auto v = brickAxiomViolations(k, out);
  if (!v.empty()) throw Error(ErrorKind::RegularityViolation, "brick axioms fail: " + v.front());
  return out;
}

bool isLocallyCompact(const CellComplex& k, const std::vector<bool>& subset) {
  Subset cl = subset;
  for (std::size_t i = 0; i < k.size(); ++i)
    if (subset[i])
      for (std::size_t f : k.closureOf(i)) cl[f] = true;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (!subset[i]) continue;
    for (std::size_t g : k.starOf(i))
      if (cl[g] && !subset[g]) return false;
  }
  return true;
}

RhoSequence rhoSequence(const CellComplex& k) {
  Subset rho0(k.size(), false), rho1(k.size(), false), lc(k.size(), false);
  for (std::size_t i = 0; i < k.size(); ++i) rho0[i] = !k.cell(i).inM;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (!rho0[i]) continue;
    for (std::size_t f : k.closureOf(i))
      if (k.cell(f).inM) rho1[f] = true;
  }
  for (std::size_t i = 0; i < k.size(); ++i) lc[i] = k.cell(i).inM && !rho1[i];
  // Compact-neighbourhood criterion: every cell of the open star in Cl(M)
  // of a point of the cell belongs to M.
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (!k.cell(i).inM) continue;
    const auto& st = k.starOf(i);
    bool compactNbhd = std::all_of(st.begin(), st.end(), [&](std::size_t g) { return k.cell(g).inM; });
    if (compactNbhd != lc[i])
      throw Error(ErrorKind::RegularityViolation,
                  "locally compact part disagrees with the compact-neighbourhood criterion at cell " +
                      std::to_string(k.cell(i).id));
  }
  return {idsOf(k, rho0), idsOf(k, rho1), idsOf(k, lc)};
}

std::vector<CellId> etaSet(const CellComplex& k) {
  std::vector<CellId> out;
  for (std::size_t i : etaIndices(k)) out.push_back(k.cell(i).id);
  return out;
}

bool isCompact(const CellComplex& k, const std::vector<bool>& subset) {
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (!subset[i]) continue;
    for (std::size_t f : k.closureOf(i))
      if (!subset[f]) return false;
  }
  return true;
}

bool isCompact(const CellComplex& k) { return isCompact(k, inMSubset(k)); }

int componentCount(const CellComplex& k, const std::vector<bool>& subset) {
  UnionFind uf(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (!subset[i]) continue;
    for (std::size_t f : k.closureOf(i))
      if (subset[f]) uf.unite(f, i);
  }
  int n = 0;
  for (std::size_t i = 0; i < k.size(); ++i)
    if (subset[i] && uf.find(i) == i) ++n;
  return n;
}

long eulerCharacteristic(const CellComplex& k, const std::vector<bool>& subset) {
  long chi = 0;
  for (std::size_t i = 0; i < k.size(); ++i)
    if (subset[i]) chi += (k.cell(i).dim % 2 == 0) ? 1 : -1;
  return chi;
}

CellComplex minusEta(const CellComplex& k) {
  Subset m = k.membership();
  for (std::size_t i : etaIndices(k)) m[i] = false;
  return k.withMembership(m);
}

CellComplex core(const CellComplex& k) {
  Subset m = k.membership();
  for (CellId id : rhoSequence(k).rho1) m[k.indexOf(id)] = false;
  return minusEta(k.withMembership(m));
}

FingerprintRecord fingerprintRecord(const CellComplex& k) {
  FingerprintRecord r;
  Subset m = k.membership();
  r.dimension = k.dimension();
  r.compact = isCompact(k, m);
  r.locallyCompact = isLocallyCompact(k, m);
  r.components = componentCount(k, m);
  r.euler = eulerCharacteristic(k, m);
  auto eta = etaIndices(k);
  r.etaCount = static_cast<int>(eta.size());
  if (r.dimension < 0) return r;
  for (auto& [d, s] : brickSubsets(k)) {
    BrickRecord b;
    b.dimension = d;
    b.components = componentCount(k, s);
    b.euler = eulerCharacteristic(k, s);
    b.compact = isCompact(k, s);
    b.etaCount = static_cast<int>(
        std::count_if(eta.begin(), eta.end(), [&](std::size_t i) { return s[i]; }));
    r.bricks.push_back(b);
  }
  return r;
}

Fingerprint spectralFingerprint(const CellComplex& k) {
  return {fingerprintRecord(k), fingerprintRecord(minusEta(k)), fingerprintRecord(core(k))};
}

std::vector<std::string> recordDifferences(const FingerprintRecord& a, const FingerprintRecord& b) {
  std::vector<std::string> d;
  if (a.bricks.size() != b.bricks.size()) d.push_back("brickCount");
  if (a.bricks != b.bricks) d.push_back("bricks");
  if (a.compact != b.compact) d.push_back("compact");
  if (a.locallyCompact != b.locallyCompact) d.push_back("locallyCompact");
  if (a.dimension != b.dimension) d.push_back("dim");
  if (a.components != b.components) d.push_back("components");
  if (a.euler != b.euler) d.push_back("euler");
  if (a.etaCount != b.etaCount) d.push_back("etaCount");
  return d;
}

const char* verdictName(Verdict v) { return v == Verdict::RuledOut ? "RULED_OUT" : "CONSISTENT"; }

namespace {

VerdictRow row(std::string relation, std::vector<std::string> mismatched) {
  VerdictRow r;
  r.relation = std::move(relation);
  r.verdict = mismatched.empty() ? Verdict::Consistent : Verdict::RuledOut;
  r.mismatched = std::move(mismatched);
  return r;
}

}  // namespace

ComparisonReport compareSpectralTypes(const CellComplex& k1, const CellComplex& k2) {
  Fingerprint f1 = spectralFingerprint(k1), f2 = spectralFingerprint(k2);
  ComparisonReport r;
  r.spectrum = row("S(M1) ~ S(M2)", recordDifferences(f1.base, f2.base));
  r.boundedSpectrum = row("S*(M1) ~ S*(M2)", recordDifferences(f1.minusEta, f2.minusEta));
  auto mixed = recordDifferences(f1.minusEta, f2.minusEta);
  if (!f1.base.compact) mixed.insert(mixed.begin(), "M1.compact");
  r.mixed = row("S(M1) ~ S*(M2)", std::move(mixed));
  r.coreSpectrum = row("beta*(M1) ~ beta*(M2)", recordDifferences(f1.core, f2.core));
  return r;
}

namespace {

void formatRecord(std::ostream& os, const std::string& name, const FingerprintRecord& r) {
  os << name << ": r=" << r.bricks.size() << " dim=" << r.dimension << " chi=" << r.euler
     << " components=" << r.components << " compact=" << (r.compact ? 1 : 0)
     << " locallyCompact=" << (r.locallyCompact ? 1 : 0) << " eta=" << r.etaCount << "\n";
  for (std::size_t i = 0; i < r.bricks.size(); ++i) {
    const auto& b = r.bricks[i];
    os << "  brick " << i << ": dim=" << b.dimension << " components=" << b.components
       << " chi=" << b.euler << " compact=" << (b.compact ? 1 : 0) << " eta=" << b.etaCount << "\n";
  }
}

}  // namespace

std::string formatFingerprint(const Fingerprint& f) {
  std::ostringstream os;
  formatRecord(os, "M", f.base);
  formatRecord(os, "M-eta", f.minusEta);
  formatRecord(os, "core", f.core);
  return os.str();
}

std::string formatReport(const ComparisonReport& r) {
  std::ostringstream os;
  for (const VerdictRow* v : {&r.spectrum, &r.boundedSpectrum, &r.mixed, &r.coreSpectrum}) {
    os << v->relation << ": " << verdictName(v->verdict);
    if (!v->mismatched.empty()) {
      os << " (mismatched:";
      for (const auto& m : v->mismatched) os << " " << m;
      os << ")";
    }
    os << " [necessary condition]\n";
  }
  return os.str();
}

}  // namespace specta::topology
