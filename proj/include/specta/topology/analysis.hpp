#pragma once

#include <string>
#include <vector>

#include "specta/topology/cell_complex.hpp"

namespace specta::topology {

/// Largest dimension of a cell of M whose closure contains the given cell.
/// Throws NotInM for cells outside M.
int localDimension(const CellComplex& k, CellId id);

struct Brick {
  int dimension = 0;
  std::vector<CellId> cells;  // sorted
};

/// Bricks B_d: cells of M in the closure of the cells of local dimension d,
/// one per occurring d, ordered by decreasing d. Verifies the brick axioms
/// and throws RegularityViolation on failure. Throws InputError when empty.
std::vector<Brick> bricks(const CellComplex& k);

/// Axiom violations (empty when the bricks are valid): each brick is pure of
/// its dimension and closed in M, the bricks cover M, every brick cell lies in
/// the closure of the brick's cells shared with no other brick, and
/// dimensions strictly decrease.
std::vector<std::string> brickAxiomViolations(const CellComplex& k, const std::vector<Brick>& b);

/// Closure compatibility of bricks: the bricks of Cl(M) are the closures of
/// the bricks of M, and restrict to them on M.
std::vector<std::string> closureCompatibilityViolations(const CellComplex& k);

struct RhoSequence {
  std::vector<CellId> rho0;  // Cl(M) minus M
  std::vector<CellId> rho1;  // cells of M in the closure of rho0
  std::vector<CellId> locallyCompactPart;  // M minus rho1
};

/// Throws RegularityViolation if the locally compact part disagrees with the
/// compact-neighbourhood criterion.
RhoSequence rhoSequence(const CellComplex& k);

/// Whether the subset S (cells of the complex) is locally closed in Cl(S),
/// i.e. no cell of S is a face of a cell of Cl(S) outside S.
bool isLocallyCompact(const CellComplex& k, const std::vector<bool>& subset);

/// Isolated endpoints of 1-dimensional whiskers: 0-cells of M whose open star
/// in M is the cell plus exactly one 1-cell, with no cell of M of dimension
/// two or more in that star.
std::vector<CellId> etaSet(const CellComplex& k);

/// Every face of every cell of M lies in M.
bool isCompact(const CellComplex& k);
bool isCompact(const CellComplex& k, const std::vector<bool>& subset);

/// Connected components of a subset under the face relation.
int componentCount(const CellComplex& k, const std::vector<bool>& subset);
long eulerCharacteristic(const CellComplex& k, const std::vector<bool>& subset);

/// M with eta(M) removed from M.
CellComplex minusEta(const CellComplex& k);
/// The locally compact part with its own eta removed.
CellComplex core(const CellComplex& k);

struct BrickRecord {
  int dimension = 0;
  int components = 0;
  long euler = 0;
  bool compact = false;
  int etaCount = 0;
  bool operator==(const BrickRecord&) const = default;
};

struct FingerprintRecord {
  std::vector<BrickRecord> bricks;
  bool compact = false;
  bool locallyCompact = false;
  int dimension = -1;
  int components = 0;
  long euler = 0;
  int etaCount = 0;
  bool operator==(const FingerprintRecord&) const = default;
};

struct Fingerprint {
  FingerprintRecord base;
  FingerprintRecord minusEta;
  FingerprintRecord core;
  bool operator==(const Fingerprint&) const = default;
};

FingerprintRecord fingerprintRecord(const CellComplex& k);
Fingerprint spectralFingerprint(const CellComplex& k);

/// Names of the fields on which two records differ.
std::vector<std::string> recordDifferences(const FingerprintRecord& a, const FingerprintRecord& b);

enum class Verdict { RuledOut, Consistent };
const char* verdictName(Verdict v);

struct VerdictRow {
  std::string relation;
  Verdict verdict = Verdict::Consistent;
  std::vector<std::string> mismatched;
};

/// Necessary-condition comparison of two sets; RuledOut is a certificate
/// that the corresponding spectra are not homeomorphic, Consistent is not
/// a proof that they are.
struct ComparisonReport {
  VerdictRow spectrum;         // S(M1) vs S(M2)
  VerdictRow boundedSpectrum;  // S*(M1) vs S*(M2)
  VerdictRow mixed;            // S(M1) vs S*(M2), M1 must be compact
  VerdictRow coreSpectrum;     // beta* of M1 vs M2
};

ComparisonReport compareSpectralTypes(const CellComplex& k1, const CellComplex& k2);

std::string formatFingerprint(const Fingerprint& f);
std::string formatReport(const ComparisonReport& r);

}  // namespace specta::topology
