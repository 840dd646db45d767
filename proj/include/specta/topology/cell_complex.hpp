#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace specta::topology {

using CellId = long;

struct Cell {
  CellId id = 0;
  int dim = 0;
  bool inM = false;
};

/// Finite regular cell complex carrying X = Cl(M) with per-cell membership
/// in M.
///
/// The face relation may be given as covering pairs or in full; it is closed
/// transitively on construction. Validation rejects anything that is not a
/// regular complex for Cl(M): repeated ids, faces of equal or higher
/// dimension, 1-cells without two distinct 0-faces (loops), and cells outside
/// M that are not faces of a cell of M. Immutable after construction.
class CellComplex {
 public:
  CellComplex() = default;
  CellComplex(int ambientDim, bool bounded, std::vector<Cell> cells,
              std::vector<std::pair<CellId, CellId>> faces);

  int ambientDim() const { return ambient_; }
  bool bounded() const { return bounded_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }

  /// Cells sorted by id.
  const std::vector<Cell>& cells() const { return cells_; }
  const Cell& cell(std::size_t index) const { return cells_[index]; }
  /// The face pairs as given (deduplicated, sorted).
  const std::vector<std::pair<CellId, CellId>>& facePairs() const { return facePairs_; }

  std::size_t indexOf(CellId id) const;
  bool contains(CellId id) const;

  /// Strict faces of a cell (transitive), as sorted indices.
  const std::vector<std::size_t>& closureOf(std::size_t index) const { return faces_[index]; }
  /// Cells having this cell as a strict face, as sorted indices.
  const std::vector<std::size_t>& starOf(std::size_t index) const { return cofaces_[index]; }
  bool isFaceOf(std::size_t face, std::size_t cell) const;

  int dimension() const;
  std::vector<bool> membership() const;
  /// Same cells and faces, new membership flags (revalidated).
  CellComplex withMembership(const std::vector<bool>& inM) const;

 private:
  int ambient_ = 0;
  bool bounded_ = true;
  std::vector<Cell> cells_;
  std::vector<std::pair<CellId, CellId>> facePairs_;
  std::vector<std::vector<std::size_t>> faces_;
  std::vector<std::vector<std::size_t>> cofaces_;
};

/// Canonical text form: header, cells by id, face pairs sorted.
std::string serialize(const CellComplex& k);
/// Parses the text form; '#' starts a comment. Throws ParseError with the
/// line number, or RegularityViolation from validation.
CellComplex parseComplex(const std::string& text);

/// Barycentric subdivision: one simplex per chain of the face order, lying in
/// M when the chain's top cell does.
CellComplex barycentricSubdivision(const CellComplex& k);

}  // namespace specta::topology
