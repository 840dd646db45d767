#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specta/arith/algebraic.hpp"
#include "specta/arith/field_poly.hpp"
#include "specta/arith/polynomial.hpp"
#include "specta/cad/bipoly.hpp"
#include "specta/cad/formula.hpp"
#include "specta/topology/cell_complex.hpp"

namespace specta::cad {

/// Projection of a set of polynomials in x, y onto the x-axis: leading
/// coefficients, discriminants and pairwise resultants in y, with zero and
/// constant results dropped, reduced to a squarefree pairwise coprime basis
/// of primitive integer polynomials in x. Zero inputs are rejected.
std::vector<UPoly> projectionPhase(const std::vector<Polynomial>& polys);

/// Squarefree, pairwise coprime basis with the same zeros as the input.
std::vector<UPoly> coprimeBasis(const std::vector<UPoly>& polys);

/// A cell of the cylindrical decomposition: stack j (even: open x-interval,
/// odd: fiber over a critical x), index i in the stack (even: open y-interval,
/// odd: y-root).
struct CadCell {
  std::size_t stack = 0;
  std::size_t index = 0;
  bool operator==(const CadCell&) const = default;
};

struct CadStack {
  /// Sample x: rational over open intervals, the critical value on fibers.
  AlgebraicNumber x{Rational(0)};
  std::size_t sections = 0;
  /// Truth value of the formula on each cell (2 * sections + 1 entries).
  std::vector<bool> truth;
  /// Sample point descriptions, one per cell, in sheared coordinates.
  std::vector<std::string> samples;
  /// Fiber stacks only: limit index (point) of each curve of the neighbouring
  /// open stacks.
  std::vector<std::size_t> fromLeft, fromRight;
};

/// Sign-invariant cylindrical decomposition of the plane adapted to a formula,
/// with the closure of its solution set as a cell complex.
///
/// The decomposition is computed in coordinates u = x - shear * y, v = y where
/// every atom has a constant leading coefficient in v and every critical fiber
/// carries at most one multiple root. Complex cell ids number the cells of
/// Cl(M) in stack order.
class Decomposition {
 public:
  const Formula& formula() const { return formula_; }
  const Rational& shear() const { return shear_; }
  const std::vector<AlgebraicNumber>& criticalValues() const { return critical_; }
  const std::vector<CadStack>& stacks() const { return stacks_; }
  std::size_t cadCellCount() const;
  const topology::CellComplex& complex() const { return complex_; }

  /// Cell containing the point (x, y) given in original coordinates.
  CadCell locate(const Rational& x, const Rational& y) const;
  /// Ordered roots in v of the lifting polynomial over the rational u
  /// (sheared coordinates).
  std::vector<AlgebraicNumber> fiberRoots(const Rational& u) const;
  bool inM(const CadCell& c) const { return stacks_[c.stack].truth[c.index]; }
  std::optional<topology::CellId> complexId(const CadCell& c) const;
  const CadCell& cadCellOf(topology::CellId id) const { return origin_.at(static_cast<std::size_t>(id)); }

  /// Complex text with metadata and per-cell sample annotations as comments.
  std::string annotatedText() const;

 private:
  friend Decomposition decompose(const Formula& phi);
  Formula formula_ = Formula::atom(Polynomial::constant(1), Relation::Greater);
  Rational shear_;
  BiPoly lifting_;  // squarefree product of the sheared atoms
  std::vector<AlgebraicNumber> critical_;
  std::vector<CadStack> stacks_;
  topology::CellComplex complex_;
  std::vector<CadCell> origin_;
};

/// Throws UnboundedInput when the formula holds on an unbounded cell, and
/// DecompositionFailure when no admissible shear is found among the small
/// rationals tried.
Decomposition decompose(const Formula& phi);

/// Exact truth value of phi at (x, y).
bool containsPoint(const Formula& phi, const Rational& x, const Rational& y);

}  // namespace specta::cad
