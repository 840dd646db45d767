#pragma once

#include <cstdint>

#include "specta/topology/cell_complex.hpp"

namespace specta::topology {

struct CorpusOptions {
  int maxDim = 3;
  int maxVertices = 9;
  int maxSimplices = 6;
  std::size_t maxCells = 200;
};

/// Random simplicial complex: the closure of a few random simplices on a small
/// vertex set. Maximal simplices lie in M; every other simplex lies in M with
/// probability 1/2. Deterministic in the seed; never exceeds maxCells.
CellComplex randomSimplicialComplex(std::uint64_t seed, const CorpusOptions& opts = {});

}  // namespace specta::topology
