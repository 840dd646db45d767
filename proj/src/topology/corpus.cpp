#include "specta/topology/corpus.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace specta::topology {

namespace {

using Simplex = std::vector<int>;

void addClosure(const Simplex& s, std::set<Simplex>& out) {
  const std::size_t n = s.size();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Simplex f;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) f.push_back(s[i]);
    out.insert(f);
  }
}

}  // namespace

CellComplex randomSimplicialComplex(std::uint64_t seed, const CorpusOptions& opts) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int vertices = uniform(std::min(2, opts.maxVertices), opts.maxVertices);
  const int count = uniform(1, opts.maxSimplices);

  std::set<Simplex> all;
  std::vector<Simplex> tops;
  for (int t = 0; t < count; ++t) {
    int d = uniform(0, std::min(opts.maxDim, vertices - 1));
    std::vector<int> pool(vertices);
    for (int i = 0; i < vertices; ++i) pool[i] = i;
    std::shuffle(pool.begin(), pool.end(), rng);
    Simplex s(pool.begin(), pool.begin() + d + 1);
    std::sort(s.begin(), s.end());
    std::set<Simplex> trial = all;
    addClosure(s, trial);
    if (trial.size() > opts.maxCells) continue;
    all = std::move(trial);
    tops.push_back(s);
  }
  if (all.empty()) all.insert(Simplex{0});

  auto isFace = [](const Simplex& a, const Simplex& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  std::map<Simplex, CellId> id;
  std::vector<Cell> cells;
  for (const auto& s : all) {
    CellId c = static_cast<CellId>(cells.size());
    id[s] = c;
    bool maximal = std::none_of(all.begin(), all.end(), [&](const Simplex& t) { return isFace(s, t); });
    bool inM = maximal || std::bernoulli_distribution(0.5)(rng);
    cells.push_back({c, static_cast<int>(s.size()) - 1, inM});
  }
  std::vector<std::pair<CellId, CellId>> faces;
  for (const auto& s : all) {
    if (s.size() < 2) continue;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Simplex f;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != drop) f.push_back(s[i]);
      faces.emplace_back(id.at(f), id.at(s));
    }
  }
  return CellComplex(std::max(1, opts.maxDim), true, std::move(cells), std::move(faces));
}

}  // namespace specta::topology
