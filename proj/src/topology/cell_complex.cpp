#include "specta/topology/cell_complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "specta/error.hpp"

namespace specta::topology {

namespace {

[[noreturn]] void violation(const std::string& what) {
  throw Error(ErrorKind::RegularityViolation, what);
}

}  // namespace

CellComplex::CellComplex(int ambientDim, bool bounded, std::vector<Cell> cells,
                         std::vector<std::pair<CellId, CellId>> faces)
    : ambient_(ambientDim), bounded_(bounded), cells_(std::move(cells)) {
  if (ambient_ < 1) violation("ambient dimension must be positive");
  std::sort(cells_.begin(), cells_.end(), [](const Cell& a, const Cell& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (i > 0 && cells_[i].id == cells_[i - 1].id)
      violation("duplicate cell id " + std::to_string(cells_[i].id));
    if (cells_[i].dim < 0 || cells_[i].dim > ambient_)
      violation("cell " + std::to_string(cells_[i].id) + " has dimension outside [0, ambient]");
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  facePairs_ = std::move(faces);

  const std::size_t n = cells_.size();
  std::vector<std::vector<std::size_t>> direct(n);
  for (const auto& [small, big] : facePairs_) {
    if (!contains(small) || !contains(big))
      violation("face " + std::to_string(small) + " " + std::to_string(big) +
                " references an unknown cell");
    if (small == big) violation("cell " + std::to_string(small) + " listed as its own face");
    std::size_t s = indexOf(small), b = indexOf(big);
    if (cells_[s].dim >= cells_[b].dim)
      violation("face " + std::to_string(small) + " of " + std::to_string(big) +
                " does not have smaller dimension");
    direct[b].push_back(s);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return cells_[a].dim < cells_[b].dim; });
  faces_.assign(n, {});
  for (std::size_t c : order) {
    std::set<std::size_t> acc;
    for (std::size_t f : direct[c]) {
      acc.insert(f);
      acc.insert(faces_[f].begin(), faces_[f].end());
    }
    faces_[c].assign(acc.begin(), acc.end());
  }
  cofaces_.assign(n, {});
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t f : faces_[c]) cofaces_[f].push_back(c);
  for (auto& v : cofaces_) std::sort(v.begin(), v.end());

  for (std::size_t c = 0; c < n; ++c) {
    if (cells_[c].dim == 1) {
      int vertices = 0;
      for (std::size_t f : faces_[c])
        if (cells_[f].dim == 0) ++vertices;
      if (vertices != 2)
        violation("1-cell " + std::to_string(cells_[c].id) + " has " + std::to_string(vertices) +
                  " distinct 0-faces (regular complexes need exactly 2)");
    }
    if (cells_[c].dim >= 2) {
      bool hasBoundary = std::any_of(faces_[c].begin(), faces_[c].end(), [&](std::size_t f) {
        return cells_[f].dim == cells_[c].dim - 1;
      });
      if (!hasBoundary)
        violation(std::to_string(cells_[c].dim) + "-cell " + std::to_string(cells_[c].id) +
                  " has no faces of codimension one");
    }
    if (!cells_[c].inM) {
      bool inClosure = std::any_of(cofaces_[c].begin(), cofaces_[c].end(),
                                   [&](std::size_t g) { return cells_[g].inM; });
      if (!inClosure)
        violation("cell " + std::to_string(cells_[c].id) +
                  " is outside M and not a face of any cell of M");
    }
  }
}

std::size_t CellComplex::indexOf(CellId id) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), id,
                             [](const Cell& c, CellId v) { return c.id < v; });
  if (it == cells_.end() || it->id != id)
    throw Error(ErrorKind::InputError, "unknown cell id " + std::to_string(id));
  return static_cast<std::size_t>(it - cells_.begin());
}

bool CellComplex::contains(CellId id) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), id,
                             [](const Cell& c, CellId v) { return c.id < v; });
  return it != cells_.end() && it->id == id;
}

bool CellComplex::isFaceOf(std::size_t face, std::size_t cell) const {
  return std::binary_search(faces_[cell].begin(), faces_[cell].end(), face);
}

int CellComplex::dimension() const {
  int d = -1;
  for (const auto& c : cells_)
    if (c.inM) d = std::max(d, c.dim);
  return d;
}

std::vector<bool> CellComplex::membership() const {
  std::vector<bool> v(cells_.size());
  for (std::size_t i = 0; i < cells_.size(); ++i) v[i] = cells_[i].inM;
  return v;
}

CellComplex CellComplex::withMembership(const std::vector<bool>& inM) const {
  std::vector<Cell> cells = cells_;
  for (std::size_t i = 0; i < cells.size(); ++i) cells[i].inM = inM.at(i);
  return CellComplex(ambient_, bounded_, std::move(cells), facePairs_);
}

std::string serialize(const CellComplex& k) {
  std::ostringstream os;
  os << "complex ambient=" << k.ambientDim() << " bounded=" << (k.bounded() ? 1 : 0) << "\n";
  for (const auto& c : k.cells())
    os << "cell " << c.id << " dim=" << c.dim << " inM=" << (c.inM ? 1 : 0) << "\n";
  for (const auto& [s, b] : k.facePairs()) os << "face " << s << " " << b << "\n";
  return os.str();
}

namespace {

[[noreturn]] void parseError(int line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

long parseLong(const std::string& s, int line) {
  if (s.empty()) parseError(line, "expected an integer");
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (...) {
    parseError(line, "expected an integer, got '" + s + "'");
  }
  if (pos != s.size()) parseError(line, "expected an integer, got '" + s + "'");
  return v;
}

long keyValue(const std::string& token, const std::string& key, int line) {
  if (token.rfind(key + "=", 0) != 0) parseError(line, "expected '" + key + "=<value>'");
  return parseLong(token.substr(key.size() + 1), line);
}

bool flag(long v, int line) {
  if (v != 0 && v != 1) parseError(line, "flag must be 0 or 1");
  return v == 1;
}

}  // namespace

CellComplex parseComplex(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineNo = 0;
  bool haveHeader = false;
  int ambient = 0;
  bool bounded = true;
  std::vector<Cell> cells;
  std::vector<std::pair<CellId, CellId>> faces;
  while (std::getline(in, raw)) {
    ++lineNo;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] == "complex") {
      if (haveHeader) parseError(lineNo, "duplicate header");
      if (tok.size() != 3) parseError(lineNo, "header is 'complex ambient=<m> bounded=<0|1>'");
      ambient = static_cast<int>(keyValue(tok[1], "ambient", lineNo));
      bounded = flag(keyValue(tok[2], "bounded", lineNo), lineNo);
      haveHeader = true;
    } else if (tok[0] == "cell") {
      if (!haveHeader) parseError(lineNo, "cell before header");
      if (tok.size() != 4) parseError(lineNo, "cell record is 'cell <id> dim=<d> inM=<0|1>'");
      Cell c;
      c.id = parseLong(tok[1], lineNo);
      if (c.id < 0) parseError(lineNo, "cell ids must be non-negative");
      c.dim = static_cast<int>(keyValue(tok[2], "dim", lineNo));
      c.inM = flag(keyValue(tok[3], "inM", lineNo), lineNo);
      cells.push_back(c);
    } else if (tok[0] == "face") {
      if (!haveHeader) parseError(lineNo, "face before header");
      if (tok.size() != 3) parseError(lineNo, "face record is 'face <id_small> <id_big>'");
      faces.emplace_back(parseLong(tok[1], lineNo), parseLong(tok[2], lineNo));
    } else {
      parseError(lineNo, "unknown record '" + tok[0] + "'");
    }
  }
  if (!haveHeader) parseError(lineNo, "missing 'complex' header");
  return CellComplex(ambient, bounded, std::move(cells), std::move(faces));
}

CellComplex barycentricSubdivision(const CellComplex& k) {
  // Enumerate chains c0 < c1 < ... < ck, each recorded by increasing dimension.
  std::vector<std::vector<std::size_t>> chains;
  std::map<std::vector<std::size_t>, CellId> chainId;
  std::vector<std::size_t> current;
  auto extend = [&](auto&& self, std::size_t top) -> void {
    current.push_back(top);
    std::vector<std::size_t> chain(current.rbegin(), current.rend());
    chainId.emplace(chain, static_cast<CellId>(chains.size()));
    chains.push_back(std::move(chain));
    for (std::size_t f : k.closureOf(top)) self(self, f);
    current.pop_back();
  };
  for (std::size_t c = 0; c < k.size(); ++c) extend(extend, c);

  std::vector<Cell> cells;
  std::vector<std::pair<CellId, CellId>> faces;
  for (std::size_t i = 0; i < chains.size(); ++i) {
    const auto& chain = chains[i];
    cells.push_back({static_cast<CellId>(i), static_cast<int>(chain.size()) - 1,
                     k.cell(chain.back()).inM});
    // Codimension-one faces: drop one element of the chain.
    if (chain.size() < 2) continue;
    for (std::size_t drop = 0; drop < chain.size(); ++drop) {
      std::vector<std::size_t> sub;
      for (std::size_t j = 0; j < chain.size(); ++j)
        if (j != drop) sub.push_back(chain[j]);
      faces.emplace_back(chainId.at(sub), static_cast<CellId>(i));
    }
  }
  return CellComplex(k.ambientDim(), k.bounded(), std::move(cells), std::move(faces));
}

}  // namespace specta::topology
