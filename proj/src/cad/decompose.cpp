#include "specta/cad/decompose.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "specta/arith/number_field.hpp"
#include "specta/error.hpp"

namespace specta::cad {

using topology::CellId;

namespace {

using KPoly = fpoly::Poly<AlgebraicField>;

bool upolyLess(const UPoly& a, const UPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.coeffs() < b.coeffs();
}

UPoly normalized(const UPoly& p) { return squarefreePart(p).primitive(); }

// An interval end: the value, and whether it is the root itself.
struct Bound {
  Rational value;
  bool exact = false;
};

// Simple rational strictly between two isolated roots, given the upper end
// of the lower root's interval and the lower end of the upper one's.
Rational sampleBetween(const Bound& below, const Bound& above) {
  if (below.value == above.value) return below.value;
  Rational lo = below.exact ? (3 * below.value + above.value) / 4 : below.value;
  Rational hi = above.exact ? (below.value + 3 * above.value) / 4 : above.value;
  return simplestBetween(lo, hi);
}

// Samples for the 2n + 1 gaps around n ordered root intervals.
std::vector<Rational> gapSamples(const std::vector<std::pair<Bound, Bound>>& roots) {
  std::vector<Rational> out;
  if (roots.empty()) return {Rational(0)};
  out.push_back(Rational(floorOf(roots.front().first.value) - 1));
  for (std::size_t i = 0; i + 1 < roots.size(); ++i)
    out.push_back(sampleBetween(roots[i].second, roots[i + 1].first));
  out.push_back(Rational(ceilOf(roots.back().second.value) + 1));
  return out;
}

std::pair<Bound, Bound> boundsOf(const AlgebraicNumber& a) {
  return {{a.lo(), a.isRational()}, {a.hi(), a.isRational()}};
}

std::pair<Bound, Bound> boundsOf(const fpoly::RootInterval& iv) {
  return {{iv.lo, iv.exact()}, {iv.hi, iv.exact()}};
}

// Refines two ordered, distinct algebraic numbers until their intervals can
// be told apart by gapSamples.
void separate(AlgebraicNumber& a, AlgebraicNumber& b) {
  while (true) {
    if (a.hi() < b.lo()) return;
    if (a.hi() == b.lo() && !a.isRational() && !b.isRational()) return;
    if (!a.isRational()) a = a.bisected();
    if (!b.isRational()) b = b.bisected();
  }
}

KPoly toK(const AlgebraicField& k, const BiPoly& f) {
  KPoly out(f.c.begin(), f.c.end());
  fpoly::trim(k, out);
  return out;
}

bool vanishesInInterval(const AlgebraicField& k, const KPoly& h, const fpoly::RootInterval& iv) {
  if (h.size() <= 1) return false;
  if (iv.exact()) return k.isZero(fpoly::evalAt(k, h, iv.lo));
  return k.sign(fpoly::evalAt(k, h, iv.lo)) * k.sign(fpoly::evalAt(k, h, iv.hi)) < 0;
}

// Sign of g at the root of the squarefree s isolated by iv.
int signAtRoot(const AlgebraicField& k, KPoly g, const KPoly& s, fpoly::RootInterval iv) {
  fpoly::trim(k, g);
  if (g.empty()) return 0;
  if (iv.exact()) return k.sign(fpoly::evalAt(k, g, iv.lo));
  if (g.size() == 1) return k.sign(g[0]);
  if (vanishesInInterval(k, fpoly::gcd(k, g, s), iv)) return 0;
  auto seq = fpoly::sturmSequence(k, g);
  while (true) {
    if (iv.exact()) return k.sign(fpoly::evalAt(k, g, iv.lo));
    int sl = k.sign(fpoly::evalAt(k, g, iv.lo));
    int sh = k.sign(fpoly::evalAt(k, g, iv.hi));
    if (sl != 0 && sh != 0 && fpoly::countRoots(k, seq, iv.lo, iv.hi) == 0) return sl;
    fpoly::bisect(k, s, iv);
  }
}

std::vector<Rational> shearCandidates() {
  std::vector<Rational> out;
  for (int total = 2; total <= 9; ++total)
    for (int den = 1; den < total; ++den) {
      int num = total - den;
      if (std::gcd(num, den) != 1) continue;
      out.push_back(makeRational(num, den));
      out.push_back(makeRational(-num, den));
    }
  return out;
}

Polynomial sheared(const Polynomial& p, const Rational& lambda) {
  if (lambda == 0) return p;
  return p.substitute("x", Polynomial::variable("x") + lambda * Polynomial::variable("y"));
}

struct Attempt {
  Rational shear;
  std::vector<Polynomial> atoms;  // sheared, in formula order
  std::vector<BiPoly> atomBi;
  BiPoly lifting;
  std::vector<AlgebraicNumber> critical;
  std::vector<CadStack> stacks;
};

bool leadingCoefficientsConstant(const std::vector<Polynomial>& atoms) {
  for (const auto& a : atoms) {
    if (a.isConstant()) continue;
    if (!BiPoly::from(a).leading().isConstant()) return false;
  }
  return true;
}

std::vector<int> atomSignsRational(const Attempt& at, const Rational& u, const Rational& v) {
  std::vector<int> s;
  for (const auto& a : at.atoms) s.push_back(sgn(a.evaluate({{"x", u}, {"y", v}})));
  return s;
}

// Sector stack over the rational u.
CadStack sectorStack(const Attempt& at, const Formula& phi, const Rational& u) {
  CadStack st;
  st.x = AlgebraicNumber(u);
  std::vector<AlgebraicNumber> roots;
  if (at.lifting.degreeY() >= 1) roots = isolateRealRoots(at.lifting.atX(u));
  st.sections = roots.size();
  std::vector<std::pair<Bound, Bound>> b;
  for (const auto& r : roots) b.push_back(boundsOf(r));
  auto gaps = gapSamples(b);
  for (std::size_t i = 0; i <= 2 * roots.size(); ++i) {
    std::vector<int> signs;
    std::string sample;
    if (i % 2 == 0) {
      const Rational& v = gaps[i / 2];
      signs = atomSignsRational(at, u, v);
      sample = "(" + u.get_str() + ", " + v.get_str() + ")";
    } else {
      const AlgebraicNumber& v = roots[i / 2];
      for (const auto& a : at.atomBi) signs.push_back(a.isZero() ? 0 : signAt(a.atX(u), v));
      sample = "(" + u.get_str() + ", " + v.toString() + ")";
    }
    st.truth.push_back(phi.holds(signs));
    st.samples.push_back(sample);
  }
  return st;
}

// Fiber stack over the critical value alpha. Returns false when the fiber
// carries more than one multiple root.
bool fiberStack(const Attempt& at, const Formula& phi, const AlgebraicNumber& alpha, CadStack& st,
                std::optional<std::size_t>& criticalIndex) {
  AlgebraicField k(alpha);
  st.x = alpha;
  std::vector<fpoly::RootInterval> roots;
  KPoly s;
  if (at.lifting.degreeY() >= 1) {
    KPoly f = toK(k, at.lifting);
    s = fpoly::squarefreePart(k, f);
    roots = fpoly::isolateRoots(k, s);
    KPoly h = fpoly::gcd(k, s, fpoly::gcd(k, f, fpoly::derivative(k, f)));
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (!vanishesInInterval(k, h, roots[i])) continue;
      if (criticalIndex) return false;
      criticalIndex = i;
    }
  }
  st.sections = roots.size();
  std::vector<std::pair<Bound, Bound>> b;
  for (const auto& r : roots) b.push_back(boundsOf(r));
  auto gaps = gapSamples(b);
  std::vector<KPoly> atomsK;
  for (const auto& a : at.atomBi) atomsK.push_back(toK(k, a));
  const std::string xs = alpha.toString();
  for (std::size_t i = 0; i <= 2 * roots.size(); ++i) {
    std::vector<int> signs;
    std::string sample;
    if (i % 2 == 0) {
      const Rational& v = gaps[i / 2];
      for (const auto& g : atomsK) signs.push_back(g.empty() ? 0 : k.sign(fpoly::evalAt(k, g, v)));
      sample = "(" + xs + ", " + v.get_str() + ")";
    } else {
      const auto& iv = roots[i / 2];
      for (const auto& g : atomsK) signs.push_back(signAtRoot(k, g, s, iv));
      sample = "(" + xs + ", " + (iv.exact() ? iv.lo.get_str()
                                              : "root " + std::to_string(i / 2) + " in (" +
                                                    iv.lo.get_str() + ", " + iv.hi.get_str() + ")") +
               ")";
    }
    st.truth.push_back(phi.holds(signs));
    st.samples.push_back(sample);
  }
  return true;
}

// Limit points of the curves of an adjacent open stack in a fiber with
// `points` roots and optional critical root c.
std::vector<std::size_t> limits(std::size_t curves, std::size_t points, std::optional<std::size_t> c,
                                std::size_t fiber) {
  auto fail = [&]() {
    throw Error(ErrorKind::DecompositionFailure,
                "stack " + std::to_string(fiber) + ": " + std::to_string(curves) +
                    " curves cannot converge to " + std::to_string(points) + " fiber points");
  };
  std::vector<std::size_t> out(curves);
  if (!c) {
    if (curves != points) fail();
    std::iota(out.begin(), out.end(), 0);
    return out;
  }
  const std::size_t below = *c, above = points - *c - 1;
  if (curves < below + above) fail();
  for (std::size_t s = 0; s < curves; ++s) {
    if (s < below)
      out[s] = s;
    else if (s >= curves - above)
      out[s] = points - (curves - s);
    else
      out[s] = *c;
  }
  return out;
}

std::optional<Attempt> attempt(const Formula& phi, const Rational& lambda) {
  Attempt at;
  at.shear = lambda;
  for (const auto& p : phi.polynomials()) at.atoms.push_back(sheared(p, lambda));
  if (!leadingCoefficientsConstant(at.atoms)) return std::nullopt;

  Polynomial product = Polynomial::constant(1);
  for (const auto& a : at.atoms) {
    at.atomBi.push_back(a.isConstant() ? BiPoly{{UPoly::constant(a.constantTerm())}} : BiPoly::from(a));
    if (a.isConstant()) continue;
    product *= a;
  }
  at.lifting = product.isConstant() ? BiPoly{{UPoly::constant(1)}} : squarefreePart(BiPoly::from(product));
  // The discriminant of the squarefree product carries every atom's
  // discriminant and every pairwise resultant; the atoms themselves only
  // refine the coprime basis into low-degree factors.
  std::vector<Polynomial> projected;
  if (!product.isConstant()) projected.push_back(at.lifting.toPolynomial());
  for (const auto& a : at.atoms)
    if (!a.isConstant() && a.degreeIn("y") >= 1) projected.push_back(squarefreePart(BiPoly::from(a)).toPolynomial());
  for (const auto& q : projectionPhase(projected))
    for (auto& r : isolateRealRoots(q)) at.critical.push_back(std::move(r));
  std::sort(at.critical.begin(), at.critical.end(),
            [](const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) < 0; });

  const std::size_t n = at.critical.size();
  std::vector<Rational> sectorX;
  if (n == 0) {
    sectorX.push_back(Rational(0));
  } else {
    for (std::size_t i = 0; i + 1 < n; ++i) separate(at.critical[i], at.critical[i + 1]);
    std::vector<std::pair<Bound, Bound>> b;
    for (const auto& a : at.critical) b.push_back(boundsOf(a));
    sectorX = gapSamples(b);
  }

  at.stacks.resize(2 * n + 1);
  for (std::size_t i = 0; i <= n; ++i) at.stacks[2 * i] = sectorStack(at, phi, sectorX[i]);
  for (std::size_t i = 0; i < n; ++i) {
    CadStack& st = at.stacks[2 * i + 1];
    std::optional<std::size_t> c;
    if (!fiberStack(at, phi, at.critical[i], st, c)) return std::nullopt;
    st.fromLeft = limits(at.stacks[2 * i].sections, st.sections, c, 2 * i + 1);
    st.fromRight = limits(at.stacks[2 * i + 2].sections, st.sections, c, 2 * i + 1);
  }
  return at;
}

bool unboundedCell(std::size_t stackCount, const CadStack& st, std::size_t stack, std::size_t index) {
  return stack == 0 || stack + 1 == stackCount || index == 0 || index == 2 * st.sections;
}

// Faces of a bounded cell, as (stack, index) pairs.
std::vector<CadCell> facesOf(const std::vector<CadStack>& stacks, std::size_t j, std::size_t i) {
  std::vector<CadCell> out;
  if (j % 2 == 1) {
    if (i % 2 == 0) {
      out.push_back({j, i - 1});
      out.push_back({j, i + 1});
    }
    return out;
  }
  const CadStack& left = stacks[j - 1];
  const CadStack& right = stacks[j + 1];
  auto pointIndex = [](std::size_t p) { return 2 * p + 1; };
  if (i % 2 == 1) {
    std::size_t s = i / 2;
    out.push_back({j - 1, pointIndex(left.fromRight[s])});
    out.push_back({j + 1, pointIndex(right.fromLeft[s])});
    return out;
  }
  // Open sector between curves s - 1 and s.
  std::size_t s = i / 2;
  out.push_back({j, i - 1});
  out.push_back({j, i + 1});
  for (std::size_t q = pointIndex(left.fromRight[s - 1]); q <= pointIndex(left.fromRight[s]); ++q)
    out.push_back({j - 1, q});
  for (std::size_t q = pointIndex(right.fromLeft[s - 1]); q <= pointIndex(right.fromLeft[s]); ++q)
    out.push_back({j + 1, q});
  return out;
}

}  // namespace

std::vector<UPoly> coprimeBasis(const std::vector<UPoly>& polys) {
  std::vector<UPoly> basis;
  for (const auto& p : polys)
    if (!p.isConstant()) basis.push_back(normalized(p));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < basis.size() && !changed; ++j) {
        UPoly g = gcd(basis[i], basis[j]);
        if (g.isConstant()) continue;
        UPoly a = basis[i] / g, b = basis[j] / g;
        basis.erase(basis.begin() + static_cast<long>(j));
        basis.erase(basis.begin() + static_cast<long>(i));
        for (const UPoly& p : {a, b, g})
          if (!p.isConstant()) basis.push_back(normalized(p));
        changed = true;
      }
  }
  std::sort(basis.begin(), basis.end(), upolyLess);
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  return basis;
}

std::vector<UPoly> projectionPhase(const std::vector<Polynomial>& polys) {
  std::vector<UPoly> raw;
  auto addX = [&](const Polynomial& q) {
    if (q.isZero() || q.isConstant()) return;
    raw.push_back(q.toUnivariate("x"));
  };
  for (const auto& p : polys) {
    if (p.isZero()) throw Error(ErrorKind::InputError, "projectionPhase: zero polynomial");
    unsigned d = p.degreeIn("y");
    if (d == 0) {
      addX(p);
      continue;
    }
    addX(p.coefficientsIn("y").back());
    if (d >= 2) addX(discriminant(p, "y"));
  }
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = i + 1; j < polys.size(); ++j)
      if (polys[i].degreeIn("y") >= 1 && polys[j].degreeIn("y") >= 1)
        addX(resultant(polys[i], polys[j], "y"));
  return coprimeBasis(raw);
}

Decomposition decompose(const Formula& phi) {
  std::vector<Rational> candidates{Rational(0)};
  for (const auto& c : shearCandidates()) candidates.push_back(c);
  std::optional<Attempt> at;
  for (const auto& lambda : candidates) {
    at = attempt(phi, lambda);
    if (at) break;
  }
  if (!at)
    throw Error(ErrorKind::DecompositionFailure, "no admissible shear among the candidates tried");

  Decomposition d;
  d.formula_ = phi;
  d.shear_ = at->shear;
  d.lifting_ = at->lifting;
  d.critical_ = at->critical;
  d.stacks_ = at->stacks;

  const auto& stacks = d.stacks_;
  std::vector<std::vector<bool>> inClosure(stacks.size());
  for (std::size_t j = 0; j < stacks.size(); ++j) inClosure[j].assign(stacks[j].truth.size(), false);
  for (std::size_t j = 0; j < stacks.size(); ++j)
    for (std::size_t i = 0; i < stacks[j].truth.size(); ++i) {
      if (!stacks[j].truth[i]) continue;
      if (unboundedCell(stacks.size(), stacks[j], j, i))
        throw Error(ErrorKind::UnboundedInput,
                    "the set meets the unbounded cell with sample " + stacks[j].samples[i]);
      inClosure[j][i] = true;
      for (const auto& f : facesOf(stacks, j, i)) inClosure[f.stack][f.index] = true;
    }

  std::map<std::pair<std::size_t, std::size_t>, CellId> ids;
  std::vector<topology::Cell> cells;
  for (std::size_t j = 0; j < stacks.size(); ++j)
    for (std::size_t i = 0; i < stacks[j].truth.size(); ++i) {
      if (!inClosure[j][i]) continue;
      CellId id = static_cast<CellId>(cells.size());
      ids[{j, i}] = id;
      int dim = static_cast<int>(j % 2 == 0) + static_cast<int>(i % 2 == 0);
      cells.push_back({id, dim, static_cast<bool>(stacks[j].truth[i])});
      d.origin_.push_back({j, i});
    }
  std::vector<std::pair<CellId, CellId>> faces;
  for (const auto& [key, id] : ids)
    for (const auto& f : facesOf(stacks, key.first, key.second)) {
      auto it = ids.find({f.stack, f.index});
      if (it == ids.end())
        throw Error(ErrorKind::DecompositionFailure, "face of a closure cell missing from the closure");
      faces.emplace_back(it->second, id);
    }
  d.complex_ = topology::CellComplex(2, true, std::move(cells), std::move(faces));
  return d;
}

std::size_t Decomposition::cadCellCount() const {
  std::size_t n = 0;
  for (const auto& s : stacks_) n += s.truth.size();
  return n;
}

CadCell Decomposition::locate(const Rational& x, const Rational& y) const {
  Rational u = x - shear_ * y;
  std::size_t stack = 2 * critical_.size();
  for (std::size_t i = 0; i < critical_.size(); ++i) {
    int c = compare(critical_[i], u);
    if (c >= 0) {
      stack = c == 0 ? 2 * i + 1 : 2 * i;
      break;
    }
  }
  std::size_t index = 0;
  for (const auto& r : fiberRoots(u)) {
      int c = compare(r, y);
      if (c < 0)
        index += 2;
      else if (c == 0)
        index += 1;
  }
  return {stack, index};
}

std::vector<AlgebraicNumber> Decomposition::fiberRoots(const Rational& u) const {
  if (lifting_.degreeY() < 1) return {};
  return isolateRealRoots(lifting_.atX(u));
}

std::optional<CellId> Decomposition::complexId(const CadCell& c) const {
  auto it = std::find(origin_.begin(), origin_.end(), c);
  if (it == origin_.end()) return std::nullopt;
  return static_cast<CellId>(it - origin_.begin());
}

std::string Decomposition::annotatedText() const {
  std::ostringstream os;
  os << "# formula: " << formula_.toString() << "\n";
  os << "# shear: " << shear_.get_str() << " (u = x - shear*y, v = y)\n";
  os << "# decomposition: " << stacks_.size() << " stacks, " << cadCellCount() << " cells\n";
  os << topology::serialize(complex_);
  for (std::size_t id = 0; id < origin_.size(); ++id) {
    const auto& c = origin_[id];
    os << "# sample " << id << " stack=" << c.stack << " index=" << c.index
       << " (u, v) = " << stacks_[c.stack].samples[c.index] << "\n";
  }
  return os.str();
}

bool containsPoint(const Formula& phi, const Rational& x, const Rational& y) {
  return phi.holdsAt(x, y);
}

}  // namespace specta::cad
