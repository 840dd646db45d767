#include "specta/cad/formula.hpp"

#include <algorithm>

#include "specta/error.hpp"

namespace specta::cad {

bool relationHolds(Relation r, int s) {
  switch (r) {
    case Relation::Less: return s < 0;
    case Relation::LessEq: return s <= 0;
    case Relation::Equal: return s == 0;
    case Relation::GreaterEq: return s >= 0;
    case Relation::Greater: return s > 0;
  }
  return false;
}

const char* relationSymbol(Relation r) {
  switch (r) {
    case Relation::Less: return "<";
    case Relation::LessEq: return "<=";
    case Relation::Equal: return "=";
    case Relation::GreaterEq: return ">=";
    case Relation::Greater: return ">";
  }
  return "?";
}

Formula Formula::atom(Polynomial p, Relation r) {
  if (p.isZero()) throw Error(ErrorKind::InputError, "formula atom with zero polynomial");
  for (const auto& v : p.support())
    if (v != "x" && v != "y")
      throw Error(ErrorKind::InputError, "formula atoms may use only x and y, found '" + v + "'");
  auto n = std::make_shared<Node>();
  n->op = Op::Atom;
  n->poly = std::move(p);
  n->rel = r;
  return Formula(std::move(n));
}

Formula Formula::conjunction(Formula a, Formula b) {
  auto n = std::make_shared<Node>();
  n->op = Op::And;
  n->left = std::move(a.node_);
  n->right = std::move(b.node_);
  return Formula(std::move(n));
}

Formula Formula::disjunction(Formula a, Formula b) {
  auto n = std::make_shared<Node>();
  n->op = Op::Or;
  n->left = std::move(a.node_);
  n->right = std::move(b.node_);
  return Formula(std::move(n));
}

Formula Formula::negation(Formula a) {
  auto n = std::make_shared<Node>();
  n->op = Op::Not;
  n->left = std::move(a.node_);
  return Formula(std::move(n));
}

namespace {

template <class Node, class Fn>
void visitAtoms(const Node& n, Fn&& fn) {
  if (n.op == Formula::Op::Atom) {
    fn(n);
    return;
  }
  visitAtoms(*n.left, fn);
  if (n.right) visitAtoms(*n.right, fn);
}

}  // namespace

std::vector<Polynomial> Formula::polynomials() const {
  std::vector<Polynomial> out;
  visitAtoms(*node_, [&](const Node& a) {
    if (std::find(out.begin(), out.end(), a.poly) == out.end()) out.push_back(a.poly);
  });
  return out;
}

bool Formula::holds(const std::vector<int>& signs) const {
  auto polys = polynomials();
  if (signs.size() != polys.size())
    throw Error(ErrorKind::InputError, "formula evaluation: sign vector has wrong length");
  std::function<bool(const Node&)> eval = [&](const Node& n) -> bool {
    switch (n.op) {
      case Op::Atom: {
        auto idx = std::find(polys.begin(), polys.end(), n.poly) - polys.begin();
        return relationHolds(n.rel, signs[static_cast<std::size_t>(idx)]);
      }
      case Op::And: return eval(*n.left) && eval(*n.right);
      case Op::Or: return eval(*n.left) || eval(*n.right);
      case Op::Not: return !eval(*n.left);
    }
    return false;
  };
  return eval(*node_);
}

bool Formula::holdsAt(const Rational& x, const Rational& y) const {
  std::vector<int> signs;
  for (const auto& p : polynomials()) signs.push_back(sgn(p.evaluate({{"x", x}, {"y", y}})));
  return holds(signs);
}

Formula Formula::mapPolynomials(const std::function<Polynomial(const Polynomial&)>& f) const {
  std::function<std::shared_ptr<const Node>(const Node&)> rec =
      [&](const Node& n) -> std::shared_ptr<const Node> {
    auto m = std::make_shared<Node>();
    m->op = n.op;
    m->rel = n.rel;
    if (n.op == Op::Atom) {
      m->poly = f(n.poly);
    } else {
      m->left = rec(*n.left);
      if (n.right) m->right = rec(*n.right);
    }
    return m;
  };
  return Formula(rec(*node_));
}

std::string Formula::toString() const {
  std::function<std::string(const Node&)> rec = [&](const Node& n) -> std::string {
    switch (n.op) {
      case Op::Atom: return n.poly.toString() + " " + relationSymbol(n.rel) + " 0";
      case Op::And: return "(" + rec(*n.left) + " AND " + rec(*n.right) + ")";
      case Op::Or: return "(" + rec(*n.left) + " OR " + rec(*n.right) + ")";
      case Op::Not: return "NOT " + rec(*n.left);
    }
    return "";
  };
  return rec(*node_);
}

}  // namespace specta::cad
