#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "specta/arith/polynomial.hpp"

namespace specta::cad {

enum class Relation { Less, LessEq, Equal, GreaterEq, Greater };

/// Sign condition on P: whether sign(P) = s satisfies `P rel 0`.
bool relationHolds(Relation r, int s);
const char* relationSymbol(Relation r);

/// Boolean combination of polynomial sign conditions in x and y.
class Formula {
 public:
  enum class Op { Atom, And, Or, Not };

  static Formula atom(Polynomial p, Relation r);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);
  static Formula negation(Formula a);

  Op op() const { return node_->op; }

  /// Distinct atom polynomials, in order of first appearance.
  std::vector<Polynomial> polynomials() const;
  /// Truth value given sign(P_i) for each P_i of polynomials().
  bool holds(const std::vector<int>& signs) const;
  /// Truth value at a rational point.
  bool holdsAt(const Rational& x, const Rational& y) const;
  /// Applies f to every atom polynomial.
  Formula mapPolynomials(const std::function<Polynomial(const Polynomial&)>& f) const;
  std::string toString() const;

 private:
  struct Node {
    Op op = Op::Atom;
    Polynomial poly;
    Relation rel = Relation::Equal;
    std::shared_ptr<const Node> left, right;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace specta::cad
