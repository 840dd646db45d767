#pragma once

#include <memory>
#include <string>
#include <vector>

#include "specta/arith/polynomial.hpp"
#include "specta/paths/puiseux.hpp"

namespace specta::paths {

/// Expression over the variables x1, x2, ... built from polynomials with
/// + - * /, |.|, sqrt and integer powers. Immutable; copies share nodes.
class SAFunction {
 public:
  enum class Op { Poly, Add, Sub, Mul, Div, Abs, Sqrt, Neg, Pow };

  /// Variables must be named x<i> with i >= 1.
  static SAFunction polynomial(const Polynomial& p);
  static SAFunction constant(const Rational& c);
  static SAFunction variable(std::size_t index);  // x<index>, 1-based

  friend SAFunction operator+(const SAFunction& a, const SAFunction& b);
  friend SAFunction operator-(const SAFunction& a, const SAFunction& b);
  friend SAFunction operator*(const SAFunction& a, const SAFunction& b);
  friend SAFunction operator/(const SAFunction& a, const SAFunction& b);
  SAFunction operator-() const;
  friend SAFunction abs(const SAFunction& a);
  friend SAFunction sqrt(const SAFunction& a);
  SAFunction pow(unsigned n) const;

  Op op() const;
  const std::vector<SAFunction>& children() const;
  /// Exponent of a Pow node.
  unsigned exponent() const;
  /// Largest variable index used (0 for constants).
  std::size_t arity() const;
  /// The whole tree is a single polynomial node.
  bool isPolynomial() const { return op() == Op::Poly; }
  const Polynomial& asPolynomial() const;

  /// psi_alpha: substitutes the series for x1, x2, ... Division and square
  /// roots are expanded below `cap`.
  PuiseuxSeries evaluate(const std::vector<PuiseuxSeries>& at, const Rational& cap) const;

  std::string toString() const;

 private:
  struct Node;
  explicit SAFunction(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Index i of a variable named x<i>, or 0 if the name has another form.
std::size_t variableIndex(const std::string& name);

}  // namespace specta::paths
