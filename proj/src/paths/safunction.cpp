#include "specta/paths/safunction.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "specta/error.hpp"

namespace specta::paths {

struct SAFunction::Node {
  Op op = Op::Poly;
  Polynomial poly;
  std::vector<SAFunction> args;
  unsigned exponent = 0;
};

std::size_t variableIndex(const std::string& name) {
  if (name.size() < 2 || name[0] != 'x' || name[1] == '0') return 0;
  if (!std::all_of(name.begin() + 1, name.end(), [](unsigned char c) { return std::isdigit(c); })) return 0;
  if (name.size() > 6) return 0;
  return std::stoul(name.substr(1));
}

SAFunction SAFunction::polynomial(const Polynomial& p) {
  for (const auto& v : p.variables())
    if (variableIndex(v) == 0) throw Error(ErrorKind::InputError, "variable '" + v + "' is not of the form x<i>");
  auto n = std::make_shared<Node>();
  n->poly = p;
  return SAFunction(std::move(n));
}

SAFunction SAFunction::constant(const Rational& c) { return polynomial(Polynomial::constant(c)); }

SAFunction SAFunction::variable(std::size_t index) {
  if (index == 0) throw Error(ErrorKind::InputError, "variables are numbered from 1");
  return polynomial(Polynomial::variable("x" + std::to_string(index)));
}

SAFunction::Op SAFunction::op() const { return node_ ? node_->op : Op::Poly; }

const std::vector<SAFunction>& SAFunction::children() const {
  static const std::vector<SAFunction> none;
  return node_ ? node_->args : none;
}

unsigned SAFunction::exponent() const { return node_ ? node_->exponent : 0; }

const Polynomial& SAFunction::asPolynomial() const {
  static const Polynomial zero;
  if (!isPolynomial()) throw Error(ErrorKind::InputError, "function is not a polynomial");
  return node_ ? node_->poly : zero;
}

SAFunction operator+(const SAFunction& a, const SAFunction& b) {
  if (a.isPolynomial() && b.isPolynomial()) return SAFunction::polynomial(a.asPolynomial() + b.asPolynomial());
  auto n = std::make_shared<SAFunction::Node>();
  n->op = SAFunction::Op::Add;
  n->args = {a, b};
  return SAFunction(std::move(n));
}

SAFunction operator-(const SAFunction& a, const SAFunction& b) {
  if (a.isPolynomial() && b.isPolynomial()) return SAFunction::polynomial(a.asPolynomial() - b.asPolynomial());
  auto n = std::make_shared<SAFunction::Node>();
  n->op = SAFunction::Op::Sub;
  n->args = {a, b};
  return SAFunction(std::move(n));
}

SAFunction operator*(const SAFunction& a, const SAFunction& b) {
  if (a.isPolynomial() && b.isPolynomial()) return SAFunction::polynomial(a.asPolynomial() * b.asPolynomial());
  auto n = std::make_shared<SAFunction::Node>();
  n->op = SAFunction::Op::Mul;
  n->args = {a, b};
  return SAFunction(std::move(n));
}

SAFunction operator/(const SAFunction& a, const SAFunction& b) {
  if (b.isPolynomial() && b.asPolynomial().isConstant()) {
    if (b.asPolynomial().isZero()) throw Error(ErrorKind::InputError, "division by zero");
    if (a.isPolynomial()) return SAFunction::polynomial(a.asPolynomial() * (1 / b.asPolynomial().constantTerm()));
  }
  auto n = std::make_shared<SAFunction::Node>();
  n->op = SAFunction::Op::Div;
  n->args = {a, b};
  return SAFunction(std::move(n));
}

SAFunction SAFunction::operator-() const {
  if (isPolynomial()) return polynomial(-asPolynomial());
  auto n = std::make_shared<Node>();
  n->op = Op::Neg;
  n->args = {*this};
  return SAFunction(std::move(n));
}

SAFunction abs(const SAFunction& a) {
  auto n = std::make_shared<SAFunction::Node>();
  n->op = SAFunction::Op::Abs;
  n->args = {a};
  return SAFunction(std::move(n));
}

SAFunction sqrt(const SAFunction& a) {
  auto n = std::make_shared<SAFunction::Node>();
  n->op = SAFunction::Op::Sqrt;
  n->args = {a};
  return SAFunction(std::move(n));
}

SAFunction SAFunction::pow(unsigned e) const {
  if (isPolynomial()) return polynomial(asPolynomial().pow(e));
  auto n = std::make_shared<Node>();
  n->op = Op::Pow;
  n->args = {*this};
  n->exponent = e;
  return SAFunction(std::move(n));
}

std::size_t SAFunction::arity() const {
  if (isPolynomial()) {
    std::size_t m = 0;
    for (const auto& v : asPolynomial().support()) m = std::max(m, variableIndex(v));
    return m;
  }
  std::size_t m = 0;
  for (const auto& a : node_->args) m = std::max(m, a.arity());
  return m;
}

namespace {

class PolynomialEvaluator {
 public:
  PolynomialEvaluator(const std::vector<PuiseuxSeries>& at) : at_(at), powers_(at.size()) {}

  PuiseuxSeries operator()(const Polynomial& p) {
    std::vector<std::size_t> index;
    for (const auto& v : p.variables()) {
      std::size_t i = variableIndex(v);
      if (i > at_.size())
        throw Error(ErrorKind::InputError, "function uses " + v + " but the path has " +
                                               std::to_string(at_.size()) + " components");
      index.push_back(i - 1);
    }
    PuiseuxSeries sum;
    for (const auto& [exps, c] : p.terms()) {
      PuiseuxSeries term = PuiseuxSeries::constant(c);
      for (std::size_t k = 0; k < exps.size(); ++k)
        if (exps[k] > 0) term = term * power(index[k], exps[k]);
      sum = sum + term;
    }
    return sum;
  }

 private:
  const PuiseuxSeries& power(std::size_t var, unsigned e) {
    auto& cache = powers_[var];
    if (cache.empty()) cache.push_back(PuiseuxSeries::constant(1));
    while (cache.size() <= e) cache.push_back(cache.back() * at_[var]);
    return cache[e];
  }

  const std::vector<PuiseuxSeries>& at_;
  std::vector<std::vector<PuiseuxSeries>> powers_;
};

PuiseuxSeries evaluateNode(const SAFunction& f, PolynomialEvaluator& poly, const Rational& cap) {
  using Op = SAFunction::Op;
  if (f.isPolynomial()) return poly(f.asPolynomial());
  std::vector<PuiseuxSeries> v;
  for (const auto& a : f.children()) v.push_back(evaluateNode(a, poly, cap));
  switch (f.op()) {
    case Op::Add: return v[0] + v[1];
    case Op::Sub: return v[0] - v[1];
    case Op::Mul: return v[0] * v[1];
    case Op::Div: return divide(v[0], v[1], cap);
    case Op::Abs: return abs(v[0]);
    case Op::Sqrt: return sqrt(v[0], cap);
    case Op::Neg: return -v[0];
    case Op::Pow: return pow(v[0], f.exponent());
    case Op::Poly: break;
  }
  return {};
}

}  // namespace

PuiseuxSeries SAFunction::evaluate(const std::vector<PuiseuxSeries>& at, const Rational& cap) const {
  PolynomialEvaluator poly(at);
  return evaluateNode(*this, poly, cap);
}

std::string SAFunction::toString() const {
  if (isPolynomial()) return asPolynomial().toString();
  auto wrap = [](const SAFunction& a) {
    bool atomic = a.isPolynomial() ? a.asPolynomial().terms().size() <= 1 && sgn(a.asPolynomial().constantTerm()) >= 0
                                   : a.op() == Op::Abs || a.op() == Op::Sqrt;
    return atomic ? a.toString() : "(" + a.toString() + ")";
  };
  const auto& a = node_->args;
  switch (node_->op) {
    case Op::Add: return a[0].toString() + " + " + a[1].toString();
    case Op::Sub: return a[0].toString() + " - " + wrap(a[1]);
    case Op::Mul: return wrap(a[0]) + "*" + wrap(a[1]);
    case Op::Div: return wrap(a[0]) + "/" + wrap(a[1]);
    case Op::Abs: return "abs(" + a[0].toString() + ")";
    case Op::Sqrt: return "sqrt(" + a[0].toString() + ")";
    case Op::Neg: return "-" + wrap(a[0]);
    case Op::Pow: return wrap(a[0]) + "^" + std::to_string(node_->exponent);
    case Op::Poly: break;
  }
  return "";
}

}  // namespace specta::paths
