#pragma once

#include <map>
#include <string>
#include <vector>

#include "specta/arith/rational.hpp"
#include "specta/arith/upoly.hpp"

namespace specta {

/// Sparse multivariate polynomial over Q.
///
/// Variables are kept sorted (alphabetic prefix, then numeric suffix, so
/// x2 < x10) and terms are keyed by exponent vectors aligned with that list.
/// No zero coefficient is ever stored. Binary operations align the variable
/// lists of their operands.
class Polynomial {
 public:
  using Exponents = std::vector<unsigned>;
  using Terms = std::map<Exponents, Rational>;

  Polynomial() = default;
  static Polynomial constant(const Rational& c);
  static Polynomial variable(const std::string& name);
  /// c * prod(var_i ^ e_i)
  static Polynomial monomial(const Rational& c, const std::map<std::string, unsigned>& powers);
  /// Embeds a univariate polynomial in the given variable.
  static Polynomial fromUnivariate(const UPoly& p, const std::string& var);

  const std::vector<std::string>& variables() const { return vars_; }
  const Terms& terms() const { return terms_; }

  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;
  /// Constant term (coefficient of the zero exponent vector).
  Rational constantTerm() const;
  bool involves(const std::string& var) const;
  unsigned degreeIn(const std::string& var) const;
  unsigned totalDegree() const;
  /// Variables that actually occur.
  std::vector<std::string> support() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(unsigned e) const;
  Polynomial derivative(const std::string& var) const;

  /// Full evaluation; every occurring variable must be bound.
  Rational evaluate(const std::map<std::string, Rational>& point) const;
  /// Replaces var by value.
  Polynomial substitute(const std::string& var, const Polynomial& value) const;
  /// Coefficients of the powers of var (low first); var does not occur in them.
  std::vector<Polynomial> coefficientsIn(const std::string& var) const;
  static Polynomial fromCoefficients(const std::vector<Polynomial>& coeffs, const std::string& var);
  /// Requires that no variable other than var occurs.
  UPoly toUnivariate(const std::string& var) const;

  std::string toString() const;

  /// Natural ordering used for the variable list.
  static bool variableLess(const std::string& a, const std::string& b);

 private:
  Polynomial(std::vector<std::string> vars, Terms terms);
  Polynomial aligned(const std::vector<std::string>& vars) const;
  void normalize();
  std::vector<std::string> vars_;
  Terms terms_;
};

/// Exact division in Q[vars]; throws InputError if b does not divide a.
Polynomial divExact(const Polynomial& a, const Polynomial& b);

/// Resultant with respect to var via the subresultant PRS. Convention: the
/// determinant of the Sylvester matrix whose first deg_var(q) rows hold the
/// coefficients of p (highest degree first), followed by deg_var(p) rows of
/// q, so res_y(y - x, y + x) = 2x. Zero inputs are rejected.
Polynomial resultant(const Polynomial& p, const Polynomial& q, const std::string& var);

/// (-1)^(n(n-1)/2) * res(p, dp/dvar) / lc(p), n = deg_var(p) >= 1.
Polynomial discriminant(const Polynomial& p, const std::string& var);

}  // namespace specta
