#pragma once

#include <optional>
#include <set>
#include <vector>
#include <string>

#include "specta/arith/polynomial.hpp"
#include "specta/cad/formula.hpp"
#include "specta/paths/formal_path.hpp"
#include "specta/paths/safunction.hpp"

namespace specta::io {

/// Polynomial text: rational or decimal numbers, variables, + - * ^ with
/// non-negative integer exponents, division by nonzero constants, and
/// implicit multiplication ("2x", "6t^3"). When `allowed` is nonempty, other
/// variable names are rejected. Throws ParseError with line and column.
Polynomial parsePolynomial(const std::string& text, const std::set<std::string>& allowed = {});

/// Formula text over x and y: atoms `expr rel expr` with rel one of
/// < <= = == >= >, combined with AND / OR / NOT (any case, or && || !) and
/// parentheses. AND binds tighter than OR.
cad::Formula parseFormula(const std::string& text);

/// Semialgebraic function text: the polynomial syntax plus `/` by any
/// expression, `abs(...)` and `sqrt(...)`. Variables are x1, x2, ... with
/// x, y, z standing for x1, x2, x3.
paths::SAFunction parseFunction(const std::string& text);

/// Comma-separated list of polynomials over x1, x2, ... (or x, y, z).
std::vector<Polynomial> parsePolynomialList(const std::string& text);

/// Comma-separated path components in t, each a polynomial or a quotient of
/// polynomials, e.g. "t, 2t^2 + 6t^3".
paths::FormalPath parsePathComponents(const std::string& text);

struct PathFile {
  paths::FormalPath path;
  /// Truncation from the header, if given.
  std::optional<Rational> truncation;
};

/// Path file: a header `path m=<m> [T=<T>]`, then m component lines, each
/// `poly: <p(t)>`, `ratio: <p(t)>/<q(t)>`, `factorial` or
/// `coeffs: n1:c1 n2:c2 ... @e=<e>`, optionally followed by `@p=<p>` for a
/// reparametrization t -> t^p. Blank lines and `#` comments are skipped.
PathFile parsePathFile(const std::string& text);

}  // namespace specta::io
