#include "specta/io/parse.hpp"

#include <algorithm>

#include "lexer.hpp"
#include "specta/error.hpp"

namespace specta::io {

using detail::parseError;
using detail::Tok;
using detail::Token;

namespace {

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
  return s;
}

bool isKeyword(const Token& t) {
  if (t.kind != Tok::Ident) return false;
  std::string u = upper(t.text);
  return u == "AND" || u == "OR" || u == "NOT";
}

class Parser {
 public:
  Parser(const std::string& text, std::set<std::string> allowed)
      : toks_(detail::tokenize(text)), allowed_(std::move(allowed)) {}

  const Token& peek() const { return toks_[pos_]; }
  bool isOp(const std::string& op) const { return peek().kind == Tok::Op && peek().text == op; }
  Token next() { return toks_[pos_++]; }
  void expectOp(const std::string& op) {
    if (!isOp(op)) parseError(peek(), "expected '" + op + "'");
    ++pos_;
  }
  void expectEnd() {
    if (peek().kind != Tok::End) parseError(peek(), "unexpected '" + peek().text + "'");
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (isOp("+") || isOp("-")) {
      bool minus = next().text == "-";
      Polynomial t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  cad::Formula formula() {
    cad::Formula acc = conjunction();
    while (keyword("OR") || isOp("||")) {
      ++pos_;
      acc = cad::Formula::disjunction(acc, conjunction());
    }
    return acc;
  }

  std::size_t pos_ = 0;

 private:
  bool startsFactor() const {
    const Token& t = peek();
    return t.kind == Tok::Number || (t.kind == Tok::Ident && !isKeyword(t)) || isOp("(");
  }

  bool keyword(const char* k) const { return peek().kind == Tok::Ident && upper(peek().text) == k; }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      if (isOp("*")) {
        ++pos_;
        acc *= factor();
      } else if (isOp("/")) {
        Token at = next();
        Polynomial d = factor();
        if (!d.isConstant() || d.isZero()) parseError(at, "division by a non-constant or zero");
        acc *= 1 / d.constantTerm();
      } else if (startsFactor()) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    if (isOp("-")) {
      ++pos_;
      return -factor();
    }
    if (isOp("+")) {
      ++pos_;
      return factor();
    }
    Polynomial b = base();
    if (isOp("^")) {
      ++pos_;
      Token e = next();
      if (e.kind != Tok::Number || e.text.find('.') != std::string::npos)
        parseError(e, "exponent must be a non-negative integer");
      if (e.text.size() > 4) parseError(e, "exponent too large");
      b = b.pow(static_cast<unsigned>(std::stoul(e.text)));
    }
    return b;
  }

  Polynomial base() {
    Token t = next();
    if (t.kind == Tok::Number) return Polynomial::constant(parseRational(t.text));
    if (t.kind == Tok::Ident && !isKeyword(t)) {
      if (!allowed_.empty() && !allowed_.count(t.text)) parseError(t, "unknown variable '" + t.text + "'");
      return Polynomial::variable(t.text);
    }
    if (t.kind == Tok::Op && t.text == "(") {
      Polynomial e = expr();
      expectOp(")");
      return e;
    }
    if (t.kind == Tok::End) parseError(t, "unexpected end of input");
    parseError(t, "unexpected '" + t.text + "'");
  }

  cad::Formula conjunction() {
    cad::Formula acc = unary();
    while (keyword("AND") || isOp("&&")) {
      ++pos_;
      acc = cad::Formula::conjunction(acc, unary());
    }
    return acc;
  }

  cad::Formula unary() {
    if (keyword("NOT") || isOp("!")) {
      ++pos_;
      return cad::Formula::negation(unary());
    }
    if (isOp("(")) {
      // A parenthesis opens either a subformula or an arithmetic group.
      std::size_t save = pos_;
      try {
        ++pos_;
        cad::Formula f = formula();
        expectOp(")");
        if (!relationAhead() && !isOp("+") && !isOp("-") && !isOp("*") && !isOp("/") &&
            !isOp("^") && !startsFactor())
          return f;
      } catch (const Error&) {
      }
      pos_ = save;
    }
    return atom();
  }

  bool relationAhead() const {
    return isOp("<") || isOp("<=") || isOp("=") || isOp("==") || isOp(">=") || isOp(">") ||
           isOp("!=");
  }

  cad::Formula atom() {
    Polynomial lhs = expr();
    Token rel = next();
    cad::Relation r;
    if (rel.kind != Tok::Op) parseError(rel, "expected a relation (< <= = >= >)");
    if (rel.text == "<")
      r = cad::Relation::Less;
    else if (rel.text == "<=")
      r = cad::Relation::LessEq;
    else if (rel.text == "=" || rel.text == "==")
      r = cad::Relation::Equal;
    else if (rel.text == ">=")
      r = cad::Relation::GreaterEq;
    else if (rel.text == ">")
      r = cad::Relation::Greater;
    else
      parseError(rel, "expected a relation (< <= = >= >), got '" + rel.text + "'");
    Polynomial rhs = expr();
    Polynomial p = lhs - rhs;
    if (p.isZero()) parseError(rel, "atom compares identical expressions");
    return cad::Formula::atom(p, r);
  }

  std::vector<Token> toks_;
  std::set<std::string> allowed_;
};

}  // namespace

Polynomial parsePolynomial(const std::string& text, const std::set<std::string>& allowed) {
  Parser p(text, allowed);
  Polynomial out = p.expr();
  p.expectEnd();
  return out;
}

cad::Formula parseFormula(const std::string& text) {
  Parser p(text, {"x", "y"});
  cad::Formula f = p.formula();
  p.expectEnd();
  return f;
}

}  // namespace specta::io
