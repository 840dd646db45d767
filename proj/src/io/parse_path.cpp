#include <functional>
#include <sstream>

#include "lexer.hpp"
#include "specta/error.hpp"
#include "specta/io/parse.hpp"

namespace specta::io {

using detail::parseError;
using detail::Tok;
using detail::Token;
using paths::SAFunction;

namespace {

using VariableMap = std::function<std::size_t(const std::string&)>;

std::size_t functionVariable(const std::string& name) {
  if (name == "x") return 1;
  if (name == "y") return 2;
  if (name == "z") return 3;
  return paths::variableIndex(name);
}

std::size_t pathVariable(const std::string& name) { return name == "t" ? 1 : 0; }

class FunctionParser {
 public:
  FunctionParser(const std::string& text, VariableMap vars) : toks_(detail::tokenize(text)), vars_(std::move(vars)) {}

  SAFunction expr() {
    SAFunction acc = term();
    while (isOp("+") || isOp("-")) {
      bool minus = next().text == "-";
      SAFunction t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  bool atEnd() const { return peek().kind == Tok::End; }
  bool atComma() const { return isOp(","); }
  void skip() { ++pos_; }
  void expectEnd() const {
    if (!atEnd()) parseError(peek(), "unexpected '" + peek().text + "'");
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool isOp(const char* op) const { return peek().kind == Tok::Op && peek().text == op; }
  Token next() { return toks_[pos_++]; }

  bool startsFactor() const {
    return peek().kind == Tok::Number || peek().kind == Tok::Ident || isOp("(");
  }

  SAFunction term() {
    SAFunction acc = unary();
    while (true) {
      if (isOp("*")) {
        ++pos_;
        acc = acc * unary();
      } else if (isOp("/")) {
        Token at = next();
        SAFunction d = unary();
        if (d.isPolynomial() && d.asPolynomial().isZero()) parseError(at, "division by zero");
        acc = acc / d;
      } else if (startsFactor()) {
        acc = acc * unary();
      } else {
        return acc;
      }
    }
  }

  SAFunction unary() {
    if (isOp("-")) {
      ++pos_;
      return -unary();
    }
    if (isOp("+")) {
      ++pos_;
      return unary();
    }
    SAFunction b = primary();
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

  SAFunction primary() {
    Token t = next();
    if (t.kind == Tok::Number) return SAFunction::constant(parseRational(t.text));
    if (t.kind == Tok::Ident) {
      if (t.text == "abs" || t.text == "sqrt") {
        if (!isOp("(")) parseError(peek(), "expected '(' after " + t.text);
        ++pos_;
        SAFunction inner = expr();
        expect(")");
        return t.text == "abs" ? abs(inner) : sqrt(inner);
      }
      std::size_t i = vars_(t.text);
      if (i == 0) parseError(t, "unknown variable '" + t.text + "'");
      return SAFunction::variable(i);
    }
    if (t.kind == Tok::Op && t.text == "(") {
      SAFunction e = expr();
      expect(")");
      return e;
    }
    if (t.kind == Tok::End) parseError(t, "unexpected end of input");
    parseError(t, "unexpected '" + t.text + "'");
  }

  void expect(const char* op) {
    if (!isOp(op)) parseError(peek(), std::string("expected '") + op + "'");
    ++pos_;
  }

  std::vector<Token> toks_;
  VariableMap vars_;
  std::size_t pos_ = 0;
};

struct RationalFunction {
  UPoly num, den;
};

RationalFunction toRationalFunction(const SAFunction& f) {
  using Op = SAFunction::Op;
  if (f.isPolynomial()) return {f.asPolynomial().toUnivariate("x1"), UPoly{1}};
  const auto& a = f.children();
  auto reduce = [](UPoly n, UPoly d) {
    UPoly g = gcd(n, d);
    if (!n.isZero() && g.degree() > 0) {
      n = n / g;
      d = d / g;
    }
    return RationalFunction{n, d};
  };
  switch (f.op()) {
    case Op::Add:
    case Op::Sub: {
      auto x = toRationalFunction(a[0]), y = toRationalFunction(a[1]);
      UPoly n = f.op() == Op::Add ? x.num * y.den + y.num * x.den : x.num * y.den - y.num * x.den;
      return reduce(n, x.den * y.den);
    }
    case Op::Mul: {
      auto x = toRationalFunction(a[0]), y = toRationalFunction(a[1]);
      return reduce(x.num * y.num, x.den * y.den);
    }
    case Op::Div: {
      auto x = toRationalFunction(a[0]), y = toRationalFunction(a[1]);
      if (y.num.isZero()) throw Error(ErrorKind::InputError, "division by zero");
      return reduce(x.num * y.den, x.den * y.num);
    }
    case Op::Neg: {
      auto x = toRationalFunction(a[0]);
      return {-x.num, x.den};
    }
    case Op::Pow: {
      auto x = toRationalFunction(a[0]);
      return {x.num.pow(f.exponent()), x.den.pow(f.exponent())};
    }
    default:
      throw Error(ErrorKind::InputError, "path components must be rational functions of t");
  }
}

paths::PathComponent componentFromExpression(const SAFunction& f, bool ratio) {
  if (f.isPolynomial() && !ratio) return paths::PathComponent::polynomial(f.asPolynomial().toUnivariate("x1"));
  RationalFunction r = toRationalFunction(f);
  if (r.den.isConstant() && !ratio) return paths::PathComponent::polynomial(r.num * (1 / r.den.coeff(0)));
  return paths::PathComponent::ratio(r.num, r.den);
}

// Error located at a 1-based line and column of the path file.
[[noreturn]] void fileError(int line, int column, const std::string& what) {
  Token at;
  at.line = line;
  at.column = column;
  parseError(at, what);
}

// Re-throws errors from a sub-parser with positions shifted to the file.
template <typename F>
auto within(int line, int column, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    std::string msg = e.what();
    const std::string prefix = std::string(errorKindName(e.kind())) + ": ";
    if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
    if (e.kind() == ErrorKind::ParseError) {
      // "line 1, column C: ..." from the sub-parser.
      int subColumn = 1;
      auto comma = msg.find("column ");
      auto colon = msg.find(": ");
      if (comma != std::string::npos && colon != std::string::npos) {
        subColumn = std::stoi(msg.substr(comma + 7, colon - comma - 7));
        msg = msg.substr(colon + 2);
      }
      fileError(line, column + subColumn - 1, msg);
    }
    fileError(line, column, msg);
  }
}

std::string trim(const std::string& s, std::size_t& start) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    start = s.size();
    return "";
  }
  std::size_t e = s.find_last_not_of(" \t\r");
  start = b;
  return s.substr(b, e - b + 1);
}

long positiveInteger(const std::string& text, int line, int column, const char* what) {
  if (text.empty() || text.size() > 9 || text.find_first_not_of("0123456789") != std::string::npos)
    fileError(line, column, std::string(what) + " must be a positive integer");
  long v = std::stol(text);
  if (v <= 0) fileError(line, column, std::string(what) + " must be a positive integer");
  return v;
}

paths::PathComponent parseComponentLine(const std::string& body, int line, int column) {
  std::string text = body;
  long power = 1;
  auto at = text.find("@p=");
  if (at != std::string::npos) {
    power = positiveInteger(text.substr(at + 3), line, column + static_cast<int>(at) + 3, "reparametrization power");
    text = text.substr(0, at);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.pop_back();
  }
  paths::PathComponent c;
  auto colon = text.find(':');
  std::string kind = text.substr(0, colon);
  while (!kind.empty() && kind.back() == ' ') kind.pop_back();
  std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
  int restColumn = column + static_cast<int>(colon == std::string::npos ? text.size() : colon + 1);
  if (kind == "factorial") {
    if (colon != std::string::npos && rest.find_first_not_of(" \t") != std::string::npos)
      fileError(line, restColumn, "factorial takes no arguments");
    c = paths::PathComponent::factorial();
  } else if (kind == "poly" || kind == "ratio") {
    if (colon == std::string::npos) fileError(line, column + static_cast<int>(text.size()), "expected ':'");
    c = within(line, restColumn, [&] {
      FunctionParser p(rest, pathVariable);
      SAFunction f = p.expr();
      p.expectEnd();
      if (kind == "poly" && !f.isPolynomial())
        throw Error(ErrorKind::ParseError, "line 1, column 1: poly components must be polynomials in t");
      return componentFromExpression(f, kind == "ratio");
    });
  } else if (kind == "coeffs") {
    if (colon == std::string::npos) fileError(line, column + static_cast<int>(text.size()), "expected ':'");
    paths::PuiseuxSeries::Terms terms;
    long e = 1;
    std::istringstream words(rest);
    std::string w;
    std::size_t searchFrom = 0;
    while (words >> w) {
      std::size_t offset = rest.find(w, searchFrom);
      searchFrom = offset + w.size();
      int wColumn = restColumn + static_cast<int>(offset);
      if (w.rfind("@e=", 0) == 0) {
        e = positiveInteger(w.substr(3), line, wColumn + 3, "ramification");
        continue;
      }
      auto sep = w.find(':');
      if (sep == std::string::npos) fileError(line, wColumn, "expected n:c, got '" + w + "'");
      std::string n = w.substr(0, sep);
      if (n.empty() || n.size() > 9 || n.find_first_not_of("0123456789") != std::string::npos)
        fileError(line, wColumn, "exponent numerator must be a non-negative integer");
      Rational value = within(line, wColumn + static_cast<int>(sep) + 1, [&] {
        try {
          return parseRational(w.substr(sep + 1));
        } catch (const std::exception&) {
          throw Error(ErrorKind::ParseError, "line 1, column 1: bad coefficient '" + w.substr(sep + 1) + "'");
        }
      });
      terms[std::stol(n)] += value;
    }
    c = paths::PathComponent::explicitList(std::move(terms), e);
  } else {
    fileError(line, column, "unknown component kind '" + kind + "' (poly, ratio, factorial, coeffs)");
  }
  c.power = power;
  return c;
}

}  // namespace

SAFunction parseFunction(const std::string& text) {
  FunctionParser p(text, functionVariable);
  SAFunction f = p.expr();
  p.expectEnd();
  return f;
}

std::vector<Polynomial> parsePolynomialList(const std::string& text) {
  FunctionParser p(text, functionVariable);
  std::vector<Polynomial> out;
  while (true) {
    SAFunction f = p.expr();
    if (!f.isPolynomial()) throw Error(ErrorKind::ParseError, "'" + f.toString() + "' is not a polynomial");
    out.push_back(f.asPolynomial());
    if (!p.atComma()) break;
    p.skip();
  }
  p.expectEnd();
  return out;
}

paths::FormalPath parsePathComponents(const std::string& text) {
  FunctionParser p(text, pathVariable);
  std::vector<paths::PathComponent> out;
  while (true) {
    out.push_back(componentFromExpression(p.expr(), false));
    if (!p.atComma()) break;
    p.skip();
  }
  p.expectEnd();
  return paths::FormalPath(std::move(out));
}

PathFile parsePathFile(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  bool header = false;
  long m = 0;
  PathFile out;
  std::vector<paths::PathComponent> comps;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::size_t start = 0;
    std::string body = trim(raw, start);
    if (body.empty()) continue;
    int column = static_cast<int>(start) + 1;
    if (!header) {
      std::istringstream words(body);
      std::string w;
      words >> w;
      if (w != "path") fileError(line, column, "expected header 'path m=<m> T=<T>'");
      header = true;
      std::size_t searchFrom = 4;
      while (words >> w) {
        int wColumn = column + static_cast<int>(body.find(w, searchFrom));
        searchFrom = body.find(w, searchFrom) + w.size();
        if (w.rfind("m=", 0) == 0) {
          m = positiveInteger(w.substr(2), line, wColumn + 2, "m");
        } else if (w.rfind("T=", 0) == 0) {
          out.truncation = positiveInteger(w.substr(2), line, wColumn + 2, "T");
        } else {
          fileError(line, wColumn, "unexpected '" + w + "' in header");
        }
      }
      if (m == 0) fileError(line, column, "header is missing m=<m>");
      continue;
    }
    if (static_cast<long>(comps.size()) == m) fileError(line, column, "more than m=" + std::to_string(m) + " components");
    comps.push_back(parseComponentLine(body, line, column));
  }
  if (!header) fileError(line + 1, 1, "missing header 'path m=<m> T=<T>'");
  if (static_cast<long>(comps.size()) != m)
    fileError(line + 1, 1, "expected " + std::to_string(m) + " components, found " + std::to_string(comps.size()));
  out.path = paths::FormalPath(std::move(comps));
  return out;
}

}  // namespace specta::io
