#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "specta/error.hpp"

namespace specta::io::detail {

enum class Tok { Number, Ident, Op, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int column = 1;
};

[[noreturn]] inline void parseError(const Token& at, const std::string& what) {
  throw Error(ErrorKind::ParseError,
              "line " + std::to_string(at.line) + ", column " + std::to_string(at.column) + ": " + what);
}

/// Numbers (digits with an optional fractional part), identifiers
/// ([A-Za-z_][A-Za-z0-9_]*) and the operators + - * / ^ ( ) , < <= = == >= >
/// && || !. A '#' comments out the rest of its line.
inline std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    std::size_t j = i;
    if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && i + 1 < s.size() &&
                                                         std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j < s.size() && s[j] == '.') {
        ++j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      }
      t.kind = Tok::Number;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      t.kind = Tok::Ident;
    } else {
      static const char* twoChar[] = {"<=", ">=", "==", "&&", "||", "!="};
      t.kind = Tok::Op;
      j = i + 1;
      for (const char* op : twoChar)
        if (s.compare(i, 2, op) == 0) j = i + 2;
      static const std::string single = "+-*/^(),<>=!:";
      if (j == i + 1 && single.find(c) == std::string::npos) {
        parseError(t, std::string("unexpected character '") + c + "'");
      }
    }
    t.text = s.substr(i, j - i);
    advance(j - i);
    out.push_back(t);
  }
  Token end;
  end.kind = Tok::End;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

}  // namespace specta::io::detail
