#include "f1/lexer.hpp"

#include <cctype>

namespace f1 {

Lexer::Lexer(const std::string& text, bool newline_tokens) {
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
        ++col;  // count code points, not bytes
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    const auto uc = static_cast<unsigned char>(c);
    if (c == '\n') {
      if (newline_tokens) tokens_.push_back({Token::Kind::Newline, "\n", line, col});
      advance(1);
    } else if (std::isspace(uc)) {
      advance(1);
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
    } else if (std::isalpha(uc) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' || text[j] == '\'')) {
        ++j;
      }
      tokens_.push_back({Token::Kind::Name, text.substr(i, j - i), line, col});
      advance(j - i);
    } else if (std::isdigit(uc)) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      tokens_.push_back({Token::Kind::Number, text.substr(i, j - i), line, col});
      advance(j - i);
    } else {
      std::size_t len = 1;
      if (uc >= 0x80) {
        while (i + len < text.size() && (static_cast<unsigned char>(text[i + len]) & 0xC0) == 0x80) {
          ++len;
        }
      }
      tokens_.push_back({Token::Kind::Symbol, text.substr(i, len), line, col});
      advance(len);
    }
  }
  tokens_.push_back({Token::Kind::End, "", line, col});
}

const Token& Lexer::peek(std::size_t ahead) const {
  return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
}

Token Lexer::next() {
  Token t = peek();
  if (pos_ + 1 < tokens_.size()) ++pos_;
  return t;
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case Token::Kind::End:
      return "end of input";
    case Token::Kind::Newline:
      return "end of line";
    default:
      return "'" + t.text + "'";
  }
}

void Lexer::fail(const std::string& what, const Token& at) const {
  throw ParseError(what, at.line, at.column);
}

Token Lexer::expect_symbol(const char* symbol) {
  if (!peek().is(symbol) && !peek().is_name(symbol)) {
    fail(std::string("expected '") + symbol + "' but found " + describe(peek()), peek());
  }
  return next();
}

Token Lexer::expect_name(const char* what) {
  if (peek().kind != Token::Kind::Name) {
    fail(std::string("expected ") + what + " but found " + describe(peek()), peek());
  }
  return next();
}

Token Lexer::expect_number(const char* what) {
  if (peek().kind != Token::Kind::Number) {
    fail(std::string("expected ") + what + " but found " + describe(peek()), peek());
  }
  return next();
}

bool Lexer::accept_symbol(const char* symbol) {
  if (!peek().is(symbol)) return false;
  next();
  return true;
}

void Lexer::skip_newlines() {
  while (peek().kind == Token::Kind::Newline) next();
}

Rational Lexer::rational(bool allow_negative) {
  const Token start = peek();
  bool negative = false;
  if (peek().is("-")) {
    if (!allow_negative) fail("negative constant", start);
    next();
    negative = true;
  }
  Rational v(Integer(expect_number().text));
  if (accept_symbol("/")) {
    const Token den = expect_number("denominator");
    Integer d(den.text);
    if (d == 0) fail("zero denominator", den);
    v /= Rational(d);
  } else if (peek().is(".") && peek(1).kind == Token::Kind::Number) {
    next();
    const std::string digits = next().text;
    Integer scale = 1;
    for (std::size_t k = 0; k < digits.size(); ++k) scale *= 10;
    v += Rational(Integer(digits), scale);
  }
  v.canonicalize();
  return negative ? Rational(-v) : v;
}

}  // namespace f1
