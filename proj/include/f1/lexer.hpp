#pragma once

// Tokenizer shared by the text formats.

#include <string>
#include <vector>

#include "f1/arith.hpp"

namespace f1 {

struct Token {
  enum class Kind { Name, Number, Symbol, Newline, End };
  Kind kind = Kind::End;
  std::string text;
  int line = 1;
  int column = 1;

  bool is(const char* symbol) const { return kind == Kind::Symbol && text == symbol; }
  bool is_name(const char* name) const { return kind == Kind::Name && text == name; }
};

/// Names are [A-Za-z_][A-Za-z0-9_']*, numbers are digit runs, every other
/// printable character is a one-character symbol. '#' comments run to the end
/// of the line. Newlines become tokens only when asked for.
class Lexer {
 public:
  explicit Lexer(const std::string& text, bool newline_tokens = false);

  const Token& peek(std::size_t ahead = 0) const;
  Token next();
  bool at_end() const { return peek().kind == Token::Kind::End; }
  /// Consumes a symbol or keyword, or throws ParseError.
  Token expect_symbol(const char* symbol);
  Token expect_name(const char* what = "name");
  Token expect_number(const char* what = "number");
  bool accept_symbol(const char* symbol);
  void skip_newlines();

  [[noreturn]] void fail(const std::string& what, const Token& at) const;

  /// "a", "a/b" or "a.b", optionally preceded by '-' when allowed.
  Rational rational(bool allow_negative);

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string describe(const Token& t);

}  // namespace f1
