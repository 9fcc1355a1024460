#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace f1 {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand outside an operation's domain (division by zero, bad index, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A bounded search ran out of budget before reaching a verdict.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed input text. The message ends with " at line:column".
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what + " at " + std::to_string(line) + ":" + std::to_string(column)),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Integer& v) { return v.get_str(); }

inline std::string to_string(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

/// Parses "a" or "a/b" with optional sign; throws DomainError otherwise.
Rational parse_rational(std::string_view text);

inline bool is_integral(const Rational& v) { return v.get_den() == 1; }

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer g;
  mpz_lcm(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Rational pow(const Rational& base, long exponent) {
  Rational result = 1;
  Rational b = exponent < 0 ? Rational(1) / base : base;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                 : static_cast<unsigned long>(exponent);
  while (e) {
    if (e & 1U) result *= b;
    b *= b;
    e >>= 1U;
  }
  return result;
}

inline Integer ipow(long base, unsigned long exponent) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exponent);
  return base < 0 && (exponent & 1U) ? Integer(-r) : r;
}

}  // namespace f1
