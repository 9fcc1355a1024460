#pragma once

#include <map>
#include <string>
#include <vector>

#include "f1/arith.hpp"

namespace f1 {

using Exponents = std::vector<int>;

/// Sparse multivariate polynomial over Q with named variables.
class MultiPolynomial {
 public:
  using TermMap = std::map<Exponents, Rational>;

  MultiPolynomial() = default;
  explicit MultiPolynomial(std::vector<std::string> variables);
  MultiPolynomial(std::vector<std::string> variables, TermMap terms);

  static MultiPolynomial constant(std::vector<std::string> variables, const Rational& c);
  static MultiPolynomial monomial(std::vector<std::string> variables, Exponents exps,
                                 const Rational& c = 1);

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t arity() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;

  void add_term(const Exponents& exps, const Rational& c);

  MultiPolynomial operator-() const;
  MultiPolynomial& operator+=(const MultiPolynomial& o);
  MultiPolynomial& operator-=(const MultiPolynomial& o);
  MultiPolynomial& operator*=(const MultiPolynomial& o);
  friend MultiPolynomial operator+(MultiPolynomial a, const MultiPolynomial& b) { return a += b; }
  friend MultiPolynomial operator-(MultiPolynomial a, const MultiPolynomial& b) { return a -= b; }
  friend MultiPolynomial operator*(MultiPolynomial a, const MultiPolynomial& b) { return a *= b; }
  friend bool operator==(const MultiPolynomial&, const MultiPolynomial&) = default;

  Rational evaluate(const std::vector<Rational>& point) const;

  /// Canonical text: descending graded-lex, e.g. "T1*T4 - T2*T3 - 1".
  std::string to_string() const;

 private:
  void check_compatible(const MultiPolynomial& o) const;

  std::vector<std::string> vars_;
  TermMap terms_;  // no zero coefficients, every key has arity() entries
};

/// Descending graded-lex comparison used for printing (true if a before b).
bool graded_lex_greater(const Exponents& a, const Exponents& b);

/// "T1^2*T3", or "1" for the empty product.
std::string monomial_text(const std::vector<std::string>& variables, const Exponents& exps);

}  // namespace f1
