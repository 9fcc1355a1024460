#pragma once

// Buchberger's algorithm over Q with normal forms and Krull dimension.

#include <string>
#include <vector>

#include "f1/multipoly.hpp"

namespace f1 {

enum class OrderKind { GradedReverseLex, Lex };

/// Monomial order. `precedence[k]` is the variable index ranked k-th (the
/// "largest" variable first); empty means the declared order.
struct TermOrder {
  OrderKind kind = OrderKind::GradedReverseLex;
  std::vector<std::size_t> precedence;

  static TermOrder grevlex() { return {}; }
  static TermOrder lex() { return {OrderKind::Lex, {}}; }

  /// Strict "a > b".
  bool greater(const Exponents& a, const Exponents& b) const;
};

class GroebnerBasis {
 public:
  struct Term {
    Exponents exps;
    Rational coeff;
  };
  /// Terms sorted descending in the basis order; leading coefficient 1.
  using Poly = std::vector<Term>;

  GroebnerBasis() = default;
  GroebnerBasis(std::vector<std::string> variables, TermOrder order, std::vector<Poly> polys);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermOrder& order() const { return order_; }
  bool reduced() const { return true; }
  std::size_t size() const { return polys_.size(); }
  const std::vector<Poly>& polys() const { return polys_; }
  bool is_unit_ideal() const;

  std::vector<MultiPolynomial> generators() const;
  std::vector<Exponents> leading_monomials() const;

  std::string to_string() const;

 private:
  std::vector<std::string> vars_;
  TermOrder order_;
  std::vector<Poly> polys_;
};

/// Reduced Groebner basis of the ideal generated by `gens` (all over the same
/// variables; an empty list needs the variable names passed separately).
GroebnerBasis buchberger(const std::vector<MultiPolynomial>& gens,
                         const TermOrder& order = TermOrder::grevlex());
GroebnerBasis buchberger(const std::vector<std::string>& variables,
                         const std::vector<MultiPolynomial>& gens,
                         const TermOrder& order = TermOrder::grevlex());

MultiPolynomial normal_form(const MultiPolynomial& f, const GroebnerBasis& basis);

bool ideal_member_poly(const MultiPolynomial& f, const GroebnerBasis& basis);

/// Dimension of Q[x]/I from the initial ideal; -1 for the unit ideal.
int krull_dimension(const GroebnerBasis& basis);

/// Mutual membership of generators (same variables required).
bool ideals_equal(const GroebnerBasis& a, const GroebnerBasis& b);

}  // namespace f1
