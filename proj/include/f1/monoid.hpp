#pragma once

// Finitely presented commutative monoids with zero.

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "f1/groebner.hpp"
#include "f1/multipoly.hpp"

namespace f1 {

/// A word in the generators of a presentation, or the absorbing zero.
/// Exponents of inverted generators may be negative.
class Monomial {
 public:
  Monomial() = default;  // the empty product over zero generators
  explicit Monomial(Exponents exps) : exps_(std::move(exps)) {}

  static Monomial zero() {
    Monomial m;
    m.zero_ = true;
    return m;
  }
  static Monomial one(std::size_t arity) { return Monomial(Exponents(arity, 0)); }
  static Monomial generator(std::size_t arity, std::size_t index, int power = 1);

  bool is_zero() const { return zero_; }
  bool is_one() const;
  const Exponents& exponents() const { return exps_; }
  std::size_t arity() const { return exps_.size(); }
  /// Sum of absolute exponents (0 for Zero).
  int degree() const;

  Monomial operator*(const Monomial& o) const;
  Monomial pow(int k) const;
  Monomial inverse() const;
  Monomial padded(std::size_t arity) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  bool zero_ = false;
  Exponents exps_;
};

struct MonoidRelation {
  Monomial lhs;
  Monomial rhs;
  friend bool operator==(const MonoidRelation&, const MonoidRelation&) = default;
};

struct MonoidPresentation {
  std::vector<std::string> generators;
  std::vector<MonoidRelation> relations;
  std::vector<bool> inverted;  // one flag per generator

  MonoidPresentation() = default;
  explicit MonoidPresentation(std::vector<std::string> gens);

  static MonoidPresentation free(std::vector<std::string> gens);

  std::size_t arity() const { return generators.size(); }
  std::optional<std::size_t> index_of(const std::string& name) const;
  bool is_inverted(std::size_t i) const { return i < inverted.size() && inverted[i]; }
  void set_inverted(std::size_t i);
  void add_relation(Monomial lhs, Monomial rhs);

  /// Throws DomainError on duplicate names, arity mismatch or negative
  /// exponents of non-inverted generators.
  void validate() const;
  void validate(const Monomial& m) const;

  Monomial one() const { return Monomial::one(arity()); }
  Monomial gen(std::size_t i, int power = 1) const {
    return Monomial::generator(arity(), i, power);
  }
  /// Parses "T1^2*T3", "1" or "0".
  Monomial parse_monomial(const std::string& text) const;
  std::string to_text(const Monomial& m) const;

  friend bool operator==(const MonoidPresentation&, const MonoidPresentation&) = default;
};

using MonoidIdeal = std::vector<Monomial>;

/// A prime ideal named by the generators that generate it (sorted indices).
struct PrimeIdeal {
  std::vector<std::size_t> generators;
  friend auto operator<=>(const PrimeIdeal&, const PrimeIdeal&) = default;
};

/// Word problem solver: the congruence of a presentation encoded as the
/// binomial ideal  (X^a - X^b, X^c, g*g_inv - 1)  over Q. Immutable once built.
class Congruence {
 public:
  explicit Congruence(MonoidPresentation presentation);

  const MonoidPresentation& presentation() const { return pres_; }
  const GroebnerBasis& basis() const { return basis_; }
  /// Generators followed by one auxiliary inverse per inverted generator.
  const std::vector<std::string>& variables() const { return vars_; }

  MultiPolynomial encode(const Monomial& m) const;
  /// Decodes a nonnegative exponent vector over variables().
  Monomial decode(const Exponents& e) const;

  /// Canonical representative of the class of m (Zero for the zero class).
  Monomial normal_form(const Monomial& m) const;
  bool equal(const Monomial& u, const Monomial& v) const;
  /// m lies in the ideal generated by `ideal`.
  bool in_ideal(const Monomial& m, const MonoidIdeal& ideal) const;
  /// Groebner basis of the congruence ideal plus the given monomials.
  GroebnerBasis ideal_basis(const MonoidIdeal& ideal) const;

 private:
  MonoidPresentation pres_;
  std::vector<std::string> vars_;
  std::vector<std::size_t> aux_of_;  // variable index of g_inv, or npos
  GroebnerBasis basis_;
};

bool word_equal(const MonoidPresentation& a, const Monomial& u, const Monomial& v);
bool ideal_member(const MonoidPresentation& a, const Monomial& m, const MonoidIdeal& ideal);

MonoidIdeal ideal_of(const MonoidPresentation& a, const PrimeIdeal& p);

struct PrimeSearchOptions {
  /// Products of generators outside a candidate are checked up to this total
  /// degree; 0 means 2 * (generator count) * (largest relation degree).
  int degree_bound = 0;
};

/// All prime ideals, each as its inclusion-minimal generating subset, in
/// increasing (size, indices) order. Throws BudgetExceeded when the bounded
/// multiplicative-closure check and the exact radical test disagree.
std::vector<PrimeIdeal> enumerate_primes(const MonoidPresentation& a,
                                         const PrimeSearchOptions& options = {});

struct Localization {
  MonoidPresentation presentation;
  /// Set when a Zero element was inverted; the presentation is then trivial.
  bool trivial = false;
};

/// S^{-1}A. A single generator is inverted in place; any other monomial m
/// gets a fresh generator u with relation m*u = 1.
Localization localize(const MonoidPresentation& a, const std::vector<Monomial>& s);

struct UnitLattice {
  /// Free rank of the group generated by the invertible generators.
  std::size_t rank = 0;
  bool is_group_with_zero = false;
  /// Invariant factors > 1 of that group.
  std::vector<Integer> torsion;
};

UnitLattice unit_lattice(const MonoidPresentation& a);

/// Words of total absolute degree at most `degree`; inverted generators may
/// appear with negative exponents.
std::vector<Monomial> monomials_up_to(const MonoidPresentation& a, int degree);

}  // namespace f1
