#pragma once

// Blueprints: a monoid with zero together with additive relations between
// formal sums of its elements.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "f1/groebner.hpp"
#include "f1/monoid.hpp"

namespace f1 {

/// Element of N[A]: nonzero monomials with positive multiplicities. The empty
/// sum is the semiring zero.
class FormalSum {
 public:
  using TermMap = std::map<Monomial, unsigned long>;

  FormalSum() = default;
  explicit FormalSum(const Monomial& m, unsigned long multiplicity = 1) { add(m, multiplicity); }

  /// Zero monomials are dropped.
  void add(const Monomial& m, unsigned long multiplicity = 1);
  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  /// Total multiplicity.
  unsigned long size() const;
  int max_degree() const;
  /// Single term with multiplicity one.
  std::optional<Monomial> as_monomial() const;
  bool contains(const FormalSum& sub) const;

  FormalSum& operator+=(const FormalSum& o);
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  /// Multiset difference; requires contains(sub).
  FormalSum minus(const FormalSum& sub) const;
  FormalSum times(const Monomial& m) const;
  FormalSum times(const FormalSum& o) const;

  friend auto operator<=>(const FormalSum&, const FormalSum&) = default;
  friend bool operator==(const FormalSum&, const FormalSum&) = default;

 private:
  TermMap terms_;
};

struct AdditiveRelation {
  FormalSum lhs;
  FormalSum rhs;
  friend bool operator==(const AdditiveRelation&, const AdditiveRelation&) = default;
};

struct Blueprint {
  std::string name;
  MonoidPresentation monoid;
  std::vector<AdditiveRelation> relations;

  Blueprint() = default;
  Blueprint(std::string n, MonoidPresentation m, std::vector<AdditiveRelation> r = {})
      : name(std::move(n)), monoid(std::move(m)), relations(std::move(r)) {}

  std::size_t arity() const { return monoid.arity(); }
  /// Parses "T2*T3 + 1", "2*x + y^2", "0" over the monoid's generators.
  FormalSum parse_sum(const std::string& text) const;
  std::string to_text(const FormalSum& s) const;
  void add_relation(const std::string& lhs, const std::string& rhs);
  void validate() const;
};

enum class Verdict { Yes, No, Unknown };

struct ThreeValued {
  Verdict verdict = Verdict::Unknown;
  /// Witness, derivation length or exhausted budget, human readable.
  std::string detail;

  bool yes() const { return verdict == Verdict::Yes; }
  bool no() const { return verdict == Verdict::No; }
  bool unknown() const { return verdict == Verdict::Unknown; }
};

std::string to_string(Verdict v);

struct SearchBudget {
  int max_steps = 64;
  unsigned long max_terms = 16;
  int max_degree = 12;
  /// Visited sums across both search directions.
  std::size_t max_states = 50000;
};

/// Decides s = t in the semiring of B: YES from an explicit derivation, NO from
/// a separating homomorphism to Q>=0 or to B = {0,1}, UNKNOWN otherwise.
ThreeValued sum_equal(const Blueprint& b, const FormalSum& s, const FormalSum& t,
                      const SearchBudget& budget = {});

/// Monoid primes that are k-ideals, in the order of enumerate_primes.
std::vector<PrimeIdeal> prime_k_ideals(const Blueprint& b);

/// Coproduct: generators of b1 get a trailing ', those of b2 a trailing ''.
Blueprint tensor(const Blueprint& b1, const Blueprint& b2);

/// Generator images of a morphism b1 -> b2, indexed by b1's generators.
using GeneratorImages = std::vector<FormalSum>;

/// Image of a monomial of the source; throws DomainError when a negative
/// exponent meets an image that is not an inverted monomial.
FormalSum image_of(const Blueprint& target, const GeneratorImages& images, const Monomial& m);

ThreeValued check_morphism(const Blueprint& b1, const Blueprint& b2,
                           const GeneratorImages& images, const SearchBudget& budget = {},
                           bool strict = true);

enum class BaseRing { N, Z, Q };

struct PresentedAlgebra {
  BaseRing ring = BaseRing::Z;
  std::vector<std::string> variables;
  /// Z and Q: relation polynomials. Empty for N.
  std::vector<MultiPolynomial> relations;
  /// N: the semiring presentation itself.
  std::optional<Blueprint> semiring;

  GroebnerBasis ideal(const TermOrder& order = TermOrder::grevlex()) const;
  /// "Z[T1,T2,T3,T4] / (T1*T4 - T2*T3 - 1)".
  std::string to_string() const;
};

PresentedAlgebra base_extend(const Blueprint& b, BaseRing ring);

/// Bounded check that B -> B (x) Z is injective on monoid classes of degree
/// at most `degree_bound`.
ThreeValued is_cancellative(const Blueprint& b, int degree_bound);

/// F_{1^n}: zeta^n = 1 with the n-th cyclotomic relation written without
/// subtraction.
Blueprint cyclotomic_extension(int n);

/// Blueprint with no additive relations.
Blueprint monoid_blueprint(std::string name, MonoidPresentation m);

}  // namespace f1
