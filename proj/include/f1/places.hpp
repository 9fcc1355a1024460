#pragma once

// Absolute values of Q and F_p(T), places of F_q(T) and its zeta function.

#include <string>
#include <vector>

#include "f1/qpoly.hpp"

namespace f1 {

/// Polynomial over F_p, coefficients lowest degree first, no trailing zeros.
class FpPoly {
 public:
  FpPoly(int p, std::vector<int> coefficients);
  static FpPoly monomial(int p, int degree, int coeff = 1);

  int p() const { return p_; }
  const std::vector<int>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  FpPoly operator*(const FpPoly& o) const;
  friend bool operator==(const FpPoly&, const FpPoly&) = default;

  /// "T^2 + T + 1" over F_p.
  std::string to_string() const;

 private:
  int p_;
  std::vector<int> c_;
};

struct FpDivRem {
  FpPoly quotient;
  FpPoly remainder;
};

FpDivRem divrem(const FpPoly& f, const FpPoly& g);

/// Trial division by every monic polynomial of degree at most deg/2.
bool is_irreducible(const FpPoly& f);

/// Monic irreducible polynomials of degree d over F_p, by enumeration.
std::vector<FpPoly> monic_irreducibles(int p, int d);

/// A place of Q (archimedean or a prime p) or of F_p(T) (infinity or a monic
/// irreducible f).
struct Place {
  enum class Kind { Archimedean, Prime, Infinity, Irreducible };
  Kind kind = Kind::Archimedean;
  long prime = 0;          // Prime
  std::vector<int> poly;   // Irreducible, over F_field
  int field = 0;           // Infinity and Irreducible: p of F_p(T)

  static Place archimedean() { return {}; }
  static Place at_prime(long p);
  static Place infinity(int p);
  /// Throws DomainError unless f is monic irreducible.
  static Place at(const FpPoly& f);

  bool of_function_field() const { return kind == Kind::Infinity || kind == Kind::Irreducible; }
  /// Residue field size as a power of the base: #k(v) = p^degree.
  int degree() const;
  std::string to_string() const;
};

/// |x|_v for rational x: p^-i at a prime, the usual absolute value at the
/// archimedean place. |0| = 0.
Rational absolute_value(const Rational& x, const Place& v);

/// |g/h|_v over F_p(T): q^(-d i) at f, q^(deg h - deg g) at infinity, with
/// q = p and d = deg f. g = 0 gives 0; h = 0 raises DomainError.
Rational absolute_value(const FpPoly& g, const FpPoly& h, const Place& v);

/// Z(T) = 1 / ((1 - T)(1 - qT)), as a rational function in T.
RationalFunction zeta_function_field(long q);

/// Number of monic irreducibles of degree d over F_q, (1/d) sum mu(e) q^(d/e).
Integer irreducible_count(long q, int d);

/// Degree-d places of F_q(T): irreducible_count plus the place at infinity
/// when d = 1.
Integer place_count(long q, int d);

/// Same count by enumerating monic irreducibles; q must be prime.
Integer place_count_enumerated(long q, int d);

/// Coefficients of T^0..T^n in prod_d (1 - T^d)^(-count(d)).
std::vector<Integer> euler_product(const std::vector<Integer>& counts_by_degree, int n);

}  // namespace f1
