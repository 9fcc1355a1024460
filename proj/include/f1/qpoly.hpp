#pragma once

// Univariate polynomials and rational functions in the counting parameter q.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "f1/arith.hpp"

namespace f1 {

/// Exact univariate polynomial. Coefficients are rationals so that division
/// stays inside the type; the integral case is what the counting code produces.
class QPolynomial {
 public:
  QPolynomial() = default;
  QPolynomial(long constant);  // NOLINT(google-explicit-constructor)
  QPolynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  explicit QPolynomial(std::map<unsigned, Rational> coefficients);

  /// Dense constructor, lowest degree first.
  static QPolynomial from_dense(const std::vector<long>& coefficients);
  static QPolynomial monomial(unsigned exponent, const Rational& coeff = 1);
  static QPolynomial q() { return monomial(1); }

  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const;
  Rational coefficient(unsigned exponent) const;
  Rational leading_coefficient() const;
  const std::map<unsigned, Rational>& terms() const { return terms_; }
  bool is_integral() const;

  Rational evaluate(const Rational& at) const;

  QPolynomial operator-() const;
  QPolynomial& operator+=(const QPolynomial& other);
  QPolynomial& operator-=(const QPolynomial& other);
  QPolynomial& operator*=(const QPolynomial& other);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(QPolynomial a, const QPolynomial& b) { return a *= b; }
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  QPolynomial pow(unsigned exponent) const;
  QPolynomial scaled(const Rational& factor) const;
  QPolynomial monic() const;

  /// Canonical rendering, descending degree: "q^2 + q + 1", "2*q - 1/3".
  std::string to_string(const std::string& variable = "q") const;

 private:
  std::map<unsigned, Rational> terms_;  // no zero coefficients
};

struct DivRem {
  QPolynomial quotient;
  QPolynomial remainder;
};

/// Long division over Q: f = quotient*g + remainder with deg remainder < deg g.
DivRem poly_divrem(const QPolynomial& f, const QPolynomial& g);

/// Monic gcd (zero if both are zero).
QPolynomial poly_gcd(QPolynomial a, QPolynomial b);

/// Rescales to a primitive integer polynomial with positive leading
/// coefficient; returns the factor that was divided out.
Rational make_primitive(QPolynomial& p);

class RationalFunction {
 public:
  RationalFunction() : RationalFunction(QPolynomial(0), QPolynomial(1)) {}
  RationalFunction(QPolynomial numerator, QPolynomial denominator);
  RationalFunction(const QPolynomial& p)  // NOLINT(google-explicit-constructor)
      : RationalFunction(p, QPolynomial(1)) {}

  const QPolynomial& numerator() const { return num_; }
  const QPolynomial& denominator() const { return den_; }

  /// Re-runs the normalisation; a no-op on constructed values.
  RationalFunction reduced() const { return {num_, den_}; }

  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  /// First `count` coefficients of the power series at 0; requires den(0) != 0.
  std::vector<Rational> series(unsigned count) const;

  std::string to_string(const std::string& variable = "q") const;

 private:
  // Invariant: gcd(num_, den_) = 1, primitive integer polynomials, den_ has
  // positive leading coefficient and the overall scalar lives in num_.
  QPolynomial num_;
  QPolynomial den_;
};

/// Value of the reduced function at `at`; throws DomainError on a pole.
Rational rational_limit(const RationalFunction& f, const Rational& at);

/// n-th cyclotomic polynomial, from q^n - 1 divided by the lower ones.
QPolynomial cyclotomic_polynomial(unsigned n);

}  // namespace f1
