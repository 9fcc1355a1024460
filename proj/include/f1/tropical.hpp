#pragma once

// The semirings N, B, T and R>=0, group completion, and balancing of
// tropical curves.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "f1/arith.hpp"

namespace f1 {

/// N: natural numbers. B: {0,1} with 1 + 1 = 1. T: Q>=0 with max as addition
/// and the usual product. Rgeq0: Q>=0 standing in for the nonnegative reals.
enum class Carrier { N, B, T, Rgeq0 };

std::string to_string(Carrier c);
Carrier parse_carrier(const std::string& name);

struct SemiringValue {
  Carrier carrier = Carrier::N;
  Rational value;

  /// Throws DomainError for values outside the carrier.
  static SemiringValue make(Carrier c, const Rational& v);
  friend bool operator==(const SemiringValue&, const SemiringValue&) = default;
};

SemiringValue operator+(const SemiringValue& a, const SemiringValue& b);
SemiringValue operator*(const SemiringValue& a, const SemiringValue& b);
SemiringValue semiring_zero(Carrier c);
SemiringValue semiring_one(Carrier c);

/// Evaluates an expression built from constants, '+', '*' and parentheses,
/// e.g. "3 + 5", "(1/2 + 2) * 3".
SemiringValue semiring_eval(const std::string& expr, Carrier c);

/// R (x)_N Z from pairs (x, y) ~ (x', y') iff x + y' + z = x' + y + z.
struct GroupCompletion {
  Carrier carrier = Carrier::N;
  bool trivial = false;
  /// "Z", "R" or "{0}".
  std::string ring;
  /// z with 1 + z = 0 + z when trivial, otherwise how cancellation was checked.
  std::string witness;
};

GroupCompletion group_completion(Carrier c);

using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

/// Direction scaled to coprime integers, orientation kept. Throws
/// DomainError on the zero vector.
IntegerVector primitive_vector(const RationalVector& direction);
IntegerVector primitive_vector(const RationalVector& from, const RationalVector& toward);

struct CurveEdge {
  std::string from;
  /// Bounded edge: the other vertex. Ray: empty, and `direction` is set.
  std::string to;
  RationalVector direction;
  unsigned long weight = 1;

  bool is_ray() const { return to.empty(); }
};

struct TropicalCurve {
  std::string name;
  std::map<std::string, RationalVector> vertices;
  std::vector<std::string> vertex_order;  // declaration order
  std::vector<CurveEdge> edges;

  std::size_t dimension() const;
  void add_vertex(const std::string& id, RationalVector position);
  void add_edge(const std::string& a, const std::string& b, unsigned long weight);
  void add_ray(const std::string& a, RationalVector direction, unsigned long weight);
  /// Throws DomainError for unknown vertices, mixed dimensions, zero
  /// directions, degenerate edges or zero weights.
  void validate() const;
  /// Statements in the curve input format, one per line.
  std::string to_text() const;
};

/// Parses `vertex v1 (1/2, 9/2)`, `edge v1 v2 weight 1` and
/// `ray v1 dir (0,1) weight 1`, one statement per line or separated by ';'.
/// `#` starts a comment.
TropicalCurve parse_curve(const std::string& text, const std::string& name = "curve");

class Lexer;
/// One statement, without its terminator.
void parse_curve_statement(Lexer& lex, TropicalCurve& c);

struct BalancingViolation {
  std::string vertex;
  IntegerVector defect;
};

struct BalancingReport {
  bool balanced = true;
  std::vector<BalancingViolation> violations;
  /// Weighted sum at every vertex, in declaration order.
  std::vector<std::pair<std::string, IntegerVector>> sums;
};

BalancingReport check_balancing(const TropicalCurve& c);

/// The three-vertex plane curve with vertices (1/2, 9/2), (3, 2), (9, 2).
TropicalCurve example_plane_curve();

}  // namespace f1
