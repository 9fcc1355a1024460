#pragma once

// Ranks of points, rank spaces and the Weyl group of a blueprint with a
// comultiplication.

#include <string>
#include <vector>

#include "f1/blueprint.hpp"
#include "f1/scheme.hpp"

namespace f1 {

/// B with the point's generators set to Zero, dead generators removed and
/// single-term additive relations turned into monoid relations.
Blueprint closure(const Blueprint& b, const PrimeIdeal& p);

struct RankedPoint {
  PrimeIdeal point;
  std::string id;
  int rank = 0;
  Blueprint closure;
};

/// Throws DomainError when the closure is empty over Q.
RankedPoint point_rank(const Blueprint& b, const PrimeIdeal& p);

/// Ranks of every point of spec(b), in spec order. Computed in parallel.
std::vector<RankedPoint> point_ranks(const Blueprint& b);

enum class TorusKind { F1Torus, F1SquaredTorus, Other };

struct TorusType {
  TorusKind kind = TorusKind::Other;
  int rank = 0;
  /// "F1-torus(1)", "F1squared-torus(1)" or "other".
  std::string to_string() const;
};

/// Classifies a closure of Q-dimension r.
TorusType classify_torus(const Blueprint& closure, int r, std::string* detail = nullptr);

struct RankSpaceComponent {
  PrimeIdeal point;
  std::string id;
  TorusType type;
  Blueprint closure;
  std::string detail;
};

struct RankSpace {
  int rank = 0;
  std::vector<RankSpaceComponent> components;
  std::vector<RankedPoint> points;
};

RankSpace rank_space(const Blueprint& b);

struct HypothesisReport {
  ThreeValued connected;
  ThreeValued cancellative;
  RankSpace space;
  bool tori = false;

  bool holds() const { return connected.yes() && cancellative.yes() && tori; }
};

/// degree_bound 0 picks the larger of 4 and the relation degree.
HypothesisReport check_hypothesis_H(const Blueprint& b, int degree_bound = 0);

struct Comultiplication {
  Blueprint source;
  Blueprint target;  // tensor(source, source)
  GeneratorImages images;
};

/// The first n*n generators form a matrix (row major) multiplied as matrices;
/// the remaining generators are group-like, g -> g' g''.
Comultiplication matrix_comultiplication(const Blueprint& g, std::size_t n);

/// Counit into F1: diagonal entries and group-like generators go to 1,
/// off-diagonal entries to 0.
GeneratorImages matrix_counit(const Blueprint& g, std::size_t n);

/// Index into space.components of the product of components p and q.
std::size_t component_product(const Blueprint& g, const RankSpace& space,
                              const Comultiplication& delta, std::size_t p, std::size_t q,
                              const SearchBudget& budget = {});

/// The comultiplication maps the closure of r = p*q into closure(p) (x) closure(q):
/// every relation of closure(r) pulls back into the ideal of the tensor
/// product over Q.
bool product_compatible(const Blueprint& g, const RankSpace& space, const Comultiplication& delta,
                        std::size_t p, std::size_t q, std::size_t r);

struct WeylGroup {
  RankSpace space;
  std::vector<std::vector<std::size_t>> table;
  std::size_t identity = 0;
  /// "trivial", "Z/n" for cyclic groups, otherwise "order-n".
  std::string name;
  bool compatible = false;

  std::string to_json() const;
};

/// Throws Error when the table is not a group or components are not tori.
WeylGroup weyl_group(const Blueprint& g, const Comultiplication& delta,
                     const GeneratorImages& counit, const SearchBudget& budget = {});

}  // namespace f1
