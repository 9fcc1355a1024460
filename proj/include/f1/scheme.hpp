#pragma once

// Spectra as posets, schemes glued from affine charts, and rendering.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "f1/blueprint.hpp"

namespace f1 {

struct SpecPoint {
  std::string id;
  std::vector<std::string> generators;
  /// Chart and prime of a representative.
  std::size_t chart = 0;
  PrimeIdeal prime;
  /// Localization of the chart at the complement of the prime.
  MonoidPresentation localization;
};

/// Points sorted by id; `hasse` holds cover relations (smaller, larger) as
/// indices into `points`; `order[i][j]` is the full order i <= j.
struct SpecPoset {
  std::string object;
  std::vector<SpecPoint> points;
  std::vector<std::pair<std::size_t, std::size_t>> hasse;
  std::vector<std::vector<bool>> order;

  std::size_t size() const { return points.size(); }
  bool leq(std::size_t i, std::size_t j) const { return order[i][j]; }
  std::optional<std::size_t> find(const std::string& id) const;
};

/// "p_" followed by the generator names joined with "_".
std::string point_id(const MonoidPresentation& m, const PrimeIdeal& p);

SpecPoset spec(const Blueprint& b);

/// Indices of the points of spec(b) whose prime does not contain h.
std::vector<std::size_t> principal_open(const Blueprint& b, const SpecPoset& poset,
                                        const Monomial& h);

/// Chart a localized at open_a is identified with chart b localized at open_b.
/// Images are given on the generators of the localized charts.
struct Gluing {
  std::size_t a = 0;
  std::size_t b = 0;
  Monomial open_a;
  Monomial open_b;
  GeneratorImages a_to_b;
  GeneratorImages b_to_a;
};

struct GluedScheme {
  std::string name;
  std::vector<Blueprint> charts;
  std::vector<Gluing> gluings;
  /// For projective space: homogeneous coordinate index of each chart
  /// generator, used for "[1:0:1]" point ids. Empty otherwise.
  std::vector<std::vector<std::size_t>> coordinates;
  int projective_dimension = -1;
};

enum class StandardKind { Affine, Torus, Projective };

GluedScheme standard_scheme(StandardKind kind, int n);
GluedScheme affine_scheme(const Blueprint& b);

/// Chart localized at one monomial, additive relations carried along.
Blueprint localize_chart(const Blueprint& chart, const Monomial& open);

/// Both gluing maps are morphisms and compose to the identity on generators.
ThreeValued verify_gluing(const GluedScheme& x, std::size_t gluing,
                          const SearchBudget& budget = {});

/// Points of all charts identified along the gluings. Throws Error naming the
/// chart pair when a transported prime has no partner.
SpecPoset scheme_points(const GluedScheme& x);

struct SchemeExtension {
  struct Overlap {
    std::size_t a = 0;
    std::size_t b = 0;
    PresentedAlgebra on_a;
    PresentedAlgebra on_b;
  };
  std::vector<PresentedAlgebra> charts;
  std::vector<Overlap> overlaps;

  std::string to_string() const;
};

SchemeExtension base_extend_scheme(const GluedScheme& x, BaseRing ring = BaseRing::Z);

enum class RenderFormat { Dot, Json };

std::string render(const SpecPoset& poset, RenderFormat format);

}  // namespace f1
