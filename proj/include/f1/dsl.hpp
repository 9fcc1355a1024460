#pragma once

// The .f1 document format:
//
//   blueprint SL2 { gens: T1,T2,T3,T4; rel: T1*T4 = T2*T3 + 1; }
//   monoid Gm { gens: T; inv: T; }
//   curve C { vertex a (0,0); ray a dir (1,0); ray a dir (-1,0); }

#include <optional>
#include <string>
#include <vector>

#include "f1/blueprint.hpp"
#include "f1/tropical.hpp"

namespace f1 {

enum class DefinitionKind { Monoid, Blueprint, Curve };

struct Definition {
  DefinitionKind kind = DefinitionKind::Blueprint;
  std::string name;
  std::vector<std::string> generators;
  std::vector<std::string> inverted;
  /// Relations in source order, over `generators`.
  std::vector<AdditiveRelation> relations;
  TropicalCurve curve;
  int line = 1;
  int column = 1;

  /// Presentation with the inverted flags set and no relations.
  MonoidPresentation free_monoid() const;
  /// Relations whose sides are single terms (or 0) become monoid relations,
  /// the rest stay additive. Throws DomainError for curves.
  Blueprint blueprint() const;

  /// Compares content, not source positions.
  bool same_as(const Definition& o) const;
};

struct DslDocument {
  std::vector<Definition> definitions;

  const Definition* find(const std::string& name) const;
  bool same_as(const DslDocument& o) const;
};

/// Throws ParseError with line and column on syntax errors, unknown or
/// duplicate names and non-positive coefficients.
DslDocument parse_document(const std::string& text);

std::string print(const Definition& d);
std::string print(const DslDocument& doc);

/// A definition in the format of `print`, for blueprints built in code.
/// Characters of the name that are not allowed in names become '_'.
Definition definition_of(const Blueprint& b);

}  // namespace f1
