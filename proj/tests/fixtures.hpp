#pragma once

#include "f1/blueprint.hpp"

namespace f1::fixtures {

inline Blueprint sl2() {
  Blueprint b("SL2", MonoidPresentation::free({"T1", "T2", "T3", "T4"}));
  b.add_relation("T1*T4", "T2*T3 + 1");
  return b;
}

inline Blueprint free_blueprint(std::vector<std::string> gens) {
  return Blueprint("F", MonoidPresentation::free(std::move(gens)));
}

inline Blueprint torus(std::size_t rank) {
  std::vector<std::string> gens;
  for (std::size_t i = 1; i <= rank; ++i) gens.push_back("T" + std::to_string(i));
  if (rank == 1) gens = {"T"};
  MonoidPresentation m(gens);
  for (std::size_t i = 0; i < rank; ++i) m.set_inverted(i);
  return Blueprint("Gm", m);
}

// F1[x,y]/(xy = 0) with x + y = x: y is not zero but cancels.
inline Blueprint non_cancellative() {
  MonoidPresentation m({"x", "y"});
  m.add_relation(m.parse_monomial("x*y"), Monomial::zero());
  Blueprint b("NC", m);
  b.add_relation("x + y", "x");
  return b;
}

// Matrix comultiplication of SL2 into SL2 (x) SL2.
inline GeneratorImages sl2_comultiplication(const Blueprint& target) {
  auto s = [&](const std::string& t) { return target.parse_sum(t); };
  return {s("T1'*T1'' + T2'*T3''"), s("T1'*T2'' + T2'*T4''"), s("T3'*T1'' + T4'*T3''"),
          s("T3'*T2'' + T4'*T4''")};
}

}  // namespace f1::fixtures
