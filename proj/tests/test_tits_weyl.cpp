#include <doctest.h>

#include <json.hpp>

#include "f1/tits_weyl.hpp"
#include "fixtures.hpp"

using namespace f1;

namespace {

Blueprint gl2() {
  MonoidPresentation m({"T1", "T2", "T3", "T4", "d"});
  m.set_inverted(4);
  Blueprint b("GL2", m);
  b.add_relation("T1*T4", "T2*T3 + d");
  return b;
}

// Two closed points and nothing between them.
Blueprint disconnected() {
  MonoidPresentation m({"x", "y"});
  m.add_relation(m.parse_monomial("x*y"), Monomial::zero());
  m.add_relation(m.parse_monomial("x^2"), m.parse_monomial("x"));
  m.add_relation(m.parse_monomial("y^2"), m.parse_monomial("y"));
  Blueprint b("D", m);
  b.add_relation("x + y", "1");
  return b;
}

Blueprint half() {
  MonoidPresentation m({"x"});
  m.set_inverted(0);
  Blueprint b("Half", m);
  b.add_relation("2*x", "1");
  return b;
}

int rank_of(const std::vector<RankedPoint>& ranks, const std::string& id) {
  for (const auto& r : ranks) {
    if (r.id == id) return r.rank;
  }
  FAIL("no point " << id);
  return -1;
}

const RankSpaceComponent& component(const RankSpace& s, const std::string& id) {
  for (const auto& c : s.components) {
    if (c.id == id) return c;
  }
  throw Error("no component " + id);
}

// Dimension of the variety of a closure counted by hand: generic SL2 is a
// 3-fold, killing one corner leaves a 2-fold, and so on.
int sl2_rank_by_hand(const std::vector<std::string>& killed) {
  auto has = [&](const std::string& g) {
    return std::find(killed.begin(), killed.end(), g) != killed.end();
  };
  int free = 4 - static_cast<int>(killed.size());
  bool diag = has("T1") || has("T4");
  bool anti = has("T2") || has("T3");
  if (diag && anti) return -1;  // 0 = 1
  // One relation cuts the remaining free coordinates by one.
  return free - 1;
}

}  // namespace

TEST_CASE("closure of SL2 at points") {
  Blueprint b = fixtures::sl2();
  Blueprint c = closure(b, PrimeIdeal{{1, 2}});
  CHECK(c.monoid.generators == std::vector<std::string>{"T1", "T4"});
  CHECK(c.relations.empty());
  REQUIRE(c.monoid.relations.size() == 1);
  CHECK(c.monoid.to_text(c.monoid.relations[0].lhs) == "T1*T4");
  CHECK(c.monoid.relations[0].rhs.is_one());

  Blueprint d = closure(b, PrimeIdeal{{0, 3}});
  CHECK(d.monoid.generators == std::vector<std::string>{"T2", "T3"});
  REQUIRE(d.relations.size() == 1);
  CHECK(d.to_text(d.relations[0].rhs) == "T2*T3 + 1");
  CHECK(d.relations[0].lhs.empty());

  Blueprint g = closure(b, PrimeIdeal{});
  CHECK(g.arity() == 4);
  CHECK(g.relations == b.relations);
}

TEST_CASE("ranks of SL2 points") {
  Blueprint b = fixtures::sl2();
  auto ranks = point_ranks(b);
  CHECK(rank_of(ranks, "p_") == 3);
  CHECK(rank_of(ranks, "p_T1") == 2);
  CHECK(rank_of(ranks, "p_T2_T3") == 1);
  CHECK(rank_of(ranks, "p_T1_T4") == 1);
  for (const auto& r : ranks) {
    std::vector<std::string> killed;
    for (std::size_t i : r.point.generators) killed.push_back(b.monoid.generators[i]);
    CHECK_MESSAGE(r.rank == sl2_rank_by_hand(killed), r.id);
  }
}

TEST_CASE("rank is antitone along specialization") {
  for (const Blueprint& b : {fixtures::sl2(), gl2(), fixtures::free_blueprint({"x", "y", "z"}),
                             fixtures::non_cancellative()}) {
    const SpecPoset poset = spec(b);
    auto ranks = point_ranks(b);
    REQUIRE(ranks.size() == poset.size());
    for (std::size_t i = 0; i < poset.size(); ++i) {
      for (std::size_t j = 0; j < poset.size(); ++j) {
        if (poset.leq(i, j)) CHECK(ranks[i].rank >= ranks[j].rank);
      }
    }
  }
}

TEST_CASE("rank spaces") {
  SUBCASE("SL2") {
    RankSpace s = rank_space(fixtures::sl2());
    CHECK(s.rank == 1);
    REQUIRE(s.components.size() == 2);
    CHECK(component(s, "p_T2_T3").type.to_string() == "F1-torus(1)");
    CHECK(component(s, "p_T1_T4").type.to_string() == "F1squared-torus(1)");
  }
  SUBCASE("Gm") {
    RankSpace s = rank_space(fixtures::torus(1));
    REQUIRE(s.components.size() == 1);
    CHECK(s.components[0].type.to_string() == "F1-torus(1)");
  }
  SUBCASE("A1") {
    RankSpace s = rank_space(fixtures::free_blueprint({"T"}));
    REQUIRE(s.components.size() == 1);
    CHECK(s.components[0].id == "p_T");
    CHECK(s.components[0].type.to_string() == "F1-torus(0)");
  }
  SUBCASE("GL2") {
    RankSpace s = rank_space(gl2());
    CHECK(s.rank == 2);
    REQUIRE(s.components.size() == 2);
    CHECK(component(s, "p_T2_T3").type.to_string() == "F1-torus(2)");
    CHECK(component(s, "p_T1_T4").type.to_string() == "F1squared-torus(2)");
  }
}

TEST_CASE("hypothesis H") {
  auto sl2 = check_hypothesis_H(fixtures::sl2());
  CHECK(sl2.connected.yes());
  CHECK(sl2.cancellative.yes());
  CHECK(sl2.tori);
  CHECK(sl2.holds());

  auto d = check_hypothesis_H(disconnected());
  CHECK(spec(disconnected()).size() == 2);
  CHECK(d.connected.no());
  CHECK_FALSE(d.holds());

  auto h = check_hypothesis_H(half());
  CHECK_FALSE(h.tori);
  CHECK(h.space.components[0].type.to_string() == "other");

  auto f13 = check_hypothesis_H(cyclotomic_extension(3));
  CHECK_FALSE(f13.tori);
  CHECK(f13.space.components[0].type.to_string() == "other");
}

TEST_CASE("Weyl group of SL2") {
  Blueprint g = fixtures::sl2();
  Comultiplication delta = matrix_comultiplication(g, 2);
  CHECK(delta.images == fixtures::sl2_comultiplication(delta.target));
  CHECK(check_morphism(g, delta.target, delta.images, {}, false).yes());
  WeylGroup w = weyl_group(g, delta, matrix_counit(g, 2));
  CHECK(w.name == "Z/2");
  CHECK(w.compatible);
  CHECK(w.space.components[w.identity].id == "p_T2_T3");
  std::size_t x14 = w.identity == 0 ? 1 : 0;
  CHECK(w.table[x14][x14] == w.identity);

  auto j = nlohmann::json::parse(w.to_json());
  CHECK(j["group"] == "Z/2");
  CHECK(j["identity"] == "p_T2_T3");
}

TEST_CASE("Weyl groups of GL2 and Gm") {
  Blueprint g = gl2();
  WeylGroup w = weyl_group(g, matrix_comultiplication(g, 2), matrix_counit(g, 2));
  CHECK(w.space.rank == 2);
  CHECK(w.table.size() == 2);
  CHECK(w.name == "Z/2");
  CHECK(w.compatible);

  Blueprint t = fixtures::torus(1);
  WeylGroup wt = weyl_group(t, matrix_comultiplication(t, 0), matrix_counit(t, 0));
  CHECK(wt.name == "trivial");
  CHECK(wt.compatible);
}

TEST_CASE("component products need a group structure") {
  Blueprint g = fixtures::sl2();
  Comultiplication delta = matrix_comultiplication(g, 2);
  // The transposed counit picks the wrong identity.
  GeneratorImages bad = {FormalSum(), FormalSum(Monomial()), FormalSum(Monomial()), FormalSum()};
  CHECK_THROWS_AS(weyl_group(g, delta, bad), Error);
  CHECK_THROWS_AS(matrix_comultiplication(fixtures::torus(1), 2), DomainError);
}
