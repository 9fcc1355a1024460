#include <doctest.h>

#include <random>

#include "f1/blueprint.hpp"
#include "f1/tropical.hpp"

using namespace f1;

namespace {

const Carrier kCarriers[] = {Carrier::N, Carrier::B, Carrier::T, Carrier::Rgeq0};

SemiringValue random_value(Carrier c, std::mt19937& rng) {
  std::uniform_int_distribution<long> num(0, 40), den(1, 6), bit(0, 1);
  switch (c) {
    case Carrier::N:
      return SemiringValue::make(c, num(rng));
    case Carrier::B:
      return SemiringValue::make(c, bit(rng));
    default:
      return SemiringValue::make(c, make_rational(num(rng), den(rng)));
  }
}

TropicalCurve translated(const TropicalCurve& c, const RationalVector& by) {
  TropicalCurve out = c;
  for (auto& [id, pos] : out.vertices) {
    for (std::size_t i = 0; i < pos.size(); ++i) pos[i] += by[i];
  }
  return out;
}

TropicalCurve dilated(const TropicalCurve& c, long factor) {
  TropicalCurve out = c;
  for (auto& [id, pos] : out.vertices) {
    for (auto& x : pos) x *= factor;
  }
  return out;
}

// Splits edge k at its midpoint with a new 2-valent vertex.
TropicalCurve subdivided(const TropicalCurve& c, std::size_t k) {
  TropicalCurve out = c;
  CurveEdge e = out.edges[k];
  RationalVector mid;
  for (std::size_t i = 0; i < c.dimension(); ++i) {
    mid.push_back((c.vertices.at(e.from)[i] + c.vertices.at(e.to)[i]) / 2);
  }
  out.edges.erase(out.edges.begin() + static_cast<long>(k));
  out.add_vertex("M", mid);
  out.add_edge(e.from, "M", e.weight);
  out.add_edge("M", e.to, e.weight);
  return out;
}

}  // namespace

TEST_CASE("semiring evaluation") {
  CHECK(semiring_eval("1 + 1", Carrier::B).value == 1);
  CHECK(semiring_eval("3 + 5", Carrier::T).value == 5);
  CHECK(semiring_eval("3 * 5", Carrier::T).value == 15);
  CHECK(semiring_eval("2 + 2", Carrier::N).value == 4);
  CHECK(semiring_eval("(1/2 + 2) * 3", Carrier::Rgeq0).value == make_rational(15, 2));
  CHECK(semiring_eval("(1/2 + 2) * 3", Carrier::T).value == 6);
  CHECK(semiring_eval("0.5 * 4", Carrier::T).value == 2);
  CHECK_THROWS_AS(semiring_eval("-1 + 2", Carrier::N), ParseError);
  CHECK_THROWS_AS(semiring_eval("2", Carrier::B), ParseError);
  CHECK_THROWS_AS(semiring_eval("1/2", Carrier::N), ParseError);
  CHECK_THROWS_AS(semiring_eval("1 +", Carrier::N), ParseError);
  try {
    semiring_eval("1 + -2", Carrier::T);
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 5);
  }
}

TEST_CASE("semiring axioms on random triples") {
  std::mt19937 rng(2024);
  for (Carrier c : kCarriers) {
    const SemiringValue zero = semiring_zero(c), one = semiring_one(c);
    for (int i = 0; i < 10000; ++i) {
      SemiringValue a = random_value(c, rng), b = random_value(c, rng), d = random_value(c, rng);
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      REQUIRE((a + b) + d == a + (b + d));
      REQUIRE((a * b) * d == a * (b * d));
      REQUIRE(a * (b + d) == a * b + a * d);
      REQUIRE(a + zero == a);
      REQUIRE(a * one == a);
      REQUIRE(a * zero == zero);
    }
  }
}

TEST_CASE("group completion") {
  GroupCompletion n = group_completion(Carrier::N);
  CHECK_FALSE(n.trivial);
  CHECK(n.ring == "Z");
  CHECK(group_completion(Carrier::Rgeq0).ring == "R");
  for (Carrier c : {Carrier::B, Carrier::T}) {
    GroupCompletion g = group_completion(c);
    CHECK(g.trivial);
    CHECK(g.ring == "{0}");
    CHECK(g.witness == "1 + 1 = 0 + 1");
  }
  // F1 (x) Z computed through the blueprint base extension agrees with N (x) Z.
  Blueprint f1b("F1", MonoidPresentation::free({}));
  CHECK(base_extend(f1b, BaseRing::Z).to_string() == n.ring);
}

TEST_CASE("primitive vectors") {
  CHECK(primitive_vector({2, -2}) == IntegerVector{1, -1});
  CHECK(primitive_vector({2, 3}) == IntegerVector{2, 3});
  CHECK(primitive_vector({make_rational(1, 2), make_rational(9, 2)}, {3, 2}) ==
        IntegerVector{1, -1});
  CHECK(primitive_vector({make_rational(-3, 4), 0, make_rational(3, 2)}) == IntegerVector{-1, 0, 2});
  CHECK_THROWS_AS(primitive_vector({0, 0}), DomainError);
  // Scaling by positive rationals leaves the primitive vector unchanged.
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> d(-9, 9), s(1, 9);
  for (int i = 0; i < 200; ++i) {
    RationalVector v{d(rng), d(rng), d(rng)};
    if (v == RationalVector{0, 0, 0}) continue;
    RationalVector w = v;
    Rational f = make_rational(s(rng), s(rng));
    for (auto& x : w) x *= f;
    IntegerVector p = primitive_vector(v);
    CHECK(primitive_vector(w) == p);
    Integer g = 0;
    for (const auto& x : p) g = gcd(g, x);
    CHECK(g == 1);
  }
}

TEST_CASE("the plane curve is balanced") {
  TropicalCurve c = example_plane_curve();
  BalancingReport r = check_balancing(c);
  CHECK(r.balanced);
  CHECK(r.violations.empty());
  std::vector<unsigned long> weights;
  for (const auto& e : c.edges) weights.push_back(e.weight);
  CHECK(weights == std::vector<unsigned long>{1, 1, 1, 1, 2, 1, 3});

  SUBCASE("horizontal edge with weight 1") {
    c.edges[4].weight = 1;
    BalancingReport bad = check_balancing(c);
    CHECK_FALSE(bad.balanced);
    REQUIRE(bad.violations.size() == 2);
    CHECK(bad.violations[0].vertex == "B");
    CHECK(bad.violations[0].defect == IntegerVector{-1, 0});
    CHECK(bad.violations[1].vertex == "C");
    CHECK(bad.violations[1].defect == IntegerVector{1, 0});
  }
  SUBCASE("every single-weight perturbation") {
    for (std::size_t k = 0; k < c.edges.size(); ++k) {
      for (long delta : {-1L, 1L}) {
        TropicalCurve p = c;
        long w = static_cast<long>(p.edges[k].weight) + delta;
        if (w < 1) continue;
        p.edges[k].weight = static_cast<unsigned long>(w);
        BalancingReport bad = check_balancing(p);
        CHECK_FALSE(bad.balanced);
        // The defect at the start vertex is delta times the edge direction.
        const CurveEdge& e = p.edges[k];
        IntegerVector dir = e.is_ray() ? primitive_vector(e.direction)
                                       : primitive_vector(p.vertices.at(e.from), p.vertices.at(e.to));
        for (auto& x : dir) x *= delta;
        bool found = false;
        for (const auto& v : bad.violations) found = found || (v.vertex == e.from && v.defect == dir);
        CHECK(found);
      }
    }
  }
}

TEST_CASE("balancing invariances") {
  const TropicalCurve c = example_plane_curve();
  CHECK(check_balancing(translated(c, {make_rational(7, 3), -5})).balanced);
  CHECK(check_balancing(dilated(c, 3)).balanced);
  CHECK(check_balancing(subdivided(c, 4)).balanced);
  CHECK(check_balancing(subdivided(c, 2)).balanced);

  TropicalCurve bad = c;
  bad.edges[6].weight = 2;
  auto base = check_balancing(bad).violations;
  auto moved = check_balancing(translated(bad, {1, 1})).violations;
  REQUIRE(base.size() == moved.size());
  for (std::size_t i = 0; i < base.size(); ++i) CHECK(base[i].defect == moved[i].defect);

  TropicalCurve line;
  line.add_vertex("p", {0, 0});
  line.add_ray("p", {1, 2}, 4);
  line.add_ray("p", {-2, -4}, 4);
  CHECK(check_balancing(line).balanced);
}

TEST_CASE("curve text format") {
  const TropicalCurve c = example_plane_curve();
  TropicalCurve back = parse_curve(c.to_text(), "plane");
  CHECK(back.vertices == c.vertices);
  CHECK(back.to_text() == c.to_text());
  CHECK(check_balancing(back).balanced);

  TropicalCurve d = parse_curve("vertex v1 (1/2, 9/2); ray v1 dir (0,1) weight 2 # up\n"
                                "ray v1 dir (0,-1) weight 2");
  CHECK(d.edges.size() == 2);
  CHECK(check_balancing(d).balanced);

  try {
    parse_curve("vertex a (0,0)\nedge a b weight 1");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 8);
    CHECK(std::string(e.what()) == "unknown vertex b at 2:8");
  }
  CHECK_THROWS_AS(parse_curve("vertex a (0,0)\nray a dir (0,0)"), ParseError);
  CHECK_THROWS_AS(parse_curve("vertex a (0,0)\nray a dir (1,0) weight 0"), ParseError);
  CHECK_THROWS_AS(parse_curve("vertex a (0,0)\nvertex b (0,0,1)"), ParseError);
}
