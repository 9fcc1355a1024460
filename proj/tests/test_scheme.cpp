#include <doctest.h>

#include <json.hpp>

#include "f1/scheme.hpp"
#include "fixtures.hpp"

using namespace f1;

namespace {

std::vector<std::string> ids(const SpecPoset& p) {
  std::vector<std::string> out;
  for (const auto& pt : p.points) out.push_back(pt.id);
  return out;
}

// Every point of `open` lies in U_h, and U_h is closed under generalization.
void check_open_set_laws(const Blueprint& b) {
  auto poset = spec(b);
  auto all = principal_open(b, poset, b.monoid.one());
  CHECK(all.size() == poset.size());
  CHECK(principal_open(b, poset, Monomial::zero()).empty());
  for (std::size_t g = 0; g < b.arity(); ++g) {
    for (std::size_t h = 0; h < b.arity(); ++h) {
      auto ug = principal_open(b, poset, b.monoid.gen(g));
      auto uh = principal_open(b, poset, b.monoid.gen(h));
      auto ugh = principal_open(b, poset, b.monoid.gen(g) * b.monoid.gen(h));
      std::vector<std::size_t> both;
      std::set_intersection(ug.begin(), ug.end(), uh.begin(), uh.end(), std::back_inserter(both));
      CHECK(ugh == both);
    }
    auto ug = principal_open(b, poset, b.monoid.gen(g));
    for (std::size_t i : ug) {
      for (std::size_t j = 0; j < poset.size(); ++j) {
        if (poset.leq(j, i)) CHECK(std::find(ug.begin(), ug.end(), j) != ug.end());
      }
    }
  }
}

}  // namespace

TEST_CASE("spectra of affine spaces") {
  auto line = spec(fixtures::free_blueprint({"T"}));
  CHECK(ids(line) == std::vector<std::string>{"p_", "p_T"});
  CHECK(line.hasse.size() == 1);
  auto plane = spec(fixtures::free_blueprint({"T1", "T2"}));
  CHECK(plane.size() == 4);
  CHECK(plane.hasse.size() == 4);
  auto point = scheme_points(standard_scheme(StandardKind::Affine, 0));
  CHECK(point.size() == 1);
}

TEST_CASE("SL2 spectrum poset") {
  auto p = spec(fixtures::sl2());
  CHECK(ids(p) == std::vector<std::string>{"p_", "p_T1", "p_T1_T4", "p_T2", "p_T2_T3", "p_T3",
                                           "p_T4"});
  CHECK(p.hasse.size() == 8);
  auto top = *p.find("p_T1_T4");
  auto t1 = *p.find("p_T1");
  CHECK(p.leq(t1, top));
  CHECK_FALSE(p.leq(*p.find("p_T2"), top));
  // localization at the generic point inverts everything
  CHECK(unit_lattice(p.points[*p.find("p_")].localization).is_group_with_zero);
}

TEST_CASE("open set laws") {
  check_open_set_laws(fixtures::free_blueprint({"T1", "T2"}));
  check_open_set_laws(fixtures::sl2());
  check_open_set_laws(fixtures::non_cancellative());
}

TEST_CASE("torus has one point") {
  auto p = scheme_points(standard_scheme(StandardKind::Torus, 1));
  CHECK(ids(p) == std::vector<std::string>{"p_"});
}

TEST_CASE("projective line") {
  auto x = standard_scheme(StandardKind::Projective, 1);
  REQUIRE(x.charts.size() == 2);
  CHECK(x.charts[0].monoid.generators == std::vector<std::string>{"T0"});
  CHECK(verify_gluing(x, 0).yes());
  auto p = scheme_points(x);
  CHECK(ids(p) == std::vector<std::string>{"[0:1]", "[1:0]", "[1:1]"});
  auto generic = *p.find("[1:1]");
  for (std::size_t i = 0; i < p.size(); ++i) CHECK(p.leq(generic, i));
  auto ext = base_extend_scheme(x);
  CHECK(ext.charts[0].to_string() == "Z[T0]");
  CHECK(ext.charts[1].to_string() == "Z[T1]");
  CHECK(ext.overlaps[0].on_a.to_string() == "Z[T0,T0_inv] / (T0*T0_inv - 1)");
}

TEST_CASE("projective spaces have 2^(n+1) - 1 points") {
  for (int n = 0; n <= 4; ++n) {
    auto x = standard_scheme(StandardKind::Projective, n);
    for (std::size_t g = 0; g < x.gluings.size(); ++g) CHECK(verify_gluing(x, g).yes());
    auto p = scheme_points(x);
    CHECK(p.size() == (std::size_t{1} << (n + 1)) - 1);
    // order is reverse inclusion of nonzero supports
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = 0; j < p.size(); ++j) {
        bool zeros_grow = true;
        for (std::size_t k = 1; k + 1 < p.points[i].id.size(); k += 2) {
          if (p.points[i].id[k] == '0' && p.points[j].id[k] != '0') zeros_grow = false;
        }
        CHECK(p.leq(i, j) == zeros_grow);
      }
    }
  }
}

TEST_CASE("a broken gluing is reported") {
  auto x = standard_scheme(StandardKind::Projective, 1);
  x.gluings[0].a_to_b[0] = FormalSum(x.charts[1].monoid.gen(0));
  CHECK_FALSE(verify_gluing(x, 0).yes());
  CHECK_THROWS_AS(scheme_points(x), Error);
}

TEST_CASE("rendering") {
  auto line = spec(fixtures::free_blueprint({"T"}));
  line.object = "A1";
  CHECK(render(line, RenderFormat::Dot) ==
        "digraph \"A1\" {\n  rankdir=BT;\n  \"p_\";\n  \"p_T\";\n  \"p_\" -> \"p_T\";\n}\n");
  auto j = nlohmann::json::parse(render(spec(fixtures::sl2()), RenderFormat::Json));
  CHECK(j["object"] == "SL2");
  CHECK(j["points"].size() == 7);
  CHECK(j["hasse"].size() == 8);
  CHECK(j["points"][2]["id"] == "p_T1_T4");
  CHECK(j["points"][2]["generators"] == nlohmann::json::array({"T1", "T4"}));
}
