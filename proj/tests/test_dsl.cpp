#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "f1/dsl.hpp"
#include "fixtures.hpp"

using namespace f1;

namespace {

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::filesystem::path> corpus_files() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(F1_CORPUS_DIR)) {
    if (e.path().extension() == ".f1") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string error_of(const std::string& text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parsing definitions") {
  auto doc = parse_document("blueprint SL2 { gens: T1,T2,T3,T4; rel: T1*T4 = T2*T3 + 1; }");
  REQUIRE(doc.definitions.size() == 1);
  Blueprint b = doc.definitions[0].blueprint();
  CHECK(b.monoid == fixtures::sl2().monoid);
  CHECK(b.relations == fixtures::sl2().relations);

  auto gm = parse_document("monoid Gm { gens: T; inv: T; }").definitions[0].blueprint();
  CHECK(gm.monoid.is_inverted(0));
  CHECK(base_extend(gm, BaseRing::Z).to_string() == "Z[T,T_inv] / (T*T_inv - 1)");

  auto mixed = parse_document(
      "monoid M { gens: x, y; inv: y; rel: x^2*y^-1 = 0; rel: x = x*y; }\n"
      "blueprint B { gens: a; rel: 2*a + 1 = 3; rel: a^2 = a; }");
  Blueprint m = mixed.find("M")->blueprint();
  CHECK(m.monoid.relations.size() == 2);
  CHECK(m.monoid.relations[0].rhs.is_zero());
  Blueprint bb = mixed.find("B")->blueprint();
  CHECK(bb.relations.size() == 1);
  CHECK(bb.monoid.relations.size() == 1);
  CHECK(bb.to_text(bb.relations[0].rhs) == "3");
  CHECK(mixed.find("nothing") == nullptr);
}

TEST_CASE("diagnostics carry positions") {
  CHECK(error_of("monoid Bad { gens: T; rel: S = 1; }") == "unknown generator S at 1:28");
  CHECK(error_of("blueprint B { gens: x; rel: 0*x = x; }") ==
        "non-positive coefficient 0 at 1:29");
  CHECK(error_of("monoid M { gens: x; rel: x + x = x; }") ==
        "monoid relations need a single monomial on each side at 1:26");
  CHECK(error_of("monoid M { gens: x;\n  rel: x^-1 = 1; }") ==
        "negative exponent of x, which is not inverted at 2:11");
  CHECK(error_of("monoid M { gens: x, x; }") == "duplicate generator x at 1:21");
  CHECK(error_of("monoid M { gens: x; }\nmonoid M { gens: y; }") == "duplicate definition M at 2:8");
  CHECK(error_of("group G { }") ==
        "expected 'monoid', 'blueprint' or 'curve' but found 'group' at 1:1");
  CHECK(error_of("") == "expected a definition at 1:1");
  CHECK(error_of("monoid M { gens: x; rel: x = ; }") == "expected generator but found ';' at 1:30");
  CHECK(error_of("curve C { vertex a (0,0); edge a b; }") == "unknown vertex b at 1:34");
  CHECK(error_of("monoid M { gens: x }") == "expected ';' but found '}' at 1:20");
}

TEST_CASE("corpus round trip") {
  auto files = corpus_files();
  REQUIRE(files.size() >= 10);
  for (const auto& f : files) {
    CAPTURE(f.filename().string());
    DslDocument doc = parse_document(read_file(f));
    std::string printed = print(doc);
    DslDocument again = parse_document(printed);
    CHECK(doc.same_as(again));
    CHECK(print(again) == printed);
    for (const auto& d : doc.definitions) {
      if (d.kind != DefinitionKind::Curve) CHECK_NOTHROW(d.blueprint());
    }
  }
}

TEST_CASE("definitions of blueprints built in code") {
  for (const Blueprint& b : {fixtures::sl2(), fixtures::non_cancellative(), fixtures::torus(2),
                             cyclotomic_extension(3)}) {
    Definition d = definition_of(b);
    DslDocument doc = parse_document(print(d));
    Blueprint back = doc.definitions[0].blueprint();
    CHECK(back.monoid == b.monoid);
    CHECK(back.relations == b.relations);
  }
  auto curve = parse_document(read_file(std::filesystem::path(F1_CORPUS_DIR) / "plane_curve.f1"));
  CHECK(curve.definitions[0].curve.to_text() == example_plane_curve().to_text());
}
