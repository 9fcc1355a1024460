#include <doctest.h>

#include "f1/blueprint.hpp"
#include "fixtures.hpp"

using namespace f1;
using fixtures::sl2;

namespace {

Blueprint sl2_closure() {
  Blueprint b("C", MonoidPresentation::free({"T2", "T3"}));
  b.add_relation("T2*T3 + 1", "0");
  return b;
}

// YES answers must survive base extension to Q.
bool holds_over_q(const Blueprint& b, const FormalSum& s, const FormalSum& t) {
  auto alg = base_extend(b, BaseRing::Q);
  auto gb = alg.ideal();
  Blueprint both = b;
  MultiPolynomial diff(alg.variables);
  auto add = [&](const FormalSum& x, long sign) {
    for (const auto& [m, c] : x.terms()) {
      Exponents e(alg.variables.size(), 0);
      for (std::size_t i = 0; i < m.arity(); ++i) e[i] = m.exponents()[i];
      diff += MultiPolynomial::monomial(alg.variables, e, sign * static_cast<long>(c));
    }
  };
  add(s, 1);
  add(t, -1);
  return ideal_member_poly(diff, gb);
}

}  // namespace

TEST_CASE("sums parse and print") {
  auto b = sl2();
  CHECK(b.to_text(b.parse_sum("T2*T3 + 1")) == "T2*T3 + 1");
  CHECK(b.to_text(b.parse_sum("1 + 1 + T1")) == "T1 + 2");
  CHECK(b.to_text(b.parse_sum("0")) == "0");
  CHECK(b.parse_sum("2*T1").size() == 2);
  CHECK_THROWS_AS(b.parse_sum("S"), DomainError);
}

TEST_CASE("defining relation of SL2 is derivable") {
  auto b = sl2();
  auto v = sum_equal(b, b.parse_sum("T1*T4"), b.parse_sum("T2*T3 + 1"));
  CHECK(v.yes());
  CHECK(sum_equal(b, b.parse_sum("T1 + T2"), b.parse_sum("T2 + T1")).yes());
}

TEST_CASE("square of T2*T3 is one in the closure") {
  auto b = sl2_closure();
  auto s = b.parse_sum("T2^2*T3^2");
  auto t = b.parse_sum("1");
  auto v = sum_equal(b, s, t);
  CHECK(v.yes());
  CHECK(holds_over_q(b, s, t));
  // No homomorphism to Q>=0 or B exists here; the base extension separates.
  auto v2 = sum_equal(b, b.parse_sum("T2*T3"), b.parse_sum("1"));
  CHECK(v2.no());
  CHECK(v2.detail == "separated by the base extension to Q");
}

TEST_CASE("homomorphisms refute") {
  auto b = sl2();
  auto v = sum_equal(b, b.parse_sum("T1"), b.parse_sum("T2"));
  CHECK(v.no());
  CHECK(v.detail.find("separating") != std::string::npos);
  CHECK(sum_equal(b, b.parse_sum("T1*T4"), b.parse_sum("T2*T3")).no());
}

TEST_CASE("budgets produce UNKNOWN") {
  // Over Q>=0 and B every assignment satisfying 2x = x + 1 has x = 1, so the
  // search cannot refute x = 1, and a one-step budget cannot derive it either.
  Blueprint b("U", MonoidPresentation::free({"x", "y", "z", "w", "v", "u", "s"}));
  b.add_relation("x + x", "x + 1");
  SearchBudget tiny;
  tiny.max_steps = 1;
  auto v = sum_equal(b, b.parse_sum("x*y"), b.parse_sum("y"), tiny);
  CHECK(v.unknown());
  CHECK(v.detail.find("budget") != std::string::npos);
}

TEST_CASE("derivations respect the congruence axioms") {
  auto b = sl2();
  auto s = b.parse_sum("T1*T4");
  auto t = b.parse_sum("T2*T3 + 1");
  auto w = b.parse_sum("T1 + T3^2");
  CHECK(sum_equal(b, s + w, t + w).yes());
  auto m = b.monoid.parse_monomial("T2*T4");
  CHECK(sum_equal(b, s.times(m), t.times(m)).yes());
  // transitivity through T1*T4 + T1*T4 = T2*T3 + 1 + T1*T4
  auto u = b.parse_sum("T2*T3 + T2*T3 + 2");
  CHECK(sum_equal(b, s + s, t + s).yes());
  CHECK(sum_equal(b, t + s, u).yes());
  CHECK(sum_equal(b, s + s, u).yes());
  CHECK(holds_over_q(b, s + s, u));
}

TEST_CASE("SL2 spectrum has seven k-primes") {
  auto b = sl2();
  auto ps = prime_k_ideals(b);
  std::vector<std::vector<std::size_t>> got;
  for (const auto& p : ps) got.push_back(p.generators);
  CHECK(got == std::vector<std::vector<std::size_t>>{{}, {0}, {1}, {2}, {3}, {0, 3}, {1, 2}});
  // subspace of the monoid spectrum
  auto all = enumerate_primes(b.monoid);
  for (const auto& p : ps) CHECK(std::find(all.begin(), all.end(), p) != all.end());
}

TEST_CASE("monoid-only blueprints keep the monoid spectrum") {
  auto b = fixtures::free_blueprint({"T1", "T2"});
  CHECK(prime_k_ideals(b) == enumerate_primes(b.monoid));
  CHECK(prime_k_ideals(b).size() == 4);
}

TEST_CASE("tensor products") {
  auto f1 = fixtures::free_blueprint({});
  auto b = sl2();
  auto bf = tensor(b, f1);
  CHECK(bf.monoid.generators == std::vector<std::string>{"T1'", "T2'", "T3'", "T4'"});
  CHECK(prime_k_ideals(bf).size() == 7);

  auto ts = tensor(fixtures::free_blueprint({"T"}), fixtures::free_blueprint({"S"}));
  CHECK(ts.arity() == 2);
  CHECK(enumerate_primes(ts.monoid).size() == 4);

  auto bb = tensor(b, b);
  CHECK(bb.arity() == 8);
  CHECK(bb.relations.size() == 2);

  auto x = fixtures::free_blueprint({"x"});
  auto y = fixtures::non_cancellative();
  CHECK(prime_k_ideals(tensor(x, y)).size() == prime_k_ideals(tensor(y, x)).size());
}

TEST_CASE("morphisms") {
  auto b = sl2();
  auto f1 = fixtures::free_blueprint({});
  auto one = f1.parse_sum("1");
  GeneratorImages counit{one, FormalSum(), FormalSum(), one};
  CHECK(check_morphism(b, f1, counit).yes());

  GeneratorImages identity;
  for (std::size_t i = 0; i < 4; ++i) identity.push_back(FormalSum(b.monoid.gen(i)));
  CHECK(check_morphism(b, b, identity).yes());

  GeneratorImages all_one{one, one, one, one};
  CHECK(check_morphism(b, f1, all_one).no());

  auto bb = tensor(b, b);
  auto delta = fixtures::sl2_comultiplication(bb);
  CHECK(check_morphism(b, bb, delta).no());  // strict: images are sums
  auto v = check_morphism(b, bb, delta, {}, false);
  CHECK(v.yes());
}

TEST_CASE("base extension") {
  CHECK(base_extend(fixtures::free_blueprint({}), BaseRing::Z).to_string() == "Z");
  CHECK(base_extend(fixtures::torus(1), BaseRing::Z).to_string() == "Z[T,T_inv] / (T*T_inv - 1)");
  CHECK(base_extend(sl2(), BaseRing::Z).to_string() == "Z[T1,T2,T3,T4] / (T1*T4 - T2*T3 - 1)");
  CHECK(base_extend(sl2(), BaseRing::N).to_string() == "N[T1,T2,T3,T4] / <T1*T4 = T2*T3 + 1>");
  auto zero_rel = fixtures::non_cancellative();
  CHECK(base_extend(zero_rel, BaseRing::Q).to_string() == "Q[x,y] / (x*y, y)");
}

TEST_CASE("cancellativity") {
  auto v = is_cancellative(sl2(), 4);
  CHECK(v.yes());
  CHECK(v.detail == "up to degree 4");
  auto nc = is_cancellative(fixtures::non_cancellative(), 3);
  CHECK(nc.no());
  CHECK(nc.detail.find("(y, 0)") != std::string::npos);
  CHECK(is_cancellative(fixtures::free_blueprint({"T"}), 6).yes());
  CHECK_THROWS_AS(is_cancellative(sl2(), 1), DomainError);
}

TEST_CASE("cyclotomic extensions") {
  auto f2 = cyclotomic_extension(2);
  REQUIRE(f2.relations.size() == 1);
  CHECK(f2.to_text(f2.relations[0].lhs) == "zeta + 1");
  CHECK(f2.to_text(f2.relations[0].rhs) == "0");
  CHECK(f2.monoid.to_text(f2.monoid.relations[0].lhs) == "zeta^2");
  auto f3 = cyclotomic_extension(3);
  CHECK(f3.to_text(f3.relations[0].lhs) == "zeta^2 + zeta + 1");
  auto f6 = cyclotomic_extension(6);
  CHECK(f6.to_text(f6.relations[0].lhs) == "zeta^2 + 1");
  CHECK(f6.to_text(f6.relations[0].rhs) == "zeta");
  CHECK_THROWS_AS(cyclotomic_extension(1), DomainError);
  // -1 exists: 1 + zeta = 0 in F1^2
  CHECK(sum_equal(f2, f2.parse_sum("zeta + 1"), FormalSum()).yes());
}
