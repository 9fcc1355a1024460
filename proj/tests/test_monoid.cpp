#include <doctest.h>

#include "f1/monoid.hpp"
#include "oracles.hpp"

using namespace f1;

namespace {

MonoidPresentation idempotent() {
  auto a = MonoidPresentation::free({"T"});
  a.add_relation(a.parse_monomial("T^2"), a.parse_monomial("T"));
  return a;
}

std::vector<std::vector<std::string>> named(const MonoidPresentation& a,
                                            const std::vector<PrimeIdeal>& ps) {
  std::vector<std::vector<std::string>> out;
  for (const auto& p : ps) {
    std::vector<std::string> n;
    for (auto i : p.generators) n.push_back(a.generators[i]);
    out.push_back(n);
  }
  return out;
}

}  // namespace

TEST_CASE("monomial parsing and printing round trip") {
  auto a = MonoidPresentation::free({"T1", "T2"});
  a.set_inverted(1);
  CHECK(a.to_text(a.parse_monomial("T1^2*T2^-1")) == "T1^2*T2^-1");
  CHECK(a.to_text(a.parse_monomial("1")) == "1");
  CHECK(a.parse_monomial("0").is_zero());
  CHECK_THROWS_AS(a.parse_monomial("T1^-1"), DomainError);
  CHECK_THROWS_AS(a.parse_monomial("S"), DomainError);
}

TEST_CASE("word problem in an idempotent monoid") {
  auto a = idempotent();
  CHECK(word_equal(a, a.parse_monomial("T^3"), a.parse_monomial("T")));
  CHECK_FALSE(word_equal(a, a.parse_monomial("T"), a.one()));
}

TEST_CASE("word problem agrees with breadth-first closure") {
  auto a = MonoidPresentation::free({"x", "y", "z"});
  a.add_relation(a.parse_monomial("x*y"), a.parse_monomial("z"));
  a.add_relation(a.parse_monomial("z^2"), a.parse_monomial("x"));
  a.add_relation(a.parse_monomial("y^3"), Monomial::zero());
  Congruence c(a);
  std::vector<Monomial> words;
  for (int i = 0; i <= 2; ++i) {
    for (int j = 0; j <= 3; ++j) {
      for (int k = 0; k <= 2; ++k) words.push_back(Monomial({i, j, k}));
    }
  }
  int decided = 0;
  for (const auto& u : words) {
    for (const auto& v : words) {
      auto expected = oracle::congruent(a, u, v, 10);
      if (!expected) continue;
      ++decided;
      CHECK(c.equal(u, v) == *expected);
    }
    auto zero = oracle::congruent(a, u, Monomial::zero(), 10);
    if (zero) CHECK(c.normal_form(u).is_zero() == *zero);
  }
  CHECK(decided > 100);
}

TEST_CASE("normal forms are idempotent and respect products") {
  auto a = MonoidPresentation::free({"x", "y"});
  a.add_relation(a.parse_monomial("x^2*y"), a.parse_monomial("x*y^2"));
  a.add_relation(a.parse_monomial("x^3"), a.parse_monomial("x"));
  Congruence c(a);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      Monomial u({i, j});
      Monomial n = c.normal_form(u);
      CHECK(c.normal_form(n) == n);
      for (int k = 0; k < 3; ++k) {
        Monomial w({k, 1});
        CHECK(c.equal(u * w, n * w));
      }
    }
  }
}

TEST_CASE("inverted generators cancel") {
  auto a = MonoidPresentation::free({"T"});
  a.set_inverted(0);
  CHECK(word_equal(a, a.parse_monomial("T^3*T^-3"), a.one()));
  CHECK(word_equal(a, a.parse_monomial("T^2") * a.parse_monomial("T^-1"), a.gen(0)));
  CHECK_FALSE(word_equal(a, a.gen(0), a.one()));
}

TEST_CASE("ideal membership") {
  auto a = MonoidPresentation::free({"x", "y"});
  a.add_relation(a.parse_monomial("x*y"), a.parse_monomial("y"));
  CHECK(ideal_member(a, a.parse_monomial("y"), {a.parse_monomial("x*y")}));
  CHECK_FALSE(ideal_member(a, a.parse_monomial("x"), {a.parse_monomial("y")}));
  CHECK(ideal_member(a, Monomial::zero(), {}));
}

TEST_CASE("primes of free monoids are generator subsets") {
  auto a = MonoidPresentation::free({"T1", "T2"});
  auto ps = enumerate_primes(a);
  CHECK(named(a, ps) == std::vector<std::vector<std::string>>{{}, {"T1"}, {"T2"}, {"T1", "T2"}});
  auto f1 = MonoidPresentation::free({});
  CHECK(enumerate_primes(f1).size() == 1);
}

TEST_CASE("primes respect zero divisors and units") {
  auto a = MonoidPresentation::free({"T1", "T2"});
  a.add_relation(a.parse_monomial("T1*T2"), Monomial::zero());
  CHECK(named(a, enumerate_primes(a)) ==
        std::vector<std::vector<std::string>>{{"T1"}, {"T2"}, {"T1", "T2"}});

  auto torus = MonoidPresentation::free({"T"});
  torus.set_inverted(0);
  CHECK(named(torus, enumerate_primes(torus)) == std::vector<std::vector<std::string>>{{}});

  // x*y = 1 makes both units; only the empty prime survives.
  auto b = MonoidPresentation::free({"x", "y"});
  b.add_relation(b.parse_monomial("x*y"), b.one());
  CHECK(enumerate_primes(b).size() == 1);
}

TEST_CASE("primes generated by different subsets are merged") {
  // x = y*z: the prime generated by {y} already contains x.
  auto a = MonoidPresentation::free({"x", "y", "z"});
  a.add_relation(a.parse_monomial("x"), a.parse_monomial("y*z"));
  auto ps = named(a, enumerate_primes(a));
  CHECK(ps == std::vector<std::vector<std::string>>{{}, {"y"}, {"z"}, {"y", "z"}});
}

TEST_CASE("nilpotents beyond the degree bound are reported") {
  auto a = MonoidPresentation::free({"x", "y"});
  a.add_relation(a.parse_monomial("x^5"), Monomial::zero());
  CHECK_THROWS_AS(enumerate_primes(a, {2}), BudgetExceeded);
  auto ps = named(a, enumerate_primes(a));
  CHECK(ps == std::vector<std::vector<std::string>>{{"x"}, {"x", "y"}});
}

TEST_CASE("localization") {
  auto a = MonoidPresentation::free({"T"});
  auto l = localize(a, {a.gen(0)});
  CHECK_FALSE(l.trivial);
  CHECK(l.presentation.is_inverted(0));
  CHECK(localize(a, {a.one()}).presentation == a);
  auto z = localize(a, {Monomial::zero()});
  CHECK(z.trivial);
  CHECK(unit_lattice(z.presentation).is_group_with_zero);

  auto b = MonoidPresentation::free({"x", "y"});
  auto lb = localize(b, {b.parse_monomial("x*y")}).presentation;
  REQUIRE(lb.arity() == 3);
  CHECK(ideal_member(lb, lb.one(), {lb.gen(0)}));
  CHECK(unit_lattice(lb).is_group_with_zero);
}

TEST_CASE("unit lattices") {
  auto t = MonoidPresentation::free({"T"});
  auto u = unit_lattice(t);
  CHECK(u.rank == 0);
  CHECK_FALSE(u.is_group_with_zero);

  t.set_inverted(0);
  u = unit_lattice(t);
  CHECK(u.rank == 1);
  CHECK(u.is_group_with_zero);
  CHECK(u.torsion.empty());

  t.add_relation(t.parse_monomial("T^2"), t.one());
  u = unit_lattice(t);
  CHECK(u.rank == 0);
  REQUIRE(u.torsion.size() == 1);
  CHECK(u.torsion[0] == 2);

  auto s = MonoidPresentation::free({"a", "b"});
  s.add_relation(s.parse_monomial("a*b"), s.one());
  u = unit_lattice(s);
  CHECK(u.is_group_with_zero);
  CHECK(u.rank == 1);
}
