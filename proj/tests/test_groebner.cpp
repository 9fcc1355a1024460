#include <doctest.h>

#include <random>

#include "f1/groebner.hpp"

using namespace f1;

namespace {

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kXYZ{"x", "y", "z"};

MultiPolynomial mono(const std::vector<std::string>& v, Exponents e, long c = 1) {
  return MultiPolynomial::monomial(v, std::move(e), c);
}

MultiPolynomial cst(const std::vector<std::string>& v, long c) {
  return MultiPolynomial::constant(v, c);
}

Exponents leading(const MultiPolynomial& p, const TermOrder& order) {
  Exponents best;
  for (const auto& [e, c] : p.terms()) {
    if (best.empty() || order.greater(e, best)) best = e;
  }
  return best;
}

// Buchberger's criterion computed with plain polynomial arithmetic.
bool satisfies_s_pair_criterion(const GroebnerBasis& g) {
  auto gens = g.generators();
  const auto& vars = g.variables();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Exponents li = leading(gens[i], g.order());
      Exponents lj = leading(gens[j], g.order());
      Exponents l(li.size()), si(li.size()), sj(li.size());
      for (std::size_t k = 0; k < l.size(); ++k) {
        l[k] = std::max(li[k], lj[k]);
        si[k] = l[k] - li[k];
        sj[k] = l[k] - lj[k];
      }
      Rational ci = gens[i].terms().at(li);
      Rational cj = gens[j].terms().at(lj);
      MultiPolynomial s = MultiPolynomial::monomial(vars, si, 1 / ci) * gens[i] -
                          MultiPolynomial::monomial(vars, sj, 1 / cj) * gens[j];
      if (!normal_form(s, g).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("reduced basis of a small ideal") {
  // (xy - 1, x - 1) = (x - 1, y - 1)
  auto f = mono(kXY, {1, 1}) - cst(kXY, 1);
  auto g = mono(kXY, {1, 0}) - cst(kXY, 1);
  auto gb = buchberger({f, g});
  REQUIRE(gb.size() == 2);
  CHECK(gb.to_string() == "[x - 1, y - 1]");
  CHECK(krull_dimension(gb) == 0);
}

TEST_CASE("lex basis eliminates the first variable") {
  // x^2 + y^2 - 1, x - y  in lex x > y
  auto f = mono(kXY, {2, 0}) + mono(kXY, {0, 2}) - cst(kXY, 1);
  auto g = mono(kXY, {1, 0}) - mono(kXY, {0, 1});
  auto gb = buchberger({f, g}, TermOrder::lex());
  auto gens = gb.generators();
  REQUIRE(gens.size() == 2);
  CHECK(gens[0] == g);
  CHECK(gens[1] == mono(kXY, {0, 2}) - MultiPolynomial::constant(kXY, make_rational(1, 2)));
}

TEST_CASE("precedence permutes the lex order") {
  auto f = mono(kXY, {1, 0}) - mono(kXY, {0, 2});
  TermOrder y_first{OrderKind::Lex, {1, 0}};
  auto gb = buchberger({f}, y_first);
  CHECK(gb.to_string() == "[y^2 - x]");
}

TEST_CASE("unit and zero ideals") {
  auto gb = buchberger({mono(kXY, {1, 0}), mono(kXY, {1, 0}) - cst(kXY, 1)});
  CHECK(gb.is_unit_ideal());
  CHECK(krull_dimension(gb) == -1);
  auto zero = buchberger(kXYZ, {});
  CHECK(zero.size() == 0);
  CHECK(krull_dimension(zero) == 3);
}

TEST_CASE("determinant hypersurface has dimension three") {
  std::vector<std::string> v{"T1", "T2", "T3", "T4"};
  auto det = mono(v, {1, 0, 0, 1}) - mono(v, {0, 1, 1, 0}) - cst(v, 1);
  auto gb = buchberger({det});
  CHECK(krull_dimension(gb) == 3);
  CHECK(det.to_string() == "T1*T4 - T2*T3 - 1");
}

TEST_CASE("twisted cubic: dimension one, criterion holds") {
  // y - x^2, z - x^3
  auto a = mono(kXYZ, {0, 1, 0}) - mono(kXYZ, {2, 0, 0});
  auto b = mono(kXYZ, {0, 0, 1}) - mono(kXYZ, {3, 0, 0});
  for (auto order : {TermOrder::grevlex(), TermOrder::lex()}) {
    auto gb = buchberger({a, b}, order);
    CHECK(satisfies_s_pair_criterion(gb));
    CHECK(ideal_member_poly(a, gb));
    CHECK(ideal_member_poly(b, gb));
    CHECK(krull_dimension(gb) == 1);
    CHECK_FALSE(ideal_member_poly(mono(kXYZ, {1, 0, 0}), gb));
  }
}

TEST_CASE("random ideals: basis generates the input and is a basis") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> exp(0, 2);
  std::uniform_int_distribution<long> coef(-3, 3);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<MultiPolynomial> gens;
    for (int k = 0; k < 2; ++k) {
      MultiPolynomial p(kXYZ);
      for (int t = 0; t < 3; ++t) {
        p += mono(kXYZ, {exp(rng), exp(rng), exp(rng)}, coef(rng));
      }
      if (!p.is_zero()) gens.push_back(p);
    }
    if (gens.empty()) continue;
    auto gb = buchberger(kXYZ, gens);
    CHECK(satisfies_s_pair_criterion(gb));
    for (const auto& g : gens) CHECK(ideal_member_poly(g, gb));
    auto again = buchberger(kXYZ, gb.generators());
    CHECK(again.to_string() == gb.to_string());
    CHECK(ideals_equal(gb, again));
  }
}
