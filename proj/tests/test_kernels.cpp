#include <doctest.h>

#include <random>

#include "f1/kernels.hpp"

using namespace f1::kernels;

namespace {

unsigned long long product_formula(int n, int p) {
  unsigned long long pn = 1, out = 1, pi = 1;
  for (int i = 0; i < n; ++i) pn *= p;
  for (int i = 0; i < n; ++i, pi *= p) out *= pn - pi;
  return out;
}

SeparationProblem random_problem(std::mt19937& rng, std::size_t arity) {
  std::uniform_int_distribution<int> exp(0, 2), mult(1, 2), count(1, 2);
  auto term = [&] {
    f1::Exponents e(arity);
    for (auto& x : e) x = exp(rng);
    return EvalTerm{e, static_cast<unsigned long>(mult(rng))};
  };
  auto side = [&] {
    EvalSum s;
    for (int i = count(rng); i > 0; --i) s.push_back(term());
    return s;
  };
  SeparationProblem p;
  p.arity = arity;
  p.inverted.assign(arity, false);
  p.inverted[0] = rng() % 2 == 0;
  p.constraints.push_back({side(), side()});
  p.target = {side(), side()};
  return p;
}

}  // namespace

TEST_CASE("invertible matrix counts") {
  for (int p : {2, 3, 5}) {
    for (int n = 1; n <= 3; ++n) {
      if (p == 5 && n == 3) continue;
      CHECK(count_invertible_serial(n, p) == product_formula(n, p));
      CHECK(count_invertible_parallel(n, p) == count_invertible_serial(n, p));
    }
  }
}

TEST_CASE("subspace enumeration serial and parallel agree") {
  for (int p : {2, 3}) {
    for (int n = 1; n <= 3; ++n) {
      for (int k = 0; k <= n; ++k) {
        CHECK(subspaces_by_spanning_parallel(n, k, p) == subspaces_by_spanning_serial(n, k, p));
      }
    }
  }
  CHECK(row_reduce({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}, 2) == Rref{{1, 0, 1}, {0, 1, 1}});
  CHECK(row_reduce({{2, 1}}, 3) == Rref{{1, 2}});
}

TEST_CASE("separating assignments: first witness is deterministic") {
  std::mt19937 rng(11);
  int separated = 0;
  for (int trial = 0; trial < 150; ++trial) {
    SeparationProblem problem = random_problem(rng, 3);
    for (Carrier c : {Carrier::NonNegativeRationals, Carrier::Booleans}) {
      std::vector<long> grid = c == Carrier::Booleans ? std::vector<long>{0, 1}
                                                      : std::vector<long>{0, 1, 2, 3};
      auto s = separating_assignment_serial(problem, c, grid);
      auto p = separating_assignment_parallel(problem, c, grid);
      CHECK(s == p);
      separated += s.has_value();
    }
  }
  CHECK(separated > 0);
}
