#include "f1/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <climits>
#include <set>

namespace f1::kernels {

namespace {

unsigned long long checked_power(std::size_t base, std::size_t exponent, const char* what) {
  unsigned long long total = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (total > (1ULL << 40) / std::max<std::size_t>(base, 1)) {
      throw DomainError(std::string(what) + ": search space too large");
    }
    total *= base;
  }
  return total;
}

std::vector<long> decode_assignment(unsigned long long k, std::size_t arity,
                                    const std::vector<long>& grid) {
  std::vector<long> v(arity);
  for (std::size_t i = 0; i < arity; ++i) {
    v[i] = grid[k % grid.size()];
    k /= grid.size();
  }
  return v;
}

bool admissible(const SeparationProblem& pb, Carrier carrier, const std::vector<long>& v) {
  for (std::size_t i = 0; i < pb.arity; ++i) {
    if (i < pb.inverted.size() && pb.inverted[i]) {
      if (carrier == Carrier::Booleans ? v[i] != 1 : v[i] == 0) return false;
    }
  }
  return true;
}

bool bool_sum(const EvalSum& s, const std::vector<long>& v) {
  for (const auto& t : s) {
    bool term = true;
    for (std::size_t i = 0; i < t.exps.size() && term; ++i) {
      if (t.exps[i] != 0 && v[i] == 0) term = false;
    }
    if (term) return true;
  }
  return false;
}

Rational rational_sum(const EvalSum& s, const std::vector<long>& v) {
  Rational total = 0;
  for (const auto& t : s) {
    Rational term = static_cast<long>(t.multiplicity);
    for (std::size_t i = 0; i < t.exps.size() && term != 0; ++i) {
      if (t.exps[i] != 0) term *= pow(Rational(v[i]), t.exps[i]);
    }
    total += term;
  }
  return total;
}

bool holds(const EvalEquation& eq, Carrier carrier, const std::vector<long>& v) {
  if (carrier == Carrier::Booleans) return bool_sum(eq.lhs, v) == bool_sum(eq.rhs, v);
  return rational_sum(eq.lhs, v) == rational_sum(eq.rhs, v);
}

bool separates(const SeparationProblem& pb, Carrier carrier, const std::vector<long>& v) {
  if (!admissible(pb, carrier, v)) return false;
  if (holds(pb.target, carrier, v)) return false;
  return std::all_of(pb.constraints.begin(), pb.constraints.end(),
                     [&](const EvalEquation& eq) { return holds(eq, carrier, v); });
}

void check_grid(const std::vector<long>& grid, Carrier carrier) {
  if (grid.empty()) throw DomainError("separating_assignment: empty grid");
  for (long g : grid) {
    if (g < 0 || (carrier == Carrier::Booleans && g > 1)) {
      throw DomainError("separating_assignment: grid value outside the carrier");
    }
  }
}

long inverse_mod(long a, int p) {
  long result = 1;
  long base = a % p;
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

int rank_mod(std::vector<int> m, int n, int p) {
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    for (int r = rank; r < n; ++r) {
      if (m[r * n + col] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    for (int c = 0; c < n; ++c) std::swap(m[rank * n + c], m[piv * n + c]);
    long inv = inverse_mod(m[rank * n + col], p);
    for (int r = rank + 1; r < n; ++r) {
      long f = m[r * n + col] * inv % p;
      if (f == 0) continue;
      for (int c = col; c < n; ++c) {
        m[r * n + c] = static_cast<int>(((m[r * n + c] - f * m[rank * n + c]) % p + p) % p);
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<int> decode_matrix(unsigned long long k, int entries, int p) {
  std::vector<int> m(static_cast<std::size_t>(entries));
  for (auto& x : m) {
    x = static_cast<int>(k % static_cast<unsigned>(p));
    k /= static_cast<unsigned>(p);
  }
  return m;
}

void check_prime(int p) {
  if (p < 2) throw DomainError("modulus must be a prime");
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw DomainError("modulus must be a prime");
  }
}

Rref tuple_rref(unsigned long long k, int n, int rows, int p) {
  std::vector<int> flat = decode_matrix(k, n * rows, p);
  Rref m(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) m[r].assign(flat.begin() + r * n, flat.begin() + (r + 1) * n);
  return row_reduce(std::move(m), p);
}

}  // namespace

std::optional<std::vector<long>> separating_assignment_serial(const SeparationProblem& problem,
                                                              Carrier carrier,
                                                              const std::vector<long>& grid) {
  check_grid(grid, carrier);
  const unsigned long long total = checked_power(grid.size(), problem.arity, "homomorphism search");
  for (unsigned long long k = 0; k < total; ++k) {
    auto v = decode_assignment(k, problem.arity, grid);
    if (separates(problem, carrier, v)) return v;
  }
  return std::nullopt;
}

std::optional<std::vector<long>> separating_assignment_parallel(const SeparationProblem& problem,
                                                                Carrier carrier,
                                                                const std::vector<long>& grid) {
  check_grid(grid, carrier);
  const long long total =
      static_cast<long long>(checked_power(grid.size(), problem.arity, "homomorphism search"));
  long long best = LLONG_MAX;
#pragma omp parallel for schedule(static) reduction(min : best)
  for (long long k = 0; k < total; ++k) {
    if (k >= best) continue;
    auto v = decode_assignment(static_cast<unsigned long long>(k), problem.arity, grid);
    if (separates(problem, carrier, v)) best = k;
  }
  if (best == LLONG_MAX) return std::nullopt;
  return decode_assignment(static_cast<unsigned long long>(best), problem.arity, grid);
}

unsigned long long count_invertible_serial(int n, int p) {
  check_prime(p);
  if (n == 0) return 1;
  const unsigned long long total = checked_power(static_cast<std::size_t>(p),
                                                 static_cast<std::size_t>(n * n), "GL count");
  unsigned long long count = 0;
  for (unsigned long long k = 0; k < total; ++k) {
    if (rank_mod(decode_matrix(k, n * n, p), n, p) == n) ++count;
  }
  return count;
}

unsigned long long count_invertible_parallel(int n, int p) {
  check_prime(p);
  if (n == 0) return 1;
  const long long total = static_cast<long long>(checked_power(
      static_cast<std::size_t>(p), static_cast<std::size_t>(n * n), "GL count"));
  unsigned long long count = 0;
#pragma omp parallel for schedule(static) reduction(+ : count)
  for (long long k = 0; k < total; ++k) {
    if (rank_mod(decode_matrix(static_cast<unsigned long long>(k), n * n, p), n, p) == n) ++count;
  }
  return count;
}

Rref row_reduce(Rref rows, int p) {
  const std::size_t r_count = rows.size();
  const std::size_t n = r_count ? rows[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < r_count; ++col) {
    std::size_t piv = r_count;
    for (std::size_t r = rank; r < r_count; ++r) {
      if (rows[r][col] % p != 0) {
        piv = r;
        break;
      }
    }
    if (piv == r_count) continue;
    std::swap(rows[rank], rows[piv]);
    long inv = inverse_mod(((rows[rank][col] % p) + p) % p, p);
    for (auto& x : rows[rank]) x = static_cast<int>(((x * inv) % p + p) % p);
    for (std::size_t r = 0; r < r_count; ++r) {
      if (r == rank || rows[r][col] % p == 0) continue;
      long f = rows[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        rows[r][c] = static_cast<int>(((rows[r][c] - f * rows[rank][c]) % p + p) % p);
      }
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

std::vector<Rref> subspaces_by_spanning_serial(int n, int k, int p) {
  check_prime(p);
  if (k < 0 || k > n) return {};
  const unsigned long long total = checked_power(
      static_cast<std::size_t>(p), static_cast<std::size_t>(n * k), "subspace enumeration");
  std::set<Rref> found;
  if (k == 0) found.insert(Rref{});
  for (unsigned long long t = 0; t < total && k > 0; ++t) {
    Rref r = tuple_rref(t, n, k, p);
    if (static_cast<int>(r.size()) == k) found.insert(std::move(r));
  }
  return {found.begin(), found.end()};
}

std::vector<Rref> subspaces_by_spanning_parallel(int n, int k, int p) {
  check_prime(p);
  if (k < 0 || k > n) return {};
  if (k == 0) return {Rref{}};
  const long long total = static_cast<long long>(checked_power(
      static_cast<std::size_t>(p), static_cast<std::size_t>(n * k), "subspace enumeration"));
  std::set<Rref> found;
#pragma omp parallel
  {
    std::set<Rref> local;
#pragma omp for schedule(static)
    for (long long t = 0; t < total; ++t) {
      Rref r = tuple_rref(static_cast<unsigned long long>(t), n, k, p);
      if (static_cast<int>(r.size()) == k) local.insert(std::move(r));
    }
#pragma omp critical
    found.insert(local.begin(), local.end());
  }
  return {found.begin(), found.end()};
}

}  // namespace f1::kernels
