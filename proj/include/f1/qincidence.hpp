#pragma once

// Gauss numbers, counts over finite fields, subspace geometries and their
// limits at q = 1.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "f1/kernels.hpp"
#include "f1/qpoly.hpp"

namespace f1 {

/// [n]_q = 1 + q + ... + q^(n-1).
QPolynomial gauss_number(int n);
/// [n]_q! = [1]_q [2]_q ... [n]_q.
QPolynomial gauss_factorial(int n);
/// Gauss binomial [n choose k]_q. Throws DomainError unless 0 <= k <= n.
QPolynomial gauss(int n, int k);

/// #GL(n, F_q) = (q-1)^n q^(n(n-1)/2) [n]_q!.
QPolynomial count_gl(int n);

/// Value at q = 1 of f / (q-1)^n. Throws DomainError when a pole remains or
/// the value is not an integer.
Integer limit_q1(const RationalFunction& f, int torus_exponent);

bool is_prime(long n);

struct Subspace {
  kernels::Rref basis;  // reduced row echelon form
  int dimension = 0;

  /// Rows joined by ';', entries as digits: "101;011".
  std::string id() const;
  friend auto operator<=>(const Subspace&, const Subspace&) = default;
};

/// All k-dimensional subspaces of F_p^n, enumerated by pivot pattern, sorted
/// by basis. Requires p prime, p <= 5, n <= 5.
std::vector<Subspace> grassmannian(int n, int k, int p);

/// Layers keyed by k; incidences (lower id, upper id) between distinct layers.
struct IncidenceGeometry {
  std::map<int, std::vector<std::string>> layers;
  std::set<std::pair<std::string, std::string>> incidences;

  std::size_t size() const;
  /// Number of incident elements of layer k.
  std::size_t valence(const std::string& id, int k) const;
  int layer_of(const std::string& id) const;
  /// Bipartite-style graph, one rank per layer.
  std::string to_dot(const std::string& name = "geometry") const;
};

/// Subspaces of F_p^n of dimensions 1..n-1 with containment.
IncidenceGeometry incidence_geometry(int n, int p);

/// k-subsets of {1..n} for k = 1..n-1 with containment; ids "{1,2}".
IncidenceGeometry limit_geometry(int n);

/// Layers are heights (minimal elements first) of a finite poset given by
/// its strict order; incidence is the order itself.
IncidenceGeometry geometry_of_poset(const std::vector<std::string>& ids,
                                    const std::vector<std::vector<bool>>& less);

/// Search for a layer-preserving bijection that maps incidences onto
/// incidences.
bool isomorphic(const IncidenceGeometry& a, const IncidenceGeometry& b);

struct SnActionReport {
  bool transitive = true;
  bool sizes_match = true;
  /// Orbit size of {1..k} under S_n for each k = 1..n-1.
  std::vector<std::size_t> orbit_sizes;

  bool ok() const { return transitive && sizes_match; }
};

/// S_n acts on the layers of limit_geometry(n), transitively, with layer k of
/// size n!/(k!(n-k)!). Requires n <= 7.
SnActionReport sn_action_check(int n);

}  // namespace f1
