#include "f1/qincidence.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace f1 {

QPolynomial gauss_number(int n) {
  if (n < 0) throw DomainError("gauss_number: negative n");
  QPolynomial out;
  for (int i = 0; i < n; ++i) out += QPolynomial::monomial(static_cast<unsigned>(i));
  return out;
}

QPolynomial gauss_factorial(int n) {
  if (n < 0) throw DomainError("gauss_factorial: negative n");
  QPolynomial out(1);
  for (int i = 1; i <= n; ++i) out *= gauss_number(i);
  return out;
}

QPolynomial gauss(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw DomainError("gauss: need 0 <= k <= n, got n=" + std::to_string(n) +
                      " k=" + std::to_string(k));
  }
  DivRem d = poly_divrem(gauss_factorial(n), gauss_factorial(k) * gauss_factorial(n - k));
  if (!d.remainder.is_zero()) throw Error("gauss: inexact division");
  return d.quotient;
}

QPolynomial count_gl(int n) {
  if (n < 1) throw DomainError("count_gl: n must be positive");
  const QPolynomial torus = (QPolynomial::q() - QPolynomial(1)).pow(static_cast<unsigned>(n));
  return torus * QPolynomial::monomial(static_cast<unsigned>(n * (n - 1) / 2)) *
         gauss_factorial(n);
}

Integer limit_q1(const RationalFunction& f, int torus_exponent) {
  if (torus_exponent < 0) throw DomainError("limit_q1: negative torus exponent");
  const QPolynomial torus =
      (QPolynomial::q() - QPolynomial(1)).pow(static_cast<unsigned>(torus_exponent));
  Rational v = rational_limit(f / RationalFunction(torus), 1);
  if (!is_integral(v)) throw DomainError("limit_q1: value " + to_string(v) + " is not an integer");
  return v.get_num();
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::string Subspace::id() const {
  std::string out;
  for (std::size_t r = 0; r < basis.size(); ++r) {
    if (r) out += ';';
    for (int v : basis[r]) out += std::to_string(v);
  }
  return out;
}

namespace {

void check_field(int n, int p) {
  if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
  if (p > 5 || n > 5 || n < 1) throw DomainError("subspace enumeration needs 1 <= n <= 5, p <= 5");
}

bool contains(const Subspace& big, const Subspace& small, int p) {
  kernels::Rref rows = big.basis;
  rows.insert(rows.end(), small.basis.begin(), small.basis.end());
  return static_cast<int>(kernels::row_reduce(std::move(rows), p).size()) == big.dimension;
}

}  // namespace

std::vector<Subspace> grassmannian(int n, int k, int p) {
  check_field(n, p);
  if (k < 0 || k > n) throw DomainError("grassmannian: need 0 <= k <= n");
  std::vector<Subspace> out;
  std::vector<int> pivots(k);
  // Pivot sets in increasing lexicographic order.
  std::function<void(int, int)> choose = [&](int i, int from) {
    if (i == k) {
      std::vector<std::pair<int, int>> free;
      for (int r = 0; r < k; ++r) {
        for (int c = pivots[r] + 1; c < n; ++c) {
          if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.push_back({r, c});
        }
      }
      long total = 1;
      for (std::size_t f = 0; f < free.size(); ++f) total *= p;
      for (long code = 0; code < total; ++code) {
        Subspace s;
        s.dimension = k;
        s.basis.assign(k, std::vector<int>(n, 0));
        for (int r = 0; r < k; ++r) s.basis[r][pivots[r]] = 1;
        long c = code;
        for (auto [r, col] : free) {
          s.basis[r][col] = static_cast<int>(c % p);
          c /= p;
        }
        out.push_back(std::move(s));
      }
      return;
    }
    for (int c = from; c < n; ++c) {
      pivots[i] = c;
      choose(i + 1, c + 1);
    }
  };
  choose(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t IncidenceGeometry::size() const {
  std::size_t n = 0;
  for (const auto& [k, ids] : layers) n += ids.size();
  return n;
}

int IncidenceGeometry::layer_of(const std::string& id) const {
  for (const auto& [k, ids] : layers) {
    if (std::find(ids.begin(), ids.end(), id) != ids.end()) return k;
  }
  throw DomainError("no element " + id);
}

std::size_t IncidenceGeometry::valence(const std::string& id, int k) const {
  std::size_t n = 0;
  for (const auto& [a, b] : incidences) {
    if (a == id && layer_of(b) == k) ++n;
    if (b == id && layer_of(a) == k) ++n;
  }
  return n;
}

std::string IncidenceGeometry::to_dot(const std::string& name) const {
  std::string out = "graph \"" + name + "\" {\n  rankdir=BT;\n";
  for (const auto& [k, ids] : layers) {
    out += "  { rank=same;";
    for (const auto& id : ids) out += " \"" + id + "\";";
    out += " }\n";
  }
  for (const auto& [a, b] : incidences) out += "  \"" + a + "\" -- \"" + b + "\";\n";
  return out + "}\n";
}

IncidenceGeometry incidence_geometry(int n, int p) {
  check_field(n, p);
  IncidenceGeometry g;
  std::map<int, std::vector<Subspace>> spaces;
  for (int k = 1; k < n; ++k) {
    spaces[k] = grassmannian(n, k, p);
    for (const auto& s : spaces[k]) g.layers[k].push_back(s.id());
  }
  for (int lo = 1; lo < n; ++lo) {
    for (int hi = lo + 1; hi < n; ++hi) {
      for (const auto& a : spaces[lo]) {
        for (const auto& b : spaces[hi]) {
          if (contains(b, a, p)) g.incidences.insert({a.id(), b.id()});
        }
      }
    }
  }
  return g;
}

namespace {

std::string subset_id(unsigned mask, int n) {
  std::string out = "{";
  for (int i = 0; i < n; ++i) {
    if (mask & (1u << i)) out += (out.size() > 1 ? "," : "") + std::to_string(i + 1);
  }
  return out + "}";
}

std::vector<unsigned> subsets_of_size(int n, int k) {
  std::vector<unsigned> out;
  for (unsigned m = 0; m < (1u << n); ++m) {
    if (__builtin_popcount(m) == k) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [&](unsigned a, unsigned b) {
    return subset_id(a, n) < subset_id(b, n);
  });
  return out;
}

Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

IncidenceGeometry limit_geometry(int n) {
  if (n < 1 || n > 7) throw DomainError("limit_geometry: need 1 <= n <= 7");
  IncidenceGeometry g;
  for (int k = 1; k < n; ++k) {
    for (unsigned m : subsets_of_size(n, k)) g.layers[k].push_back(subset_id(m, n));
  }
  for (int lo = 1; lo < n; ++lo) {
    for (int hi = lo + 1; hi < n; ++hi) {
      for (unsigned a : subsets_of_size(n, lo)) {
        for (unsigned b : subsets_of_size(n, hi)) {
          if ((a & b) == a) g.incidences.insert({subset_id(a, n), subset_id(b, n)});
        }
      }
    }
  }
  return g;
}

IncidenceGeometry geometry_of_poset(const std::vector<std::string>& ids,
                                    const std::vector<std::vector<bool>>& less) {
  const std::size_t n = ids.size();
  std::vector<int> height(n, 0);
  // Longest chain below each element; n rounds suffice.
  for (std::size_t round = 0; round < n; ++round) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (less[j][i]) height[i] = std::max(height[i], height[j] + 1);
      }
    }
  }
  IncidenceGeometry g;
  for (std::size_t i = 0; i < n; ++i) g.layers[height[i] + 1].push_back(ids[i]);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (less[i][j]) g.incidences.insert({ids[i], ids[j]});
    }
  }
  return g;
}

bool isomorphic(const IncidenceGeometry& a, const IncidenceGeometry& b) {
  if (a.layers.size() != b.layers.size() || a.incidences.size() != b.incidences.size()) {
    return false;
  }
  std::vector<std::string> order;
  std::map<std::string, int> layer_a, layer_b;
  for (auto ia = a.layers.begin(), ib = b.layers.begin(); ia != a.layers.end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second.size() != ib->second.size()) return false;
    for (const auto& id : ia->second) {
      order.push_back(id);
      layer_a[id] = ia->first;
    }
    for (const auto& id : ib->second) layer_b[id] = ib->first;
  }
  auto incident = [](const IncidenceGeometry& g, const std::string& x, const std::string& y) {
    return g.incidences.count({x, y}) > 0 || g.incidences.count({y, x}) > 0;
  };
  std::map<std::string, std::string> image;
  std::set<std::string> used;
  std::function<bool(std::size_t)> extend = [&](std::size_t i) {
    if (i == order.size()) return true;
    const std::string& x = order[i];
    for (const auto& y : b.layers.at(layer_a[x])) {
      if (used.count(y)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = incident(a, order[j], x) == incident(b, image[order[j]], y);
      }
      if (!ok) continue;
      image[x] = y;
      used.insert(y);
      if (extend(i + 1)) return true;
      used.erase(y);
    }
    return false;
  };
  return extend(0);
}

SnActionReport sn_action_check(int n) {
  if (n < 1 || n > 7) throw DomainError("sn_action_check: need 1 <= n <= 7");
  IncidenceGeometry g = limit_geometry(n);
  // S_n is generated by the transposition (1 2) and the cycle (1 2 ... n).
  auto swap12 = [&](unsigned m) {
    unsigned a = m & 1u, b = (m >> 1) & 1u;
    return (m & ~3u) | (a << 1) | b;
  };
  auto rotate = [&](unsigned m) {
    unsigned top = (m >> (n - 1)) & 1u;
    return ((m << 1) & ((1u << n) - 1)) | top;
  };
  SnActionReport rep;
  for (int k = 1; k < n; ++k) {
    std::set<unsigned> orbit{(1u << k) - 1};
    std::deque<unsigned> queue{(1u << k) - 1};
    while (!queue.empty()) {
      unsigned m = queue.front();
      queue.pop_front();
      for (unsigned next : {swap12(m), rotate(m)}) {
        if (orbit.insert(next).second) queue.push_back(next);
      }
    }
    rep.orbit_sizes.push_back(orbit.size());
    const std::size_t layer = g.layers.at(k).size();
    rep.transitive = rep.transitive && orbit.size() == layer;
    rep.sizes_match =
        rep.sizes_match && Integer(layer) == factorial(n) / (factorial(k) * factorial(n - k));
  }
  return rep;
}

}  // namespace f1
