#include "f1/groebner.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace f1 {

bool TermOrder::greater(const Exponents& a, const Exponents& b) const {
  const std::size_t n = a.size();
  auto var = [&](std::size_t k) { return precedence.empty() ? k : precedence[k]; };
  if (kind == OrderKind::Lex) {
    for (std::size_t k = 0; k < n; ++k) {
      int d = a[var(k)] - b[var(k)];
      if (d != 0) return d > 0;
    }
    return false;
  }
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  for (std::size_t k = n; k-- > 0;) {
    int d = a[var(k)] - b[var(k)];
    if (d != 0) return d < 0;
  }
  return false;
}

namespace {

using Poly = GroebnerBasis::Poly;
using Term = GroebnerBasis::Term;

bool divides(const Exponents& d, const Exponents& m) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] > m[i]) return false;
  }
  return true;
}

Exponents lcm_of(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0 && b[i] > 0) return false;
  }
  return true;
}

struct Descending {
  const TermOrder* order;
  bool operator()(const Exponents& a, const Exponents& b) const { return order->greater(a, b); }
};

using Accumulator = std::map<Exponents, Rational, Descending>;

Poly to_poly(const MultiPolynomial& p, const TermOrder& order) {
  Poly out;
  out.reserve(p.terms().size());
  for (const auto& [e, c] : p.terms()) out.push_back({e, c});
  std::sort(out.begin(), out.end(),
            [&](const Term& x, const Term& y) { return order.greater(x.exps, y.exps); });
  return out;
}

void make_monic(Poly& p) {
  if (p.empty()) return;
  Rational inv = Rational(1) / p.front().coeff;
  for (auto& t : p) t.coeff *= inv;
}

// acc -= coeff * shift * g
void subtract_multiple(Accumulator& acc, const Poly& g, const Exponents& shift,
                       const Rational& coeff) {
  Exponents e(shift.size());
  for (const auto& t : g) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = t.exps[i] + shift[i];
    auto [it, inserted] = acc.try_emplace(e, 0);
    it->second -= coeff * t.coeff;
    if (it->second == 0) acc.erase(it);
  }
}

// Full reduction of f modulo polys (which need not be a basis).
Poly reduce(const Poly& f, const std::vector<Poly>& polys, const TermOrder& order,
            std::size_t skip = static_cast<std::size_t>(-1)) {
  Accumulator acc{Descending{&order}};
  for (const auto& t : f) acc.emplace(t.exps, t.coeff);
  Poly rem;
  Exponents shift;
  while (!acc.empty()) {
    auto it = acc.begin();
    const Exponents lead = it->first;
    const Rational lc = it->second;
    bool reduced = false;
    for (std::size_t k = 0; k < polys.size(); ++k) {
      if (k == skip || polys[k].empty()) continue;
      const Term& lt = polys[k].front();
      if (!divides(lt.exps, lead)) continue;
      shift.assign(lead.size(), 0);
      for (std::size_t i = 0; i < lead.size(); ++i) shift[i] = lead[i] - lt.exps[i];
      subtract_multiple(acc, polys[k], shift, lc / lt.coeff);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back({lead, lc});
      acc.erase(acc.begin());
    }
  }
  return rem;
}

Poly s_polynomial(const Poly& f, const Poly& g, const TermOrder& order) {
  const Exponents l = lcm_of(f.front().exps, g.front().exps);
  Accumulator acc{Descending{&order}};
  Exponents shift(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) shift[i] = l[i] - f.front().exps[i];
  subtract_multiple(acc, f, shift, Rational(-1) / f.front().coeff);
  for (std::size_t i = 0; i < l.size(); ++i) shift[i] = l[i] - g.front().exps[i];
  subtract_multiple(acc, g, shift, Rational(1) / g.front().coeff);
  Poly out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc) out.push_back({e, c});
  return out;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Exponents lcm;
};

}  // namespace

GroebnerBasis::GroebnerBasis(std::vector<std::string> variables, TermOrder order,
                             std::vector<Poly> polys)
    : vars_(std::move(variables)), order_(std::move(order)), polys_(std::move(polys)) {}

bool GroebnerBasis::is_unit_ideal() const {
  for (const auto& p : polys_) {
    const auto& e = p.front().exps;
    if (std::all_of(e.begin(), e.end(), [](int v) { return v == 0; })) return true;
  }
  return false;
}

std::vector<MultiPolynomial> GroebnerBasis::generators() const {
  std::vector<MultiPolynomial> out;
  for (const auto& p : polys_) {
    MultiPolynomial m(vars_);
    for (const auto& t : p) m.add_term(t.exps, t.coeff);
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Exponents> GroebnerBasis::leading_monomials() const {
  std::vector<Exponents> out;
  for (const auto& p : polys_) out.push_back(p.front().exps);
  return out;
}

std::string GroebnerBasis::to_string() const {
  std::ostringstream out;
  out << "[";
  auto gens = generators();
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (k) out << ", ";
    out << gens[k].to_string();
  }
  out << "]";
  return out.str();
}

GroebnerBasis buchberger(const std::vector<MultiPolynomial>& gens, const TermOrder& order) {
  if (gens.empty()) throw DomainError("buchberger: variable set unknown for empty input");
  return buchberger(gens.front().variables(), gens, order);
}

GroebnerBasis buchberger(const std::vector<std::string>& variables,
                         const std::vector<MultiPolynomial>& gens, const TermOrder& order) {
  for (const auto& g : gens) {
    if (g.variables() != variables) throw DomainError("buchberger: mixed variable sets");
  }
  std::vector<Poly> basis;
  std::vector<Pair> queue;
  // Pairs already reduced, for the chain criterion.
  std::vector<std::vector<bool>> done;

  auto add = [&](Poly p) {
    make_monic(p);
    const std::size_t idx = basis.size();
    basis.push_back(std::move(p));
    for (auto& row : done) row.push_back(false);
    done.emplace_back(basis.size(), false);
    for (std::size_t i = 0; i < idx; ++i) {
      queue.push_back({i, idx, lcm_of(basis[i].front().exps, basis[idx].front().exps)});
    }
  };

  for (const auto& g : gens) {
    Poly p = reduce(to_poly(g, order), basis, order);
    if (!p.empty()) add(std::move(p));
  }

  while (!queue.empty()) {
    // Normal strategy: smallest lcm first, ties by index.
    auto best = queue.begin();
    for (auto it = queue.begin() + 1; it != queue.end(); ++it) {
      if (order.greater(best->lcm, it->lcm) ||
          (best->lcm == it->lcm && std::tie(it->i, it->j) < std::tie(best->i, best->j))) {
        best = it;
      }
    }
    Pair pair = *best;
    queue.erase(best);
    done[pair.i][pair.j] = done[pair.j][pair.i] = true;

    const Exponents& li = basis[pair.i].front().exps;
    const Exponents& lj = basis[pair.j].front().exps;
    if (coprime(li, lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (done[pair.i][k] && done[pair.j][k] && divides(basis[k].front().exps, pair.lcm)) {
        chain = true;
      }
    }
    if (chain) continue;

    Poly s = reduce(s_polynomial(basis[pair.i], basis[pair.j], order), basis, order);
    if (!s.empty()) add(std::move(s));
  }

  // Minimalise then interreduce.
  std::vector<Poly> minimal;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    bool redundant = false;
    for (std::size_t m = 0; m < basis.size() && !redundant; ++m) {
      if (m == k) continue;
      const auto& lk = basis[k].front().exps;
      const auto& lm = basis[m].front().exps;
      if (divides(lm, lk) && (lm != lk || m < k)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[k]);
  }
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    Poly head{minimal[k].front()};
    Poly tail(minimal[k].begin() + 1, minimal[k].end());
    Poly red = reduce(tail, minimal, order, k);
    head.insert(head.end(), red.begin(), red.end());
    minimal[k] = std::move(head);
    make_monic(minimal[k]);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Poly& a, const Poly& b) {
    return order.greater(a.front().exps, b.front().exps);
  });
  return GroebnerBasis(variables, order, std::move(minimal));
}

MultiPolynomial normal_form(const MultiPolynomial& f, const GroebnerBasis& basis) {
  if (f.variables() != basis.variables()) throw DomainError("normal_form: variable mismatch");
  Poly r = reduce(to_poly(f, basis.order()), basis.polys(), basis.order());
  MultiPolynomial out(basis.variables());
  for (const auto& t : r) out.add_term(t.exps, t.coeff);
  return out;
}

bool ideal_member_poly(const MultiPolynomial& f, const GroebnerBasis& basis) {
  return normal_form(f, basis).is_zero();
}

int krull_dimension(const GroebnerBasis& basis) {
  if (basis.is_unit_ideal()) return -1;
  const std::size_t n = basis.variables().size();
  if (n > 24) throw DomainError("krull_dimension: too many variables for subset search");
  std::vector<unsigned long> supports;
  for (const auto& lm : basis.leading_monomials()) {
    unsigned long mask = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (lm[i] > 0) mask |= 1UL << i;
    }
    supports.push_back(mask);
  }
  int best = 0;
  for (unsigned long s = 0; s < (1UL << n); ++s) {
    int size = __builtin_popcountl(s);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [&](unsigned long m) { return (m & ~s) == 0; });
    if (independent) best = size;
  }
  return best;
}

bool ideals_equal(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (a.variables() != b.variables()) return false;
  for (const auto& g : a.generators()) {
    if (!ideal_member_poly(g, b)) return false;
  }
  for (const auto& g : b.generators()) {
    if (!ideal_member_poly(g, a)) return false;
  }
  return true;
}

}  // namespace f1
