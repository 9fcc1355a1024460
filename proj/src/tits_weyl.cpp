#include "f1/tits_weyl.hpp"

#include <json.hpp>

#include <algorithm>
#include <deque>
#include <exception>
#include <map>
#include <set>

namespace f1 {

namespace {

// Encodes sums over b as polynomials in the variables of base_extend(b, Q).
class RingEncoder {
 public:
  explicit RingEncoder(const Blueprint& b) : b_(b), alg_(base_extend(b, BaseRing::Q)) {
    for (std::size_t k = 0; k < alg_.variables.size(); ++k) index_[alg_.variables[k]] = k;
  }

  const PresentedAlgebra& algebra() const { return alg_; }
  const std::vector<std::string>& variables() const { return alg_.variables; }

  MultiPolynomial operator()(const Monomial& m) const {
    if (m.is_zero()) return MultiPolynomial(alg_.variables);
    Exponents e(alg_.variables.size(), 0);
    for (std::size_t i = 0; i < m.arity(); ++i) {
      int v = m.exponents()[i];
      if (v > 0) e[i] = v;
      if (v < 0) e[index_.at(b_.monoid.generators[i] + "_inv")] = -v;
    }
    return MultiPolynomial::monomial(alg_.variables, e);
  }

  MultiPolynomial operator()(const FormalSum& s) const {
    MultiPolynomial out(alg_.variables);
    for (const auto& [m, c] : s.terms()) {
      out += (*this)(m) * MultiPolynomial::constant(alg_.variables, static_cast<long>(c));
    }
    return out;
  }

 private:
  const Blueprint& b_;
  PresentedAlgebra alg_;
  std::map<std::string, std::size_t> index_;
};

// Rewrites a sum over `from` into `to` by generator names; terms that use a
// generator missing from `to` are dropped.
FormalSum transfer(const Blueprint& from, const Blueprint& to, const FormalSum& s) {
  FormalSum out;
  for (const auto& [m, c] : s.terms()) {
    Exponents e(to.arity(), 0);
    bool alive = true;
    for (std::size_t i = 0; i < m.arity() && alive; ++i) {
      if (m.exponents()[i] == 0) continue;
      auto idx = to.monoid.index_of(from.monoid.generators[i]);
      if (!idx) {
        alive = false;
      } else {
        e[*idx] = m.exponents()[i];
      }
    }
    if (alive) out.add(Monomial(std::move(e)), c);
  }
  return out;
}

int relation_degree(const Blueprint& b) {
  int d = 1;
  for (const auto& r : b.monoid.relations) d = std::max({d, r.lhs.degree(), r.rhs.degree()});
  for (const auto& r : b.relations) d = std::max({d, r.lhs.max_degree(), r.rhs.max_degree()});
  return d;
}

std::string join_names(const Blueprint& b, const PrimeIdeal& p) {
  std::string out;
  for (std::size_t i : p.generators) out += (out.empty() ? "" : ",") + b.monoid.generators[i];
  return "(" + out + ")";
}

bool same_ideal(const Congruence& cong, const MonoidPresentation& m, const PrimeIdeal& a,
                const PrimeIdeal& b) {
  const MonoidIdeal ia = ideal_of(m, a);
  const MonoidIdeal ib = ideal_of(m, b);
  return std::all_of(ia.begin(), ia.end(), [&](const Monomial& x) { return cong.in_ideal(x, ib); }) &&
         std::all_of(ib.begin(), ib.end(), [&](const Monomial& x) { return cong.in_ideal(x, ia); });
}

// Replaces each variable of f by a polynomial.
MultiPolynomial substitute(const MultiPolynomial& f, const std::vector<MultiPolynomial>& values,
                           const std::vector<std::string>& vars) {
  MultiPolynomial out(vars);
  for (const auto& [e, c] : f.terms()) {
    MultiPolynomial term = MultiPolynomial::constant(vars, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) term *= values[i];
    }
    out += term;
  }
  return out;
}

}  // namespace

Blueprint closure(const Blueprint& b, const PrimeIdeal& p) {
  b.validate();
  const Congruence cong(b.monoid);
  const GroebnerBasis ideal = cong.ideal_basis(ideal_of(b.monoid, p));
  auto in_ideal = [&](const Monomial& m) {
    return m.is_zero() || ideal_member_poly(cong.encode(m), ideal);
  };
  std::vector<std::size_t> keep;
  std::vector<bool> dead(b.arity(), false);
  for (std::size_t i = 0; i < b.arity(); ++i) {
    dead[i] = in_ideal(b.monoid.gen(i));
    if (!dead[i]) keep.push_back(i);
  }
  MonoidPresentation m;
  for (std::size_t i : keep) {
    m.generators.push_back(b.monoid.generators[i]);
    m.inverted.push_back(b.monoid.is_inverted(i));
  }
  auto project = [&](const Monomial& x) {
    if (in_ideal(x)) return Monomial::zero();
    Exponents e;
    for (std::size_t i : keep) e.push_back(x.exponents()[i]);
    return Monomial(std::move(e));
  };
  auto project_sum = [&](const FormalSum& s) {
    FormalSum out;
    for (const auto& [x, c] : s.terms()) out.add(project(x), c);
    return out;
  };
  auto add_monoid = [&](const Monomial& l, const Monomial& r) {
    if (l == r) return;
    for (const auto& rel : m.relations) {
      if ((rel.lhs == l && rel.rhs == r) || (rel.lhs == r && rel.rhs == l)) return;
    }
    m.add_relation(l, r);
  };
  for (const auto& r : b.monoid.relations) add_monoid(project(r.lhs), project(r.rhs));
  std::vector<AdditiveRelation> additive;
  for (const auto& r : b.relations) {
    FormalSum l = project_sum(r.lhs);
    FormalSum rr = project_sum(r.rhs);
    if (l == rr) continue;
    auto lm = l.as_monomial();
    auto rm = rr.as_monomial();
    if ((lm || l.empty()) && (rm || rr.empty())) {
      add_monoid(lm ? *lm : Monomial::zero(), rm ? *rm : Monomial::zero());
    } else {
      additive.push_back({l, rr});
    }
  }
  return Blueprint(b.name + "/" + point_id(b.monoid, p), std::move(m), std::move(additive));
}

RankedPoint point_rank(const Blueprint& b, const PrimeIdeal& p) {
  RankedPoint out;
  out.point = p;
  out.id = point_id(b.monoid, p);
  out.closure = closure(b, p);
  int dim = krull_dimension(base_extend(out.closure, BaseRing::Q).ideal());
  if (dim < 0) throw DomainError("closure of " + out.id + " is empty over Q");
  out.rank = dim;
  return out;
}

std::vector<RankedPoint> point_ranks(const Blueprint& b) {
  const SpecPoset poset = spec(b);
  const long n = static_cast<long>(poset.size());
  std::vector<RankedPoint> out(poset.size());
  std::vector<std::exception_ptr> errors(poset.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = point_rank(b, poset.points[i].prime);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::string TorusType::to_string() const {
  switch (kind) {
    case TorusKind::F1Torus:
      return "F1-torus(" + std::to_string(rank) + ")";
    case TorusKind::F1SquaredTorus:
      return "F1squared-torus(" + std::to_string(rank) + ")";
    case TorusKind::Other:
      break;
  }
  return "other";
}

TorusType classify_torus(const Blueprint& c, int r, std::string* detail) {
  auto note = [&](const std::string& s) {
    if (detail) *detail = s;
  };
  if (c.relations.empty()) {
    UnitLattice ul = unit_lattice(c.monoid);
    if (ul.is_group_with_zero && static_cast<int>(ul.rank) == r && ul.torsion.empty()) {
      note("unit lattice of rank " + std::to_string(r) + ", torsion free");
      return {TorusKind::F1Torus, r};
    }
  }
  // Monoid relations implied over Q, found among words of bounded degree.
  const int degree = 2 * relation_degree(c);
  RingEncoder enc(c);
  const GroebnerBasis gb = enc.algebra().ideal();
  const std::vector<Monomial> words = monomials_up_to(c.monoid, degree);
  std::map<MultiPolynomial::TermMap, Monomial> first;
  std::map<Monomial, MultiPolynomial::TermMap> nf_of;
  MonoidPresentation induced = c.monoid;
  for (const auto& w : words) {
    MultiPolynomial nf = normal_form(enc(w), gb);
    nf_of[w] = nf.terms();
    if (nf.is_zero()) {
      induced.add_relation(w, Monomial::zero());
      continue;
    }
    auto [it, inserted] = first.emplace(nf.terms(), w);
    if (!inserted) induced.add_relation(it->second, w);
  }
  UnitLattice ul = unit_lattice(induced);
  if (ul.is_group_with_zero && static_cast<int>(ul.rank) == r && ul.torsion.empty()) {
    note("induced unit lattice of rank " + std::to_string(r) + ", torsion free");
    return {TorusKind::F1Torus, r};
  }
  if (ul.is_group_with_zero && static_cast<int>(ul.rank) == r && ul.torsion.size() == 1 &&
      ul.torsion[0] == 2) {
    const auto one = nf_of.at(c.monoid.one());
    for (const auto& w : words) {
      if (nf_of.at(w) == one) continue;
      auto sq = nf_of.find(w * w);
      MultiPolynomial::TermMap sq_nf =
          sq != nf_of.end() ? sq->second : normal_form(enc(w * w), gb).terms();
      if (sq_nf != one) continue;
      FormalSum m_plus_one(w);
      m_plus_one.add(c.monoid.one());
      ThreeValued v = sum_equal(c, m_plus_one, FormalSum());
      if (v.yes()) {
        note("order-2 unit " + c.monoid.to_text(w) + " with " + c.monoid.to_text(w) +
             " + 1 = 0");
        return {TorusKind::F1SquaredTorus, r};
      }
    }
  }
  note("unit lattice rank " + std::to_string(ul.rank) + ", " +
       (ul.is_group_with_zero ? "group with zero" : "not a group with zero") + ", " +
       std::to_string(ul.torsion.size()) + " torsion factors");
  return {TorusKind::Other, r};
}

RankSpace rank_space(const Blueprint& b) {
  RankSpace out;
  out.points = point_ranks(b);
  if (out.points.empty()) throw DomainError("rank_space: empty spectrum");
  out.rank = out.points.front().rank;
  for (const auto& p : out.points) out.rank = std::min(out.rank, p.rank);
  for (const auto& p : out.points) {
    if (p.rank != out.rank) continue;
    RankSpaceComponent comp;
    comp.point = p.point;
    comp.id = p.id;
    comp.closure = p.closure;
    comp.type = classify_torus(p.closure, out.rank, &comp.detail);
    out.components.push_back(std::move(comp));
  }
  return out;
}

HypothesisReport check_hypothesis_H(const Blueprint& b, int degree_bound) {
  HypothesisReport rep;
  const SpecPoset poset = spec(b);
  const std::size_t n = poset.size();
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue;
  if (n > 0) {
    queue.push_back(0);
    seen[0] = true;
  }
  std::size_t reached = 0;
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    ++reached;
    for (std::size_t j = 0; j < n; ++j) {
      if (!seen[j] && (poset.leq(i, j) || poset.leq(j, i))) {
        seen[j] = true;
        queue.push_back(j);
      }
    }
  }
  if (n > 0 && reached == n) {
    rep.connected = {Verdict::Yes, "connected"};
  } else {
    rep.connected = {Verdict::No, std::to_string(n - reached) + " of " + std::to_string(n) +
                                      " points unreachable from " +
                                      (n ? poset.points[0].id : std::string("nothing"))};
  }
  const int bound = degree_bound > 0 ? degree_bound : std::max(4, relation_degree(b));
  rep.cancellative = is_cancellative(b, bound);
  rep.space = rank_space(b);
  rep.tori = std::all_of(rep.space.components.begin(), rep.space.components.end(),
                         [](const RankSpaceComponent& c) { return c.type.kind != TorusKind::Other; });
  return rep;
}

Comultiplication matrix_comultiplication(const Blueprint& g, std::size_t n) {
  if (n * n > g.arity()) throw DomainError("matrix_comultiplication: too few generators");
  Comultiplication out;
  out.source = g;
  out.target = tensor(g, g);
  const std::size_t half = g.arity();
  auto left = [&](std::size_t i) { return out.target.monoid.gen(i); };
  auto right = [&](std::size_t i) { return out.target.monoid.gen(half + i); };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      FormalSum s;
      for (std::size_t l = 0; l < n; ++l) s.add(left(i * n + l) * right(l * n + j));
      out.images.push_back(s);
    }
  }
  for (std::size_t k = n * n; k < half; ++k) out.images.push_back(FormalSum(left(k) * right(k)));
  return out;
}

GeneratorImages matrix_counit(const Blueprint& g, std::size_t n) {
  if (n * n > g.arity()) throw DomainError("matrix_counit: too few generators");
  GeneratorImages out;
  const Monomial one;  // F1 has no generators
  for (std::size_t k = 0; k < g.arity(); ++k) {
    bool off_diagonal = k < n * n && k / n != k % n;
    out.push_back(off_diagonal ? FormalSum() : FormalSum(one));
  }
  return out;
}

std::size_t component_product(const Blueprint& g, const RankSpace& space,
                              const Comultiplication& delta, std::size_t p, std::size_t q,
                              const SearchBudget& budget) {
  const auto& cp = space.components.at(p);
  const auto& cq = space.components.at(q);
  const Blueprint local = tensor(cp.closure, cq.closure);
  const Congruence cong(g.monoid);
  PrimeIdeal r;
  for (std::size_t c = 0; c < g.arity(); ++c) {
    FormalSum surviving = transfer(delta.target, local, delta.images[c]);
    if (surviving.empty()) {
      r.generators.push_back(c);
      continue;
    }
    ThreeValued v = sum_equal(local, surviving, FormalSum(), budget);
    if (v.unknown()) {
      throw BudgetExceeded("component product " + cp.id + " * " + cq.id + ": cannot decide " +
                           g.monoid.generators[c] + ": " + v.detail);
    }
    if (v.yes()) r.generators.push_back(c);
  }
  for (std::size_t k = 0; k < space.components.size(); ++k) {
    if (same_ideal(cong, g.monoid, space.components[k].point, r)) return k;
  }
  throw Error("component product " + cp.id + " * " + cq.id + " = " + join_names(g, r) +
              " is not in the rank space");
}

bool product_compatible(const Blueprint& g, const RankSpace& space, const Comultiplication& delta,
                        std::size_t p, std::size_t q, std::size_t r) {
  const auto& cp = space.components.at(p);
  const auto& cq = space.components.at(q);
  const auto& cr = space.components.at(r);
  const Blueprint local = tensor(cp.closure, cq.closure);
  RingEncoder local_enc(local);
  const GroebnerBasis target = local_enc.algebra().ideal();
  RingEncoder source_enc(cr.closure);

  // Images of the closure(r) variables, i.e. its generators and inverses.
  std::vector<MultiPolynomial> values;
  for (const auto& var : source_enc.variables()) {
    bool inverse = false;
    std::string name = var;
    if (!cr.closure.monoid.index_of(var) && var.size() > 4 &&
        var.compare(var.size() - 4, 4, "_inv") == 0) {
      inverse = true;
      name = var.substr(0, var.size() - 4);
    }
    auto gi = g.monoid.index_of(name);
    if (!gi) return false;
    FormalSum im = transfer(delta.target, local, delta.images[*gi]);
    if (inverse) {
      auto mono = im.as_monomial();
      if (!mono) return false;
      values.push_back(local_enc(mono->inverse()));
    } else {
      values.push_back(local_enc(im));
    }
  }
  for (const auto& f : source_enc.algebra().relations) {
    if (!ideal_member_poly(substitute(f, values, local_enc.variables()), target)) return false;
  }
  // Generators killed in r must die in the product.
  for (std::size_t c = 0; c < g.arity(); ++c) {
    if (cr.closure.monoid.index_of(g.monoid.generators[c])) continue;
    FormalSum im = transfer(delta.target, local, delta.images[c]);
    if (!ideal_member_poly(local_enc(im), target)) return false;
  }
  return true;
}

WeylGroup weyl_group(const Blueprint& g, const Comultiplication& delta,
                     const GeneratorImages& counit, const SearchBudget& budget) {
  WeylGroup w;
  w.space = rank_space(g);
  for (const auto& c : w.space.components) {
    if (c.type.kind == TorusKind::Other) {
      throw Error("rank space component " + c.id + " is not a torus: " + c.detail);
    }
  }
  const std::size_t n = w.space.components.size();
  w.table.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      w.table[p][q] = component_product(g, w.space, delta, p, q, budget);
    }
  }
  // Identity: the component of the counit's kernel.
  PrimeIdeal kernel;
  for (std::size_t c = 0; c < counit.size(); ++c) {
    if (counit[c].empty()) kernel.generators.push_back(c);
  }
  const Congruence cong(g.monoid);
  bool found = false;
  for (std::size_t k = 0; k < n && !found; ++k) {
    if (same_ideal(cong, g.monoid, w.space.components[k].point, kernel)) {
      w.identity = k;
      found = true;
    }
  }
  if (!found) throw Error("counit kernel " + join_names(g, kernel) + " is not in the rank space");

  const auto& id = [&](std::size_t k) { return w.space.components[k].id; };
  for (std::size_t a = 0; a < n; ++a) {
    if (w.table[w.identity][a] != a || w.table[a][w.identity] != a) {
      throw Error("identity " + id(w.identity) + " fails on " + id(a));
    }
    std::set<std::size_t> row(w.table[a].begin(), w.table[a].end());
    std::set<std::size_t> col;
    for (std::size_t b = 0; b < n; ++b) col.insert(w.table[b][a]);
    if (row.size() != n || col.size() != n) throw Error("no inverse for " + id(a));
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (w.table[w.table[a][b]][c] != w.table[a][w.table[b][c]]) {
          throw Error("associativity fails on (" + id(a) + ", " + id(b) + ", " + id(c) + ")");
        }
      }
    }
  }
  w.compatible = true;
  for (std::size_t p = 0; p < n && w.compatible; ++p) {
    for (std::size_t q = 0; q < n && w.compatible; ++q) {
      w.compatible = product_compatible(g, w.space, delta, p, q, w.table[p][q]);
    }
  }
  if (n == 1) {
    w.name = "trivial";
  } else {
    w.name = "order-" + std::to_string(n);
    for (std::size_t a = 0; a < n; ++a) {
      std::size_t order = 1;
      for (std::size_t x = a; x != w.identity; x = w.table[x][a]) ++order;
      if (order == n) {
        w.name = "Z/" + std::to_string(n);
        break;
      }
    }
  }
  return w;
}

std::string WeylGroup::to_json() const {
  nlohmann::ordered_json j;
  j["group"] = name;
  j["rank"] = space.rank;
  j["components"] = nlohmann::ordered_json::array();
  for (const auto& c : space.components) {
    j["components"].push_back({{"id", c.id}, {"type", c.type.to_string()}});
  }
  j["identity"] = space.components[identity].id;
  j["table"] = nlohmann::ordered_json::array();
  for (const auto& row : table) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (std::size_t k : row) r.push_back(space.components[k].id);
    j["table"].push_back(r);
  }
  j["compatible"] = compatible;
  return j.dump(2) + "\n";
}

}  // namespace f1
