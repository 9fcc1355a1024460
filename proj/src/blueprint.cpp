#include "f1/blueprint.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "f1/kernels.hpp"
#include "f1/qpoly.hpp"

namespace f1 {

void FormalSum::add(const Monomial& m, unsigned long multiplicity) {
  if (m.is_zero() || multiplicity == 0) return;
  terms_[m] += multiplicity;
}

unsigned long FormalSum::size() const {
  unsigned long n = 0;
  for (const auto& [m, c] : terms_) n += c;
  return n;
}

int FormalSum::max_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::optional<Monomial> FormalSum::as_monomial() const {
  if (terms_.size() != 1 || terms_.begin()->second != 1) return std::nullopt;
  return terms_.begin()->first;
}

bool FormalSum::contains(const FormalSum& sub) const {
  for (const auto& [m, c] : sub.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end() || it->second < c) return false;
  }
  return true;
}

FormalSum& FormalSum::operator+=(const FormalSum& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

FormalSum FormalSum::minus(const FormalSum& sub) const {
  if (!contains(sub)) throw DomainError("FormalSum::minus: not a sub-sum");
  FormalSum out = *this;
  for (const auto& [m, c] : sub.terms_) {
    auto it = out.terms_.find(m);
    it->second -= c;
    if (it->second == 0) out.terms_.erase(it);
  }
  return out;
}

FormalSum FormalSum::times(const Monomial& m) const {
  FormalSum out;
  for (const auto& [t, c] : terms_) out.add(t * m, c);
  return out;
}

FormalSum FormalSum::times(const FormalSum& o) const {
  FormalSum out;
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : o.terms_) out.add(a * b, ca * cb);
  }
  return out;
}

FormalSum Blueprint::parse_sum(const std::string& text) const {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw DomainError("empty sum");
  FormalSum out;
  std::stringstream ss(s);
  std::string term;
  while (std::getline(ss, term, '+')) {
    if (term.empty()) throw DomainError("empty term in sum " + text);
    std::size_t digits = 0;
    while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits]))) {
      ++digits;
    }
    unsigned long mult = 1;
    std::string rest = term;
    if (digits == term.size()) {
      mult = std::stoul(term);
      rest = "1";
    } else if (digits > 0 && term[digits] == '*') {
      mult = std::stoul(term.substr(0, digits));
      rest = term.substr(digits + 1);
    }
    out.add(monoid.parse_monomial(rest), mult);
  }
  return out;
}

std::string Blueprint::to_text(const FormalSum& s) const {
  if (s.empty()) return "0";
  std::vector<std::pair<Monomial, unsigned long>> terms(s.terms().begin(), s.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    if (x.first.degree() != y.first.degree()) return x.first.degree() > y.first.degree();
    return x.first.exponents() > y.first.exponents();
  });
  std::string out;
  for (const auto& [m, c] : terms) {
    if (!out.empty()) out += " + ";
    std::string mono = monoid.to_text(m);
    if (c == 1) {
      out += mono;
    } else if (mono == "1") {
      out += std::to_string(c);
    } else {
      out += std::to_string(c) + "*" + mono;
    }
  }
  return out;
}

void Blueprint::add_relation(const std::string& lhs, const std::string& rhs) {
  relations.push_back({parse_sum(lhs), parse_sum(rhs)});
}

void Blueprint::validate() const {
  monoid.validate();
  for (const auto& r : relations) {
    for (const auto* side : {&r.lhs, &r.rhs}) {
      for (const auto& [m, c] : side->terms()) monoid.validate(m);
    }
  }
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "YES";
    case Verdict::No:
      return "NO";
    case Verdict::Unknown:
      return "UNKNOWN";
  }
  return "UNKNOWN";
}

namespace {

struct Encoder {
  std::vector<std::string> vars;
  std::vector<std::size_t> aux;

  explicit Encoder(const MonoidPresentation& p) : vars(p.generators), aux(p.arity(), 0) {
    for (std::size_t i = 0; i < p.arity(); ++i) {
      if (p.is_inverted(i)) {
        aux[i] = vars.size();
        vars.push_back(p.generators[i] + "_inv");
      }
    }
  }

  MultiPolynomial operator()(const Monomial& m) const {
    if (m.is_zero()) return MultiPolynomial(vars);
    Exponents e(vars.size(), 0);
    for (std::size_t i = 0; i < m.arity(); ++i) {
      int v = m.exponents()[i];
      if (v >= 0) {
        e[i] = v;
      } else {
        e[aux[i]] = -v;
      }
    }
    return MultiPolynomial::monomial(vars, e);
  }

  MultiPolynomial operator()(const FormalSum& s) const {
    MultiPolynomial out(vars);
    for (const auto& [m, c] : s.terms()) {
      out += (*this)(m) * MultiPolynomial::constant(vars, static_cast<long>(c));
    }
    return out;
  }
};

// Monoid normal forms, memoized for one search, and the image of the
// blueprint in its base extension to Q.
class Normalizer {
 public:
  explicit Normalizer(const Blueprint& b)
      : b_(b), cong_(b.monoid), identity_(b.monoid.relations.empty()) {}

  const Congruence& congruence() const { return cong_; }

  // s and t differ in B (x) Q, the target of a semiring morphism.
  bool separated_over_q(const FormalSum& s, const FormalSum& t) {
    if (!ring_) ring_ = base_extend(b_, BaseRing::Q).ideal();
    Encoder enc(b_.monoid);
    return !ideal_member_poly(enc(s) - enc(t), *ring_);
  }

  Monomial operator()(const Monomial& m) {
    if (identity_ || m.is_zero()) return m;
    auto it = memo_.find(m);
    if (it != memo_.end()) return it->second;
    Monomial n = cong_.normal_form(m);
    memo_.emplace(m, n);
    return n;
  }

  FormalSum operator()(const FormalSum& s) {
    FormalSum out;
    for (const auto& [m, c] : s.terms()) out.add((*this)(m), c);
    return out;
  }

  FormalSum times(const FormalSum& s, const Monomial& m) {
    FormalSum out;
    for (const auto& [t, c] : s.terms()) out.add((*this)(t * m), c);
    return out;
  }

 private:
  const Blueprint& b_;
  Congruence cong_;
  bool identity_;
  std::optional<GroebnerBasis> ring_;
  std::map<Monomial, Monomial> memo_;
};

kernels::EvalSum eval_sum(const FormalSum& s) {
  kernels::EvalSum out;
  for (const auto& [m, c] : s.terms()) out.push_back({m.exponents(), c});
  return out;
}

kernels::SeparationProblem separation_problem(const Blueprint& b, const FormalSum& s,
                                              const FormalSum& t) {
  kernels::SeparationProblem pb;
  pb.arity = b.arity();
  pb.inverted = b.monoid.inverted;
  for (const auto& r : b.monoid.relations) {
    pb.constraints.push_back({eval_sum(FormalSum(r.lhs)), eval_sum(FormalSum(r.rhs))});
  }
  for (const auto& r : b.relations) pb.constraints.push_back({eval_sum(r.lhs), eval_sum(r.rhs)});
  pb.target = {eval_sum(s), eval_sum(t)};
  return pb;
}

std::string describe_assignment(const Blueprint& b, const std::vector<long>& v,
                                const char* carrier) {
  std::string out = "separating homomorphism to ";
  out += carrier;
  if (!v.empty()) out += ":";
  for (std::size_t i = 0; i < v.size(); ++i) {
    out += " " + b.monoid.generators[i] + "=" + std::to_string(v[i]);
  }
  return out;
}

enum class RefutationStage { Cheap, Expensive };

std::optional<std::string> refute(const Blueprint& b, const FormalSum& s, const FormalSum& t,
                                  RefutationStage stage) {
  const std::size_t n = b.arity();
  auto pb = separation_problem(b, s, t);
  if (stage == RefutationStage::Cheap) {
    if (n <= 20) {
      if (auto v = kernels::separating_assignment_parallel(pb, kernels::Carrier::Booleans, {0, 1})) {
        return describe_assignment(b, *v, "B");
      }
    }
    if (n <= 6) {
      if (auto v = kernels::separating_assignment_parallel(
              pb, kernels::Carrier::NonNegativeRationals, {0, 1, 2, 3})) {
        return describe_assignment(b, *v, "Q>=0");
      }
    }
    return std::nullopt;
  }
  if (n > 6 && n <= 10) {
    if (auto v = kernels::separating_assignment_parallel(
            pb, kernels::Carrier::NonNegativeRationals, {0, 1, 2, 3})) {
      return describe_assignment(b, *v, "Q>=0");
    }
  }
  return std::nullopt;
}

// A multiplier x / l, if it is a monomial of the presentation.
std::optional<Monomial> quotient(const MonoidPresentation& p, const Monomial& x,
                                 const Monomial& l) {
  Monomial q = x * l.inverse();
  for (std::size_t i = 0; i < q.arity(); ++i) {
    if (q.exponents()[i] < 0 && !p.is_inverted(i)) return std::nullopt;
  }
  return q;
}

class Derivation {
 public:
  Derivation(const Blueprint& b, Normalizer& norm, const SearchBudget& budget,
             const FormalSum& s, const FormalSum& t)
      : b_(b), norm_(norm), budget_(budget) {
    for (const auto& r : b.relations) rels_.push_back({norm(r.lhs), norm(r.rhs)});
    for (const auto* side : {&s, &t}) {
      for (const auto& [m, c] : side->terms()) goal_terms_.insert(m);
    }
  }

  // Length of a derivation s -> t, or nullopt with `reason` set.
  std::optional<int> run(const FormalSum& s, const FormalSum& t) {
    Side fwd{{{s, 0}}, {s}, 0};
    Side bwd{{{t, 0}}, {t}, 0};
    for (;;) {
      if (fwd.level + bwd.level >= budget_.max_steps) {
        reason = "chain length budget " + std::to_string(budget_.max_steps) + " exhausted";
        return std::nullopt;
      }
      if (fwd.frontier.empty() && bwd.frontier.empty()) {
        reason = capped_ ? "search space exhausted under term/degree caps (" +
                               std::to_string(budget_.max_terms) + " terms, degree " +
                               std::to_string(budget_.max_degree) + ")"
                         : "derivation space exhausted without connecting the sums";
        return std::nullopt;
      }
      bool forward = !fwd.frontier.empty() &&
                     (bwd.frontier.empty() || fwd.frontier.size() <= bwd.frontier.size());
      Side& me = forward ? fwd : bwd;
      Side& other = forward ? bwd : fwd;
      std::vector<FormalSum> next;
      for (const auto& state : me.frontier) {
        for (auto& succ : successors(state)) {
          if (auto hit = other.depth.find(succ); hit != other.depth.end()) {
            return me.level + 1 + hit->second;
          }
          if (me.depth.emplace(succ, me.level + 1).second) next.push_back(std::move(succ));
          if (fwd.depth.size() + bwd.depth.size() > budget_.max_states) {
            reason = "state budget " + std::to_string(budget_.max_states) + " exhausted";
            return std::nullopt;
          }
        }
      }
      me.frontier = std::move(next);
      ++me.level;
    }
  }

  std::string reason;

 private:
  struct Side {
    std::map<FormalSum, int> depth;
    std::vector<FormalSum> frontier;
    int level;
  };

  std::vector<FormalSum> successors(const FormalSum& state) {
    std::vector<FormalSum> out;
    for (const auto& rel : rels_) {
      for (int dir = 0; dir < 2; ++dir) {
        const FormalSum& from = dir ? rel.rhs : rel.lhs;
        const FormalSum& to = dir ? rel.lhs : rel.rhs;
        std::set<Monomial> multipliers{b_.monoid.one()};
        if (!from.empty()) {
          for (const auto& [x, cx] : state.terms()) {
            for (const auto& [l, cl] : from.terms()) {
              if (auto q = quotient(b_.monoid, x, l)) multipliers.insert(*q);
            }
          }
        } else {
          std::set<Monomial> sources = goal_terms_;
          for (const auto& [x, cx] : state.terms()) sources.insert(x);
          for (const auto& x : sources) {
            for (const auto& [l, cl] : to.terms()) {
              if (auto q = quotient(b_.monoid, x, l)) multipliers.insert(*q);
            }
          }
        }
        for (const auto& m : multipliers) {
          FormalSum mf = norm_.times(from, m);
          if (!state.contains(mf)) continue;
          FormalSum nxt = state.minus(mf) + norm_.times(to, m);
          if (nxt == state) continue;
          if (nxt.size() > budget_.max_terms || nxt.max_degree() > budget_.max_degree) {
            capped_ = true;
            continue;
          }
          out.push_back(std::move(nxt));
        }
      }
    }
    return out;
  }

  const Blueprint& b_;
  Normalizer& norm_;
  const SearchBudget& budget_;
  std::vector<AdditiveRelation> rels_;
  std::set<Monomial> goal_terms_;
  bool capped_ = false;
};

ThreeValued sum_equal_with(const Blueprint& b, Normalizer& norm, const FormalSum& s,
                           const FormalSum& t, const SearchBudget& budget) {
  FormalSum s0 = norm(s);
  FormalSum t0 = norm(t);
  if (s0 == t0) return {Verdict::Yes, "equal after monoid normalisation"};
  if (auto w = refute(b, s0, t0, RefutationStage::Cheap)) return {Verdict::No, *w};
  if (norm.separated_over_q(s0, t0)) {
    return {Verdict::No, "separated by the base extension to Q"};
  }
  Derivation d(b, norm, budget, s0, t0);
  if (auto len = d.run(s0, t0)) {
    return {Verdict::Yes, "derivation of length " + std::to_string(*len)};
  }
  if (auto w = refute(b, s0, t0, RefutationStage::Expensive)) return {Verdict::No, *w};
  return {Verdict::Unknown, d.reason};
}

FormalSum image_of_sum(const Blueprint& target, const GeneratorImages& images,
                       const FormalSum& s) {
  FormalSum out;
  for (const auto& [m, c] : s.terms()) {
    FormalSum im = image_of(target, images, m);
    for (unsigned long k = 0; k < c; ++k) out += im;
  }
  return out;
}

}  // namespace

ThreeValued sum_equal(const Blueprint& b, const FormalSum& s, const FormalSum& t,
                      const SearchBudget& budget) {
  b.validate();
  Normalizer norm(b);
  return sum_equal_with(b, norm, s, t, budget);
}

std::vector<PrimeIdeal> prime_k_ideals(const Blueprint& b) {
  b.validate();
  const Congruence cong(b.monoid);
  std::vector<PrimeIdeal> out;
  for (auto& p : enumerate_primes(b.monoid)) {
    GroebnerBasis basis = cong.ideal_basis(ideal_of(b.monoid, p));
    auto survivors = [&](const FormalSum& s) {
      FormalSum kept;
      for (const auto& [m, c] : s.terms()) {
        if (!ideal_member_poly(cong.encode(m), basis)) kept.add(m, c);
      }
      return kept;
    };
    bool k_ideal = true;
    for (const auto& r : b.relations) {
      FormalSum l = survivors(r.lhs);
      FormalSum rr = survivors(r.rhs);
      // x = 0 modulo p forces x into any kernel containing p.
      if ((l.empty() && rr.as_monomial()) || (rr.empty() && l.as_monomial())) {
        k_ideal = false;
        break;
      }
    }
    if (k_ideal) out.push_back(std::move(p));
  }
  return out;
}

Blueprint tensor(const Blueprint& b1, const Blueprint& b2) {
  b1.validate();
  b2.validate();
  const std::size_t n1 = b1.arity();
  const std::size_t n = n1 + b2.arity();
  MonoidPresentation m;
  for (const auto& g : b1.monoid.generators) m.generators.push_back(g + "'");
  for (const auto& g : b2.monoid.generators) m.generators.push_back(g + "''");
  m.inverted.assign(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    m.inverted[i] = i < n1 ? b1.monoid.is_inverted(i) : b2.monoid.is_inverted(i - n1);
  }
  std::set<std::string> names(m.generators.begin(), m.generators.end());
  if (names.size() != n) throw Error("tensor: generator names collide after renaming");

  auto shift = [&](const Monomial& x, std::size_t offset) {
    if (x.is_zero()) return x;
    Exponents e(n, 0);
    for (std::size_t i = 0; i < x.arity(); ++i) e[offset + i] = x.exponents()[i];
    return Monomial(std::move(e));
  };
  auto shift_sum = [&](const FormalSum& s, std::size_t offset) {
    FormalSum out;
    for (const auto& [x, c] : s.terms()) out.add(shift(x, offset), c);
    return out;
  };
  Blueprint out(b1.name + "_x_" + b2.name, m);
  for (const auto& [part, offset] : {std::pair{&b1, std::size_t{0}}, std::pair{&b2, n1}}) {
    for (const auto& r : part->monoid.relations) {
      out.monoid.add_relation(shift(r.lhs, offset), shift(r.rhs, offset));
    }
    for (const auto& r : part->relations) {
      out.relations.push_back({shift_sum(r.lhs, offset), shift_sum(r.rhs, offset)});
    }
  }
  return out;
}

FormalSum image_of(const Blueprint& target, const GeneratorImages& images, const Monomial& m) {
  if (m.is_zero()) return {};
  if (images.size() != m.arity()) throw DomainError("image_of: wrong number of images");
  FormalSum acc(target.monoid.one());
  for (std::size_t i = 0; i < m.arity(); ++i) {
    int e = m.exponents()[i];
    if (e == 0) continue;
    FormalSum base = images[i];
    if (e < 0) {
      auto mono = base.as_monomial();
      if (!mono) throw DomainError("image_of: inverse of a non-monomial image");
      for (std::size_t k = 0; k < mono->arity(); ++k) {
        if (mono->exponents()[k] != 0 && !target.monoid.is_inverted(k)) {
          throw DomainError("image_of: image of an inverted generator is not inverted");
        }
      }
      base = FormalSum(mono->inverse());
      e = -e;
    }
    for (int k = 0; k < e; ++k) acc = acc.times(base);
  }
  return acc;
}

ThreeValued check_morphism(const Blueprint& b1, const Blueprint& b2,
                           const GeneratorImages& images, const SearchBudget& budget,
                           bool strict) {
  b1.validate();
  b2.validate();
  if (images.size() != b1.arity()) throw DomainError("check_morphism: every generator needs an image");
  for (const auto& im : images) {
    for (const auto& [m, c] : im.terms()) b2.monoid.validate(m);
  }
  Normalizer norm(b2);
  for (std::size_t i = 0; i < images.size(); ++i) {
    const auto mono = images[i].as_monomial();
    if (strict && !mono && !images[i].empty()) {
      return {Verdict::No, "image of " + b1.monoid.generators[i] + " is not a monomial"};
    }
    if (b1.monoid.is_inverted(i)) {
      if (!mono || !norm.congruence().in_ideal(b2.monoid.one(), {*mono})) {
        return {Verdict::No, "image of inverted generator " + b1.monoid.generators[i] +
                                 " is not a unit"};
      }
    }
  }
  ThreeValued result{Verdict::Yes, "all relations preserved"};
  auto check = [&](const FormalSum& l, const FormalSum& r, const std::string& label) {
    ThreeValued v = sum_equal_with(b2, norm, l, r, budget);
    if (v.no()) {
      result = {Verdict::No, "relation " + label + " fails: " + v.detail};
      return false;
    }
    if (v.unknown() && result.yes()) {
      result = {Verdict::Unknown, "relation " + label + " undecided: " + v.detail};
    }
    return true;
  };
  for (const auto& r : b1.monoid.relations) {
    std::string label = b1.monoid.to_text(r.lhs) + " = " + b1.monoid.to_text(r.rhs);
    FormalSum l = image_of(b2, images, r.lhs);
    FormalSum rr = image_of(b2, images, r.rhs);
    if (!check(l, rr, label)) return result;
  }
  for (const auto& r : b1.relations) {
    std::string label = b1.to_text(r.lhs) + " = " + b1.to_text(r.rhs);
    if (!check(image_of_sum(b2, images, r.lhs), image_of_sum(b2, images, r.rhs), label)) {
      return result;
    }
  }
  return result;
}

namespace {


std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

GroebnerBasis PresentedAlgebra::ideal(const TermOrder& order) const {
  if (ring == BaseRing::N) throw DomainError("no polynomial ideal for a semiring presentation");
  return buchberger(variables, relations, order);
}

std::string PresentedAlgebra::to_string() const {
  std::string out = ring == BaseRing::N ? "N" : ring == BaseRing::Z ? "Z" : "Q";
  if (ring == BaseRing::N) {
    const Blueprint& b = *semiring;
    std::vector<std::string> gens;
    for (std::size_t i = 0; i < b.arity(); ++i) {
      gens.push_back(b.monoid.generators[i] + (b.monoid.is_inverted(i) ? "^±1" : ""));
    }
    if (!gens.empty()) out += "[" + join(gens, ",") + "]";
    std::vector<std::string> rels;
    for (const auto& r : b.monoid.relations) {
      rels.push_back(b.monoid.to_text(r.lhs) + " = " + b.monoid.to_text(r.rhs));
    }
    for (const auto& r : b.relations) rels.push_back(b.to_text(r.lhs) + " = " + b.to_text(r.rhs));
    if (!rels.empty()) out += " / <" + join(rels, ", ") + ">";
    return out;
  }
  if (!variables.empty()) out += "[" + join(variables, ",") + "]";
  std::vector<std::string> rels;
  for (const auto& r : relations) rels.push_back(r.to_string());
  if (!rels.empty()) out += " / (" + join(rels, ", ") + ")";
  return out;
}

PresentedAlgebra base_extend(const Blueprint& b, BaseRing ring) {
  b.validate();
  PresentedAlgebra out;
  out.ring = ring;
  if (ring == BaseRing::N) {
    out.variables = b.monoid.generators;
    out.semiring = b;
    return out;
  }
  Encoder enc(b.monoid);
  out.variables = enc.vars;
  auto push = [&](MultiPolynomial p) {
    if (!p.is_zero() && std::find(out.relations.begin(), out.relations.end(), p) ==
                            out.relations.end()) {
      out.relations.push_back(std::move(p));
    }
  };
  for (const auto& r : b.monoid.relations) push(enc(r.lhs) - enc(r.rhs));
  for (const auto& r : b.relations) push(enc(r.lhs) - enc(r.rhs));
  for (std::size_t i = 0; i < b.arity(); ++i) {
    if (!b.monoid.is_inverted(i)) continue;
    Exponents e(enc.vars.size(), 0);
    e[i] = 1;
    e[enc.aux[i]] = 1;
    push(MultiPolynomial::monomial(enc.vars, e) - MultiPolynomial::constant(enc.vars, 1));
  }
  return out;
}


ThreeValued is_cancellative(const Blueprint& b, int degree_bound) {
  b.validate();
  int rel_degree = 0;
  for (const auto& r : b.monoid.relations) {
    rel_degree = std::max({rel_degree, r.lhs.degree(), r.rhs.degree()});
  }
  for (const auto& r : b.relations) {
    rel_degree = std::max({rel_degree, r.lhs.max_degree(), r.rhs.max_degree()});
  }
  if (degree_bound < rel_degree) {
    throw DomainError("is_cancellative: degree bound below the relation degree " +
                      std::to_string(rel_degree));
  }
  const Congruence cong(b.monoid);
  const std::vector<Monomial> words = monomials_up_to(b.monoid, degree_bound);
  std::set<Monomial> classes;
  for (const auto& w : words) {
    Monomial n = cong.normal_form(w);
    if (!n.is_zero()) classes.insert(n);
  }
  PresentedAlgebra alg = base_extend(b, BaseRing::Q);
  GroebnerBasis gb = alg.ideal();
  Encoder enc(b.monoid);
  std::map<MultiPolynomial::TermMap, Monomial> seen;
  const std::string label = "up to degree " + std::to_string(degree_bound);
  for (const auto& u : classes) {
    MultiPolynomial nf = normal_form(enc(u), gb);
    if (nf.is_zero()) {
      return {Verdict::No, "witness (" + b.monoid.to_text(u) + ", 0): " + b.monoid.to_text(u) +
                               " is not 0 but vanishes after base extension"};
    }
    auto [it, inserted] = seen.emplace(nf.terms(), u);
    if (!inserted) {
      return {Verdict::No, "witness (" + b.monoid.to_text(it->second) + ", " +
                               b.monoid.to_text(u) + "): distinct classes identified"};
    }
  }
  return {Verdict::Yes, label};
}

Blueprint cyclotomic_extension(int n) {
  if (n < 2) throw DomainError("cyclotomic_extension: n must be at least 2");
  MonoidPresentation m({"zeta"});
  m.add_relation(m.gen(0, n), m.one());
  Blueprint b("F1^" + std::to_string(n), m);
  QPolynomial phi = cyclotomic_polynomial(static_cast<unsigned>(n));
  FormalSum pos;
  FormalSum neg;
  for (const auto& [k, c] : phi.terms()) {
    unsigned long mult = Integer(abs(c.get_num())).get_ui();
    Monomial term = m.gen(0, static_cast<int>(k));
    if (c > 0) {
      pos.add(term, mult);
    } else {
      neg.add(term, mult);
    }
  }
  b.relations.push_back({pos, neg});
  return b;
}

Blueprint monoid_blueprint(std::string name, MonoidPresentation m) {
  return Blueprint(std::move(name), std::move(m));
}

}  // namespace f1
