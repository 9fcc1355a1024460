#include "f1/monoid.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "f1/matrix.hpp"

namespace f1 {

namespace {
constexpr std::size_t kNone = static_cast<std::size_t>(-1);
}

Monomial Monomial::generator(std::size_t arity, std::size_t index, int power) {
  if (index >= arity) throw DomainError("generator index out of range");
  Exponents e(arity, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

bool Monomial::is_one() const {
  return !zero_ && std::all_of(exps_.begin(), exps_.end(), [](int v) { return v == 0; });
}

int Monomial::degree() const {
  if (zero_) return 0;
  int d = 0;
  for (int v : exps_) d += v < 0 ? -v : v;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (zero_ || o.zero_) return zero();
  if (exps_.size() != o.exps_.size()) throw DomainError("monomial arity mismatch");
  Exponents e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  if (zero_) return k == 0 ? Monomial::one(0) : zero();
  Exponents e(exps_);
  for (auto& v : e) v *= k;
  return Monomial(std::move(e));
}

Monomial Monomial::inverse() const {
  if (zero_) throw DomainError("Zero has no inverse");
  Exponents e(exps_);
  for (auto& v : e) v = -v;
  return Monomial(std::move(e));
}

Monomial Monomial::padded(std::size_t arity) const {
  if (zero_) return zero();
  if (arity < exps_.size()) throw DomainError("cannot shrink monomial arity");
  Exponents e(exps_);
  e.resize(arity, 0);
  return Monomial(std::move(e));
}

MonoidPresentation::MonoidPresentation(std::vector<std::string> gens)
    : generators(std::move(gens)), inverted(generators.size(), false) {}

MonoidPresentation MonoidPresentation::free(std::vector<std::string> gens) {
  return MonoidPresentation(std::move(gens));
}

std::optional<std::size_t> MonoidPresentation::index_of(const std::string& name) const {
  auto it = std::find(generators.begin(), generators.end(), name);
  if (it == generators.end()) return std::nullopt;
  return static_cast<std::size_t>(it - generators.begin());
}

void MonoidPresentation::set_inverted(std::size_t i) {
  if (i >= arity()) throw DomainError("generator index out of range");
  inverted.resize(arity(), false);
  inverted[i] = true;
}

void MonoidPresentation::add_relation(Monomial lhs, Monomial rhs) {
  validate(lhs);
  validate(rhs);
  relations.push_back({std::move(lhs), std::move(rhs)});
}

void MonoidPresentation::validate(const Monomial& m) const {
  if (m.is_zero()) return;
  if (m.arity() != arity()) throw DomainError("monomial arity does not match presentation");
  for (std::size_t i = 0; i < arity(); ++i) {
    if (m.exponents()[i] < 0 && !is_inverted(i)) {
      throw DomainError("negative exponent on non-inverted generator " + generators[i]);
    }
  }
}

void MonoidPresentation::validate() const {
  std::set<std::string> seen;
  for (const auto& g : generators) {
    if (!seen.insert(g).second) throw DomainError("duplicate generator " + g);
  }
  if (inverted.size() > arity()) throw DomainError("inversion flags exceed generators");
  for (const auto& r : relations) {
    validate(r.lhs);
    validate(r.rhs);
  }
}

Monomial MonoidPresentation::parse_monomial(const std::string& text) const {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s == "0") return Monomial::zero();
  Monomial m = one();
  if (s == "1") return m;
  std::stringstream ss(s);
  std::string factor;
  while (std::getline(ss, factor, '*')) {
    std::string name = factor;
    int power = 1;
    if (auto caret = factor.find('^'); caret != std::string::npos) {
      name = factor.substr(0, caret);
      try {
        power = std::stoi(factor.substr(caret + 1));
      } catch (const std::exception&) {
        throw DomainError("bad exponent in " + factor);
      }
    }
    if (name == "1") continue;
    auto idx = index_of(name);
    if (!idx) throw DomainError("unknown generator " + name);
    m = m * gen(*idx, power);
  }
  validate(m);
  return m;
}

std::string MonoidPresentation::to_text(const Monomial& m) const {
  if (m.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    int e = m.exponents()[i];
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += generators[i];
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

Congruence::Congruence(MonoidPresentation presentation) : pres_(std::move(presentation)) {
  pres_.inverted.resize(pres_.arity(), false);
  pres_.validate();
  vars_ = pres_.generators;
  aux_of_.assign(pres_.arity(), kNone);
  for (std::size_t i = 0; i < pres_.arity(); ++i) {
    if (pres_.is_inverted(i)) {
      aux_of_[i] = vars_.size();
      vars_.push_back(pres_.generators[i] + "_inv");
    }
  }
  std::vector<MultiPolynomial> gens;
  for (const auto& r : pres_.relations) {
    if (r.lhs.is_zero() && r.rhs.is_zero()) continue;
    if (r.lhs.is_zero()) {
      gens.push_back(encode(r.rhs));
    } else if (r.rhs.is_zero()) {
      gens.push_back(encode(r.lhs));
    } else {
      gens.push_back(encode(r.lhs) - encode(r.rhs));
    }
  }
  for (std::size_t i = 0; i < pres_.arity(); ++i) {
    if (aux_of_[i] == kNone) continue;
    Exponents e(vars_.size(), 0);
    e[i] = 1;
    e[aux_of_[i]] = 1;
    gens.push_back(MultiPolynomial::monomial(vars_, e) - MultiPolynomial::constant(vars_, 1));
  }
  basis_ = buchberger(vars_, gens);
}

MultiPolynomial Congruence::encode(const Monomial& m) const {
  if (m.is_zero()) return MultiPolynomial(vars_);
  pres_.validate(m);
  Exponents e(vars_.size(), 0);
  for (std::size_t i = 0; i < m.arity(); ++i) {
    int v = m.exponents()[i];
    if (v >= 0) {
      e[i] = v;
    } else {
      e[aux_of_[i]] = -v;
    }
  }
  return MultiPolynomial::monomial(vars_, e);
}

Monomial Congruence::decode(const Exponents& e) const {
  Exponents out(pres_.arity(), 0);
  for (std::size_t i = 0; i < pres_.arity(); ++i) {
    out[i] = e[i];
    if (aux_of_[i] != kNone) out[i] -= e[aux_of_[i]];
  }
  return Monomial(std::move(out));
}

Monomial Congruence::normal_form(const Monomial& m) const {
  if (m.is_zero()) return m;
  MultiPolynomial nf = f1::normal_form(encode(m), basis_);
  if (nf.is_zero()) return Monomial::zero();
  if (nf.terms().size() != 1 || nf.terms().begin()->second != 1) {
    throw Error("congruence normal form is not a monomial: " + nf.to_string());
  }
  return decode(nf.terms().begin()->first);
}

bool Congruence::equal(const Monomial& u, const Monomial& v) const {
  return normal_form(u) == normal_form(v);
}

GroebnerBasis Congruence::ideal_basis(const MonoidIdeal& ideal) const {
  std::vector<MultiPolynomial> gens = basis_.generators();
  for (const auto& m : ideal) gens.push_back(encode(m));
  return buchberger(vars_, gens);
}

bool Congruence::in_ideal(const Monomial& m, const MonoidIdeal& ideal) const {
  if (m.is_zero()) return true;
  if (ideal.empty()) return normal_form(m).is_zero();
  return ideal_member_poly(encode(m), ideal_basis(ideal));
}

bool word_equal(const MonoidPresentation& a, const Monomial& u, const Monomial& v) {
  return Congruence(a).equal(u, v);
}

bool ideal_member(const MonoidPresentation& a, const Monomial& m, const MonoidIdeal& ideal) {
  return Congruence(a).in_ideal(m, ideal);
}

MonoidIdeal ideal_of(const MonoidPresentation& a, const PrimeIdeal& p) {
  MonoidIdeal out;
  for (std::size_t i : p.generators) out.push_back(a.gen(i));
  return out;
}

std::vector<PrimeIdeal> enumerate_primes(const MonoidPresentation& a,
                                         const PrimeSearchOptions& options) {
  const Congruence cong(a);
  const std::size_t n = a.arity();
  if (n > 20) throw DomainError("enumerate_primes: too many generators");
  int rel_degree = 1;
  for (const auto& r : a.relations) {
    rel_degree = std::max({rel_degree, r.lhs.degree(), r.rhs.degree()});
  }
  const int bound = options.degree_bound > 0 ? options.degree_bound
                                             : static_cast<int>(2 * n) * rel_degree;

  struct Candidate {
    PrimeIdeal prime;
    GroebnerBasis basis;
  };
  std::vector<Candidate> found;
  std::vector<std::size_t> order(std::size_t{1} << n);
  for (std::size_t s = 0; s < order.size(); ++s) order[s] = s;
  // Smaller subsets first, then lexicographic in indices.
  auto indices = [&](std::size_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) out.push_back(i);
    }
    return out;
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    auto ix = indices(x);
    auto iy = indices(y);
    if (ix.size() != iy.size()) return ix.size() < iy.size();
    return ix < iy;
  });

  for (std::size_t mask : order) {
    PrimeIdeal p{indices(mask)};
    bool inverted_inside = std::any_of(p.generators.begin(), p.generators.end(),
                                       [&](std::size_t i) { return a.is_inverted(i); });
    if (inverted_inside) continue;
    GroebnerBasis basis = cong.ideal_basis(ideal_of(a, p));
    if (basis.is_unit_ideal()) continue;

    // The complement is generated by the generators outside the ideal.
    std::vector<std::size_t> outside;
    for (std::size_t i = 0; i < n; ++i) {
      if (!ideal_member_poly(cong.encode(a.gen(i)), basis)) outside.push_back(i);
    }

    // Every product of outside generators of degree <= bound divides
    // (prod outside)^bound, and the ideal is upward closed.
    Monomial power = a.one();
    for (std::size_t i : outside) power = power * a.gen(i, bound);
    bool bounded_prime = !ideal_member_poly(cong.encode(power), basis);

    // Exact: prod outside is nilpotent modulo the ideal iff 1 - y*prod
    // generates the unit ideal together with it.
    std::vector<std::string> vars = cong.variables();
    vars.push_back("y_");
    std::vector<MultiPolynomial> gens;
    for (const auto& g : basis.generators()) {
      MultiPolynomial lifted(vars);
      for (const auto& [e, c] : g.terms()) {
        Exponents le(e);
        le.push_back(0);
        lifted.add_term(le, c);
      }
      gens.push_back(lifted);
    }
    Exponents ye(vars.size(), 0);
    MultiPolynomial prod = cong.encode(a.one());
    for (std::size_t i : outside) prod = prod * cong.encode(a.gen(i));
    for (const auto& [e, c] : prod.terms()) {
      for (std::size_t k = 0; k < e.size(); ++k) ye[k] = e[k];
    }
    ye.back() = 1;
    gens.push_back(MultiPolynomial::constant(vars, 1) - MultiPolynomial::monomial(vars, ye));
    bool exact_prime = !buchberger(vars, gens).is_unit_ideal();

    if (bounded_prime != exact_prime) {
      std::string names;
      for (std::size_t i : p.generators) names += " " + a.generators[i];
      throw BudgetExceeded("prime search: multiplicative closure undecided within degree " +
                           std::to_string(bound) + " for subset {" + names + " }");
    }
    if (!exact_prime) continue;

    bool duplicate = false;
    for (const auto& f : found) {
      if (ideals_equal(f.basis, basis)) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) found.push_back({std::move(p), std::move(basis)});
  }

  std::vector<PrimeIdeal> out;
  for (auto& f : found) out.push_back(std::move(f.prime));
  return out;
}

Localization localize(const MonoidPresentation& a, const std::vector<Monomial>& s) {
  a.validate();
  Localization out;
  out.presentation = a;
  out.presentation.inverted.resize(a.arity(), false);
  MonoidPresentation& p = out.presentation;
  for (const auto& m : s) {
    if (m.is_zero()) {
      MonoidPresentation trivial;
      trivial.add_relation(trivial.one(), Monomial::zero());
      return {trivial, true};
    }
    a.validate(m);
  }
  int fresh = 0;
  for (const auto& raw : s) {
    Monomial m = raw.padded(p.arity());
    if (m.is_one()) continue;
    std::size_t single = kNone;
    int support = 0;
    for (std::size_t i = 0; i < m.arity(); ++i) {
      if (m.exponents()[i] != 0) {
        ++support;
        single = i;
      }
    }
    if (support == 1 && m.exponents()[single] == 1) {
      p.set_inverted(single);
      continue;
    }
    std::string name;
    do {
      name = "u" + std::to_string(++fresh);
    } while (p.index_of(name));
    p.generators.push_back(name);
    p.inverted.push_back(false);
    for (auto& r : p.relations) {
      r.lhs = r.lhs.padded(p.arity());
      r.rhs = r.rhs.padded(p.arity());
    }
    Monomial mm = m.padded(p.arity());
    p.add_relation(mm * p.gen(p.arity() - 1), p.one());
  }
  return out;
}

UnitLattice unit_lattice(const MonoidPresentation& a) {
  const Congruence cong(a);
  UnitLattice out;
  std::vector<std::size_t> units;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (a.is_inverted(i) || cong.in_ideal(a.one(), {a.gen(i)})) units.push_back(i);
  }
  out.is_group_with_zero = units.size() == a.arity();
  if (cong.normal_form(a.one()).is_zero()) {
    // 1 = 0: the trivial monoid.
    out.is_group_with_zero = true;
    return out;
  }
  // Relations supported on units, as differences in Z^units.
  std::vector<std::vector<long>> rows;
  std::vector<bool> is_unit(a.arity(), false);
  for (std::size_t i : units) is_unit[i] = true;
  for (const auto& r : a.relations) {
    if (r.lhs.is_zero() || r.rhs.is_zero()) continue;
    bool supported = true;
    std::vector<long> row;
    for (std::size_t i = 0; i < a.arity(); ++i) {
      long d = r.lhs.exponents()[i] - r.rhs.exponents()[i];
      bool touches = r.lhs.exponents()[i] != 0 || r.rhs.exponents()[i] != 0;
      if (touches && !is_unit[i]) {
        supported = false;
        break;
      }
      if (is_unit[i]) row.push_back(d);
    }
    if (supported) rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    out.rank = units.size();
    return out;
  }
  SmithForm sf = smith_rank(IntegerMatrix::from_rows(rows));
  out.rank = units.size() - sf.rank;
  for (const auto& d : sf.invariant_factors) {
    if (d > 1) out.torsion.push_back(d);
  }
  return out;
}

namespace {

void enumerate_signed(const MonoidPresentation& p, std::size_t i, int budget, Exponents& cur,
                      std::vector<Monomial>& out) {
  if (i == p.arity()) {
    out.emplace_back(cur);
    return;
  }
  const int lo = p.is_inverted(i) ? -budget : 0;
  for (int e = lo; e <= budget; ++e) {
    cur[i] = e;
    enumerate_signed(p, i + 1, budget - (e < 0 ? -e : e), cur, out);
  }
  cur[i] = 0;
}

}  // namespace

std::vector<Monomial> monomials_up_to(const MonoidPresentation& a, int degree) {
  std::vector<Monomial> out;
  Exponents cur(a.arity(), 0);
  enumerate_signed(a, 0, degree, cur, out);
  return out;
}

}  // namespace f1
