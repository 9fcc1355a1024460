#include "f1/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace f1 {

MultiPolynomial::MultiPolynomial(std::vector<std::string> variables)
    : vars_(std::move(variables)) {}

MultiPolynomial::MultiPolynomial(std::vector<std::string> variables, TermMap terms)
    : vars_(std::move(variables)) {
  for (auto& [e, c] : terms) add_term(e, c);
}

MultiPolynomial MultiPolynomial::constant(std::vector<std::string> variables,
                                          const Rational& c) {
  MultiPolynomial p(std::move(variables));
  p.add_term(Exponents(p.arity(), 0), c);
  return p;
}

MultiPolynomial MultiPolynomial::monomial(std::vector<std::string> variables, Exponents exps,
                                          const Rational& c) {
  MultiPolynomial p(std::move(variables));
  p.add_term(exps, c);
  return p;
}

int MultiPolynomial::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, std::accumulate(e.begin(), e.end(), 0));
  return best;
}

void MultiPolynomial::add_term(const Exponents& exps, const Rational& c) {
  if (exps.size() != vars_.size()) throw DomainError("exponent vector has wrong arity");
  if (std::any_of(exps.begin(), exps.end(), [](int v) { return v < 0; })) {
    throw DomainError("negative exponent in polynomial term");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPolynomial::check_compatible(const MultiPolynomial& o) const {
  if (vars_ != o.vars_) throw DomainError("polynomials over different variable sets");
}

MultiPolynomial MultiPolynomial::operator-() const {
  MultiPolynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPolynomial& MultiPolynomial::operator+=(const MultiPolynomial& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPolynomial& MultiPolynomial::operator-=(const MultiPolynomial& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPolynomial& MultiPolynomial::operator*=(const MultiPolynomial& o) {
  check_compatible(o);
  MultiPolynomial out(vars_);
  Exponents e(vars_.size());
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      out.add_term(e, c1 * c2);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

Rational MultiPolynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != vars_.size()) throw DomainError("evaluation point has wrong arity");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) t *= f1::pow(point[i], e[i]);
    acc += t;
  }
  return acc;
}

bool graded_lex_greater(const Exponents& a, const Exponents& b) {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return a > b;
}

std::string monomial_text(const std::vector<std::string>& variables, const Exponents& exps) {
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += variables[i];
    if (exps[i] != 1) out += "^" + std::to_string(exps[i]);
  }
  return out.empty() ? "1" : out;
}

std::string MultiPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> order;
  order.reserve(terms_.size());
  for (const auto& kv : terms_) order.push_back(&kv);
  std::sort(order.begin(), order.end(),
            [](auto* x, auto* y) { return graded_lex_greater(x->first, y->first); });
  std::ostringstream out;
  bool first = true;
  for (const auto* term : order) {
    const Rational& c = term->second;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool is_const = std::all_of(term->first.begin(), term->first.end(),
                                [](int v) { return v == 0; });
    if (is_const) {
      out << f1::to_string(mag);
    } else if (mag == 1) {
      out << monomial_text(vars_, term->first);
    } else {
      out << f1::to_string(mag) << "*" << monomial_text(vars_, term->first);
    }
  }
  return out.str();
}

}  // namespace f1
