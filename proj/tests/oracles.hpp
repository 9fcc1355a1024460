#pragma once

// Independent reference implementations used only by the tests.

#include <deque>
#include <optional>
#include <set>
#include <vector>

#include "f1/monoid.hpp"

namespace f1::oracle {

// Breadth-first congruence closure on nonnegative exponent vectors. Applies
// every relation in both directions. Returns nullopt when the search hits
// `max_degree` or `max_states` before the class of u is exhausted.
inline std::optional<bool> congruent(const MonoidPresentation& a, const Monomial& u,
                                     const Monomial& v, int max_degree = 12,
                                     std::size_t max_states = 20000) {
  auto reaches_zero = [&](const Exponents& s) {
    for (const auto& r : a.relations) {
      for (const Monomial* side : {&r.lhs, &r.rhs}) {
        const Monomial& other = side == &r.lhs ? r.rhs : r.lhs;
        if (side->is_zero() || !other.is_zero()) continue;
        bool ge = true;
        for (std::size_t i = 0; i < s.size(); ++i) ge = ge && s[i] >= side->exponents()[i];
        if (ge) return true;
      }
    }
    return false;
  };
  if (u.is_zero()) return v.is_zero() ? std::optional<bool>(true) : std::nullopt;
  std::set<Exponents> seen{u.exponents()};
  std::deque<Exponents> queue{u.exponents()};
  bool truncated = false;
  bool zero_class = false;
  while (!queue.empty()) {
    Exponents s = queue.front();
    queue.pop_front();
    if (!v.is_zero() && s == v.exponents()) return true;
    if (reaches_zero(s)) zero_class = true;
    for (const auto& r : a.relations) {
      if (r.lhs.is_zero() || r.rhs.is_zero()) continue;
      for (int dir = 0; dir < 2; ++dir) {
        const Exponents& from = (dir ? r.rhs : r.lhs).exponents();
        const Exponents& to = (dir ? r.lhs : r.rhs).exponents();
        bool ge = true;
        for (std::size_t i = 0; i < s.size(); ++i) ge = ge && s[i] >= from[i];
        if (!ge) continue;
        Exponents t(s);
        int deg = 0;
        for (std::size_t i = 0; i < t.size(); ++i) {
          t[i] += to[i] - from[i];
          deg += t[i];
        }
        if (deg > max_degree || seen.size() >= max_states) {
          truncated = true;
          continue;
        }
        if (seen.insert(t).second) queue.push_back(t);
      }
    }
  }
  if (v.is_zero()) {
    if (zero_class) return true;
    return truncated ? std::nullopt : std::optional<bool>(false);
  }
  if (zero_class) return std::nullopt;  // both may be zero; not decided here
  return truncated ? std::nullopt : std::optional<bool>(false);
}

}  // namespace f1::oracle
