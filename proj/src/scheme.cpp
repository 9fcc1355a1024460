#include "f1/scheme.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace f1 {

namespace {

std::vector<std::string> names_of(const MonoidPresentation& m, const PrimeIdeal& p) {
  std::vector<std::string> out;
  for (std::size_t i : p.generators) out.push_back(m.generators[i]);
  return out;
}

// Monoid localized at the generators outside the prime.
MonoidPresentation localization_at(const MonoidPresentation& m, const PrimeIdeal& p) {
  const Congruence cong(m);
  const MonoidIdeal ideal = ideal_of(m, p);
  std::vector<Monomial> s;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (!cong.in_ideal(m.gen(i), ideal)) s.push_back(m.gen(i));
  }
  return localize(m, s).presentation;
}

// Inclusion order of primes within one presentation.
std::vector<std::vector<bool>> inclusion(const MonoidPresentation& m,
                                         const std::vector<PrimeIdeal>& primes) {
  const Congruence cong(m);
  const std::size_t n = primes.size();
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t j = 0; j < n; ++j) {
    const MonoidIdeal ideal = ideal_of(m, primes[j]);
    for (std::size_t i = 0; i < n; ++i) {
      le[i][j] = std::all_of(primes[i].generators.begin(), primes[i].generators.end(),
                             [&](std::size_t g) { return cong.in_ideal(m.gen(g), ideal); });
    }
  }
  return le;
}

void close_transitively(std::vector<std::vector<bool>>& le) {
  const std::size_t n = le.size();
  for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!le[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (le[k][j]) le[i][j] = true;
      }
    }
  }
}

std::vector<std::pair<std::size_t, std::size_t>> hasse_of(const std::vector<std::vector<bool>>& le) {
  const std::size_t n = le.size();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !le[i][j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k) {
        if (k != i && k != j && le[i][k] && le[k][j]) cover = false;
      }
      if (cover) out.emplace_back(i, j);
    }
  }
  return out;
}

// Sorts points by id and finishes the order data.
SpecPoset assemble(std::string object, std::vector<SpecPoint> points,
                   std::vector<std::vector<bool>> le) {
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && le[i][j] && le[j][i]) throw Error("specialization order is not antisymmetric");
    }
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t x, std::size_t y) { return points[x].id < points[y].id; });
  SpecPoset out;
  out.object = std::move(object);
  out.order.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    out.points.push_back(points[perm[i]]);
    for (std::size_t j = 0; j < n; ++j) out.order[i][j] = le[perm[i]][perm[j]];
  }
  out.hasse = hasse_of(out.order);
  std::sort(out.hasse.begin(), out.hasse.end(), [&](const auto& x, const auto& y) {
    return std::tie(out.points[x.first].id, out.points[x.second].id) <
           std::tie(out.points[y.first].id, out.points[y.second].id);
  });
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent_[std::max(x, y)] = std::min(x, y);
  }

 private:
  std::vector<std::size_t> parent_;
};

FormalSum single(const Monomial& m) { return FormalSum(m); }

}  // namespace

std::optional<std::size_t> SpecPoset::find(const std::string& id) const {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].id == id) return i;
  }
  return std::nullopt;
}

std::string point_id(const MonoidPresentation& m, const PrimeIdeal& p) {
  std::string id = "p_";
  for (std::size_t k = 0; k < p.generators.size(); ++k) {
    if (k) id += "_";
    id += m.generators[p.generators[k]];
  }
  return id;
}

SpecPoset spec(const Blueprint& b) {
  const auto primes = prime_k_ideals(b);
  std::vector<SpecPoint> points;
  for (const auto& p : primes) {
    points.push_back({point_id(b.monoid, p), names_of(b.monoid, p), 0, p,
                      localization_at(b.monoid, p)});
  }
  auto le = inclusion(b.monoid, primes);
  close_transitively(le);
  return assemble(b.name, std::move(points), std::move(le));
}

std::vector<std::size_t> principal_open(const Blueprint& b, const SpecPoset& poset,
                                        const Monomial& h) {
  const Congruence cong(b.monoid);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < poset.size(); ++i) {
    if (!cong.in_ideal(h, ideal_of(b.monoid, poset.points[i].prime))) out.push_back(i);
  }
  return out;
}

Blueprint localize_chart(const Blueprint& chart, const Monomial& open) {
  Localization loc = localize(chart.monoid, {open});
  Blueprint out(chart.name, loc.presentation);
  if (loc.trivial) return out;
  for (const auto& r : chart.relations) {
    FormalSum l;
    FormalSum rr;
    for (const auto& [m, c] : r.lhs.terms()) l.add(m.padded(out.arity()), c);
    for (const auto& [m, c] : r.rhs.terms()) rr.add(m.padded(out.arity()), c);
    out.relations.push_back({l, rr});
  }
  return out;
}

GluedScheme affine_scheme(const Blueprint& b) {
  GluedScheme x;
  x.name = b.name;
  x.charts.push_back(b);
  return x;
}

GluedScheme standard_scheme(StandardKind kind, int n) {
  if (n < 0) throw DomainError("standard_scheme: negative dimension");
  auto numbered = [](int count, int first) {
    std::vector<std::string> gens;
    for (int i = 0; i < count; ++i) gens.push_back("T" + std::to_string(first + i));
    return gens;
  };
  if (kind == StandardKind::Affine) {
    std::vector<std::string> gens = n == 1 ? std::vector<std::string>{"T"} : numbered(n, 1);
    return affine_scheme(Blueprint("A" + std::to_string(n), MonoidPresentation::free(gens)));
  }
  if (kind == StandardKind::Torus) {
    std::vector<std::string> gens = n == 1 ? std::vector<std::string>{"T"} : numbered(n, 1);
    MonoidPresentation m(gens);
    for (int i = 0; i < n; ++i) m.set_inverted(static_cast<std::size_t>(i));
    return affine_scheme(Blueprint(n == 1 ? "Gm" : "Gm" + std::to_string(n), m));
  }

  GluedScheme x;
  x.name = "P" + std::to_string(n);
  x.projective_dimension = n;
  // Chart i has generators T{j}_{i} = T_j / T_i for j != i; on the line the
  // two charts are F1[T0] and F1[T1] with T0*T1 = 1 on the overlap.
  std::vector<std::vector<std::size_t>> position(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    std::vector<std::string> gens;
    std::vector<std::size_t> coords;
    position[i].assign(static_cast<std::size_t>(n) + 1, 0);
    for (int j = 0; j <= n; ++j) {
      if (j == i) continue;
      position[i][j] = gens.size();
      gens.push_back(n == 1 ? "T" + std::to_string(i)
                            : "T" + std::to_string(j) + "_" + std::to_string(i));
      coords.push_back(static_cast<std::size_t>(j));
    }
    x.charts.emplace_back("U" + std::to_string(i), MonoidPresentation::free(gens));
    x.coordinates.push_back(coords);
  }
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Gluing g;
      g.a = static_cast<std::size_t>(i);
      g.b = static_cast<std::size_t>(j);
      const Blueprint& ca = x.charts[g.a];
      const Blueprint& cb = x.charts[g.b];
      g.open_a = ca.monoid.gen(position[i][j]);
      g.open_b = cb.monoid.gen(position[j][i]);
      // T_k/T_i = (T_k/T_j) * (T_i/T_j)^-1, and symmetrically.
      auto images = [&](int from, int to) {
        const Blueprint& target = x.charts[static_cast<std::size_t>(to)];
        Monomial pivot_inv = target.monoid.gen(position[to][from], -1);
        GeneratorImages out;
        for (int k = 0; k <= n; ++k) {
          if (k == from) continue;
          Monomial im = k == to ? pivot_inv : target.monoid.gen(position[to][k]) * pivot_inv;
          out.push_back(single(im));
        }
        return out;
      };
      g.a_to_b = images(i, j);
      g.b_to_a = images(j, i);
      x.gluings.push_back(std::move(g));
    }
  }
  return x;
}

ThreeValued verify_gluing(const GluedScheme& x, std::size_t index, const SearchBudget& budget) {
  const Gluing& g = x.gluings.at(index);
  const Blueprint la = localize_chart(x.charts.at(g.a), g.open_a);
  const Blueprint lb = localize_chart(x.charts.at(g.b), g.open_b);
  const std::string pair = "charts " + std::to_string(g.a) + " and " + std::to_string(g.b);
  ThreeValued ab = check_morphism(la, lb, g.a_to_b, budget);
  if (!ab.yes()) return {ab.verdict, pair + ": " + ab.detail};
  ThreeValued ba = check_morphism(lb, la, g.b_to_a, budget);
  if (!ba.yes()) return {ba.verdict, pair + ": " + ba.detail};
  const Congruence ca(la.monoid);
  for (std::size_t i = 0; i < la.arity(); ++i) {
    auto there = g.a_to_b[i].as_monomial();
    if (!there) return {Verdict::Unknown, pair + ": non-monomial gluing image"};
    auto back = image_of(la, g.b_to_a, *there).as_monomial();
    if (!back || !ca.equal(*back, la.monoid.gen(i))) {
      return {Verdict::No, pair + ": gluing maps do not compose to the identity on " +
                               la.monoid.generators[i]};
    }
  }
  const Congruence cb(lb.monoid);
  for (std::size_t i = 0; i < lb.arity(); ++i) {
    auto there = g.b_to_a[i].as_monomial();
    if (!there) return {Verdict::Unknown, pair + ": non-monomial gluing image"};
    auto back = image_of(lb, g.a_to_b, *there).as_monomial();
    if (!back || !cb.equal(*back, lb.monoid.gen(i))) {
      return {Verdict::No, pair + ": gluing maps do not compose to the identity on " +
                               lb.monoid.generators[i]};
    }
  }
  return {Verdict::Yes, pair + " glue"};
}

SpecPoset scheme_points(const GluedScheme& x) {
  if (x.charts.size() == 1 && x.gluings.empty()) {
    SpecPoset p = spec(x.charts[0]);
    p.object = x.name;
    return p;
  }
  const std::size_t nc = x.charts.size();
  std::vector<std::vector<PrimeIdeal>> primes(nc);
  std::vector<std::size_t> offset(nc + 1, 0);
  for (std::size_t c = 0; c < nc; ++c) {
    primes[c] = prime_k_ideals(x.charts[c]);
    offset[c + 1] = offset[c] + primes[c].size();
  }
  UnionFind uf(offset[nc]);

  for (std::size_t gi = 0; gi < x.gluings.size(); ++gi) {
    const Gluing& g = x.gluings[gi];
    ThreeValued ok = verify_gluing(x, gi);
    if (!ok.yes()) throw Error("inconsistent gluing: " + ok.detail);
    const Blueprint& ca = x.charts[g.a];
    const Blueprint& cb = x.charts[g.b];
    const Blueprint la = localize_chart(ca, g.open_a);
    const Congruence cong_a(ca.monoid);
    const Congruence cong_la(la.monoid);
    const Congruence cong_b(cb.monoid);
    for (std::size_t pi = 0; pi < primes[g.a].size(); ++pi) {
      const PrimeIdeal& p = primes[g.a][pi];
      if (cong_a.in_ideal(g.open_a, ideal_of(ca.monoid, p))) continue;
      MonoidIdeal local;
      for (std::size_t i : p.generators) local.push_back(la.monoid.gen(i));
      PrimeIdeal q;
      for (std::size_t h = 0; h < cb.arity(); ++h) {
        auto im = g.b_to_a[h].as_monomial();
        if (!im) throw Error("inconsistent gluing: non-monomial image");
        if (cong_la.in_ideal(*im, local)) q.generators.push_back(h);
      }
      const MonoidIdeal target = ideal_of(cb.monoid, q);
      std::optional<std::size_t> match;
      for (std::size_t ri = 0; ri < primes[g.b].size() && !match; ++ri) {
        const MonoidIdeal other = ideal_of(cb.monoid, primes[g.b][ri]);
        bool same = std::all_of(target.begin(), target.end(),
                                [&](const Monomial& m) { return cong_b.in_ideal(m, other); }) &&
                    std::all_of(other.begin(), other.end(),
                                [&](const Monomial& m) { return cong_b.in_ideal(m, target); });
        if (same) match = ri;
      }
      if (!match) {
        throw Error("inconsistent gluing between charts " + std::to_string(g.a) + " and " +
                    std::to_string(g.b) + ": transported prime has no partner");
      }
      uf.unite(offset[g.a] + pi, offset[g.b] + *match);
    }
  }

  std::map<std::size_t, std::size_t> global;  // root -> point index
  std::vector<SpecPoint> points;
  for (std::size_t c = 0; c < nc; ++c) {
    for (std::size_t pi = 0; pi < primes[c].size(); ++pi) {
      std::size_t root = uf.find(offset[c] + pi);
      if (global.count(root)) continue;
      global[root] = points.size();
      const Blueprint& chart = x.charts[c];
      const PrimeIdeal& p = primes[c][pi];
      SpecPoint pt;
      pt.chart = c;
      pt.prime = p;
      pt.localization = localization_at(chart.monoid, p);
      if (x.projective_dimension >= 0) {
        const Congruence cong(chart.monoid);
        const MonoidIdeal ideal = ideal_of(chart.monoid, p);
        std::vector<int> coord(static_cast<std::size_t>(x.projective_dimension) + 1, 1);
        for (std::size_t g = 0; g < chart.arity(); ++g) {
          if (cong.in_ideal(chart.monoid.gen(g), ideal)) coord[x.coordinates[c][g]] = 0;
        }
        pt.id = "[";
        for (std::size_t k = 0; k < coord.size(); ++k) {
          if (k) pt.id += ":";
          pt.id += std::to_string(coord[k]);
          if (coord[k] == 0) pt.generators.push_back("T" + std::to_string(k));
        }
        pt.id += "]";
      } else {
        pt.id = (nc > 1 ? "c" + std::to_string(c) + ":" : "") + point_id(chart.monoid, p);
        pt.generators = names_of(chart.monoid, p);
      }
      points.push_back(std::move(pt));
    }
  }
  std::vector<std::vector<bool>> le(points.size(), std::vector<bool>(points.size(), false));
  for (std::size_t c = 0; c < nc; ++c) {
    auto local = inclusion(x.charts[c].monoid, primes[c]);
    for (std::size_t i = 0; i < primes[c].size(); ++i) {
      for (std::size_t j = 0; j < primes[c].size(); ++j) {
        if (!local[i][j]) continue;
        le[global[uf.find(offset[c] + i)]][global[uf.find(offset[c] + j)]] = true;
      }
    }
  }
  close_transitively(le);
  return assemble(x.name, std::move(points), std::move(le));
}

std::string SchemeExtension::to_string() const {
  std::ostringstream out;
  for (std::size_t c = 0; c < charts.size(); ++c) {
    out << "chart " << c << ": " << charts[c].to_string() << "\n";
  }
  for (const auto& o : overlaps) {
    out << "overlap " << o.a << "-" << o.b << ": " << o.on_a.to_string() << " = "
        << o.on_b.to_string() << "\n";
  }
  return out.str();
}

SchemeExtension base_extend_scheme(const GluedScheme& x, BaseRing ring) {
  SchemeExtension out;
  for (const auto& c : x.charts) out.charts.push_back(base_extend(c, ring));
  for (const auto& g : x.gluings) {
    out.overlaps.push_back({g.a, g.b, base_extend(localize_chart(x.charts[g.a], g.open_a), ring),
                            base_extend(localize_chart(x.charts[g.b], g.open_b), ring)});
  }
  return out;
}

std::string render(const SpecPoset& poset, RenderFormat format) {
  if (format == RenderFormat::Json) {
    nlohmann::ordered_json j;
    j["object"] = poset.object;
    j["points"] = nlohmann::ordered_json::array();
    for (const auto& p : poset.points) {
      nlohmann::ordered_json pt;
      pt["id"] = p.id;
      pt["generators"] = p.generators;
      j["points"].push_back(pt);
    }
    j["hasse"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : poset.hasse) {
      j["hasse"].push_back({poset.points[a].id, poset.points[b].id});
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "digraph \"" << poset.object << "\" {\n  rankdir=BT;\n";
  for (const auto& p : poset.points) out << "  \"" << p.id << "\";\n";
  for (const auto& [a, b] : poset.hasse) {
    out << "  \"" << poset.points[a].id << "\" -> \"" << poset.points[b].id << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace f1
