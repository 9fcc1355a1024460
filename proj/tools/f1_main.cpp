// f1: command line front end.
//
// Exit codes: 0 success, 1 mathematical rejection, 2 undecided within budget,
// 3 input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "f1/dsl.hpp"
#include "f1/kernels.hpp"
#include "f1/places.hpp"
#include "f1/qincidence.hpp"
#include "f1/scheme.hpp"
#include "f1/tits_weyl.hpp"
#include "f1/tropical.hpp"

namespace {

using namespace f1;
using Json = nlohmann::ordered_json;

enum Exit { kOk = 0, kRejected = 1, kUnknown = 2, kInputError = 3 };

class InputError : public Error {
 public:
  using Error::Error;
};

struct Globals {
  SearchBudget budget;
  std::string format;
  unsigned seed = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Definition load(const std::string& path, const std::string& name, bool want_curve) {
  DslDocument doc;
  try {
    doc = parse_document(read_file(path));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
  for (const auto& d : doc.definitions) {
    bool is_curve = d.kind == DefinitionKind::Curve;
    if ((name.empty() || d.name == name) && is_curve == want_curve) return d;
  }
  throw InputError(path + ": no " + (want_curve ? "curve" : "monoid or blueprint") +
                   " definition" + (name.empty() ? "" : " named " + name));
}

GluedScheme parse_scheme(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw InputError("--scheme expects KIND:N, e.g. projective:2");
  const std::string kind = spec.substr(0, colon);
  int n = 0;
  try {
    n = std::stoi(spec.substr(colon + 1));
  } catch (const std::exception&) {
    throw InputError("--scheme: bad dimension in " + spec);
  }
  if (n < 0 || n > 6) throw InputError("--scheme: dimension must be between 0 and 6");
  if (kind == "affine") return standard_scheme(StandardKind::Affine, n);
  if (kind == "torus") return standard_scheme(StandardKind::Torus, n);
  if (kind == "projective") return standard_scheme(StandardKind::Projective, n);
  throw InputError("--scheme: unknown kind " + kind + " (affine, torus, projective)");
}

int verdict_exit(const ThreeValued& v) {
  if (v.yes()) return kOk;
  return v.no() ? kRejected : kUnknown;
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw InputError("unsupported --format " + format);
}

// --- spec / render -----------------------------------------------------------

struct SpecArgs {
  std::string file, name, scheme;
};

SpecPoset points_of(const SpecArgs& a) {
  if (!a.scheme.empty()) {
    if (!a.file.empty()) throw InputError("give either a file or --scheme, not both");
    return scheme_points(parse_scheme(a.scheme));
  }
  if (a.file.empty()) throw InputError("no input: give a file or --scheme");
  return spec(load(a.file, a.name, false).blueprint());
}

int run_spec(const SpecArgs& a, const Globals& g, const std::string& default_format) {
  const std::string format = g.format.empty() ? default_format : g.format;
  check_format(format, {"text", "json", "dot"});
  SpecPoset p = points_of(a);
  if (format == "json") {
    std::cout << render(p, RenderFormat::Json);
  } else if (format == "dot") {
    std::cout << render(p, RenderFormat::Dot);
  } else {
    std::cout << p.object << ": " << p.size() << " points\n";
    for (const auto& pt : p.points) std::cout << pt.id << "\n";
    std::cout << "hasse:\n";
    for (const auto& [lo, hi] : p.hasse) {
      std::cout << p.points[lo].id << " < " << p.points[hi].id << "\n";
    }
  }
  return kOk;
}

// --- rank ---------------------------------------------------------------------

struct RankArgs {
  std::string file, name;
  bool hypothesis = false;
  int degree = 0;
};

int run_rank(const RankArgs& a, const Globals& g) {
  const std::string format = g.format.empty() ? "text" : g.format;
  check_format(format, {"text", "json"});
  Blueprint b = load(a.file, a.name, false).blueprint();
  RankSpace s;
  HypothesisReport h;
  if (a.hypothesis) {
    h = check_hypothesis_H(b, a.degree);
    s = h.space;
  } else {
    s = rank_space(b);
  }
  if (format == "json") {
    Json j;
    j["object"] = b.name;
    j["points"] = Json::array();
    for (const auto& p : s.points) j["points"].push_back({{"id", p.id}, {"rank", p.rank}});
    j["rank"] = s.rank;
    j["components"] = Json::array();
    for (const auto& c : s.components) {
      j["components"].push_back({{"id", c.id}, {"type", c.type.to_string()}, {"detail", c.detail}});
    }
    if (a.hypothesis) {
      j["connected"] = to_string(h.connected.verdict);
      j["cancellative"] = to_string(h.cancellative.verdict);
      j["tori"] = h.tori;
      j["holds"] = h.holds();
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "point\trank\n";
    for (const auto& p : s.points) std::cout << p.id << "\t" << p.rank << "\n";
    std::cout << "rank space: " << s.rank << "\n";
    for (const auto& c : s.components) std::cout << c.id << "\t" << c.type.to_string() << "\n";
    if (a.hypothesis) {
      std::cout << "connected: " << to_string(h.connected.verdict) << " (" << h.connected.detail << ")\n"
                << "cancellative: " << to_string(h.cancellative.verdict) << " ("
                << h.cancellative.detail << ")\n"
                << "tori: " << (h.tori ? "YES" : "NO") << "\n"
                << "hypothesis H: " << (h.holds() ? "holds" : "fails") << "\n";
    }
  }
  if (!a.hypothesis || h.holds()) return kOk;
  if (h.connected.unknown() || h.cancellative.unknown()) return kUnknown;
  return kRejected;
}

// --- weyl ---------------------------------------------------------------------

struct WeylArgs {
  std::string file, name;
  int matrix = -1;
};

int run_weyl(const WeylArgs& a, const Globals& g) {
  const std::string format = g.format.empty() ? "json" : g.format;
  check_format(format, {"text", "json"});
  Blueprint b = load(a.file, a.name, false).blueprint();
  std::size_t n = a.matrix >= 0 ? static_cast<std::size_t>(a.matrix)
                                : static_cast<std::size_t>(std::sqrt(static_cast<double>(b.arity())));
  while (n * n > b.arity()) --n;
  Comultiplication delta = matrix_comultiplication(b, n);
  GeneratorImages counit = matrix_counit(b, n);
  ThreeValued dm = check_morphism(b, delta.target, delta.images, g.budget, false);
  ThreeValued cm = check_morphism(b, Blueprint("F1", MonoidPresentation::free({})), counit, g.budget, false);
  if (!dm.yes() || !cm.yes()) {
    std::cout << "comultiplication: " << to_string(dm.verdict) << " (" << dm.detail << ")\n"
              << "counit: " << to_string(cm.verdict) << " (" << cm.detail << ")\n";
    return dm.no() || cm.no() ? kRejected : kUnknown;
  }
  WeylGroup w = weyl_group(b, delta, counit, g.budget);
  if (format == "json") {
    std::cout << w.to_json();
  } else {
    std::cout << "group: " << w.name << "\nidentity: " << w.space.components[w.identity].id << "\n";
    for (std::size_t p = 0; p < w.table.size(); ++p) {
      for (std::size_t q = 0; q < w.table.size(); ++q) {
        std::cout << w.space.components[p].id << " * " << w.space.components[q].id << " = "
                  << w.space.components[w.table[p][q]].id << "\n";
      }
    }
    std::cout << "compatible: " << (w.compatible ? "YES" : "NO") << "\n";
  }
  return w.compatible ? kOk : kRejected;
}

// --- basechange -----------------------------------------------------------------

struct BaseChangeArgs {
  std::string file, name, scheme, ring = "Z";
  bool dimension = false;
};

int run_basechange(const BaseChangeArgs& a) {
  BaseRing ring = a.ring == "N" ? BaseRing::N : a.ring == "Q" ? BaseRing::Q : BaseRing::Z;
  if (a.ring != "N" && a.ring != "Z" && a.ring != "Q") throw InputError("--ring must be N, Z or Q");
  if (!a.scheme.empty()) {
    std::cout << base_extend_scheme(parse_scheme(a.scheme), ring).to_string();
    return kOk;
  }
  if (a.file.empty()) throw InputError("no input: give a file or --scheme");
  Blueprint b = load(a.file, a.name, false).blueprint();
  std::cout << base_extend(b, ring).to_string() << "\n";
  if (a.dimension) {
    std::cout << "dimension over Q: " << krull_dimension(base_extend(b, BaseRing::Q).ideal()) << "\n";
  }
  return kOk;
}

// --- qcount -----------------------------------------------------------------------

struct QCountArgs {
  int gl = 0;
  std::vector<int> gauss_nk, grass_nk;
  int geometry = 0, table = 0;
  long q = 0;
  bool limit = false, brute = false, list = false;
};

std::string value_or_poly(const QPolynomial& f, long q) {
  return q > 0 ? to_string(f.evaluate(q)) : f.to_string();
}

int run_qcount(const QCountArgs& a) {
  int modes = (a.gl > 0) + !a.gauss_nk.empty() + !a.grass_nk.empty() + (a.geometry > 0) + (a.table > 0);
  if (modes != 1) {
    throw InputError("qcount needs exactly one of --gl, --gauss, --grassmannian, --geometry, --table");
  }
  if (a.q != 0 && a.q < 2) throw InputError("--q must be at least 2");
  if (a.gl > 0) {
    QPolynomial f = count_gl(a.gl);
    if (a.limit) {
      std::cout << limit_q1(RationalFunction(f), a.gl) << "\n";
      return kOk;
    }
    std::cout << value_or_poly(f, a.q) << "\n";
    if (a.brute) {
      if (!is_prime(a.q)) throw InputError("--brute needs a prime --q");
      unsigned long long n = kernels::count_invertible_parallel(a.gl, static_cast<int>(a.q));
      std::cout << "brute force: " << n << "\n";
      return Rational(static_cast<unsigned long>(n)) == f.evaluate(a.q) ? kOk : kRejected;
    }
    return kOk;
  }
  if (!a.gauss_nk.empty()) {
    QPolynomial f = gauss(a.gauss_nk[0], a.gauss_nk[1]);
    if (a.limit) {
      std::cout << limit_q1(RationalFunction(f), 0) << "\n";
    } else {
      std::cout << value_or_poly(f, a.q) << "\n";
    }
    return kOk;
  }
  if (!a.grass_nk.empty()) {
    if (!is_prime(a.q)) throw InputError("--grassmannian needs a prime --q");
    auto spaces = grassmannian(a.grass_nk[0], a.grass_nk[1], static_cast<int>(a.q));
    std::cout << spaces.size() << "\n";
    if (a.list) {
      for (const auto& s : spaces) std::cout << s.id() << "\n";
    }
    return kOk;
  }
  if (a.geometry > 0) {
    if (a.q == 0) {
      std::cout << limit_geometry(a.geometry).to_dot("Sigma(" + std::to_string(a.geometry) + ")");
    } else {
      if (!is_prime(a.q)) throw InputError("--geometry needs a prime --q");
      std::cout << incidence_geometry(a.geometry, static_cast<int>(a.q))
                       .to_dot("F_" + std::to_string(a.q) + "^" + std::to_string(a.geometry));
    }
    return kOk;
  }
  std::cout << "n\tk\tgauss" << (a.q > 0 ? "\tat_q" : "") << "\tat_1\n";
  for (int k = 0; k <= a.table; ++k) {
    QPolynomial f = gauss(a.table, k);
    std::cout << a.table << "\t" << k << "\t" << f.to_string();
    if (a.q > 0) std::cout << "\t" << to_string(f.evaluate(a.q));
    std::cout << "\t" << limit_q1(RationalFunction(f), 0) << "\n";
  }
  return kOk;
}

// --- zeta ---------------------------------------------------------------------------

int run_zeta(long q, int terms) {
  if (q < 2) throw InputError("--q must be at least 2");
  if (terms < 0 || terms > 30) throw InputError("--terms must be between 0 and 30");
  RationalFunction z = zeta_function_field(q);
  std::cout << "Z(T) = " << z.to_string("T") << "\n";
  std::vector<Integer> counts{0};
  const bool enumerate = is_prime(q) && terms <= 8;
  for (int d = 1; d <= terms; ++d) {
    counts.push_back(enumerate ? place_count_enumerated(q, d) : place_count(q, d));
  }
  auto series = z.series(static_cast<unsigned>(terms + 1));
  auto euler = euler_product(counts, terms);
  bool match = true;
  std::cout << "n\tplaces\tcoefficient\teuler\n";
  for (int n = 0; n <= terms; ++n) {
    std::cout << n << "\t" << (n ? counts[n].get_str() : "-") << "\t" << to_string(series[n]) << "\t"
              << euler[n] << "\n";
    match = match && series[n] == Rational(euler[n]);
  }
  return match ? kOk : kRejected;
}

// --- balance ------------------------------------------------------------------------

int run_balance(const std::string& file, const std::string& name, const Globals& g) {
  const std::string format = g.format.empty() ? "text" : g.format;
  check_format(format, {"text", "json"});
  TropicalCurve c = load(file, name, true).curve;
  BalancingReport r = check_balancing(c);
  auto vec = [](const IntegerVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
    return s + ")";
  };
  if (format == "json") {
    Json j;
    j["curve"] = c.name;
    j["balanced"] = r.balanced;
    j["violations"] = Json::array();
    for (const auto& v : r.violations) j["violations"].push_back({{"vertex", v.vertex}, {"defect", vec(v.defect)}});
    std::cout << j.dump(2) << "\n";
  } else if (r.balanced) {
    std::cout << c.name << ": balanced\n";
  } else {
    std::cout << c.name << ": unbalanced\nvertex\tdefect\n";
    for (const auto& v : r.violations) std::cout << v.vertex << "\t" << vec(v.defect) << "\n";
  }
  return r.balanced ? kOk : kRejected;
}

// --- selftest -----------------------------------------------------------------------

int run_selftest(const Globals& g) {
  int failures = 0;
  auto check = [&](const std::string& name, const std::function<bool()>& f) {
    bool ok = false;
    try {
      ok = f();
    } catch (const std::exception& e) {
      std::cout << "error: " << e.what() << "\n";
    }
    std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
    failures += !ok;
  };
  Blueprint sl2("SL2", MonoidPresentation::free({"T1", "T2", "T3", "T4"}));
  sl2.add_relation("T1*T4", "T2*T3 + 1");
  check("spec(SL2) has 7 points", [&] { return spec(sl2).size() == 7; });
  check("P^2 has 7 points", [&] {
    return scheme_points(standard_scheme(StandardKind::Projective, 2)).size() == 7;
  });
  check("#GL(3,F_2) = 168 by formula and enumeration", [&] {
    return count_gl(3).evaluate(2) == 168 && kernels::count_invertible_parallel(3, 2) == 168;
  });
  check("Fano plane", [&] { return incidence_geometry(3, 2).incidences.size() == 21; });
  check("plane curve balanced", [&] { return check_balancing(example_plane_curve()).balanced; });
  check("Weyl group of SL2 is Z/2", [&] {
    return weyl_group(sl2, matrix_comultiplication(sl2, 2), matrix_counit(sl2, 2), g.budget).name == "Z/2";
  });
  check("tropical distributivity on random triples", [&] {
    std::mt19937 rng(g.seed);
    std::uniform_int_distribution<long> d(0, 50);
    for (int i = 0; i < 1000; ++i) {
      auto v = [&] { return SemiringValue::make(Carrier::T, d(rng)); };
      SemiringValue a = v(), b = v(), c = v();
      if (a * (b + c) != a * b + a * c) return false;
    }
    return true;
  });
  return failures ? kRejected : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computations with monoids, blueprints and schemes over F1."};
  app.name("f1");
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--budget-steps", g.budget.max_steps, "Derivation chain length")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget-terms", g.budget.max_terms, "Terms per intermediate sum")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget-degree", g.budget.max_degree, "Degree of intermediate terms")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "text, json or dot, depending on the command");
  app.add_option("--seed", g.seed, "Seed for randomized checks");

  std::function<int()> action;

  SpecArgs spec_args;
  auto* spec_cmd = app.add_subcommand("spec", "Points and specialization order");
  spec_cmd->add_option("file", spec_args.file, ".f1 file");
  spec_cmd->add_option("--name", spec_args.name, "Definition to use (default: the first)");
  spec_cmd->add_option("--scheme", spec_args.scheme, "affine:N, torus:N or projective:N");
  spec_cmd->callback([&] { action = [&] { return run_spec(spec_args, g, "text"); }; });

  SpecArgs render_args;
  auto* render_cmd = app.add_subcommand("render", "Hasse diagram as DOT or JSON");
  render_cmd->add_option("file", render_args.file, ".f1 file");
  render_cmd->add_option("--name", render_args.name, "Definition to use");
  render_cmd->add_option("--scheme", render_args.scheme, "affine:N, torus:N or projective:N");
  render_cmd->callback([&] { action = [&] { return run_spec(render_args, g, "dot"); }; });

  RankArgs rank_args;
  auto* rank_cmd = app.add_subcommand("rank", "Ranks of points and the rank space");
  rank_cmd->add_option("file", rank_args.file, ".f1 file")->required();
  rank_cmd->add_option("--name", rank_args.name, "Definition to use");
  rank_cmd->add_flag("--hypothesis", rank_args.hypothesis, "Check connectedness, cancellativity and tori");
  rank_cmd->add_option("--degree", rank_args.degree, "Degree bound for the cancellativity check");
  rank_cmd->callback([&] { action = [&] { return run_rank(rank_args, g); }; });

  WeylArgs weyl_args;
  auto* weyl_cmd = app.add_subcommand("weyl", "Weyl group from the matrix comultiplication");
  weyl_cmd->add_option("file", weyl_args.file, ".f1 file")->required();
  weyl_cmd->add_option("--name", weyl_args.name, "Definition to use");
  weyl_cmd->add_option("--matrix", weyl_args.matrix,
                       "Matrix size n: the first n*n generators are entries, the rest group-like "
                       "(default: largest n with n*n <= #generators)");
  weyl_cmd->callback([&] { action = [&] { return run_weyl(weyl_args, g); }; });

  BaseChangeArgs bc_args;
  auto* bc_cmd = app.add_subcommand("basechange", "Base extension to N, Z or Q");
  bc_cmd->add_option("file", bc_args.file, ".f1 file");
  bc_cmd->add_option("--name", bc_args.name, "Definition to use");
  bc_cmd->add_option("--scheme", bc_args.scheme, "affine:N, torus:N or projective:N");
  bc_cmd->add_option("--ring", bc_args.ring, "N, Z or Q");
  bc_cmd->add_flag("--dimension", bc_args.dimension, "Also print the Krull dimension over Q");
  bc_cmd->callback([&] { action = [&] { return run_basechange(bc_args); }; });

  QCountArgs qc;
  auto* qc_cmd = app.add_subcommand("qcount", "Counts over F_q and their limits at q = 1");
  qc_cmd->add_option("--gl", qc.gl, "#GL(n, F_q)")->check(CLI::Range(1, 12));
  qc_cmd->add_option("--gauss", qc.gauss_nk, "Gauss binomial n k")->expected(2);
  qc_cmd->add_option("--grassmannian", qc.grass_nk, "Enumerate Gr(k, F_q^n): n k")->expected(2);
  qc_cmd->add_option("--geometry", qc.geometry, "Incidence geometry of F_q^n as DOT (limit if no --q)")
      ->check(CLI::Range(1, 7));
  qc_cmd->add_option("--table", qc.table, "Gauss binomials of n as TSV")->check(CLI::Range(0, 20));
  qc_cmd->add_option("--q", qc.q, "Evaluate at q");
  qc_cmd->add_flag("--limit", qc.limit, "Value at q = 1 after dividing by the torus");
  qc_cmd->add_flag("--brute", qc.brute, "Also count by enumeration");
  qc_cmd->add_flag("--list", qc.list, "List subspace ids");
  qc_cmd->callback([&] { action = [&] { return run_qcount(qc); }; });

  long zeta_q = 0;
  int zeta_terms = 6;
  auto* zeta_cmd = app.add_subcommand("zeta", "Zeta function of F_q(T) against its Euler product");
  zeta_cmd->add_option("--q", zeta_q, "Field size")->required();
  zeta_cmd->add_option("--terms", zeta_terms, "Highest power of T compared");
  zeta_cmd->callback([&] { action = [&] { return run_zeta(zeta_q, zeta_terms); }; });

  std::string balance_file, balance_name;
  auto* balance_cmd = app.add_subcommand("balance", "Balancing condition of a tropical curve");
  balance_cmd->add_option("file", balance_file, ".f1 file with a curve")->required();
  balance_cmd->add_option("--name", balance_name, "Curve to use");
  balance_cmd->callback([&] { action = [&] { return run_balance(balance_file, balance_name, g); }; });

  auto* self_cmd = app.add_subcommand("selftest", "Quick consistency checks");
  self_cmd->callback([&] { action = [&] { return run_selftest(g); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  try {
    return action();
  } catch (const InputError& e) {
    std::cerr << "f1: " << e.what() << "\n";
    return kInputError;
  } catch (const ParseError& e) {
    std::cerr << "f1: " << e.what() << "\n";
    return kInputError;
  } catch (const BudgetExceeded& e) {
    std::cerr << "f1: undecided: " << e.what() << "\n";
    return kUnknown;
  } catch (const DomainError& e) {
    std::cerr << "f1: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "f1: rejected: " << e.what() << "\n";
    return kRejected;
  }
}
