#include "f1/tropical.hpp"

#include <algorithm>

#include "f1/lexer.hpp"

namespace f1 {

std::string to_string(Carrier c) {
  switch (c) {
    case Carrier::N:
      return "N";
    case Carrier::B:
      return "B";
    case Carrier::T:
      return "T";
    case Carrier::Rgeq0:
      return "Rgeq0";
  }
  return "";
}

Carrier parse_carrier(const std::string& name) {
  for (Carrier c : {Carrier::N, Carrier::B, Carrier::T, Carrier::Rgeq0}) {
    if (to_string(c) == name) return c;
  }
  throw DomainError("unknown carrier '" + name + "' (expected N, B, T or Rgeq0)");
}

SemiringValue SemiringValue::make(Carrier c, const Rational& v) {
  if (v < 0) throw DomainError("negative constant " + f1::to_string(v));
  if (c == Carrier::N && !is_integral(v)) {
    throw DomainError(f1::to_string(v) + " is not a natural number");
  }
  if (c == Carrier::B && v != 0 && v != 1) throw DomainError(f1::to_string(v) + " is not in B");
  return {c, v};
}

namespace {

void same_carrier(const SemiringValue& a, const SemiringValue& b) {
  if (a.carrier != b.carrier) throw DomainError("semiring values from different carriers");
}

}  // namespace

SemiringValue operator+(const SemiringValue& a, const SemiringValue& b) {
  same_carrier(a, b);
  switch (a.carrier) {
    case Carrier::B:
    case Carrier::T:
      return {a.carrier, std::max(a.value, b.value)};
    default:
      return {a.carrier, a.value + b.value};
  }
}

SemiringValue operator*(const SemiringValue& a, const SemiringValue& b) {
  same_carrier(a, b);
  return {a.carrier, a.value * b.value};
}

SemiringValue semiring_zero(Carrier c) { return {c, 0}; }
SemiringValue semiring_one(Carrier c) { return {c, 1}; }

namespace {

class ExprParser {
 public:
  ExprParser(const std::string& text, Carrier c) : lex_(text), carrier_(c) {}

  SemiringValue parse() {
    SemiringValue v = sum();
    if (!lex_.at_end()) lex_.fail("unexpected " + describe(lex_.peek()), lex_.peek());
    return v;
  }

 private:
  SemiringValue sum() {
    SemiringValue v = product();
    while (lex_.accept_symbol("+")) v = v + product();
    return v;
  }
  SemiringValue product() {
    SemiringValue v = atom();
    while (lex_.accept_symbol("*")) v = v * atom();
    return v;
  }
  SemiringValue atom() {
    if (lex_.accept_symbol("(")) {
      SemiringValue v = sum();
      lex_.expect_symbol(")");
      return v;
    }
    const Token at = lex_.peek();
    Rational r = lex_.rational(false);
    try {
      return SemiringValue::make(carrier_, r);
    } catch (const DomainError& e) {
      lex_.fail(e.what(), at);
    }
  }

  Lexer lex_;
  Carrier carrier_;
};

}  // namespace

SemiringValue semiring_eval(const std::string& expr, Carrier c) {
  return ExprParser(expr, c).parse();
}

GroupCompletion group_completion(Carrier c) {
  GroupCompletion out;
  out.carrier = c;
  // Small elements of the carrier used as witnesses and for the cancellation
  // check.
  std::vector<Rational> sample;
  if (c == Carrier::B) {
    sample = {0, 1};
  } else {
    for (long n = 0; n <= 6; ++n) sample.push_back(n);
    if (c != Carrier::N) {
      for (long n : {1, 3, 5}) sample.push_back(make_rational(n, 2));
    }
  }
  auto v = [&](const Rational& x) { return SemiringValue::make(c, x); };
  const SemiringValue zero = semiring_zero(c);
  const SemiringValue one = semiring_one(c);
  // (1, 0) ~ (0, 0) iff 1 + z = 0 + z for some z; then 1 = 0 in the ring.
  for (const auto& z : sample) {
    if (one + v(z) == zero + v(z)) {
      out.trivial = true;
      out.ring = "{0}";
      out.witness = "1 + " + to_string(z) + " = 0 + " + to_string(z);
      return out;
    }
  }
  // Idempotent addition always yields a witness: z = max(x, x', y, y').
  if (one + one == one) throw Error("group_completion: idempotent carrier without witness");
  for (const auto& a : sample) {
    for (const auto& b : sample) {
      for (const auto& z : sample) {
        if (v(a) + v(z) == v(b) + v(z) && a != b) {
          throw Error("group_completion: carrier is not cancellative");
        }
      }
    }
  }
  out.ring = c == Carrier::N ? "Z" : "R";
  out.witness = "cancellative on " + std::to_string(sample.size()) + " sample elements";
  return out;
}

IntegerVector primitive_vector(const RationalVector& direction) {
  Integer den = 1;
  for (const auto& x : direction) den = lcm(den, x.get_den());
  IntegerVector out;
  Integer g = 0;
  for (const auto& x : direction) {
    Rational scaled = x * den;
    out.push_back(scaled.get_num());
    g = gcd(g, scaled.get_num());
  }
  if (g == 0) throw DomainError("primitive_vector: zero direction");
  for (auto& x : out) x /= abs(g);
  return out;
}

IntegerVector primitive_vector(const RationalVector& from, const RationalVector& toward) {
  if (from.size() != toward.size()) throw DomainError("primitive_vector: dimension mismatch");
  RationalVector d;
  for (std::size_t i = 0; i < from.size(); ++i) d.push_back(toward[i] - from[i]);
  return primitive_vector(d);
}

std::size_t TropicalCurve::dimension() const {
  return vertices.empty() ? 0 : vertices.begin()->second.size();
}

void TropicalCurve::add_vertex(const std::string& id, RationalVector position) {
  if (vertices.count(id)) throw DomainError("duplicate vertex " + id);
  vertices[id] = std::move(position);
  vertex_order.push_back(id);
}

void TropicalCurve::add_edge(const std::string& a, const std::string& b, unsigned long weight) {
  edges.push_back({a, b, {}, weight});
}

void TropicalCurve::add_ray(const std::string& a, RationalVector direction, unsigned long weight) {
  edges.push_back({a, "", std::move(direction), weight});
}

void TropicalCurve::validate() const {
  const std::size_t n = dimension();
  for (const auto& [id, pos] : vertices) {
    if (pos.size() != n) throw DomainError("vertex " + id + " has the wrong dimension");
  }
  for (const auto& e : edges) {
    if (!vertices.count(e.from)) throw DomainError("unknown vertex " + e.from);
    if (e.weight == 0) throw DomainError("edge at " + e.from + " has weight 0");
    if (e.is_ray()) {
      if (e.direction.size() != n) throw DomainError("ray at " + e.from + " has the wrong dimension");
      if (std::all_of(e.direction.begin(), e.direction.end(), [](const Rational& x) { return x == 0; })) {
        throw DomainError("ray at " + e.from + " has zero direction");
      }
    } else {
      if (!vertices.count(e.to)) throw DomainError("unknown vertex " + e.to);
      if (vertices.at(e.from) == vertices.at(e.to)) {
        throw DomainError("edge " + e.from + " " + e.to + " has length zero");
      }
    }
  }
}

namespace {

std::string vector_text(const RationalVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v[i]);
  return out + ")";
}

RationalVector parse_vector(Lexer& lex) {
  lex.expect_symbol("(");
  RationalVector v;
  do {
    v.push_back(lex.rational(true));
  } while (lex.accept_symbol(","));
  lex.expect_symbol(")");
  return v;
}

unsigned long parse_weight(Lexer& lex) {
  if (!lex.peek().is_name("weight")) return 1;
  lex.next();
  const Token t = lex.expect_number("weight");
  Integer w(t.text);
  if (w == 0 || !w.fits_ulong_p()) lex.fail("weight must be a positive integer", t);
  return w.get_ui();
}

}  // namespace

std::string TropicalCurve::to_text() const {
  std::string out;
  for (const auto& id : vertex_order) out += "vertex " + id + " " + vector_text(vertices.at(id)) + "\n";
  for (const auto& e : edges) {
    if (e.is_ray()) {
      out += "ray " + e.from + " dir " + vector_text(e.direction);
    } else {
      out += "edge " + e.from + " " + e.to;
    }
    out += " weight " + std::to_string(e.weight) + "\n";
  }
  return out;
}

void parse_curve_statement(Lexer& lex, TropicalCurve& c) {
  const Token kw = lex.expect_name("statement");
  if (kw.text == "vertex") {
    const Token id = lex.expect_name("vertex name");
    if (c.vertices.count(id.text)) lex.fail("duplicate vertex " + id.text, id);
    const Token at = lex.peek();
    RationalVector pos = parse_vector(lex);
    if (!c.vertices.empty() && pos.size() != c.dimension()) lex.fail("dimension mismatch", at);
    c.add_vertex(id.text, std::move(pos));
  } else if (kw.text == "edge") {
    const Token a = lex.expect_name("vertex name");
    const Token b = lex.expect_name("vertex name");
    for (const Token& t : {a, b}) {
      if (!c.vertices.count(t.text)) lex.fail("unknown vertex " + t.text, t);
    }
    if (c.vertices.at(a.text) == c.vertices.at(b.text)) lex.fail("edge of length zero", b);
    c.add_edge(a.text, b.text, parse_weight(lex));
  } else if (kw.text == "ray") {
    const Token a = lex.expect_name("vertex name");
    if (!c.vertices.count(a.text)) lex.fail("unknown vertex " + a.text, a);
    lex.expect_symbol("dir");
    const Token at = lex.peek();
    RationalVector d = parse_vector(lex);
    if (std::all_of(d.begin(), d.end(), [](const Rational& x) { return x == 0; })) {
      lex.fail("zero direction", at);
    }
    if (d.size() != c.dimension()) lex.fail("dimension mismatch", at);
    c.add_ray(a.text, std::move(d), parse_weight(lex));
  } else {
    lex.fail("unknown statement '" + kw.text + "'", kw);
  }
}

TropicalCurve parse_curve(const std::string& text, const std::string& name) {
  Lexer lex(text, true);
  TropicalCurve c;
  c.name = name;
  while (true) {
    while (lex.peek().kind == Token::Kind::Newline || lex.peek().is(";")) lex.next();
    if (lex.at_end()) break;
    parse_curve_statement(lex, c);
    const Token& end = lex.peek();
    if (end.kind != Token::Kind::Newline && end.kind != Token::Kind::End && !end.is(";")) {
      lex.fail("unexpected " + describe(end), end);
    }
  }
  c.validate();
  return c;
}

BalancingReport check_balancing(const TropicalCurve& c) {
  c.validate();
  const std::size_t n = c.dimension();
  std::map<std::string, IntegerVector> sums;
  for (const auto& id : c.vertex_order) sums[id] = IntegerVector(n, 0);
  auto add = [&](const std::string& at, const IntegerVector& v, unsigned long w) {
    for (std::size_t i = 0; i < n; ++i) sums[at][i] += v[i] * w;
  };
  for (const auto& e : c.edges) {
    if (e.is_ray()) {
      add(e.from, primitive_vector(e.direction), e.weight);
    } else {
      const auto& a = c.vertices.at(e.from);
      const auto& b = c.vertices.at(e.to);
      add(e.from, primitive_vector(a, b), e.weight);
      add(e.to, primitive_vector(b, a), e.weight);
    }
  }
  BalancingReport rep;
  for (const auto& id : c.vertex_order) {
    const IntegerVector& s = sums[id];
    rep.sums.push_back({id, s});
    if (std::any_of(s.begin(), s.end(), [](const Integer& x) { return x != 0; })) {
      rep.balanced = false;
      rep.violations.push_back({id, s});
    }
  }
  return rep;
}

TropicalCurve example_plane_curve() {
  TropicalCurve c;
  c.name = "plane";
  c.add_vertex("A", {make_rational(1, 2), make_rational(9, 2)});
  c.add_vertex("B", {3, 2});
  c.add_vertex("C", {9, 2});
  c.add_ray("A", {-1, 0}, 1);
  c.add_ray("A", {0, 1}, 1);
  c.add_edge("A", "B", 1);
  c.add_ray("B", {-1, -1}, 1);
  c.add_edge("B", "C", 2);
  c.add_ray("C", {2, 3}, 1);
  c.add_ray("C", {0, -1}, 3);
  return c;
}

}  // namespace f1
