#include "f1/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "f1/lexer.hpp"

namespace f1 {

namespace {

const char* keyword(DefinitionKind k) {
  switch (k) {
    case DefinitionKind::Monoid:
      return "monoid";
    case DefinitionKind::Blueprint:
      return "blueprint";
    case DefinitionKind::Curve:
      return "curve";
  }
  return "";
}

std::optional<Monomial> single(const FormalSum& s) {
  if (s.empty()) return Monomial::zero();
  return s.as_monomial();
}

class DocumentParser {
 public:
  explicit DocumentParser(const std::string& text) : lex_(text) {}

  DslDocument parse() {
    DslDocument doc;
    std::set<std::string> names;
    if (lex_.at_end()) lex_.fail("expected a definition", lex_.peek());
    while (!lex_.at_end()) {
      Definition d = definition();
      if (!names.insert(d.name).second) {
        throw ParseError("duplicate definition " + d.name, d.line, d.column);
      }
      doc.definitions.push_back(std::move(d));
    }
    return doc;
  }

 private:
  Definition definition() {
    const Token kw = lex_.expect_name("'monoid', 'blueprint' or 'curve'");
    Definition d;
    if (kw.text == "monoid") {
      d.kind = DefinitionKind::Monoid;
    } else if (kw.text == "blueprint") {
      d.kind = DefinitionKind::Blueprint;
    } else if (kw.text == "curve") {
      d.kind = DefinitionKind::Curve;
    } else {
      lex_.fail("expected 'monoid', 'blueprint' or 'curve' but found '" + kw.text + "'", kw);
    }
    const Token name = lex_.expect_name("definition name");
    d.name = name.text;
    d.line = name.line;
    d.column = name.column;
    lex_.expect_symbol("{");
    if (d.kind == DefinitionKind::Curve) {
      curve_body(d);
    } else {
      algebra_body(d);
    }
    lex_.expect_symbol("}");
    return d;
  }

  void curve_body(Definition& d) {
    d.curve.name = d.name;
    while (!lex_.peek().is("}")) {
      if (lex_.accept_symbol(";")) continue;
      parse_curve_statement(lex_, d.curve);
      if (!lex_.peek().is("}")) lex_.expect_symbol(";");
    }
  }

  void algebra_body(Definition& d) {
    lex_.expect_symbol("gens");
    lex_.expect_symbol(":");
    std::set<std::string> seen;
    if (!lex_.peek().is(";")) {
      do {
        const Token g = lex_.expect_name("generator");
        if (!seen.insert(g.text).second) lex_.fail("duplicate generator " + g.text, g);
        d.generators.push_back(g.text);
      } while (lex_.accept_symbol(","));
    }
    lex_.expect_symbol(";");
    if (lex_.peek().is_name("inv")) {
      lex_.next();
      lex_.expect_symbol(":");
      do {
        const Token g = lex_.expect_name("generator");
        if (!seen.count(g.text)) lex_.fail("unknown generator " + g.text, g);
        if (std::find(d.inverted.begin(), d.inverted.end(), g.text) == d.inverted.end()) {
          d.inverted.push_back(g.text);
        }
      } while (lex_.accept_symbol(","));
      lex_.expect_symbol(";");
    }
    const MonoidPresentation m = d.free_monoid();
    while (lex_.peek().is_name("rel")) {
      lex_.next();
      lex_.expect_symbol(":");
      const Token start = lex_.peek();
      AdditiveRelation r;
      r.lhs = sum(m);
      lex_.expect_symbol("=");
      r.rhs = sum(m);
      if (d.kind == DefinitionKind::Monoid && (!single(r.lhs) || !single(r.rhs))) {
        lex_.fail("monoid relations need a single monomial on each side", start);
      }
      lex_.expect_symbol(";");
      d.relations.push_back(std::move(r));
    }
  }

  FormalSum sum(const MonoidPresentation& m) {
    FormalSum s;
    if (lex_.peek().kind == Token::Kind::Number && lex_.peek().text == "0" &&
        !lex_.peek(1).is("*")) {
      lex_.next();
      return s;
    }
    do {
      unsigned long mult = 1;
      if (lex_.peek().kind == Token::Kind::Number) {
        const Token n = lex_.next();
        Integer c(n.text);
        if (c <= 0) lex_.fail("non-positive coefficient " + n.text, n);
        if (!c.fits_ulong_p()) lex_.fail("coefficient too large", n);
        mult = c.get_ui();
        if (!lex_.accept_symbol("*")) {
          s.add(m.one(), mult);
          continue;
        }
      }
      s.add(monomial(m), mult);
    } while (lex_.accept_symbol("+"));
    return s;
  }

  Monomial monomial(const MonoidPresentation& m) {
    if (lex_.peek().kind == Token::Kind::Number) {
      const Token one = lex_.next();
      if (one.text != "1") lex_.fail("expected a monomial but found " + one.text, one);
      return m.one();
    }
    Monomial out = m.one();
    do {
      const Token g = lex_.expect_name("generator");
      auto idx = m.index_of(g.text);
      if (!idx) lex_.fail("unknown generator " + g.text, g);
      int e = 1;
      if (lex_.accept_symbol("^")) {
        bool negative = lex_.accept_symbol("-");
        const Token n = lex_.expect_number("exponent");
        Integer v(n.text);
        if (!v.fits_sint_p() || v == 0) lex_.fail("bad exponent " + n.text, n);
        e = static_cast<int>(v.get_si()) * (negative ? -1 : 1);
        if (negative && !m.is_inverted(*idx)) {
          lex_.fail("negative exponent of " + g.text + ", which is not inverted", n);
        }
      }
      out = out * m.gen(*idx, e);
    } while (lex_.accept_symbol("*"));
    return out;
  }

  Lexer lex_;
};

}  // namespace

MonoidPresentation Definition::free_monoid() const {
  MonoidPresentation m(generators);
  for (const auto& g : inverted) m.set_inverted(*m.index_of(g));
  return m;
}

Blueprint Definition::blueprint() const {
  if (kind == DefinitionKind::Curve) throw DomainError(name + " is a curve, not a blueprint");
  Blueprint b(name, free_monoid());
  for (const auto& r : relations) {
    auto l = single(r.lhs);
    auto rr = single(r.rhs);
    if (l && rr) {
      if (*l != *rr) b.monoid.add_relation(*l, *rr);
    } else {
      b.relations.push_back(r);
    }
  }
  b.validate();
  return b;
}

bool Definition::same_as(const Definition& o) const {
  if (kind != o.kind || name != o.name) return false;
  if (kind == DefinitionKind::Curve) return curve.to_text() == o.curve.to_text();
  return generators == o.generators && inverted == o.inverted && relations == o.relations;
}

const Definition* DslDocument::find(const std::string& name) const {
  for (const auto& d : definitions) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

bool DslDocument::same_as(const DslDocument& o) const {
  if (definitions.size() != o.definitions.size()) return false;
  for (std::size_t i = 0; i < definitions.size(); ++i) {
    if (!definitions[i].same_as(o.definitions[i])) return false;
  }
  return true;
}

DslDocument parse_document(const std::string& text) { return DocumentParser(text).parse(); }

std::string print(const Definition& d) {
  std::string out = std::string(keyword(d.kind)) + " " + d.name + " {\n";
  if (d.kind == DefinitionKind::Curve) {
    std::string body = d.curve.to_text();
    std::size_t pos = 0;
    while (pos < body.size()) {
      std::size_t nl = body.find('\n', pos);
      out += "  " + body.substr(pos, nl - pos) + ";\n";
      pos = nl + 1;
    }
    return out + "}\n";
  }
  auto join = [](const std::vector<std::string>& xs) {
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : ", ") + x;
    return s;
  };
  out += "  gens: " + join(d.generators) + ";\n";
  if (!d.inverted.empty()) out += "  inv: " + join(d.inverted) + ";\n";
  const Blueprint printer(d.name, d.free_monoid());
  for (const auto& r : d.relations) {
    out += "  rel: " + printer.to_text(r.lhs) + " = " + printer.to_text(r.rhs) + ";\n";
  }
  return out + "}\n";
}

std::string print(const DslDocument& doc) {
  std::string out;
  for (std::size_t i = 0; i < doc.definitions.size(); ++i) {
    if (i) out += "\n";
    out += print(doc.definitions[i]);
  }
  return out;
}

Definition definition_of(const Blueprint& b) {
  Definition d;
  d.kind = b.relations.empty() ? DefinitionKind::Monoid : DefinitionKind::Blueprint;
  for (char c : b.name) d.name += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  if (d.name.empty() || std::isdigit(static_cast<unsigned char>(d.name[0]))) d.name = "B" + d.name;
  d.generators = b.monoid.generators;
  for (std::size_t i = 0; i < b.arity(); ++i) {
    if (b.monoid.is_inverted(i)) d.inverted.push_back(b.monoid.generators[i]);
  }
  auto as_sum = [](const Monomial& m) { return m.is_zero() ? FormalSum() : FormalSum(m); };
  for (const auto& r : b.monoid.relations) d.relations.push_back({as_sum(r.lhs), as_sum(r.rhs)});
  for (const auto& r : b.relations) d.relations.push_back(r);
  return d;
}

}  // namespace f1
