#include "f1/qpoly.hpp"

#include <algorithm>
#include <sstream>

namespace f1 {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& v) {
    v.erase(0, v.find_first_not_of(" \t"));
    v.erase(v.find_last_not_of(" \t") + 1);
  };
  trim(s);
  if (s.empty()) throw DomainError("empty rational literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digit_before = false;
  bool digit_after = false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] == '/') {
      if (seen_slash) throw DomainError("malformed rational '" + s + "'");
      seen_slash = true;
    } else if (s[i] >= '0' && s[i] <= '9') {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw DomainError("malformed rational '" + s + "'");
    }
  }
  if (!digit_before || (seen_slash && !digit_after)) {
    throw DomainError("malformed rational '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  Rational r(s, 10);
  if (r.get_den() == 0) throw DomainError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------- QPolynomial

QPolynomial::QPolynomial(long constant) {
  if (constant != 0) terms_[0] = constant;
}

QPolynomial::QPolynomial(const Rational& constant) {
  if (constant != 0) terms_[0] = constant;
}

QPolynomial::QPolynomial(std::map<unsigned, Rational> coefficients)
    : terms_(std::move(coefficients)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

QPolynomial QPolynomial::from_dense(const std::vector<long>& coefficients) {
  std::map<unsigned, Rational> m;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients[i] != 0) m[static_cast<unsigned>(i)] = coefficients[i];
  }
  return QPolynomial(std::move(m));
}

QPolynomial QPolynomial::monomial(unsigned exponent, const Rational& coeff) {
  return QPolynomial(std::map<unsigned, Rational>{{exponent, coeff}});
}

long QPolynomial::degree() const {
  return terms_.empty() ? -1 : static_cast<long>(terms_.rbegin()->first);
}

Rational QPolynomial::coefficient(unsigned exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational QPolynomial::leading_coefficient() const {
  return terms_.empty() ? Rational(0) : terms_.rbegin()->second;
}

bool QPolynomial::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return f1::is_integral(kv.second); });
}

Rational QPolynomial::evaluate(const Rational& at) const {
  // Horner over the sparse exponents.
  Rational acc = 0;
  long current = degree();
  if (current < 0) return acc;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    acc *= f1::pow(at, current - static_cast<long>(it->first));
    acc += it->second;
    current = it->first;
  }
  acc *= f1::pow(at, current);
  return acc;
}

QPolynomial QPolynomial::operator-() const {
  QPolynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
  for (const auto& [e, c] : other.terms_) {
    auto& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
  }
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& other) {
  return *this += -other;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& other) {
  std::map<unsigned, Rational> out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : other.terms_) out[e1 + e2] += c1 * c2;
  }
  *this = QPolynomial(std::move(out));
  return *this;
}

QPolynomial QPolynomial::pow(unsigned exponent) const {
  QPolynomial result(1);
  QPolynomial base = *this;
  while (exponent) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

QPolynomial QPolynomial::scaled(const Rational& factor) const {
  if (factor == 0) return {};
  QPolynomial r = *this;
  for (auto& [e, c] : r.terms_) c *= factor;
  return r;
}

QPolynomial QPolynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / leading_coefficient());
}

namespace {

std::string power_text(const std::string& var, unsigned e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

}  // namespace

std::string QPolynomial::to_string(const std::string& variable) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << f1::to_string(mag);
    } else if (mag == 1) {
      out << power_text(variable, e);
    } else {
      out << f1::to_string(mag) << "*" << power_text(variable, e);
    }
  }
  return out.str();
}

DivRem poly_divrem(const QPolynomial& f, const QPolynomial& g) {
  if (g.is_zero()) throw DomainError("polynomial division by zero");
  QPolynomial quotient;
  QPolynomial rem = f;
  const long dg = g.degree();
  const Rational lc = g.leading_coefficient();
  while (!rem.is_zero() && rem.degree() >= dg) {
    const auto shift = static_cast<unsigned>(rem.degree() - dg);
    QPolynomial t = QPolynomial::monomial(shift, rem.leading_coefficient() / lc);
    quotient += t;
    rem -= t * g;
  }
  return {quotient, rem};
}

QPolynomial poly_gcd(QPolynomial a, QPolynomial b) {
  while (!b.is_zero()) {
    QPolynomial r = poly_divrem(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Rational make_primitive(QPolynomial& p) {
  if (p.is_zero()) return 1;
  Integer den_lcm = 1;
  for (const auto& [e, c] : p.terms()) den_lcm = lcm(den_lcm, c.get_den());
  Integer num_gcd = 0;
  for (const auto& [e, c] : p.terms()) {
    Integer scaled_num = c.get_num() * (den_lcm / c.get_den());
    num_gcd = gcd(num_gcd, scaled_num);
  }
  Rational factor(num_gcd, den_lcm);
  factor.canonicalize();
  if (p.leading_coefficient() < 0) factor = -factor;
  p = p.scaled(Rational(1) / factor);
  return factor;
}

// ----------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(QPolynomial numerator, QPolynomial denominator) {
  if (denominator.is_zero()) throw DomainError("rational function with zero denominator");
  if (numerator.is_zero()) {
    num_ = QPolynomial();
    den_ = QPolynomial(1);
    return;
  }
  QPolynomial g = poly_gcd(numerator, denominator);
  num_ = poly_divrem(numerator, g).quotient;
  den_ = poly_divrem(denominator, g).quotient;
  Rational factor = make_primitive(den_);
  num_ = num_.scaled(Rational(1) / factor);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return {num_ * o.num_, den_ * o.den_};
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.num_.is_zero()) throw DomainError("division by the zero rational function");
  return {num_ * o.den_, den_ * o.num_};
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return {num_ * o.den_ - o.num_ * den_, den_ * o.den_};
}

std::vector<Rational> RationalFunction::series(unsigned count) const {
  const Rational d0 = den_.coefficient(0);
  if (d0 == 0) throw DomainError("power series requested at a pole");
  std::vector<Rational> out(count);
  for (unsigned n = 0; n < count; ++n) {
    Rational acc = num_.coefficient(n);
    for (const auto& [e, c] : den_.terms()) {
      if (e == 0 || e > n) continue;
      acc -= c * out[n - e];
    }
    out[n] = acc / d0;
  }
  return out;
}

std::string RationalFunction::to_string(const std::string& variable) const {
  if (den_ == QPolynomial(1)) return num_.to_string(variable);
  auto wrap = [&](const QPolynomial& p) {
    std::string s = p.to_string(variable);
    return p.terms().size() > 1 ? "(" + s + ")" : s;
  };
  return wrap(num_) + " / " + wrap(den_);
}

Rational rational_limit(const RationalFunction& f, const Rational& at) {
  Rational d = f.denominator().evaluate(at);
  if (d == 0) {
    throw DomainError("pole at " + to_string(at) + " after reduction");
  }
  return f.numerator().evaluate(at) / d;
}

QPolynomial cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw DomainError("cyclotomic_polynomial: n must be positive");
  QPolynomial p = QPolynomial::monomial(n) - QPolynomial(1);
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) p = poly_divrem(p, cyclotomic_polynomial(d)).quotient;
  }
  return p;
}

}  // namespace f1
