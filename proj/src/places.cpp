#include "f1/places.hpp"

#include "f1/qincidence.hpp"

namespace f1 {

namespace {

int mod(long a, int p) { return static_cast<int>(((a % p) + p) % p); }

int inverse_mod(int a, int p) {
  for (int x = 1; x < p; ++x) {
    if (a * x % p == 1) return x;
  }
  throw DomainError("no inverse of " + std::to_string(a) + " mod " + std::to_string(p));
}

void trim(std::vector<int>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

int moebius(int n) {
  int result = 1;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    n /= d;
    if (n % d == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

// Multiplicity of f in g.
int order_at(FpPoly g, const FpPoly& f) {
  int i = 0;
  while (true) {
    FpDivRem d = divrem(g, f);
    if (!d.remainder.is_zero()) return i;
    g = d.quotient;
    ++i;
  }
}

Rational power(long base, long exponent) {
  Integer b = base;
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? Rational(1) / Rational(r) : Rational(r);
}

// Every monic polynomial of degree d over F_p, in increasing coefficient order.
std::vector<FpPoly> monic_of_degree(int p, int d) {
  long total = 1;
  for (int i = 0; i < d; ++i) total *= p;
  std::vector<FpPoly> out;
  out.reserve(static_cast<std::size_t>(total));
  for (long code = 0; code < total; ++code) {
    std::vector<int> c(d + 1, 0);
    long x = code;
    for (int i = 0; i < d; ++i) {
      c[i] = static_cast<int>(x % p);
      x /= p;
    }
    c[d] = 1;
    out.emplace_back(p, std::move(c));
  }
  return out;
}

}  // namespace

FpPoly::FpPoly(int p, std::vector<int> coefficients) : p_(p), c_(std::move(coefficients)) {
  if (!is_prime(p)) throw DomainError("F_p needs a prime p, got " + std::to_string(p));
  for (int& x : c_) x = mod(x, p);
  trim(c_);
}

FpPoly FpPoly::monomial(int p, int degree, int coeff) {
  std::vector<int> c(degree + 1, 0);
  c[degree] = coeff;
  return FpPoly(p, std::move(c));
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
  if (p_ != o.p_) throw DomainError("FpPoly: characteristic mismatch");
  if (is_zero() || o.is_zero()) return FpPoly(p_, {});
  std::vector<int> c(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] = (c[i + j] + c_[i] * o.c_[j]) % p_;
  }
  return FpPoly(p_, std::move(c));
}

std::string FpPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    std::string coeff = c_[i] == 1 && i > 0 ? "" : std::to_string(c_[i]);
    std::string var = i == 0 ? "" : (i == 1 ? "T" : "T^" + std::to_string(i));
    out += coeff + (!coeff.empty() && !var.empty() ? "*" : "") + var;
  }
  return out;
}

FpDivRem divrem(const FpPoly& f, const FpPoly& g) {
  if (f.p() != g.p()) throw DomainError("FpPoly: characteristic mismatch");
  if (g.is_zero()) throw DomainError("FpPoly: division by zero");
  const int p = f.p();
  std::vector<int> r = f.coefficients();
  const std::vector<int>& d = g.coefficients();
  const int inv = inverse_mod(d.back(), p);
  std::vector<int> q(r.size() >= d.size() ? r.size() - d.size() + 1 : 0, 0);
  for (int i = static_cast<int>(r.size()) - 1; i >= static_cast<int>(d.size()) - 1; --i) {
    int c = r[i] * inv % p;
    if (c == 0) continue;
    int shift = i - (static_cast<int>(d.size()) - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < d.size(); ++j) r[shift + j] = mod(r[shift + j] - c * d[j], p);
  }
  return {FpPoly(p, std::move(q)), FpPoly(p, std::move(r))};
}

bool is_irreducible(const FpPoly& f) {
  if (f.degree() < 1) return false;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    for (const auto& g : monic_of_degree(f.p(), d)) {
      if (divrem(f, g).remainder.is_zero()) return false;
    }
  }
  return true;
}

std::vector<FpPoly> monic_irreducibles(int p, int d) {
  if (d < 1) throw DomainError("monic_irreducibles: degree must be positive");
  std::vector<FpPoly> out;
  for (auto& f : monic_of_degree(p, d)) {
    if (is_irreducible(f)) out.push_back(std::move(f));
  }
  return out;
}

Place Place::at_prime(long p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  Place v;
  v.kind = Kind::Prime;
  v.prime = p;
  return v;
}

Place Place::infinity(int p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  Place v;
  v.kind = Kind::Infinity;
  v.field = p;
  return v;
}

Place Place::at(const FpPoly& f) {
  if (!f.is_monic() || !is_irreducible(f)) {
    throw DomainError(f.to_string() + " is not monic irreducible");
  }
  Place v;
  v.kind = Kind::Irreducible;
  v.field = f.p();
  v.poly = f.coefficients();
  return v;
}

int Place::degree() const {
  switch (kind) {
    case Kind::Irreducible:
      return static_cast<int>(poly.size()) - 1;
    case Kind::Infinity:
      return 1;
    default:
      throw DomainError("degree: not a place of a function field");
  }
}

std::string Place::to_string() const {
  switch (kind) {
    case Kind::Archimedean:
      return "inf(Q)";
    case Kind::Prime:
      return "v_" + std::to_string(prime);
    case Kind::Infinity:
      return "inf(F_" + std::to_string(field) + "(T))";
    case Kind::Irreducible:
      return "v_(" + FpPoly(field, poly).to_string() + ")";
  }
  return "";
}

Rational absolute_value(const Rational& x, const Place& v) {
  if (v.of_function_field()) throw DomainError("place " + v.to_string() + " is not a place of Q");
  if (x == 0) return 0;
  if (v.kind == Place::Kind::Archimedean) return abs(x);
  Integer p = v.prime;
  long i = 0;
  Integer num = abs(x.get_num());
  Integer den = x.get_den();
  while (num % p == 0) {
    num /= p;
    ++i;
  }
  while (den % p == 0) {
    den /= p;
    --i;
  }
  return power(v.prime, -i);
}

Rational absolute_value(const FpPoly& g, const FpPoly& h, const Place& v) {
  if (!v.of_function_field()) throw DomainError("place " + v.to_string() + " is not a place of F_p(T)");
  if (g.p() != v.field || h.p() != v.field) throw DomainError("absolute_value: characteristic mismatch");
  if (h.is_zero()) throw DomainError("absolute_value: zero denominator");
  if (g.is_zero()) return 0;
  if (v.kind == Place::Kind::Infinity) return power(v.field, h.degree() - g.degree());
  const FpPoly f(v.field, v.poly);
  const long i = order_at(g, f) - order_at(h, f);
  return power(v.field, -static_cast<long>(f.degree()) * i);
}

RationalFunction zeta_function_field(long q) {
  if (q < 2) throw DomainError("zeta_function_field: q must be at least 2");
  const QPolynomial t = QPolynomial::q();
  return RationalFunction(QPolynomial(1), (QPolynomial(1) - t) * (QPolynomial(1) - t.scaled(q)));
}

Integer irreducible_count(long q, int d) {
  if (q < 2) throw DomainError("irreducible_count: q must be at least 2");
  if (d < 1) throw DomainError("irreducible_count: degree must be positive");
  Integer sum = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e) continue;
    Integer term;
    Integer base = q;
    mpz_pow_ui(term.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(d / e));
    sum += moebius(e) * term;
  }
  return sum / d;
}

Integer place_count(long q, int d) { return irreducible_count(q, d) + (d == 1 ? 1 : 0); }

Integer place_count_enumerated(long q, int d) {
  if (!is_prime(q)) throw DomainError("place enumeration needs a prime q");
  return Integer(monic_irreducibles(static_cast<int>(q), d).size()) + (d == 1 ? 1 : 0);
}

std::vector<Integer> euler_product(const std::vector<Integer>& counts_by_degree, int n) {
  std::vector<Integer> series(n + 1, 0);
  series[0] = 1;
  for (int d = 1; d <= n && d < static_cast<int>(counts_by_degree.size()); ++d) {
    const Integer& a = counts_by_degree[d];
    // (1 - T^d)^(-a) = sum_k binom(a + k - 1, k) T^(dk)
    std::vector<Integer> factor(n + 1, 0);
    Integer c = 1;
    for (int k = 0; d * k <= n; ++k) {
      factor[d * k] = c;
      c = c * (a + k) / (k + 1);
    }
    std::vector<Integer> next(n + 1, 0);
    for (int i = 0; i <= n; ++i) {
      if (series[i] == 0) continue;
      for (int j = 0; i + j <= n; ++j) next[i + j] += series[i] * factor[j];
    }
    series = std::move(next);
  }
  return series;
}

}  // namespace f1
