#include "anglebis/poly_q.hpp"

#include <sstream>

#include "anglebis/errors.hpp"

namespace anglebis {

PolyQ::PolyQ(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

PolyQ PolyQ::monomial(const Rational& c, int degree) {
  if (degree < 0) throw InvalidArgument("negative monomial degree");
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return PolyQ(std::move(v));
}

PolyQ PolyQ::parse(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                     : comma - start);
    out.push_back(Rational::parse(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return PolyQ(std::move(out));
}

void PolyQ::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational PolyQ::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& PolyQ::leading() const {
  if (coeffs_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational PolyQ::eval(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

long double PolyQ::eval(long double x) const {
  long double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_long_double();
  return acc;
}

PolyQ PolyQ::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return PolyQ(std::move(out));
}

PolyQ PolyQ::monic() const {
  if (is_zero()) return {};
  PolyQ out = *this;
  Rational inv = Rational(1) / leading();
  for (auto& c : out.coeffs_) c *= inv;
  return out;
}

PolyQ PolyQ::compose_power(int k) const {
  if (k < 1) throw InvalidArgument("compose_power needs k >= 1");
  if (is_zero()) return {};
  std::vector<Rational> out(static_cast<std::size_t>(degree() * k) + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * static_cast<std::size_t>(k)] = coeffs_[i];
  return PolyQ(std::move(out));
}

PolyQ PolyQ::operator-() const {
  PolyQ out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

PolyQ& PolyQ::operator+=(const PolyQ& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator*=(const Rational& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  trim();
  return *this;
}

PolyQ operator*(const PolyQ& lhs, const PolyQ& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return PolyQ(std::move(out));
}

std::string PolyQ::to_coefficient_list() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += coeffs_[i].to_string();
  }
  return out;
}

std::string PolyQ::to_string(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == Rational(1);
    if (!unit || i == 0) {
      if (mag.is_integer()) os << mag;
      else os << '(' << mag << ')';
    }
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::pair<PolyQ, PolyQ> divmod(const PolyQ& f, const PolyQ& g) {
  if (g.is_zero()) throw DivisionByZero("polynomial division by the zero polynomial");
  if (f.degree() < g.degree()) return {PolyQ(), f};
  std::vector<Rational> rem = f.coefficients();
  std::vector<Rational> quot(static_cast<std::size_t>(f.degree() - g.degree()) + 1);
  const auto& gc = g.coefficients();
  Rational inv = Rational(1) / g.leading();
  for (int k = f.degree() - g.degree(); k >= 0; --k) {
    Rational q = rem[static_cast<std::size_t>(k + g.degree())] * inv;
    quot[static_cast<std::size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= g.degree(); ++j) rem[static_cast<std::size_t>(k + j)] -= q * gc[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(g.degree()));
  return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

// ---------------------------------------------------------------------------
// Integer polynomials

PolyZ::PolyZ(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer PolyZ::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Integer PolyZ::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

PolyQ PolyZ::to_rational() const {
  std::vector<Rational> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.emplace_back(c);
  return PolyQ(std::move(out));
}

std::pair<PolyZ, Rational> primitive_integer_form(const PolyQ& f) {
  if (f.is_zero()) return {PolyZ(), Rational(1)};
  Integer lcm_den = 1;
  for (const auto& c : f.coefficients()) {
    Integer d = c.denominator();
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<Integer> ints;
  ints.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients()) ints.push_back(c.numerator() * (lcm_den / c.denominator()));
  Integer content = PolyZ(ints).content();
  if (f.leading().sign() < 0) content = -content;
  for (auto& c : ints) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
  return {PolyZ(std::move(ints)), Rational(lcm_den, content)};
}

namespace {

using IntCoeffs = std::vector<Integer>;

int deg(const IntCoeffs& a) { return static_cast<int>(a.size()) - 1; }

void trim(IntCoeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Integer ipow(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

// lc(b)^(deg a - deg b + 1) * a  mod  b
IntCoeffs pseudo_remainder(IntCoeffs a, const IntCoeffs& b) {
  const Integer& lb = b.back();
  int db = deg(b);
  int e = deg(a) - db + 1;
  while (!a.empty() && deg(a) >= db) {
    Integer la = a.back();
    int shift = deg(a) - db;
    for (auto& c : a) c *= lb;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(j + shift)] -= la * b[static_cast<std::size_t>(j)];
    trim(a);
    --e;
  }
  if (e > 0) {
    Integer scale = ipow(lb, static_cast<unsigned long>(e));
    for (auto& c : a) c *= scale;
  }
  return a;
}

Integer content_of(const IntCoeffs& a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

// Subresultant PRS resultant over Z (Cohen, A Course in Computational
// Algebraic Number Theory, algorithm 3.3.7).
Integer resultant_z(IntCoeffs a, IntCoeffs b) {
  if (a.empty() || b.empty()) return 0;
  Integer ca = content_of(a), cb = content_of(b);
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), ca.get_mpz_t());
  for (auto& c : b) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), cb.get_mpz_t());
  Integer t = ipow(ca, static_cast<unsigned long>(deg(b))) * ipow(cb, static_cast<unsigned long>(deg(a)));
  int s = 1;
  if (deg(a) < deg(b)) {
    std::swap(a, b);
    if (deg(a) % 2 == 1 && deg(b) % 2 == 1) s = -s;
  }
  if (deg(b) == 0) return s * t * ipow(b.back(), static_cast<unsigned long>(deg(a)));

  Integer g = 1, h = 1;
  while (true) {
    int delta = deg(a) - deg(b);
    if (deg(a) % 2 == 1 && deg(b) % 2 == 1) s = -s;
    IntCoeffs r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.empty()) return 0;
    Integer divisor = g * ipow(h, static_cast<unsigned long>(delta));
    for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
    b = std::move(r);
    g = a.back();
    // h <- h^(1 - delta) * g^delta, exact over Z.
    if (delta == 0) {
      // h unchanged
    } else {
      Integer num = ipow(g, static_cast<unsigned long>(delta));
      Integer den = ipow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (deg(b) == 0) break;
  }
  // h <- h^(1 - deg a) * lc(b)^deg a
  int da = deg(a);
  Integer num = ipow(b.back(), static_cast<unsigned long>(da));
  Integer den = ipow(h, static_cast<unsigned long>(da - 1));
  Integer last;
  mpz_divexact(last.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return s * t * last;
}

}  // namespace

Rational resultant(const PolyQ& f, const PolyQ& g) {
  if (f.is_zero() || g.is_zero()) return Rational(0);
  // f = F / sf, g = G / sg with F, G primitive integer polynomials.
  auto [fz, sf] = primitive_integer_form(f);
  auto [gz, sg] = primitive_integer_form(g);
  Rational res(resultant_z(fz.coefficients(), gz.coefficients()));
  return res / (pow(sf, static_cast<unsigned>(g.degree())) * pow(sg, static_cast<unsigned>(f.degree())));
}

Rational discriminant(const PolyQ& f) {
  int n = f.degree();
  if (n < 1) throw InvalidArgument("discriminant needs degree >= 1");
  Rational r = resultant(f, f.derivative()) / f.leading();
  return (n * (n - 1) / 2) % 2 == 0 ? r : -r;
}

}  // namespace anglebis
