#include "anglebis/poly_mod_p.hpp"

#include <sstream>

#include "anglebis/errors.hpp"
#include "anglebis/primes.hpp"

namespace anglebis {

PolyModP::PolyModP(std::uint64_t modulus, std::vector<std::uint64_t> coefficients)
    : p_(modulus), c_(std::move(coefficients)) {
  if (!is_prime(p_)) throw NotPrime(std::to_string(p_) + " is not prime");
  for (auto& c : c_) c %= p_;
  trim();
}

PolyModP::PolyModP(Unchecked, std::uint64_t modulus, std::vector<std::uint64_t> coefficients)
    : p_(modulus), c_(std::move(coefficients)) {
  trim();
}

void PolyModP::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyModP PolyModP::derivative() const {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(mul_mod(c_[i], i % p_, p_));
  return PolyModP(Unchecked{}, p_, std::move(out));
}

PolyModP PolyModP::monic() const {
  if (c_.empty()) return *this;
  std::uint64_t inv = inv_mod(leading(), p_);
  std::vector<std::uint64_t> out(c_);
  for (auto& c : out) c = mul_mod(c, inv, p_);
  return PolyModP(Unchecked{}, p_, std::move(out));
}

std::string PolyModP::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    auto c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c != 1 || i == 0) os << c;
    if (i >= 1) os << 't';
    if (i >= 2) os << '^' << i;
  }
  os << " (mod " << p_ << ')';
  return os.str();
}

PolyModP operator+(const PolyModP& a, const PolyModP& b) {
  std::vector<std::uint64_t> out(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t x = i < a.c_.size() ? a.c_[i] : 0;
    std::uint64_t y = i < b.c_.size() ? b.c_[i] : 0;
    out[i] = (x + y) % a.p_;
  }
  return PolyModP(PolyModP::Unchecked{}, a.p_, std::move(out));
}

PolyModP operator-(const PolyModP& a, const PolyModP& b) {
  std::vector<std::uint64_t> out(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t x = i < a.c_.size() ? a.c_[i] : 0;
    std::uint64_t y = i < b.c_.size() ? b.c_[i] : 0;
    out[i] = (x + a.p_ - y) % a.p_;
  }
  return PolyModP(PolyModP::Unchecked{}, a.p_, std::move(out));
}

PolyModP operator*(const PolyModP& a, const PolyModP& b) {
  if (a.c_.empty() || b.c_.empty()) return PolyModP(PolyModP::Unchecked{}, a.p_, {});
  std::vector<std::uint64_t> out(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      out[i + j] = (out[i + j] + mul_mod(a.c_[i], b.c_[j], a.p_)) % a.p_;
  return PolyModP(PolyModP::Unchecked{}, a.p_, std::move(out));
}

std::pair<PolyModP, PolyModP> divmod(const PolyModP& f, const PolyModP& g) {
  if (g.is_zero()) throw DivisionByZero("polynomial division by zero modulo p");
  const std::uint64_t p = f.p_;
  if (f.degree() < g.degree()) return {PolyModP(PolyModP::Unchecked{}, p, {}), f};
  std::vector<std::uint64_t> rem = f.c_;
  std::vector<std::uint64_t> quot(static_cast<std::size_t>(f.degree() - g.degree()) + 1, 0);
  std::uint64_t inv = inv_mod(g.leading(), p);
  int dg = g.degree();
  for (int k = f.degree() - dg; k >= 0; --k) {
    std::uint64_t q = mul_mod(rem[static_cast<std::size_t>(k + dg)], inv, p);
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dg; ++j) {
      auto& r = rem[static_cast<std::size_t>(k + j)];
      r = (r + p - mul_mod(q, g.c_[static_cast<std::size_t>(j)], p)) % p;
    }
  }
  rem.resize(static_cast<std::size_t>(dg));
  return {PolyModP(PolyModP::Unchecked{}, p, std::move(quot)),
          PolyModP(PolyModP::Unchecked{}, p, std::move(rem))};
}

PolyModP operator%(const PolyModP& f, const PolyModP& g) { return divmod(f, g).second; }

PolyModP gcd(PolyModP a, PolyModP b) {
  while (!b.is_zero()) {
    PolyModP r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

PolyModP pow_mod(PolyModP base, std::uint64_t exponent, const PolyModP& modulus) {
  PolyModP result = PolyModP(modulus.modulus(), {1}) % modulus;
  base = base % modulus;
  while (exponent) {
    if (exponent & 1) result = (result * base) % modulus;
    base = (base * base) % modulus;
    exponent >>= 1;
  }
  return result;
}

PolyModP reduce_mod_p(const PolyQ& f, std::uint64_t p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  Integer pz(std::to_string(p));
  std::vector<std::uint64_t> out;
  out.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients()) {
    Integer den = c.denominator();
    if (mpz_divisible_p(den.get_mpz_t(), pz.get_mpz_t()))
      throw BadPrime(std::to_string(p) + " divides a coefficient denominator");
    Integer num = c.numerator();
    Integer n_mod, d_mod;
    mpz_fdiv_r(n_mod.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t());
    mpz_fdiv_r(d_mod.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
    std::uint64_t n = std::stoull(n_mod.get_str());
    std::uint64_t d = std::stoull(d_mod.get_str());
    out.push_back(mul_mod(n, inv_mod(d, p), p));
  }
  if (!f.is_zero() && out.back() == 0)
    throw BadPrime(std::to_string(p) + " divides the leading coefficient");
  return PolyModP(p, std::move(out));
}

}  // namespace anglebis
