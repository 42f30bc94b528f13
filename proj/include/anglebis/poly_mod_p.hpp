#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "anglebis/poly_q.hpp"

namespace anglebis {

/// Dense polynomial over the prime field F_p, coefficients in [0, p).
class PolyModP {
 public:
  /// Throws NotPrime when `modulus` fails the primality check.
  PolyModP(std::uint64_t modulus, std::vector<std::uint64_t> coefficients);
  static PolyModP x(std::uint64_t modulus) { return PolyModP(modulus, {0, 1}); }

  std::uint64_t modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<std::uint64_t>& coefficients() const { return c_; }
  std::uint64_t leading() const { return c_.back(); }

  PolyModP derivative() const;
  PolyModP monic() const;
  std::string to_string() const;

  friend PolyModP operator+(const PolyModP& a, const PolyModP& b);
  friend PolyModP operator-(const PolyModP& a, const PolyModP& b);
  friend PolyModP operator*(const PolyModP& a, const PolyModP& b);
  friend bool operator==(const PolyModP&, const PolyModP&) = default;

 private:
  struct Unchecked {};
  PolyModP(Unchecked, std::uint64_t modulus, std::vector<std::uint64_t> coefficients);
  void trim();
  friend std::pair<PolyModP, PolyModP> divmod(const PolyModP& f, const PolyModP& g);

  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
};

std::pair<PolyModP, PolyModP> divmod(const PolyModP& f, const PolyModP& g);
PolyModP operator%(const PolyModP& f, const PolyModP& g);
/// Monic gcd (zero when both inputs are zero).
PolyModP gcd(PolyModP a, PolyModP b);
/// base^exponent reduced modulo `modulus`.
PolyModP pow_mod(PolyModP base, std::uint64_t exponent, const PolyModP& modulus);

/// Coefficientwise reduction of f modulo p. Throws BadPrime when p divides
/// a coefficient denominator or the leading numerator.
PolyModP reduce_mod_p(const PolyQ& f, std::uint64_t p);

}  // namespace anglebis
