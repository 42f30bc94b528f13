#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "anglebis/rational.hpp"

namespace anglebis {

/// Dense univariate polynomial over the rationals. Coefficient i multiplies
/// t^i; the zero polynomial has no coefficients and degree -1.
class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(std::vector<Rational> coefficients);
  PolyQ(std::initializer_list<Rational> coefficients)
      : PolyQ(std::vector<Rational>(coefficients)) {}

  static PolyQ constant(const Rational& c) { return PolyQ({c}); }
  static PolyQ monomial(const Rational& c, int degree);

  /// Parses the comma-separated coefficient format, constant term first,
  /// e.g. "6,-3,-12,4" for 4t^3 - 12t^2 - 3t + 6.
  static PolyQ parse(std::string_view text);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of t^i; zero outside the stored range.
  Rational coeff(int i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const { return eval(x); }
  Rational eval(const Rational& x) const;
  long double eval(long double x) const;

  PolyQ derivative() const;
  PolyQ monic() const;
  /// Substitutes t -> t^k.
  PolyQ compose_power(int k) const;

  PolyQ operator-() const;
  PolyQ& operator+=(const PolyQ& rhs);
  PolyQ& operator-=(const PolyQ& rhs);
  PolyQ& operator*=(const Rational& rhs);
  friend PolyQ operator+(PolyQ lhs, const PolyQ& rhs) { return lhs += rhs; }
  friend PolyQ operator-(PolyQ lhs, const PolyQ& rhs) { return lhs -= rhs; }
  friend PolyQ operator*(const PolyQ& lhs, const PolyQ& rhs);
  friend PolyQ operator*(PolyQ lhs, const Rational& rhs) { return lhs *= rhs; }
  friend bool operator==(const PolyQ&, const PolyQ&) = default;

  /// Comma list, constant first (inverse of parse).
  std::string to_coefficient_list() const;
  /// Human-readable form in the variable `var`, highest degree first.
  std::string to_string(std::string_view var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division: returns (quotient, remainder) with deg r < deg g.
/// Throws DivisionByZero when g is the zero polynomial.
std::pair<PolyQ, PolyQ> divmod(const PolyQ& f, const PolyQ& g);

/// Dense polynomial with integer coefficients, same layout as PolyQ.
class PolyZ {
 public:
  PolyZ() = default;
  explicit PolyZ(std::vector<Integer> coefficients);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  Integer coeff(int i) const;
  const Integer& leading() const { return coeffs_.back(); }
  Integer content() const;
  PolyQ to_rational() const;
  friend bool operator==(const PolyZ&, const PolyZ&) = default;

 private:
  std::vector<Integer> coeffs_;
};

/// Scales f by a rational so the result has coprime integer coefficients
/// and a positive leading coefficient. Returns the primitive polynomial
/// together with the factor `s` such that primitive = s * f.
std::pair<PolyZ, Rational> primitive_integer_form(const PolyQ& f);

/// Res(f, g) = lc(f)^deg g * prod g(alpha) over the roots alpha of f,
/// computed with the subresultant remainder sequence over Z.
Rational resultant(const PolyQ& f, const PolyQ& g);

/// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f), n = deg f >= 1.
Rational discriminant(const PolyQ& f);

}  // namespace anglebis
