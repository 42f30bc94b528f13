#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include <boost/math/constants/constants.hpp>

#include "anglebis/errors.hpp"
#include "anglebis/rational.hpp"

namespace anglebis {

/// Relative slack on the triangle inequality: a triple whose smallest
/// "excess" b + c - a is within this fraction of the longest side is
/// treated as degenerate.
inline constexpr double kDegenerateSlack = 1e-12;

/// Side lengths labelled so that a = BC is opposite vertex A, b = AC,
/// c = AB. Only obtainable through make_triangle, which validates.
template <typename Real>
class BasicTriangle {
 public:
  const Real& a() const { return a_; }
  const Real& b() const { return b_; }
  const Real& c() const { return c_; }
  std::array<Real, 3> sides() const { return {a_, b_, c_}; }

  template <typename R>
  friend BasicTriangle<R> make_triangle(R a, R b, R c);

 private:
  BasicTriangle(Real a, Real b, Real c) : a_(a), b_(b), c_(c) {}
  Real a_, b_, c_;
};

using Triangle = BasicTriangle<double>;

template <typename Real>
struct BasicMetrics {
  Real semiperimeter, area, inradius;
  std::array<Real, 3> angles;     // alpha, beta, gamma (radians)
  std::array<Real, 3> medians;    // m_a, m_b, m_c
  std::array<Real, 3> altitudes;  // h_a, h_b, h_c
  std::array<Real, 3> bisectors;  // l_a, l_b, l_c
};

using Metrics = BasicMetrics<double>;

/// a2 = sum l^-2, a3 = prod l^-1, a4 = sum over pairs l_i^-2 l_j^-2.
template <typename T>
struct SymmetricInvariants {
  T a2, a3, a4;
};

namespace detail {

// Sorted descending: x >= y >= z. Returns the four Kahan factors
// (x + (y + z)), (z - (x - y)), (z + (x - y)), (x + (y - z)).
template <typename Real>
std::array<Real, 4> kahan_factors(Real x, Real y, Real z) {
  std::array<Real, 3> s{x, y, z};
  std::sort(s.begin(), s.end(), [](const Real& l, const Real& r) { return l > r; });
  return {s[0] + (s[1] + s[2]), s[2] - (s[0] - s[1]), s[2] + (s[0] - s[1]), s[0] + (s[1] - s[2])};
}

template <typename Real>
bool satisfies_triangle_inequality(const Real& x, const Real& y, const Real& z) {
  Real longest = std::max({x, y, z});
  Real slack = Real(kDegenerateSlack) * longest;
  return x > 0 && y > 0 && z > 0 && x + y - z > slack && y + z - x > slack && z + x - y > slack;
}

template <typename Real>
Real pi() {
  return boost::math::constants::pi<Real>();
}

}  // namespace detail

template <typename Real>
BasicTriangle<Real> make_triangle(Real a, Real b, Real c) {
  if (!detail::satisfies_triangle_inequality(a, b, c))
    throw InvalidTriangle("sides do not form a non-degenerate triangle");
  return BasicTriangle<Real>(a, b, c);
}

template <typename Real>
Real semiperimeter(const BasicTriangle<Real>& t) {
  return (t.a() + t.b() + t.c()) / 2;
}

/// Heron's formula evaluated in Kahan's cancellation-free ordering.
template <typename Real>
Real area_heron(const BasicTriangle<Real>& t) {
  using std::sqrt;
  auto f = detail::kahan_factors(t.a(), t.b(), t.c());
  return sqrt(f[0] * f[1] * f[2] * f[3]) / 4;
}

template <typename Real>
std::array<Real, 3> medians(const BasicTriangle<Real>& t) {
  using std::sqrt;
  const Real &a = t.a(), &b = t.b(), &c = t.c();
  return {sqrt(2 * b * b + 2 * c * c - a * a) / 2, sqrt(2 * a * a + 2 * c * c - b * b) / 2,
          sqrt(2 * a * a + 2 * b * b - c * c) / 2};
}

/// S = (1/3) sqrt((sum m)(m_a + m_b - m_c)(m_b + m_c - m_a)(m_c + m_a - m_b)).
template <typename Real>
Real area_from_medians(const std::array<Real, 3>& m) {
  using std::sqrt;
  if (!detail::satisfies_triangle_inequality(m[0], m[1], m[2]))
    throw InvalidMedians("medians do not form a non-degenerate triangle");
  auto f = detail::kahan_factors(m[0], m[1], m[2]);
  return sqrt(f[0] * f[1] * f[2] * f[3]) / 3;
}

template <typename Real>
std::array<Real, 3> altitudes(const BasicTriangle<Real>& t) {
  Real twice_area = 2 * area_heron(t);
  return {twice_area / t.a(), twice_area / t.b(), twice_area / t.c()};
}

/// Reciprocal Heron formula: 1/S = sqrt(prod of the four sums of 1/h).
template <typename Real>
Real area_from_altitudes(const std::array<Real, 3>& h) {
  using std::sqrt;
  if (!(h[0] > 0 && h[1] > 0 && h[2] > 0))
    throw InvalidAltitudes("altitudes must be positive");
  Real x = 1 / h[0], y = 1 / h[1], z = 1 / h[2];
  if (!detail::satisfies_triangle_inequality(x, y, z))
    throw InvalidAltitudes("reciprocal altitudes violate the triangle inequality");
  auto f = detail::kahan_factors(x, y, z);
  return 1 / sqrt(f[0] * f[1] * f[2] * f[3]);
}

template <typename Real>
Real inradius(const BasicTriangle<Real>& t) {
  return area_heron(t) / semiperimeter(t);
}

/// Interior angles from the half-angle tangent tan(A/2) = r / (p - a),
/// which stays accurate for slivers where acos of the cosine law does not.
template <typename Real>
std::array<Real, 3> angles(const BasicTriangle<Real>& t) {
  using std::atan2;
  Real r = inradius(t);
  // p - a written as (b + c - a) / 2 so the subtraction involves inputs only.
  Real pa = (t.b() + t.c() - t.a()) / 2;
  Real pb = (t.a() + t.c() - t.b()) / 2;
  Real pc = (t.a() + t.b() - t.c()) / 2;
  return {2 * atan2(r, pa), 2 * atan2(r, pb), 2 * atan2(r, pc)};
}

/// Bisector of the angle at `alpha`, opposite angles `beta` and `gamma`:
/// l = 2p sin(beta/2) sin(gamma/2) / (cos(alpha/2) cos((beta - gamma)/2)).
template <typename Real>
Real bisector_from_angles(const Real& p, const Real& alpha, const Real& beta, const Real& gamma) {
  using std::cos;
  using std::sin;
  return 2 * p * sin(beta / 2) * sin(gamma / 2) / (cos(alpha / 2) * cos((beta - gamma) / 2));
}

/// Bisectors via the angle formula (the returned values).
template <typename Real>
std::array<Real, 3> bisectors(const BasicTriangle<Real>& t) {
  Real p = semiperimeter(t);
  auto ang = angles(t);
  return {bisector_from_angles(p, ang[0], ang[1], ang[2]), bisector_from_angles(p, ang[1], ang[2], ang[0]),
          bisector_from_angles(p, ang[2], ang[0], ang[1])};
}

/// Bisectors via the side form l_a = 2 sqrt(b c p (p - a)) / (b + c).
template <typename Real>
std::array<Real, 3> bisectors_side_form(const BasicTriangle<Real>& t) {
  using std::sqrt;
  const Real &a = t.a(), &b = t.b(), &c = t.c();
  Real p = semiperimeter(t);
  Real pa = (b + c - a) / 2, pb = (a + c - b) / 2, pc = (a + b - c) / 2;
  return {2 * sqrt(b * c * p * pa) / (b + c), 2 * sqrt(a * c * p * pb) / (a + c),
          2 * sqrt(a * b * p * pc) / (a + b)};
}

template <typename Real>
BasicMetrics<Real> metrics(const BasicTriangle<Real>& t) {
  BasicMetrics<Real> m;
  m.semiperimeter = semiperimeter(t);
  m.area = area_heron(t);
  m.inradius = m.area / m.semiperimeter;
  m.angles = angles(t);
  m.medians = medians(t);
  m.altitudes = altitudes(t);
  m.bisectors = bisectors(t);
  return m;
}

template <typename T>
SymmetricInvariants<T> symmetric_invariants(const T& la, const T& lb, const T& lc) {
  if (!(la > 0 && lb > 0 && lc > 0)) throw NonPositiveInput("bisector lengths must be positive");
  T ia = T(1) / (la * la), ib = T(1) / (lb * lb), ic = T(1) / (lc * lc);
  return {ia + ib + ic, T(1) / (la * lb * lc), ia * ib + ib * ic + ic * ia};
}

/// Normalised residuals of the two incircle relations
///   4 a2 r^2 S^2 - 8 a3 r^3 S^2 = r^4 + S^2     (res1)
///   4 a2 r^2 p^2 - 8 a3 r^3 p^2 = r^2 + p^2     (res2)
/// each as |lhs - rhs| / |rhs|.
template <typename Real>
std::array<Real, 2> vrf_residuals(const BasicTriangle<Real>& t) {
  using std::abs;
  auto m = metrics(t);
  auto inv = symmetric_invariants(m.bisectors[0], m.bisectors[1], m.bisectors[2]);
  const Real &r = m.inradius, &S = m.area, &p = m.semiperimeter;
  Real r2 = r * r, S2 = S * S, p2 = p * p;
  Real lhs1 = 4 * inv.a2 * r2 * S2 - 8 * inv.a3 * r2 * r * S2;
  Real rhs1 = r2 * r2 + S2;
  Real lhs2 = 4 * inv.a2 * r2 * p2 - 8 * inv.a3 * r2 * r * p2;
  Real rhs2 = r2 + p2;
  return {abs(lhs1 - rhs1) / abs(rhs1), abs(lhs2 - rhs2) / abs(rhs2)};
}

}  // namespace anglebis
