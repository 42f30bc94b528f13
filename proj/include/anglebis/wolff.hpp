#pragma once

#include <array>
#include <complex>

#include "anglebis/inverse_solver.hpp"
#include "anglebis/poly_q.hpp"
#include "anglebis/triangle.hpp"

namespace anglebis {

/// Coefficients of the degree-10 polynomial W(t) with root 1/(2r), index i
/// multiplying t^i. Written once for any field-like T so the exact and the
/// floating evaluations share a single transcription.
template <typename T>
std::array<T, 11> wolff_coefficients(const T& a2, const T& a3, const T& a4) {
  auto q = [](long n, long d) { return T(n) / T(d); };
  T a2_2 = a2 * a2, a2_3 = a2_2 * a2, a2_4 = a2_3 * a2;
  T a3_2 = a3 * a3, a3_3 = a3_2 * a3;
  std::array<T, 11> c{};
  c[10] = T(1);
  c[9] = T(0);
  c[8] = -q(5, 2) * a2;
  c[7] = q(7, 2) * a3;
  c[6] = q(33, 16) * a2_2;
  c[5] = -q(47, 8) * a2 * a3;
  c[4] = q(1, 4) * a2 * a4 - q(5, 8) * a2_3 + q(61, 16) * a3_2;
  c[3] = q(5, 2) * a2_2 * a3 - q(1, 4) * a4 * a3;
  c[2] = q(1, 16) * a2_4 - q(1, 4) * a2_2 * a4 - q(25, 8) * a2 * a3_2;
  c[1] = q(1, 2) * a2 * a3 * a4 - q(1, 8) * a2_3 * a3 + q(5, 4) * a3_3;
  c[0] = q(1, 16) * a2_2 * a3_2 - q(1, 4) * a4 * a3_2;
  return c;
}

struct WolffData {
  SymmetricInvariants<Rational> invariants;
  PolyQ W;  // monic, degree 10
  PolyQ U;  // t^3 - a2 t^2 + a4 t - a3^2
  PolyQ V;  // U(t^2)
};

PolyQ wolff_polynomial(const SymmetricInvariants<Rational>& inv);
PolyQ u_polynomial(const SymmetricInvariants<Rational>& inv);
PolyQ v_polynomial(const SymmetricInvariants<Rational>& inv);

/// All three polynomials from exact bisector lengths.
WolffData wolff_data(const Rational& la, const Rational& lb, const Rational& lc);

/// Solves the triangle with the given bisectors, then returns
/// |W(1/(2r))| divided by the largest |c_i t^i| at t = 1/(2r).
/// Propagates NoConvergence from the solver.
double check_incircle_root(double la, double lb, double lc, const SolverConfig& config = {});

/// Same residual for a known triangle (no inverse solve).
double incircle_root_residual(const Triangle& t);

/// The three complex roots of a cubic. The depressed cubic's discriminant
/// is classified exactly; three distinct real roots use the trigonometric
/// form, the other cases Cardano's radicals. Real roots are Newton-polished.
std::array<std::complex<double>, 3> cardano_roots(const PolyQ& cubic);

/// Bisector lengths 1/sqrt(root of U), sorted ascending. Throws
/// NonPositiveRoots when U does not have three positive real roots.
std::array<double, 3> recover_bisectors(const SymmetricInvariants<Rational>& inv);

}  // namespace anglebis
