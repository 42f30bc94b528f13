#include "anglebis/wolff.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace anglebis {

PolyQ wolff_polynomial(const SymmetricInvariants<Rational>& inv) {
  auto c = wolff_coefficients(inv.a2, inv.a3, inv.a4);
  return PolyQ(std::vector<Rational>(c.begin(), c.end()));
}

PolyQ u_polynomial(const SymmetricInvariants<Rational>& inv) {
  return PolyQ({-(inv.a3 * inv.a3), inv.a4, -inv.a2, Rational(1)});
}

PolyQ v_polynomial(const SymmetricInvariants<Rational>& inv) { return u_polynomial(inv).compose_power(2); }

WolffData wolff_data(const Rational& la, const Rational& lb, const Rational& lc) {
  auto inv = symmetric_invariants(la, lb, lc);
  return {inv, wolff_polynomial(inv), u_polynomial(inv), v_polynomial(inv)};
}

double incircle_root_residual(const Triangle& t) {
  auto m = metrics(t);
  auto inv = symmetric_invariants(m.bisectors[0], m.bisectors[1], m.bisectors[2]);
  auto c = wolff_coefficients<long double>(inv.a2, inv.a3, inv.a4);
  long double x = 1.0L / (2.0L * m.inradius);
  long double value = 0, largest = 0, power = 1;
  for (const auto& ci : c) {
    value += ci * power;
    largest = std::max(largest, std::abs(ci * power));
    power *= x;
  }
  return static_cast<double>(std::abs(value) / largest);
}

double check_incircle_root(double la, double lb, double lc, const SolverConfig& config) {
  return incircle_root_residual(solve_from_bisectors(la, lb, lc, config).triangle);
}

namespace {

long double eval_ld(const std::array<long double, 4>& c, long double x) {
  return ((c[3] * x + c[2]) * x + c[1]) * x + c[0];
}

double polish(const std::array<long double, 4>& c, double root) {
  long double x = root;
  long double fx = eval_ld(c, x);
  for (int i = 0; i < 4; ++i) {
    long double d = (3 * c[3] * x + 2 * c[2]) * x + c[1];
    if (d == 0) break;
    long double next = x - fx / d;
    long double fn = eval_ld(c, next);
    if (!(std::abs(fn) < std::abs(fx))) break;
    x = next;
    fx = fn;
  }
  return static_cast<double>(x);
}

}  // namespace

std::array<std::complex<double>, 3> cardano_roots(const PolyQ& cubic) {
  if (cubic.degree() != 3) throw InvalidArgument("cardano_roots needs a cubic");
  PolyQ m = cubic.monic();
  // t = y - b/3 turns t^3 + b t^2 + c t + d into y^3 + P y + Q.
  const Rational b = m.coeff(2), c = m.coeff(1), d = m.coeff(0);
  const Rational shift = b / Rational(3);
  const Rational P = c - b * b / Rational(3);
  const Rational Q = Rational(2) * b * b * b / Rational(27) - b * c / Rational(3) + d;
  // Discriminant of the depressed cubic: -(4P^3 + 27Q^2).
  const Rational disc = -(Rational(4) * P * P * P + Rational(27) * Q * Q);

  const double s = shift.to_double();
  std::array<std::complex<double>, 3> roots;
  if (disc.sign() > 0) {
    // Three distinct real roots (casus irreducibilis): trigonometric form.
    double p = P.to_double(), q = Q.to_double();
    double amp = 2 * std::sqrt(-p / 3);
    double arg = std::clamp(3 * q / (p * amp), -1.0, 1.0);
    double phi = std::acos(arg) / 3;
    for (int k = 0; k < 3; ++k)
      roots[k] = amp * std::cos(phi - 2 * std::numbers::pi * k / 3) - s;
  } else if (disc.is_zero()) {
    if (P.is_zero()) {
      roots = {-s, -s, -s};
    } else {
      double simple = (Rational(3) * Q / P).to_double();
      double dbl = (Rational(-3) * Q / (Rational(2) * P)).to_double();
      roots = {simple - s, dbl - s, dbl - s};
    }
  } else {
    // One real root: y = u + v with u^3, v^3 = -Q/2 +- sqrt(Q^2/4 + P^3/27).
    double p = P.to_double(), q = Q.to_double();
    double root_term = std::sqrt(q * q / 4 + p * p * p / 27);
    // Pick the sign avoiding cancellation, then v = -P / (3u).
    double u3 = q > 0 ? -q / 2 - root_term : -q / 2 + root_term;
    double u = std::cbrt(u3);
    double v = u == 0 ? 0 : -p / (3 * u);
    double real = u + v;
    std::complex<double> omega(-0.5, std::sqrt(3.0) / 2);
    roots[0] = real - s;
    roots[1] = omega * u + std::conj(omega) * v - s;
    roots[2] = std::conj(omega) * u + omega * v - s;
  }

  std::array<long double, 4> lc{m.coeff(0).to_long_double(), m.coeff(1).to_long_double(),
                                m.coeff(2).to_long_double(), 1.0L};
  if (disc.sign() > 0) {
    for (auto& r : roots) r = polish(lc, r.real());
  } else if (disc.sign() < 0) {
    roots[0] = polish(lc, roots[0].real());
  }
  return roots;
}

std::array<double, 3> recover_bisectors(const SymmetricInvariants<Rational>& inv) {
  auto roots = cardano_roots(u_polynomial(inv));
  std::array<double, 3> out;
  for (int i = 0; i < 3; ++i) {
    const auto& z = roots[static_cast<std::size_t>(i)];
    if (z.imag() != 0 || !(z.real() > 0))
      throw NonPositiveRoots("invariants do not come from three positive bisector lengths");
    out[static_cast<std::size_t>(i)] = 1 / std::sqrt(z.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace anglebis
