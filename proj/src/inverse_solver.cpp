#include "anglebis/inverse_solver.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

namespace anglebis {

namespace {

using Real = long double;

constexpr Real kPi = std::numbers::pi_v<long double>;
constexpr Real kSimplexMargin = 1e-9L;
constexpr Real kFdStep = 1e-7L;

using Angles = std::array<Real, 2>;
using Vec2 = std::array<Real, 2>;

// Bisector lengths of the triangle with angles (alpha, beta, pi - alpha - beta)
// and semiperimeter 1.
std::array<Real, 3> unit_bisectors(const Angles& x) {
  Real a = x[0], b = x[1], c = kPi - a - b;
  return {bisector_from_angles(Real(1), a, b, c), bisector_from_angles(Real(1), b, c, a),
          bisector_from_angles(Real(1), c, a, b)};
}

Angles project(Angles x) {
  x[0] = std::max(x[0], kSimplexMargin);
  x[1] = std::max(x[1], kSimplexMargin);
  Real excess = x[0] + x[1] - (kPi - kSimplexMargin);
  if (excess > 0) {
    x[0] -= excess / 2;
    x[1] -= excess / 2;
  }
  return x;
}

struct RatioSystem {
  Real log_ratio_b, log_ratio_c;  // log(l_b / l_a), log(l_c / l_a) of the target

  Vec2 operator()(const Angles& x) const {
    auto l = unit_bisectors(x);
    return {std::log(l[1] / l[0]) - log_ratio_b, std::log(l[2] / l[0]) - log_ratio_c};
  }
};

Real norm_inf(const Vec2& v) { return std::max(std::abs(v[0]), std::abs(v[1])); }

struct NewtonOutcome {
  Angles x;
  Real residual;
  int iterations;
};

NewtonOutcome newton(const RatioSystem& f, Angles x, const SolverConfig& config) {
  Vec2 fx = f(x);
  Real current = norm_inf(fx);
  int it = 0;
  for (; it < config.max_iterations && current > 1e-18L; ++it) {
    // Central-difference Jacobian; the step is shrunk near the boundary so
    // both probes stay inside the simplex.
    Real room = std::min({x[0], x[1], kPi - x[0] - x[1]});
    Real h = std::min<Real>(kFdStep, room / 4);
    std::array<Vec2, 2> cols;
    for (int j = 0; j < 2; ++j) {
      Angles xp = x, xm = x;
      xp[j] += h;
      xm[j] -= h;
      Vec2 fp = f(xp), fm = f(xm);
      cols[j] = {(fp[0] - fm[0]) / (2 * h), (fp[1] - fm[1]) / (2 * h)};
    }
    Real det = cols[0][0] * cols[1][1] - cols[1][0] * cols[0][1];
    if (!std::isfinite(det) || det == 0) break;
    Vec2 step = {(fx[0] * cols[1][1] - fx[1] * cols[1][0]) / det,
                 (cols[0][0] * fx[1] - cols[0][1] * fx[0]) / det};

    Real t = config.damping;
    bool accepted = false;
    while (t > 1e-12) {
      Angles trial = project({x[0] - t * step[0], x[1] - t * step[1]});
      Vec2 ft = f(trial);
      Real r = norm_inf(ft);
      if (std::isfinite(r) && r < current) {
        x = trial;
        fx = ft;
        current = r;
        accepted = true;
        break;
      }
      t /= 2;
    }
    if (!accepted) break;
  }
  return {x, current, it};
}

Triangle triangle_from_angles(const Angles& x, Real la_target) {
  Real a = x[0], b = x[1], c = kPi - a - b;
  Real p = la_target / unit_bisectors(x)[0];
  Real sum = std::sin(a) + std::sin(b) + std::sin(c);
  return make_triangle(static_cast<double>(2 * p * std::sin(a) / sum), static_cast<double>(2 * p * std::sin(b) / sum),
                       static_cast<double>(2 * p * std::sin(c) / sum));
}

// Mismatch of the returned (double) sides, evaluated in extended precision
// so the measurement itself adds no cancellation error.
double bisector_mismatch(const Triangle& t, const std::array<double, 3>& target) {
  auto l = bisectors(make_triangle<Real>(t.a(), t.b(), t.c()));
  Real worst = 0;
  for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(l[i] - target[i]) / target[i]);
  return static_cast<double>(worst);
}

}  // namespace

void SolverConfig::validate() const {
  if (!(tolerance > 0)) throw InvalidArgument("solver tolerance must be positive");
  if (max_iterations < 1) throw InvalidArgument("solver needs max_iterations >= 1");
  if (multistart_count < 1) throw InvalidArgument("solver needs multistart_count >= 1");
  if (!(damping > 0 && damping <= 1)) throw InvalidArgument("damping must lie in (0, 1]");
}

std::array<std::array<double, 2>, 8> solver_starts() {
  return {{{kPi / 3, kPi / 3},
           {kPi / 2, kPi / 4},
           {kPi / 4, kPi / 2},
           {kPi / 4, 3 * kPi / 8},
           {2 * kPi / 3, kPi / 6},
           {kPi / 6, 2 * kPi / 3},
           {kPi / 12, kPi / 12},
           {0.9 * kPi, 0.05 * kPi}}};
}

namespace {

void check_bisectors(double la, double lb, double lc) {
  for (double l : {la, lb, lc})
    if (!(l > 0) || !std::isfinite(l)) throw NonPositiveInput("bisector lengths must be positive and finite");
}

// One Newton run from start s; the mismatch of the resulting triangle, or
// nullopt when the iterate collapsed onto the simplex boundary.
std::optional<SolveResult> attempt(double la, double lb, double lc, int s, const SolverConfig& config) {
  RatioSystem system{std::log(Real(lb) / la), std::log(Real(lc) / la)};
  const auto& start = solver_starts()[static_cast<std::size_t>(s)];
  NewtonOutcome out = newton(system, {start[0], start[1]}, config);
  if (!std::isfinite(out.residual)) return std::nullopt;
  try {
    Triangle t = triangle_from_angles(out.x, la);
    return SolveResult{t, bisector_mismatch(t, {la, lb, lc}), out.iterations, s};
  } catch (const InvalidTriangle&) {
    return std::nullopt;
  }
}

std::string failure_message(double la, double lb, double lc, double best) {
  std::ostringstream os;
  os.precision(3);
  os << "no start converged for bisectors (" << la << ", " << lb << ", " << lc << "); best residual " << best;
  return os.str();
}

}  // namespace

SolveResult solve_from_bisectors(double la, double lb, double lc, const SolverConfig& config) {
  config.validate();
  check_bisectors(la, lb, lc);
  int count = std::min<int>(config.multistart_count, static_cast<int>(solver_starts().size()));
  double best = std::numeric_limits<double>::infinity();
  for (int s = 0; s < count; ++s) {
    auto result = attempt(la, lb, lc, s, config);
    if (!result) continue;
    if (result->residual <= config.tolerance) return *result;
    best = std::min(best, result->residual);
  }
  throw NoConvergence(failure_message(la, lb, lc, best));
}

SolveResult solve_from_start(double la, double lb, double lc, int start_index, const SolverConfig& config) {
  config.validate();
  check_bisectors(la, lb, lc);
  if (start_index < 0 || start_index >= static_cast<int>(solver_starts().size()))
    throw InvalidArgument("start index out of range");
  auto result = attempt(la, lb, lc, start_index, config);
  double best = result ? result->residual : std::numeric_limits<double>::infinity();
  if (!result || result->residual > config.tolerance) throw NoConvergence(failure_message(la, lb, lc, best));
  return *result;
}

PolyQ cubic_for_isosceles(const Rational& rho) {
  if (rho.sign() <= 0) throw NonPositiveRatio("isosceles ratio must be positive");
  // rho (3x - 4x^3) = 2 (1 - 2x^2)  <=>  4 rho x^3 - 4 x^2 - 3 rho x + 2 = 0
  PolyQ cubic({Rational(2), Rational(-3) * rho, Rational(-4), Rational(4) * rho});
  return primitive_integer_form(cubic).first.to_rational();
}

IsoscelesSolution isosceles_solve(double rho) {
  if (!(rho > 0) || !std::isfinite(rho)) throw NonPositiveRatio("isosceles ratio must be positive");
  auto f = [rho](double x) { return ((4 * rho * x - 4) * x - 3 * rho) * x + 2; };
  const double hi = std::sin(kPi / 4);

  // Exactly one sign change across (0, sin(pi/4)) is required.
  constexpr int kCells = 1024;
  int changes = 0;
  double lo_bracket = 0, hi_bracket = 0;
  double prev = f(0);
  for (int i = 1; i <= kCells; ++i) {
    double x = hi * i / kCells;
    double v = f(x);
    if ((prev > 0) != (v > 0) || v == 0) {
      ++changes;
      lo_bracket = hi * (i - 1) / kCells;
      hi_bracket = x;
    }
    prev = v;
  }
  if (changes != 1) throw NoRootInRange("isosceles cubic has no unique root in (0, sin(pi/4))");

  double lo = lo_bracket, up = hi_bracket;
  bool lo_positive = f(lo) > 0;
  while (up - lo > 1e-14) {
    double mid = (lo + up) / 2;
    if ((f(mid) > 0) == lo_positive) lo = mid;
    else up = mid;
  }
  double x = (lo + up) / 2;
  double beta = 2 * std::asin(x);
  double alpha = kPi - 2 * beta;
  return {x, alpha, beta, std::tan(alpha / 2)};
}

}  // namespace anglebis
