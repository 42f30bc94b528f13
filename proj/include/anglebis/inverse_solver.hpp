#pragma once

#include <array>

#include "anglebis/poly_q.hpp"
#include "anglebis/triangle.hpp"

namespace anglebis {

struct SolverConfig {
  double tolerance = 1e-12;  // bound on the max relative bisector mismatch
  int max_iterations = 200;  // Newton iterations per start
  int multistart_count = 8;
  double damping = 1.0;      // initial Newton step factor, halved on residual increase

  void validate() const;
};

struct SolveResult {
  Triangle triangle;
  double residual;  // max_i |l_i(triangle) - target_i| / target_i
  int iterations;   // Newton iterations used by the successful start
  int start_used;   // index into the deterministic start list
};

/// Reconstructs the triangle whose internal bisectors have the given
/// lengths. Newton iteration runs over the interior angles (alpha, beta),
/// matching the two scale-free bisector ratios; the scale is fixed last.
/// Throws NonPositiveInput or NoConvergence (with the best residual seen).
SolveResult solve_from_bisectors(double la, double lb, double lc, const SolverConfig& config = {});

/// Runs only the start with the given index (no fallback).
SolveResult solve_from_start(double la, double lb, double lc, int start_index, const SolverConfig& config = {});

/// The deterministic start list used by solve_from_bisectors, as
/// (alpha, beta) pairs in the open angle simplex.
std::array<std::array<double, 2>, 8> solver_starts();

/// Integer-primitive cubic in x = sin(beta/2) for the isosceles triangle
/// with l_b = l_c = rho * l_a:  4 rho x^3 - 4 x^2 - 3 rho x + 2, cleared of
/// denominators and content, positive leading coefficient.
PolyQ cubic_for_isosceles(const Rational& rho);

struct IsoscelesSolution {
  double x;            // sin(beta / 2)
  double alpha;        // apex angle
  double beta;         // base angle (= gamma)
  double area_factor;  // area when l_a = 1, equal to tan(alpha / 2)
};

/// Isolates the root of the isosceles cubic in (0, sin(pi/4)) by bisection
/// (absolute tolerance 1e-14). Throws NonPositiveRatio or NoRootInRange.
IsoscelesSolution isosceles_solve(double rho);

}  // namespace anglebis
