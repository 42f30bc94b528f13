#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "anglebis/rational.hpp"
#include "anglebis/triangle.hpp"

namespace anglebis {

/// Seeded corpora shared by the reproduction report and the test suites.
/// Triangles: a, b uniform in [0.5, 2], c placed uniformly in the middle
/// 96% of the admissible interval (|a - b|, a + b).
std::vector<Triangle> random_triangles(std::size_t count, std::uint64_t seed);

/// Bisector triples, each length uniform in [0.1, 10].
std::vector<std::array<double, 3>> random_bisector_triples(std::size_t count, std::uint64_t seed);

/// Rational bisector triples n/d with 1 <= n, d <= 60.
std::vector<std::array<Rational, 3>> random_rational_triples(std::size_t count, std::uint64_t seed);

}  // namespace anglebis
