#include "anglebis/corpus.hpp"

#include <cmath>
#include <random>

namespace anglebis {

std::vector<Triangle> random_triangles(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> side(0.5, 2.0), place(0.02, 0.98);
  std::vector<Triangle> out;
  out.reserve(count);
  while (out.size() < count) {
    double a = side(rng), b = side(rng);
    double lo = std::abs(a - b), hi = a + b;
    out.push_back(make_triangle(a, b, lo + (hi - lo) * place(rng)));
  }
  return out;
}

std::vector<std::array<double, 3>> random_bisector_triples(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> length(0.1, 10.0);
  std::vector<std::array<double, 3>> out(count);
  for (auto& l : out) l = {length(rng), length(rng), length(rng)};
  return out;
}

std::vector<std::array<Rational, 3>> random_rational_triples(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> part(1, 60);
  std::vector<std::array<Rational, 3>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::array<Rational, 3> l;
    for (auto& x : l) x = Rational(Integer(part(rng)), Integer(part(rng)));
    out.push_back(l);
  }
  return out;
}

}  // namespace anglebis
