#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "anglebis/galois.hpp"
#include "anglebis/wolff.hpp"
#include "oracles.hpp"

using namespace anglebis;

namespace {

Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

PolyZ z(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return PolyZ(v);
}

bool any_line_contains(const std::vector<std::string>& lines, const std::string& needle) {
  return std::any_of(lines.begin(), lines.end(), [&](const std::string& l) { return l.find(needle) != std::string::npos; });
}

}  // namespace

TEST_CASE("clear_denominators") {
  CHECK(clear_denominators(PolyQ::parse("1/2,1/3,-1")) == z({-3, -2, 6}));
  CHECK(clear_denominators(PolyQ::parse("4,6,2")) == z({2, 3, 1}));
  CHECK(clear_denominators(PolyQ::parse("-3/4,0,3/2")) == z({-1, 0, 2}));
}

TEST_CASE("eisenstein_check") {
  CHECK(eisenstein_check(z({-2, 0, 1})) == Integer(2));
  CHECK(eisenstein_check(z({6, -3, -12, 4})) == Integer(3));
  CHECK(eisenstein_check(z({10, 5, 1})) == Integer(5));
  CHECK_FALSE(eisenstein_check(z({1, 0, 1})));
  CHECK_FALSE(eisenstein_check(z({-4, 0, 1})));
  CHECK_FALSE(eisenstein_check(z({-2, 0, 2})));
}

TEST_CASE("ddf_cycle_type examples") {
  CHECK(ddf_cycle_type(PolyModP(3, {1, 0, 1})).degrees == std::vector<int>{2});
  CHECK(ddf_cycle_type(PolyModP(5, {1, 0, 1})).degrees == std::vector<int>{1, 1});
  CHECK(ddf_cycle_type(PolyModP(5, {0, 4, 0, 1})).degrees == std::vector<int>{1, 1, 1});
  CHECK(ddf_cycle_type(PolyModP(2, {1, 1, 0, 1})).degrees == std::vector<int>{3});
  CHECK(ddf_cycle_type(PolyQ::parse("-1,-1,0,0,0,0,0,0,1"), 3).to_string() == "p=3 [3,5]");
  CHECK_THROWS_AS(ddf_cycle_type(PolyModP(5, {0, 0, 1})), NotSquarefree);
  CHECK_THROWS_AS(ddf_cycle_type(PolyModP(5, {3})), DegreeDropped);
  CHECK_THROWS_AS(ddf_cycle_type(PolyQ::parse("1,0,3"), 3), DegreeDropped);
  CHECK_THROWS_AS(ddf_cycle_type(PolyQ::parse("1/3,0,1"), 3), BadPrime);
  CHECK_THROWS_AS(PolyModP(6, {1, 1}), NotPrime);
}

TEST_CASE("ddf agrees with brute-force factorisation") {
  std::mt19937_64 rng(15);
  int compared = 0;
  for (int p : {2, 3, 5, 7, 11, 13}) {
    std::uniform_int_distribution<int> coeff(0, p - 1), deg(1, 4);
    for (int k = 0; k < 150; ++k) {
      int n = deg(rng);
      std::vector<std::uint64_t> c;
      for (int i = 0; i < n; ++i) c.push_back(static_cast<std::uint64_t>(coeff(rng)));
      c.push_back(static_cast<std::uint64_t>(std::uniform_int_distribution<int>(1, p - 1)(rng)));
      PolyModP f(static_cast<std::uint64_t>(p), c);
      bool squarefree = gcd(f, f.derivative()).degree() == 0;
      if (!squarefree) {
        CHECK_THROWS_AS(ddf_cycle_type(f), NotSquarefree);
        continue;
      }
      oracle::ModPoly g(c.begin(), c.end());
      auto ct = ddf_cycle_type(f);
      CHECK(ct.degrees == oracle::brute_force_factor_degrees(g, p));
      CHECK(ct.total() == n);
      ++compared;
    }
  }
  CHECK(compared > 500);
}

TEST_CASE("irreducible_over_q routes") {
  auto lin = irreducible_over_q(PolyQ::parse("3,2"));
  CHECK(lin.irreducible);
  CHECK(lin.method == IrreducibilityMethod::Linear);

  auto eis = irreducible_over_q(PolyQ::parse("-2,0,1"));
  CHECK(eis.method == IrreducibilityMethod::Eisenstein);
  CHECK(eis.witness_prime == Integer(2));

  auto modp = irreducible_over_q(PolyQ::parse("-1,-1,0,1"));
  CHECK(modp.irreducible);
  CHECK(modp.method == IrreducibilityMethod::IrreducibleModP);
  CHECK(modp.witness_prime == Integer(2));

  auto sieve = irreducible_over_q(PolyQ::parse("-1,-1,0,0,0,0,0,0,1"));
  CHECK(sieve.irreducible);
  CHECK(sieve.method == IrreducibilityMethod::DegreeSieve);

  // Reducible modulo every prime, so none of the routes applies.
  auto quartic = irreducible_over_q(PolyQ::parse("1,0,0,0,1"));
  CHECK_FALSE(quartic.irreducible);
  CHECK(quartic.method == IrreducibilityMethod::None);

  CHECK_FALSE(irreducible_over_q(PolyQ::parse("2,-3,1")).irreducible);
  CHECK_FALSE(irreducible_over_q(PolyQ::parse("-1,-1,0,0,0,0,0,0,1"), 2).irreducible);
}

TEST_CASE("good primes skip the ramified ones") {
  auto f = PolyQ::parse("-1,-1,0,0,0,1");
  auto res = irreducible_over_q(f, 500);
  Integer disc = discriminant(f).numerator();
  for (auto p : res.skipped_primes) CHECK(mpz_divisible_ui_p(disc.get_mpz_t(), p) != 0);
  for (const auto& ct : res.cycle_types) CHECK(ct.total() == 5);
}

TEST_CASE("Eisenstein implies certified irreducibility") {
  std::mt19937_64 rng(16);
  int hits = 0;
  for (int k = 0; k < 400; ++k) {
    auto c = oracle::random_poly(rng, 2 + k % 5, 30, 1);
    PolyQ f(c);
    if (f.degree() < 1 || !eisenstein_check(clear_denominators(f))) continue;
    ++hits;
    auto res = irreducible_over_q(f);
    CHECK(res.irreducible);
    if (f.degree() > 1) CHECK(res.method == IrreducibilityMethod::Eisenstein);
  }
  CHECK(hits > 10);
}

TEST_CASE("symmetric group certificates") {
  auto s2 = symmetric_group_certificate(PolyQ::parse("-2,0,1"));
  CHECK(s2.verdict == GaloisVerdict::SymmetricGroup);
  CHECK(s2.discriminant == q(8));

  auto a3 = symmetric_group_certificate(PolyQ::parse("-1,-3,0,1"));
  CHECK(a3.verdict == GaloisVerdict::ContainsAlternating);
  CHECK(a3.discriminant == q(81));
  CHECK(a3.discriminant_is_square);

  auto s3 = symmetric_group_certificate(PolyQ::parse("-1,-1,0,1"));
  CHECK(s3.verdict == GaloisVerdict::SymmetricGroup);
  CHECK(s3.discriminant == q(-23));

  auto s8 = symmetric_group_certificate(PolyQ::parse("-1,-1,0,0,0,0,0,0,1"));
  CHECK(s8.verdict == GaloisVerdict::SymmetricGroup);
  CHECK(s8.long_prime == 5);

  // No prime q with 5/2 < q < 3.
  auto quintic = symmetric_group_certificate(PolyQ::parse("-1,-1,0,0,0,1"));
  CHECK(quintic.verdict == GaloisVerdict::Inconclusive);
  CHECK(any_line_contains(quintic.reasoning, "no prime q"));

  CHECK(symmetric_group_certificate(PolyQ::parse("1,0,-10,0,1")).verdict == GaloisVerdict::Inconclusive);
  CHECK(symmetric_group_certificate(PolyQ::parse("2,-3,1")).verdict == GaloisVerdict::Inconclusive);
}

TEST_CASE("a square discriminant never yields S_n") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 60; ++k) {
    PolyQ g(oracle::random_poly(rng, 2 + k % 4, 9, 1));
    PolyQ f = g * PolyQ::parse("-1,1");  // reducible, sometimes square-discriminant
    auto cert = symmetric_group_certificate(f, 60);
    CHECK(cert.verdict != GaloisVerdict::SymmetricGroup);
    auto own = symmetric_group_certificate(g, 60);
    if (own.verdict == GaloisVerdict::SymmetricGroup) {
      CHECK_FALSE(own.discriminant_is_square);
      CHECK(own.irreducibility.irreducible);
    }
  }
}

TEST_CASE("degree-10 certificate for bisectors 1, 2, 3") {
  auto W = wolff_data(q(1), q(2), q(3)).W;
  auto cert = symmetric_group_certificate(W);
  CHECK(cert.verdict == GaloisVerdict::SymmetricGroup);
  CHECK(cert.degree == 10);
  CHECK(cert.long_prime == 7);
  REQUIRE(cert.long_prime_cycle);
  CHECK(cert.long_prime_cycle->contains(7));
  CHECK_FALSE(cert.discriminant_is_square);
  CHECK(cert.irreducibility.irreducible);
  for (const auto& ct : cert.cycle_types) CHECK(ct.total() == 10);

  auto starved = symmetric_group_certificate(W, 2);
  CHECK(starved.verdict == GaloisVerdict::Inconclusive);
}

TEST_CASE("constructibility") {
  auto cubic = constructibility_verdict(PolyQ::parse("6,-3,-12,4"));
  CHECK(cubic.value == Constructibility::NotConstructible);
  CHECK(cubic.degree == 3);
  CHECK(cubic.evidence.method == IrreducibilityMethod::Eisenstein);

  CHECK(constructibility_verdict(PolyQ::parse("-2,0,1")).value == Constructibility::Constructible);
  CHECK(constructibility_verdict(PolyQ::parse("-5,1")).value == Constructibility::Constructible);
  CHECK(constructibility_verdict(PolyQ::parse("1,0,-10,0,1")).value == Constructibility::Unknown);
  CHECK(constructibility_verdict(PolyQ::parse("2,-3,1")).value == Constructibility::Unknown);
  CHECK(constructibility_verdict(PolyQ::parse("-1,-1,0,0,0,0,0,0,1")).value == Constructibility::Unknown);
  CHECK(constructibility_verdict(PolyQ::parse("-1,-1,0,0,0,1")).value == Constructibility::NotConstructible);
}

TEST_CASE("radical solvability reports") {
  auto rep = radical_solvability_report(q(1), q(2), q(3));
  CHECK(rep.status == RadicalStatus::NotRadical);
  CHECK(rep.certificate.verdict == GaloisVerdict::SymmetricGroup);
  CHECK(any_line_contains(rep.argument, "simultaneously"));
  CHECK(any_line_contains(rep.argument, "none of them is"));

  auto eq = radical_solvability_report(q(1), q(1), q(1));
  CHECK(eq.status == RadicalStatus::Inconclusive);
  CHECK(any_line_contains(eq.argument, "rational root 3/2"));
  CHECK(any_line_contains(eq.argument, "does not transfer"));

  CHECK(radical_solvability_report(q(1), q(2), q(3), 2).status == RadicalStatus::Inconclusive);
  CHECK_THROWS_AS(radical_solvability_report(q(0), q(2), q(3)), NonPositiveInput);
}

TEST_CASE("enum names") {
  CHECK(to_string(GaloisVerdict::SymmetricGroup) == "SymmetricGroup");
  CHECK(to_string(Constructibility::NotConstructible) == "NotConstructible");
  CHECK(to_string(RadicalStatus::NotRadical) == "NotRadical");
  CHECK(to_string(IrreducibilityMethod::DegreeSieve) == "degree-sieve");
}
