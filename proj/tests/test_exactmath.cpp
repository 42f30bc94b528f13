#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "anglebis/errors.hpp"
#include "anglebis/poly_mod_p.hpp"
#include "anglebis/poly_q.hpp"
#include "anglebis/primes.hpp"
#include "oracles.hpp"

using namespace anglebis;

namespace {
const PolyQ kCubic = PolyQ::parse("6,-3,-12,4");  // 4t^3 - 12t^2 - 3t + 6
}

TEST_CASE("rational canonical form") {
  Rational q(Integer(6), Integer(-4));
  CHECK(q.numerator() == -3);
  CHECK(q.denominator() == 2);
  CHECK(Rational::parse(" -10/4 ") == Rational(Integer(-5), Integer(2)));
  CHECK(Rational::parse("7").is_integer());
  CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
  CHECK(Rational::parse("1/3").to_long_double() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("rational results stay canonical") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    Rational a = oracle::random_rational(rng, 1000, 1000), b = oracle::random_rational(rng, 1000, 1000);
    for (const Rational& r : {a + b, a - b, a * b}) {
      CHECK(r.denominator() > 0);
      Integer g;
      Integer n = r.numerator();
      Integer d = r.denominator();
      mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
      CHECK(g == 1);
    }
  }
}

TEST_CASE("poly_eval") {
  CHECK(kCubic.eval(Rational(0)) == Rational(6));
  CHECK(PolyQ::parse("-1,0,1").eval(Rational(1)) == Rational(0));
  CHECK(kCubic.eval(Rational(1)) == Rational(-5));
}

TEST_CASE("Horner agrees with the power sum") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    auto c = oracle::random_poly(rng, static_cast<int>(rng() % 9), 50, 12);
    Rational x = oracle::random_rational(rng, 20, 7);
    CHECK(PolyQ(c).eval(x) == oracle::power_sum(c, x));
  }
}

TEST_CASE("poly arithmetic") {
  CHECK(PolyQ::parse("0,0,1").derivative() == PolyQ::parse("0,2"));
  CHECK(PolyQ::parse("-1,1") * PolyQ::parse("1,1") == PolyQ::parse("-1,0,1"));
  auto [q, r] = divmod(PolyQ::parse("0,0,0,1"), PolyQ::parse("-1,1"));
  CHECK(q == PolyQ::parse("1,1,1"));
  CHECK(r == PolyQ::parse("1"));
  CHECK_THROWS_AS(divmod(kCubic, PolyQ()), DivisionByZero);
  CHECK((kCubic - kCubic).is_zero());
  CHECK(PolyQ().degree() == -1);
  CHECK(PolyQ::parse("0,0,0").is_zero());
  CHECK(kCubic.to_coefficient_list() == "6,-3,-12,4");
  CHECK(kCubic.to_string() == "4t^3 - 12t^2 - 3t + 6");
}

TEST_CASE("division identity on random inputs") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    PolyQ f(oracle::random_poly(rng, 1 + static_cast<int>(rng() % 8), 30, 5));
    PolyQ g(oracle::random_poly(rng, static_cast<int>(rng() % 5), 30, 5));
    auto [q, r] = divmod(f, g);
    CHECK(q * g + r == f);
    CHECK(r.degree() < g.degree());
  }
}

TEST_CASE("resultant examples") {
  CHECK(resultant(PolyQ::parse("-2,1"), PolyQ::parse("-1,1")) == Rational(1));
  CHECK(resultant(PolyQ::parse("-1,0,1"), PolyQ::parse("0,1")) == Rational(-1));
  CHECK(resultant(PolyQ::parse("1,0,1"), PolyQ::parse("1,0,1")) == Rational(0));
}

TEST_CASE("resultant matches the Sylvester determinant and swaps with sign") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 150; ++i) {
    auto fc = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 6), 9, 4);
    auto gc = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 6), 9, 4);
    PolyQ f(fc), g(gc);
    Rational res = resultant(f, g);
    CHECK(res == oracle::sylvester_resultant(fc, gc));
    Rational swapped = resultant(g, f);
    CHECK(((f.degree() * g.degree()) % 2 == 0 ? swapped : -swapped) == res);
  }
}

TEST_CASE("discriminant") {
  CHECK(discriminant(PolyQ::parse("-2,0,1")) == Rational(8));
  CHECK(discriminant(PolyQ::parse("-1,-3,0,1")) == Rational(81));
  CHECK(discriminant(PolyQ::parse("1,1,1")) == Rational(-3));
  // b^2 - 4ac with a non-monic quadratic: 3t^2 + 5t - 2 -> 25 + 24
  CHECK(discriminant(PolyQ::parse("-2,5,3")) == Rational(49));
  CHECK_THROWS_AS(discriminant(PolyQ::parse("4")), InvalidArgument);
}

TEST_CASE("is_square") {
  CHECK(is_square(Rational(81)));
  CHECK_FALSE(is_square(Rational(8)));
  CHECK(is_square(Rational(Integer(4), Integer(9))));
  CHECK(is_square(Rational(0)));
  CHECK_FALSE(is_square(Rational(-4)));
  CHECK_FALSE(is_square(Rational(Integer(4), Integer(8))));
}

TEST_CASE("primality") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(561));                     // Carmichael
  CHECK(is_prime(18446744073709551557ull));       // largest 64-bit prime
  CHECK_FALSE(is_prime(3215031751ull));           // strong pseudoprime to 2, 3, 5, 7
  auto primes = primes_up_to(30);
  CHECK(primes == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  for (std::uint64_t n = 0; n < 2000; ++n) {
    bool trial = n >= 2;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) trial = false;
    CHECK(is_prime(n) == trial);
  }
}

TEST_CASE("reduce_mod_p") {
  CHECK(reduce_mod_p(kCubic, 5) == PolyModP(5, {1, 2, 3, 4}));
  CHECK_THROWS_AS(reduce_mod_p(PolyQ::parse("1,1/2"), 2), BadPrime);
  CHECK(reduce_mod_p(PolyQ::parse("7,0,1"), 7) == PolyModP(7, {0, 0, 1}));
  CHECK_THROWS_AS(reduce_mod_p(PolyQ::parse("1,7"), 7), BadPrime);
  CHECK_THROWS_AS(reduce_mod_p(kCubic, 9), NotPrime);
  // 2/3 mod 5 = 2 * 2 = 4
  CHECK(reduce_mod_p(PolyQ::parse("2/3,1"), 5) == PolyModP(5, {4, 1}));
}

TEST_CASE("poly mod p arithmetic") {
  PolyModP a(7, {1, 2, 3}), b(7, {6, 1});
  auto [q, r] = divmod(a, b);
  CHECK(q * b + r == a);
  CHECK(gcd(PolyModP(7, {6, 0, 1}), PolyModP(7, {6, 1})) == PolyModP(7, {6, 1}));
  // x^7 = x mod (x^2 + 1) over F_7?  x^7 = x^(4+3) = x^3 = -x
  PolyModP mod(7, {1, 0, 1});
  CHECK(pow_mod(PolyModP::x(7), 7, mod) == PolyModP(7, {0, 6}));
  CHECK_THROWS_AS(PolyModP(8, {1}), NotPrime);
}

TEST_CASE("discriminant vanishes mod p exactly when f mod p is not squarefree") {
  std::mt19937_64 rng(31);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    auto c = oracle::random_poly(rng, 2 + static_cast<int>(rng() % 5), 12, 1);
    PolyQ f(c);
    Rational disc = discriminant(f);
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
      if (mpz_divisible_ui_p(f.leading().numerator().get_mpz_t(), p)) continue;
      PolyModP fp = reduce_mod_p(f, p);
      bool not_squarefree = gcd(fp, fp.derivative()).degree() > 0;
      bool disc_zero = mpz_divisible_ui_p(disc.numerator().get_mpz_t(), p) != 0;
      CHECK(not_squarefree == disc_zero);
      ++checked;
    }
  }
  CHECK(checked > 500);
}
