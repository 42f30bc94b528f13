#include "anglebis/rational.hpp"

#include <cctype>

#include <mpfr.h>

#include "anglebis/errors.hpp"

namespace anglebis {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view text, std::string_view whole) {
  text = trim(text);
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw ParseError("not a rational number: '" + std::string(whole) + "'");
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw ParseError("not a rational number: '" + std::string(whole) + "'");
  }
  std::string owned(text.front() == '+' ? text.substr(1) : text);
  return Integer(owned, 10);
}

}  // namespace

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw DivisionByZero("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  return Rational(parse_integer(text.substr(0, slash), text),
                  parse_integer(text.substr(slash + 1), text));
}

long double Rational::to_long_double() const {
  mpfr_t tmp;
  mpfr_init2(tmp, 128);
  mpfr_set_q(tmp, value_.get_mpq_t(), MPFR_RNDN);
  long double out = mpfr_get_ld(tmp, MPFR_RNDN);
  mpfr_clear(tmp);
  return out;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational pow(const Rational& base, unsigned exponent) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return Rational(num, den);
}

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

bool is_perfect_square(const Integer& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_square(const Rational& q) {
  if (q.sign() < 0) return false;
  return is_perfect_square(q.numerator()) && is_perfect_square(q.denominator());
}

}  // namespace anglebis
