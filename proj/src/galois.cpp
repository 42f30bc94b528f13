#include "anglebis/galois.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "anglebis/errors.hpp"
#include "anglebis/inverse_solver.hpp"
#include "anglebis/primes.hpp"
#include "anglebis/wolff.hpp"

namespace anglebis {

int CycleType::total() const {
  int s = 0;
  for (int d : degrees) s += d;
  return s;
}

bool CycleType::contains(int d) const { return std::find(degrees.begin(), degrees.end(), d) != degrees.end(); }

std::string CycleType::to_string() const {
  std::ostringstream os;
  os << "p=" << prime << " [";
  for (std::size_t i = 0; i < degrees.size(); ++i) os << (i ? "," : "") << degrees[i];
  os << ']';
  return os.str();
}

PolyZ clear_denominators(const PolyQ& f) {
  if (f.is_zero()) throw InvalidArgument("clear_denominators of the zero polynomial");
  return primitive_integer_form(f).first;
}

namespace {

bool divides(const Integer& d, const Integer& n) { return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0; }

// Prime divisors of |n| > 0 in increasing order. Trial division handles
// everything below 10^6; a leftover cofactor is kept only if it is prime.
std::vector<Integer> prime_divisors(Integer n) {
  std::vector<Integer> out;
  n = abs(n);
  for (unsigned long d = 2; d <= 1000000 && Integer(d) * d <= n; ++d) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      out.emplace_back(d);
      while (mpz_divisible_ui_p(n.get_mpz_t(), d)) mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
    }
  }
  if (n > 1 && mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) out.push_back(n);
  return out;
}

std::set<int> subset_sums(const std::vector<int>& parts, int n) {
  std::vector<bool> reach(static_cast<std::size_t>(n) + 1, false);
  reach[0] = true;
  for (int d : parts)
    for (int s = n; s >= d; --s)
      if (reach[static_cast<std::size_t>(s - d)]) reach[static_cast<std::size_t>(s)] = true;
  std::set<int> out;
  for (int s = 1; s < n; ++s)
    if (reach[static_cast<std::size_t>(s)]) out.insert(s);
  return out;
}

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Good primes: p does not divide lc(F) and F mod p is squarefree, i.e.
// p does not divide the discriminant.
std::optional<CycleType> cycle_type_if_good(const PolyZ& F, std::uint64_t p) {
  if (mpz_divisible_ui_p(F.leading().get_mpz_t(), p)) return std::nullopt;
  try {
    return ddf_cycle_type(reduce_mod_p(F.to_rational(), p));
  } catch (const NotSquarefree&) {
    return std::nullopt;
  }
}

std::string join(const std::vector<CycleType>& cts) {
  std::string out;
  for (const auto& ct : cts) {
    if (!out.empty()) out += "; ";
    out += ct.to_string();
  }
  return out;
}

}  // namespace

std::optional<Integer> eisenstein_check(const PolyZ& f) {
  if (f.degree() < 1) return std::nullopt;
  const Integer& constant = f.coefficients().front();
  if (constant == 0) return std::nullopt;
  for (const Integer& p : prime_divisors(constant)) {
    if (divides(p, f.leading())) continue;
    if (divides(p * p, constant)) continue;
    bool all = true;
    for (int i = 1; i < f.degree() && all; ++i) all = divides(p, f.coeff(i));
    if (all) return p;
  }
  return std::nullopt;
}

CycleType ddf_cycle_type(const PolyModP& f) {
  if (f.degree() < 1) throw DegreeDropped("cycle type needs a polynomial of degree >= 1 mod p");
  if (gcd(f, f.derivative()).degree() > 0) throw NotSquarefree(f.to_string() + " is not squarefree");
  const std::uint64_t p = f.modulus();
  CycleType out{p, {}};
  PolyModP g = f.monic();
  const PolyModP x = PolyModP::x(p);
  PolyModP h = x % g;
  for (int d = 1; 2 * d <= g.degree(); ++d) {
    h = pow_mod(h, p, g);  // x^(p^d) mod g
    PolyModP factor = gcd(g, h - x);
    if (factor.degree() > 0) {
      for (int k = 0; k < factor.degree() / d; ++k) out.degrees.push_back(d);
      g = divmod(g, factor).first;
      h = h % g;
    }
  }
  if (g.degree() > 0) out.degrees.push_back(g.degree());
  std::sort(out.degrees.begin(), out.degrees.end());
  return out;
}

CycleType ddf_cycle_type(const PolyQ& f, std::uint64_t p) {
  if (f.degree() < 1) throw DegreeDropped("cycle type needs a polynomial of degree >= 1");
  Integer pz(std::to_string(p));
  if (divides(pz, f.leading().numerator()))
    throw DegreeDropped(std::to_string(p) + " divides the leading coefficient");
  return ddf_cycle_type(reduce_mod_p(f, p));
}

std::string to_string(IrreducibilityMethod m) {
  switch (m) {
    case IrreducibilityMethod::None: return "none";
    case IrreducibilityMethod::Linear: return "linear";
    case IrreducibilityMethod::Eisenstein: return "eisenstein";
    case IrreducibilityMethod::IrreducibleModP: return "irreducible-mod-p";
    case IrreducibilityMethod::DegreeSieve: return "degree-sieve";
  }
  return "none";
}

IrreducibilityResult irreducible_over_q(const PolyQ& f, std::uint64_t prime_bound) {
  IrreducibilityResult out;
  const int n = f.degree();
  if (n < 1) {
    out.witness = "constant polynomial";
    return out;
  }
  if (n == 1) {
    out.irreducible = true;
    out.method = IrreducibilityMethod::Linear;
    out.witness = "degree 1";
    return out;
  }
  const PolyZ F = clear_denominators(f);
  if (auto p = eisenstein_check(F)) {
    out.irreducible = true;
    out.method = IrreducibilityMethod::Eisenstein;
    out.witness_prime = *p;
    out.witness = "Eisenstein criterion at p = " + p->get_str();
    return out;
  }

  std::set<int> possible;  // proper factor degrees not yet excluded
  for (int d = 1; d < n; ++d) possible.insert(d);
  for (std::uint64_t p : primes_up_to(prime_bound)) {
    auto ct = cycle_type_if_good(F, p);
    if (!ct) {
      out.skipped_primes.push_back(p);
      continue;
    }
    out.cycle_types.push_back(*ct);
    if (ct->degrees.size() == 1) {
      out.irreducible = true;
      out.method = IrreducibilityMethod::IrreducibleModP;
      out.witness_prime = Integer(std::to_string(p));
      out.witness = "irreducible modulo p = " + std::to_string(p);
      return out;
    }
    std::set<int> sums = subset_sums(ct->degrees, n), kept;
    std::set_intersection(possible.begin(), possible.end(), sums.begin(), sums.end(),
                          std::inserter(kept, kept.begin()));
    possible = std::move(kept);
    if (possible.empty()) {
      out.irreducible = true;
      out.method = IrreducibilityMethod::DegreeSieve;
      out.witness = "no proper factor degree is compatible with the factorisations " + join(out.cycle_types);
      return out;
    }
  }
  out.witness = "not certified with primes up to " + std::to_string(prime_bound);
  return out;
}

std::string to_string(GaloisVerdict v) {
  switch (v) {
    case GaloisVerdict::SymmetricGroup: return "SymmetricGroup";
    case GaloisVerdict::ContainsAlternating: return "ContainsAlternating";
    case GaloisVerdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

GaloisCertificate symmetric_group_certificate(const PolyQ& f, std::uint64_t prime_bound) {
  GaloisCertificate cert;
  const int n = f.degree();
  cert.degree = n;
  cert.prime_bound = prime_bound;
  if (n < 2) {
    cert.reasoning.push_back("degree below 2: no certificate");
    return cert;
  }
  cert.irreducibility = irreducible_over_q(f, prime_bound);
  cert.discriminant = discriminant(f);
  cert.discriminant_is_square = is_square(cert.discriminant);
  const std::string sn = "S" + std::to_string(n);
  const std::string an = "A" + std::to_string(n);

  auto& why = cert.reasoning;
  if (!cert.irreducibility.irreducible) {
    why.push_back("irreducibility over Q not certified (" + cert.irreducibility.witness +
                  "); transitivity unknown");
    return cert;
  }
  why.push_back("irreducible over Q (" + cert.irreducibility.witness + "), so the Galois group is transitive");
  const std::string disc_note = cert.discriminant_is_square
                                    ? "discriminant is a square in Q, so the group lies in " + an
                                    : "discriminant is not a square in Q, so the group is not contained in " + an;

  if (n == 2 || n == 3) {
    why.push_back(disc_note);
    if (n == 2) {
      cert.verdict = GaloisVerdict::SymmetricGroup;
      why.push_back("a transitive subgroup of S2 is S2");
    } else if (!cert.discriminant_is_square) {
      cert.verdict = GaloisVerdict::SymmetricGroup;
      why.push_back("the transitive subgroups of S3 are A3 and S3; the discriminant rules out A3");
    } else {
      cert.verdict = GaloisVerdict::ContainsAlternating;
      why.push_back("the group is A3");
    }
    return cert;
  }

  std::vector<int> long_primes;
  for (int q = n / 2 + 1; q < n - 2; ++q)
    if (2 * q > n && is_prime(static_cast<std::uint64_t>(q))) long_primes.push_back(q);

  const PolyZ F = clear_denominators(f);
  if (!long_primes.empty()) {
    for (std::uint64_t p : primes_up_to(prime_bound)) {
      auto ct = cycle_type_if_good(F, p);
      if (!ct) continue;
      cert.cycle_types.push_back(*ct);
      for (int q : long_primes) {
        if (ct->contains(q)) {
          cert.long_prime_cycle = *ct;
          cert.long_prime = q;
          break;
        }
      }
      if (cert.long_prime) break;
    }
  }
  if (!cert.long_prime) {
    why.push_back(long_primes.empty()
                      ? "no prime q with n/2 < q < n-2 exists for n = " + std::to_string(n)
                      : "no Frobenius cycle type with a long prime cycle found below " +
                            std::to_string(prime_bound));
    why.push_back(disc_note);
    return cert;
  }
  const std::string q = std::to_string(*cert.long_prime);
  why.push_back("Frobenius at " + cert.long_prime_cycle->to_string() + " has a power that is a " + q +
                "-cycle (Dedekind)");
  why.push_back("a transitive group of degree " + std::to_string(n) + " with a " + q +
                "-cycle, " + q + " > n/2, is primitive");
  why.push_back("a primitive group containing a " + q + "-cycle with " + q +
                " <= n-3 contains " + an + " (Jordan)");
  why.push_back(disc_note);
  if (cert.discriminant_is_square) {
    cert.verdict = GaloisVerdict::ContainsAlternating;
    why.push_back("the Galois group is " + an);
  } else {
    cert.verdict = GaloisVerdict::SymmetricGroup;
    why.push_back("the Galois group is " + sn);
  }
  return cert;
}

std::string to_string(Constructibility c) {
  switch (c) {
    case Constructibility::Constructible: return "Constructible";
    case Constructibility::NotConstructible: return "NotConstructible";
    case Constructibility::Unknown: return "Unknown";
  }
  return "Unknown";
}

ConstructibilityVerdict constructibility_verdict(const PolyQ& f, std::uint64_t prime_bound) {
  ConstructibilityVerdict out;
  out.degree = f.degree();
  if (out.degree < 1) {
    out.reason = "constant polynomial has no root";
    return out;
  }
  out.evidence = irreducible_over_q(f, prime_bound);
  const std::string n = std::to_string(out.degree);
  if (out.degree == 1) {
    out.value = Constructibility::Constructible;
    out.reason = "rational root";
  } else if (!out.evidence.irreducible) {
    out.reason = "irreducibility not certified (" + out.evidence.witness +
                 "); the minimal polynomial degree is unknown";
  } else if (!is_power_of_two(out.degree)) {
    out.value = Constructibility::NotConstructible;
    out.reason = "irreducible over Q (" + out.evidence.witness + ") of degree " + n +
                 ", which is not a power of 2";
  } else if (out.degree == 2) {
    out.value = Constructibility::Constructible;
    out.reason = "root of an irreducible quadratic: one square root over Q";
  } else {
    out.reason = "irreducible of degree " + n +
                 ", a power of 2; the degree condition is necessary but not sufficient";
  }
  return out;
}

std::string to_string(RadicalStatus s) {
  return s == RadicalStatus::NotRadical ? "NotRadical" : "Inconclusive";
}

namespace {

// Best rational approximation with denominator <= max_den (continued fractions).
Rational best_rational(double x, long max_den) {
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double v = x;
  for (int i = 0; i < 64; ++i) {
    double a_f = std::floor(v);
    if (std::abs(a_f) > 1e15) break;
    long a = static_cast<long>(a_f);
    long h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    double frac = v - a_f;
    if (frac < 1e-15) break;
    v = 1 / frac;
  }
  return Rational(Integer(h1), Integer(k1 == 0 ? 1 : k1));
}

}  // namespace

RadicalReport radical_solvability_report(const Rational& la, const Rational& lb, const Rational& lc,
                                         std::uint64_t prime_bound) {
  RadicalReport rep;
  rep.la = la;
  rep.lb = lb;
  rep.lc = lc;
  rep.invariants = symmetric_invariants(la, lb, lc);
  rep.W = wolff_polynomial(rep.invariants);
  rep.certificate = symmetric_group_certificate(rep.W, prime_bound);
  auto& arg = rep.argument;
  arg.push_back("t = 1/(2r) is a root of the degree-10 polynomial W with coefficients in Q(a2, a3, a4) = Q");

  if (rep.certificate.verdict == GaloisVerdict::SymmetricGroup) {
    rep.status = RadicalStatus::NotRadical;
    for (const auto& line : rep.certificate.reasoning) arg.push_back(line);
    arg.push_back("S10 is not solvable and W is irreducible, so no root of W is expressible in radicals over Q; "
                  "in particular 1/(2r), and therefore r, is not");
    arg.push_back("p = r / sqrt(4 a2 r^2 - 8 a3 r^3 - 1) and S = p r, so p and S are radical over Q(r); "
                  "conversely r satisfies 4 a2 r^2 p^2 - 8 a3 r^3 p^2 = r^2 + p^2 (cubic in r over Q(p)) and "
                  "4 a2 r^2 S^2 - 8 a3 r^3 S^2 = r^4 + S^2 (quartic in r over Q(S))");
    arg.push_back("hence r, S and p are simultaneously (non-)expressible in radicals: none of them is");
    return rep;
  }

  rep.status = RadicalStatus::Inconclusive;
  for (const auto& line : rep.certificate.reasoning) arg.push_back(line);
  if (!rep.certificate.irreducibility.irreducible) {
    arg.push_back("irreducibility of this specialisation of W is not certified; irreducibility of W over "
                  "Q(a2, a3, a4) with indeterminate invariants does not transfer to specialisations");
  }
  // A rational root at 1/(2r) settles the specialisation the other way.
  try {
    auto solved = solve_from_bisectors(la.to_double(), lb.to_double(), lc.to_double());
    Rational guess = best_rational(1 / (2 * inradius(solved.triangle)), 1000000);
    if (rep.W.eval(guess).is_zero()) {
      arg.push_back("W has the rational root " + guess.to_string() + " = 1/(2r), so r = " +
                    (Rational(1) / (Rational(2) * guess)).to_string() +
                    " is rational and W is reducible for these bisectors");
    }
  } catch (const Error&) {
    // the exact verdict above stands on its own
  }
  return rep;
}

}  // namespace anglebis
