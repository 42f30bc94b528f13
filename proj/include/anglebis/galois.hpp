#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "anglebis/poly_mod_p.hpp"
#include "anglebis/poly_q.hpp"
#include "anglebis/triangle.hpp"

namespace anglebis {

inline constexpr std::uint64_t kDefaultPrimeBound = 500;

/// Factor degrees of f mod p; by Dedekind's theorem, the cycle type of a
/// Frobenius element when p is unramified.
struct CycleType {
  std::uint64_t prime = 0;
  std::vector<int> degrees;  // ascending

  int total() const;
  bool contains(int d) const;
  std::string to_string() const;
  friend bool operator==(const CycleType&, const CycleType&) = default;
};

/// Multiply by the lcm of denominators, divide by the content, make the
/// leading coefficient positive.
PolyZ clear_denominators(const PolyQ& f);

/// First prime p (increasing) dividing the constant term with p not
/// dividing the leading coefficient, p dividing every other coefficient and
/// p^2 not dividing the constant term. nullopt says nothing about
/// reducibility.
std::optional<Integer> eisenstein_check(const PolyZ& f);

/// Distinct-degree factorisation, keeping only the degrees. Requires f to
/// be squarefree mod p with nonzero leading coefficient.
/// Throws NotSquarefree or DegreeDropped (for the zero/constant input).
CycleType ddf_cycle_type(const PolyModP& f);

/// Reduces f mod p first; throws DegreeDropped when p divides the leading
/// coefficient and BadPrime when p divides a denominator.
CycleType ddf_cycle_type(const PolyQ& f, std::uint64_t p);

enum class IrreducibilityMethod { None, Linear, Eisenstein, IrreducibleModP, DegreeSieve };

struct IrreducibilityResult {
  bool irreducible = false;  // false means Unknown, never Reducible
  IrreducibilityMethod method = IrreducibilityMethod::None;
  std::optional<Integer> witness_prime;
  std::string witness;                       // human-readable justification
  std::vector<CycleType> cycle_types;        // good primes sampled, increasing
  std::vector<std::uint64_t> skipped_primes; // dividing lc or the discriminant
};

std::string to_string(IrreducibilityMethod m);

/// Tries, in order: degree 1, Eisenstein, a prime p <= prime_bound with f
/// irreducible mod p, and the factor-degree sieve over all good primes
/// sampled so far.
IrreducibilityResult irreducible_over_q(const PolyQ& f, std::uint64_t prime_bound = kDefaultPrimeBound);

enum class GaloisVerdict { SymmetricGroup, ContainsAlternating, Inconclusive };
std::string to_string(GaloisVerdict v);

struct GaloisCertificate {
  GaloisVerdict verdict = GaloisVerdict::Inconclusive;
  int degree = 0;
  IrreducibilityResult irreducibility;
  std::vector<CycleType> cycle_types;            // every good prime sampled, increasing
  std::optional<CycleType> long_prime_cycle;     // contains a prime q, n/2 < q < n - 2
  std::optional<int> long_prime;                 // that q
  Rational discriminant;
  bool discriminant_is_square = false;
  std::uint64_t prime_bound = 0;
  std::vector<std::string> reasoning;  // the argument, one step per line
};

/// Certifies Gal(f) = S_n from (a) irreducibility, (b) a Frobenius cycle
/// type with a prime cycle length q, n/2 < q < n - 2 (primitive by
/// transitivity plus the long cycle, then Jordan gives A_n inside) and (c) a
/// non-square discriminant. n = 2 and n = 3 use the complete classical
/// classification instead of (b).
GaloisCertificate symmetric_group_certificate(const PolyQ& f,
                                              std::uint64_t prime_bound = kDefaultPrimeBound);

enum class Constructibility { Constructible, NotConstructible, Unknown };
std::string to_string(Constructibility c);

struct ConstructibilityVerdict {
  Constructibility value = Constructibility::Unknown;
  std::string reason;
  int degree = 0;
  IrreducibilityResult evidence;
};

/// Ruler-and-compass verdict for a root of f, assuming f is its minimal
/// polynomial candidate: certified irreducible of degree not a power of two
/// is NotConstructible; degree 1 or certified irreducible quadratic is
/// Constructible; everything else is Unknown.
ConstructibilityVerdict constructibility_verdict(const PolyQ& f,
                                                 std::uint64_t prime_bound = kDefaultPrimeBound);

enum class RadicalStatus { NotRadical, Inconclusive };
std::string to_string(RadicalStatus s);

struct RadicalReport {
  RadicalStatus status = RadicalStatus::Inconclusive;
  Rational la, lb, lc;
  SymmetricInvariants<Rational> invariants;
  PolyQ W;
  GaloisCertificate certificate;
  std::vector<std::string> argument;
};

/// Whether the inradius, area and semiperimeter of the triangle with the
/// given rational bisectors are expressible in radicals over Q.
RadicalReport radical_solvability_report(const Rational& la, const Rational& lb, const Rational& lc,
                                         std::uint64_t prime_bound = kDefaultPrimeBound);

}  // namespace anglebis
