#pragma once

#include <cstdint>
#include <vector>

namespace anglebis {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Primes p with 2 <= p <= bound, increasing.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
/// Inverse of a modulo prime p; a must be nonzero mod p.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

}  // namespace anglebis
