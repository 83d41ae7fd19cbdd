#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "weilcensus/bigint.hpp"

namespace weilcensus {

/// Deterministic primality test for 64-bit integers.
bool is_prime(std::uint64_t n);

/// All primes p <= n in increasing order.
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

/// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);

struct PrimePower {
  std::uint64_t p;
  unsigned k;
};

/// Decomposes q = p^k; empty when q is not a prime power.
std::optional<PrimePower> as_prime_power(const BigInt& q);

/// Residue of a (possibly negative) integer modulo m, in [0, m).
std::uint64_t mod_reduce(const BigInt& a, std::uint64_t m);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m);

/// Inverse of a modulo the prime p; a must be nonzero mod p.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p);

}  // namespace weilcensus
