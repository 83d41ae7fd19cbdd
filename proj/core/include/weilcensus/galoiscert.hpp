#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weilcensus/modpoly.hpp"
#include "weilcensus/weilpoly.hpp"

namespace weilcensus {

/// An auxiliary prime at which f factors as 2g - ell distinct linear factors
/// times one irreducible factor of degree ell, so Gal(f) contains an ell-cycle.
struct CycleWitness {
  unsigned ell;
  std::uint64_t witness_prime;
  DegreePattern pattern;
};

/// One-sided verdict: Unknown never means "not W_2g".
struct GaloisVerdict {
  enum class Kind { CertifiedW2g, Unknown };

  Kind kind = Kind::Unknown;
  std::vector<CycleWitness> witnesses;
  std::string note;

  bool certified() const { return kind == Kind::CertifiedW2g; }
};

/// Cycle lengths whose presence forces Gal(f) = W_2g: {2, 4, 2g-2, 2g} for
/// g >= 3, {2, 4} for g = 2 and none for g = 1 (handled by the discriminant).
std::vector<unsigned> required_cycle_lengths(unsigned g);

/// f reduced modulo an auxiliary prime.
ModPolynomial reduce(const FrobeniusPolynomial& f, std::uint64_t prime);

/// First prime p' <= y, p' != p, with f mod p' squarefree of pattern
/// {1^(2g-ell), ell}, scanning in increasing order.
std::optional<CycleWitness> cycle_witness(const FrobeniusPolynomial& f, unsigned ell, std::uint64_t y);

/// Certifies Gal(f) = W_2g from cycle witnesses at primes <= y. For g = 1 the
/// test is irreducibility over Q (discriminant a_1^2 - 4q not a square).
GaloisVerdict certify_w2g(const FrobeniusPolynomial& f, std::uint64_t y);

/// |W_2g| = 2^g g!.
BigInt weyl_order(unsigned g);

/// Number of elements of W_2g acting on 2g points as a single ell-cycle plus
/// fixed points, by enumeration of all signed permutations. Refuses g > 7.
std::uint64_t count_l_cycles(unsigned g, unsigned ell);

}  // namespace weilcensus
