#include "weilcensus/galoiscert.hpp"

#include <algorithm>
#include <numeric>

#include "weilcensus/errors.hpp"
#include "weilcensus/primes.hpp"

namespace weilcensus {

namespace {

void require_cycle_length(unsigned g, unsigned ell) {
  if (ell < 2 || ell > 2 * g || ell % 2 != 0) {
    throw InvalidArgument("cycle length " + std::to_string(ell) + " must be even in [2, 2g]");
  }
}

}  // namespace

std::vector<unsigned> required_cycle_lengths(unsigned g) {
  if (g == 1) return {};
  if (g == 2) return {2, 4};
  std::vector<unsigned> ells{2, 4, 2 * g - 2, 2 * g};
  std::sort(ells.begin(), ells.end());
  ells.erase(std::unique(ells.begin(), ells.end()), ells.end());
  return ells;
}

ModPolynomial reduce(const FrobeniusPolynomial& f, std::uint64_t prime) {
  return ModPolynomial::reduce(f.polynomial(), prime);
}

std::optional<CycleWitness> cycle_witness(const FrobeniusPolynomial& f, unsigned ell, std::uint64_t y) {
  require_cycle_length(f.g(), ell);
  if (y < 2) throw InvalidArgument("prime budget y must be at least 2");
  const int total = static_cast<int>(2 * f.g());
  for (std::uint64_t prime = 2; prime <= y; prime = next_prime(prime)) {
    if (prime == f.p()) continue;
    DegreePattern pattern = degree_pattern(reduce(f, prime));
    if (pattern.is_cycle_pattern(total, static_cast<int>(ell))) {
      return CycleWitness{ell, prime, std::move(pattern)};
    }
  }
  return std::nullopt;
}

GaloisVerdict certify_w2g(const FrobeniusPolynomial& f, std::uint64_t y) {
  GaloisVerdict verdict;
  if (f.g() == 1) {
    const BigInt disc = f.polynomial()[1] * f.polynomial()[1] - 4 * f.q();
    if (is_perfect_square(disc)) {
      verdict.note = "quadratic splits over Q (discriminant " + disc.str() + " is a square)";
    } else {
      verdict.kind = GaloisVerdict::Kind::CertifiedW2g;
      verdict.note = "irreducible quadratic (discriminant " + disc.str() + ")";
    }
    return verdict;
  }
  if (y < 2) throw InvalidArgument("prime budget y must be at least 2");

  // One pass over the primes serves every required length; the first hit per
  // length is the same prime cycle_witness would return.
  const auto ells = required_cycle_lengths(f.g());
  const int total = static_cast<int>(2 * f.g());
  std::vector<std::optional<CycleWitness>> found(ells.size());
  std::size_t missing = ells.size();
  for (std::uint64_t prime = 2; prime <= y && missing > 0; prime = next_prime(prime)) {
    if (prime == f.p()) continue;
    const DegreePattern pattern = degree_pattern(reduce(f, prime));
    if (!pattern.squarefree) continue;
    for (std::size_t i = 0; i < ells.size(); ++i) {
      if (!found[i] && pattern.is_cycle_pattern(total, static_cast<int>(ells[i]))) {
        found[i] = CycleWitness{ells[i], prime, pattern};
        --missing;
      }
    }
  }
  for (auto& w : found) {
    if (w) verdict.witnesses.push_back(std::move(*w));
  }
  if (missing == 0) {
    verdict.kind = GaloisVerdict::Kind::CertifiedW2g;
  } else {
    verdict.note = "no witness for some required cycle length at primes <= " + std::to_string(y);
  }
  return verdict;
}

BigInt weyl_order(unsigned g) {
  BigInt n = 1;
  for (unsigned i = 1; i <= g; ++i) n *= 2 * i;
  return n;
}

std::uint64_t count_l_cycles(unsigned g, unsigned ell) {
  if (g < 1) throw InvalidArgument("dimension must be positive");
  if (g > 7) throw Refusal("W_2g enumeration is limited to g <= 7", weyl_order(g).str());
  const unsigned n = 2 * g;
  std::vector<unsigned> sigma(g);
  std::iota(sigma.begin(), sigma.end(), 0u);
  std::vector<unsigned> image(n);
  std::vector<bool> seen(n);
  std::uint64_t count = 0;
  do {
    for (unsigned flips = 0; flips < (1u << g); ++flips) {
      // Point 2i + b goes to 2 sigma(i) + (b xor flip_i); pairs {2i, 2i+1} are blocks.
      for (unsigned i = 0; i < g; ++i) {
        const unsigned f = (flips >> i) & 1u;
        image[2 * i] = 2 * sigma[i] + f;
        image[2 * i + 1] = 2 * sigma[i] + (1u - f);
      }
      std::fill(seen.begin(), seen.end(), false);
      unsigned long_cycles = 0, long_length = 0;
      bool shape_ok = true;
      for (unsigned s = 0; s < n && shape_ok; ++s) {
        if (seen[s]) continue;
        unsigned len = 0;
        for (unsigned x = s; !seen[x]; x = image[x]) {
          seen[x] = true;
          ++len;
        }
        if (len > 1) {
          ++long_cycles;
          long_length = len;
          if (long_cycles > 1) shape_ok = false;
        }
      }
      if (shape_ok && long_cycles == 1 && long_length == ell) ++count;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return count;
}

}  // namespace weilcensus
