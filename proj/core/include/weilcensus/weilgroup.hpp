#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weilcensus/galoiscert.hpp"
#include "weilcensus/weilpoly.hpp"

namespace weilcensus {

/// alpha = q^m * prod_i pi_i^(n_i).
struct ExponentVector {
  std::int64_t m = 0;
  std::vector<std::int64_t> n;

  auto operator<=>(const ExponentVector&) const = default;
  std::string to_string() const;
};

/// Integrality model for a q-Weil number alpha in Phi_pi under ordinarity and
/// Gal = W_2g: 2m + sum n_i = 1 and m + sum_{i in S} n_i >= 0 for every subset
/// S of {1..g}. The single bounds |n_i| <= 1 and pair bounds |n_i + n_j| <= 1
/// are consequences, kept explicitly so both forms can be cross-checked.
struct ConstraintSystem {
  struct PairBound {
    unsigned i, j;
  };

  unsigned g = 0;
  std::vector<unsigned> single_bounds;  // |n_i| <= 1, 1-based indices
  std::vector<PairBound> pair_bounds;   // |n_i + n_j| <= 1, i < j
  /// Every solution of the subset family on the verification box met the bounds.
  bool bounds_verified = false;

  bool satisfies_family(const ExponentVector& e) const;
  bool satisfies_bounds(const ExponentVector& e) const;
};

/// Default cap on search-tree nodes visited by solve_constraints.
inline constexpr std::uint64_t kDefaultConstraintWorkLimit = 100'000'000;

/// All (m, n) with |m|, |n_i| <= bound satisfying the subset family, sorted.
/// Depth-first over n_1..n_g with the running inequalities pruned
/// incrementally; every leaf is rechecked against all 2^g subsets. Throws
/// Refusal when the visited-node count exceeds work_limit.
std::vector<ExponentVector> solve_constraints(unsigned g, std::int64_t bound,
                                              std::uint64_t work_limit = kDefaultConstraintWorkLimit);

/// Materializes the single and pair bounds and verifies them against the
/// solver's solution set on a box of half-width 2.
ConstraintSystem derive_bounds(unsigned g);

struct Prop2Verdict {
  enum class Kind { ConjugatesOnly, Unknown };

  Kind kind = Kind::Unknown;
  WeilStatus weil = WeilStatus::NotWeil;
  bool ordinary = false;
  GaloisVerdict galois;
  /// Name of the first failed gate for Unknown; empty otherwise.
  std::string reason;

  bool conjugates_only() const { return kind == Kind::ConjugatesOnly; }
};

/// ConjugatesOnly iff the point is Weil with no real roots, ordinary, and
/// certified to have Galois group W_2g with witnesses at primes <= y.
Prop2Verdict prop2_decide(const WeilCoefficients& w, std::uint64_t y);

/// Searches |m|, |n_i| <= N (not all zero), in shells of increasing max-norm,
/// for q^m prod pi_i^(n_i) = 1 at one complex embedding, within tol. One root
/// of each q-conjugate pair is used. Throws NumericalFailure if the roots'
/// relative residual exceeds tol.
std::optional<ExponentVector> relation_search(const FrobeniusPolynomial& f, int max_exponent, long double tol);

}  // namespace weilcensus
