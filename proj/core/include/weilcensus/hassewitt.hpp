#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weilcensus/intpoly.hpp"
#include "weilcensus/modpoly.hpp"

namespace weilcensus {

/// y^2 = f(x) over F_p, p odd, with f squarefree mod p of degree 2g+1 or 2g+2.
class HyperellipticCurve {
 public:
  /// Throws InvalidArgument for even or non-prime p, degree < 3 mod p, or a
  /// singular model (f not squarefree mod p).
  HyperellipticCurve(std::uint64_t p, IntPolynomial f);

  std::uint64_t p() const { return p_; }
  const IntPolynomial& f() const { return f_; }
  unsigned genus() const { return genus_; }

 private:
  std::uint64_t p_;
  IntPolynomial f_;
  unsigned genus_;
};

/// Cartier-Manin matrix: entry (i, j) = coefficient of x^(ip - j) in
/// f(x)^((p-1)/2), 1 <= i, j <= g.
class HasseWittMatrix {
 public:
  HasseWittMatrix(std::uint64_t p, unsigned g, std::vector<std::uint64_t> entries);

  std::uint64_t p() const { return p_; }
  unsigned size() const { return g_; }
  std::uint64_t at(unsigned i, unsigned j) const { return entries_.at((i - 1) * g_ + (j - 1)); }
  std::uint64_t determinant() const;
  const std::vector<std::uint64_t>& entries() const { return entries_; }

  friend bool operator==(const HasseWittMatrix&, const HasseWittMatrix&) = default;

 private:
  std::uint64_t p_;
  unsigned g_;
  std::vector<std::uint64_t> entries_;
};

HasseWittMatrix hasse_witt(const HyperellipticCurve& curve);

/// det(hasse_witt) != 0. Only the prime field is supported: k > 1 throws.
bool is_ordinary_curve(const HyperellipticCurve& curve, unsigned k = 1);

/// Per-u solve of the ordinarity system for y^2 = x^(2g+1) + x.
struct MillerRow {
  unsigned u = 0;
  /// Unique v in [0, g-1] with (p+1)/2 + u = p(v+1) mod g.
  unsigned v = 0;
  /// t = (p(v+1) - (p+1)/2 - u) / 2g when integral.
  std::optional<std::int64_t> t;
  /// r = (p-1)/2 - t when t is integral.
  std::optional<std::int64_t> r;
  /// Integral t and r with r, t >= 0.
  bool solvable = false;
  /// v + 1 = u + (p+1)/2 mod 2.
  bool parity_holds = false;
};

struct MillerParity {
  std::uint64_t p = 0;
  unsigned g = 0;
  /// Every u solvable.
  bool claims_ordinary = false;
  /// Every u satisfies the parity shortcut.
  bool parity_claims_ordinary = false;
  std::vector<MillerRow> rows;
};

/// Throws InvalidArgument when p | g or p is not an odd prime.
MillerParity miller_parity(std::uint64_t p, unsigned g);

/// Miller-system and parity claims against the matrix ordinarity of
/// y^2 = x^(2g+1) + x, which is taken as the truth.
struct MillerComparison {
  MillerParity parity;
  bool matrix_ordinary = false;
  bool system_agrees() const { return parity.claims_ordinary == matrix_ordinary; }
  bool parity_agrees() const { return parity.parity_claims_ordinary == matrix_ordinary; }
  bool disagreement() const { return !system_agrees() || !parity_agrees(); }
};

MillerComparison compare_miller(std::uint64_t p, unsigned g);

/// (x - u)(x^(2g+delta) + t x^g + 1) with delta = 1 when p | g.
IntPolynomial family_T_polynomial(std::uint64_t p, unsigned g, std::uint64_t t, std::uint64_t u);

struct FamilyWitness {
  std::uint64_t t;
  std::uint64_t u;
};

struct FamilyScan {
  std::optional<FamilyWitness> witness;
  /// Nonsingular curves whose matrix was computed.
  std::uint64_t examined = 0;
  /// (t, u) with u^(2g+delta) + t u^g + 1 = 0.
  std::uint64_t outside_domain = 0;
  /// Remaining models that are singular mod p.
  std::uint64_t singular = 0;
};

/// Walks (t, u) in F_p^2 lexicographically and returns the first ordinary
/// member of T, examining at most max_samples nonsingular curves.
FamilyScan scan_family_T(std::uint64_t p, unsigned g, std::uint64_t max_samples);

struct S0Row {
  std::uint64_t u;
  bool ordinary;
};

struct S0Table {
  std::uint64_t p = 0;
  unsigned g = 0;
  std::vector<S0Row> rows;
  /// u with u^(2g) = 1, excluded by the domain.
  std::vector<std::uint64_t> excluded;
  /// u with u^(2g) = -1, where the model is singular.
  std::vector<std::uint64_t> singular;
};

/// Ordinarity of y^2 = (x - u)(x^(2g) + 1) for every admissible u in F_p.
/// Requires g even, p odd and p not dividing g.
S0Table scan_family_S0(std::uint64_t p, unsigned g);

}  // namespace weilcensus
