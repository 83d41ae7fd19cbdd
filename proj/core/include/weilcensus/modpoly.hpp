#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "weilcensus/intpoly.hpp"

namespace weilcensus {

/// Polynomial over the prime field F_p, residues in [0, p), constant term first.
/// Trailing zero residues are stripped; the prime is checked at construction.
class ModPolynomial {
 public:
  ModPolynomial(std::uint64_t prime, std::vector<std::uint64_t> residues);

  /// Skips the primality check; for hot loops whose prime was validated once.
  static ModPolynomial unchecked(std::uint64_t prime, std::vector<std::uint64_t> residues);

  /// Reduction of an integer polynomial modulo prime.
  static ModPolynomial reduce(const IntPolynomial& f, std::uint64_t prime);

  std::uint64_t prime() const { return prime_; }
  int degree() const { return static_cast<int>(residues_.size()) - 1; }
  bool is_zero() const { return residues_.empty(); }
  std::uint64_t operator[](std::size_t i) const { return i < residues_.size() ? residues_[i] : 0; }
  std::span<const std::uint64_t> residues() const { return residues_; }

  friend ModPolynomial operator*(const ModPolynomial& a, const ModPolynomial& b);
  friend bool operator==(const ModPolynomial&, const ModPolynomial&) = default;

  std::string to_string(char var = 'X') const;

 private:
  struct Trusted {};
  ModPolynomial(Trusted, std::uint64_t prime, std::vector<std::uint64_t> residues);

  std::uint64_t prime_;
  std::vector<std::uint64_t> residues_;

  friend ModPolynomial power_coefficients(const IntPolynomial&, std::uint64_t, std::uint64_t);
};

/// Degrees of the irreducible factors over F_p, with multiplicity, sorted
/// ascending, plus whether the polynomial is squarefree.
struct DegreePattern {
  std::vector<int> degrees;
  bool squarefree = true;

  /// Squarefree with exactly `total - ell` linear factors and one factor of degree ell.
  bool is_cycle_pattern(int total, int ell) const;

  friend bool operator==(const DegreePattern&, const DegreePattern&) = default;
};

/// Squarefree decomposition followed by distinct-degree splitting. The
/// polynomial must be nonzero and of degree at most kDefaultMaxDegree.
DegreePattern degree_pattern(const ModPolynomial& f);

/// f^e with coefficients reduced modulo prime (repeated squaring).
ModPolynomial power_coefficients(const IntPolynomial& f, std::uint64_t e, std::uint64_t prime);

}  // namespace weilcensus
