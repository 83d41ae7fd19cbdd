#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "weilcensus/bigint.hpp"

namespace weilcensus {

/// Default cap on polynomial degree (twice the largest supported dimension).
inline constexpr std::size_t kDefaultMaxDegree = 40;

/// Polynomial with arbitrary-precision integer coefficients, constant term first.
/// The coefficient vector never carries trailing zeros, so the zero polynomial
/// has an empty vector and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients,
                         std::size_t max_degree = kDefaultMaxDegree);
  IntPolynomial(std::initializer_list<long long> coefficients);

  /// c * X^n.
  static IntPolynomial monomial(const BigInt& c, std::size_t n);

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  /// Coefficient of X^i; zero past the degree.
  const BigInt& operator[](std::size_t i) const;
  const BigInt& leading() const;
  std::span<const BigInt> coefficients() const { return coefficients_; }

  BigInt evaluate(const BigInt& x) const;
  IntPolynomial derivative() const;
  /// gcd of the coefficients, taken positive; zero for the zero polynomial.
  BigInt content() const;
  /// Divides by the content and makes the leading coefficient positive.
  IntPolynomial primitive_part() const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const BigInt& c);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& c) { return a *= c; }
  friend IntPolynomial operator-(IntPolynomial a) { return a *= BigInt(-1); }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  std::string to_string(char var = 'X') const;

 private:
  void normalize();

  std::vector<BigInt> coefficients_;
};

/// Pseudo-remainder of a by b, scaled by |lc(b)|^(deg a - deg b + 1) so that
/// it is a positive multiple of the remainder over Q.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Quotient a / b over Z; throws InvalidArgument if b does not divide a exactly.
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd with positive leading coefficient (primitive remainder sequence).
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// h / gcd(h, h'), primitive with positive leading coefficient.
IntPolynomial squarefree_part(const IntPolynomial& h);

bool is_squarefree(const IntPolynomial& h);

}  // namespace weilcensus
