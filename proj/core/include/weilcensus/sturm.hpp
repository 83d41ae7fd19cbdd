#pragma once

#include <compare>
#include <string>

#include "weilcensus/bigint.hpp"
#include "weilcensus/intpoly.hpp"

namespace weilcensus {

/// u + v*sqrt(d) in Z[sqrt(d)] for a square-free d >= 1. With d == 1 the
/// element is the rational integer u + v.
class QuadraticRingElement {
 public:
  QuadraticRingElement(BigInt u, BigInt v, BigInt d);
  static QuadraticRingElement integer(const BigInt& n) { return {n, 0, 1}; }

  const BigInt& u() const { return u_; }
  const BigInt& v() const { return v_; }
  const BigInt& d() const { return d_; }

  /// Exact sign, decided from the signs of u, v and a comparison of u^2 with v^2 d.
  int sign() const;
  long double approx() const;

  QuadraticRingElement operator+(const QuadraticRingElement& rhs) const;
  QuadraticRingElement operator+(const BigInt& n) const;
  QuadraticRingElement operator-(const QuadraticRingElement& rhs) const;
  QuadraticRingElement operator*(const QuadraticRingElement& rhs) const;
  QuadraticRingElement operator-() const { return {-u_, -v_, d_, Unchecked{}}; }

  std::strong_ordering operator<=>(const QuadraticRingElement& rhs) const;
  bool operator==(const QuadraticRingElement& rhs) const { return (*this <=> rhs) == 0; }

  std::string to_string() const;

 private:
  struct Unchecked {};
  QuadraticRingElement(BigInt u, BigInt v, BigInt d, Unchecked)
      : u_(std::move(u)), v_(std::move(v)), d_(std::move(d)) {}
  void require_same_ring(const QuadraticRingElement& rhs) const;

  BigInt u_, v_, d_;
};

/// Exact value of h at x in Z[sqrt(d)].
QuadraticRingElement evaluate(const IntPolynomial& h, const QuadraticRingElement& x);

/// Number of distinct real roots of the squarefree polynomial h in (left, right].
/// Throws NotSquarefree if gcd(h, h') is not constant and InvalidArgument if
/// left >= right.
unsigned sturm_root_count(const IntPolynomial& h, const QuadraticRingElement& left,
                          const QuadraticRingElement& right);

}  // namespace weilcensus
