#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "weilcensus/bigint.hpp"
#include "weilcensus/intpoly.hpp"

namespace weilcensus {

/// Largest dimension supported anywhere in the library (degree 2g <= 40).
inline constexpr unsigned kMaxDimension = 20;

/// floor(C(2g,i) * q^(i/2)), computed exactly with an integer square root.
BigInt coefficient_bound(unsigned g, unsigned i, const BigInt& q);

/// Integer vector a = (a_1, ..., a_g) for q = p^k, constrained to the box
/// |a_i| <= C(2g,i) q^(i/2) at construction.
class WeilCoefficients {
 public:
  WeilCoefficients(std::uint64_t p, unsigned k, std::vector<BigInt> a);

  unsigned g() const { return static_cast<unsigned>(a_.size()); }
  std::uint64_t p() const { return p_; }
  unsigned k() const { return k_; }
  const BigInt& q() const { return q_; }
  std::span<const BigInt> a() const { return a_; }
  /// a_i for 1 <= i <= g.
  const BigInt& operator()(unsigned i) const { return a_.at(i - 1); }

  std::string to_string() const;

 private:
  struct Trusted {};
  WeilCoefficients(Trusted, std::uint64_t p, unsigned k, BigInt q, std::vector<BigInt> a)
      : p_(p), k_(k), q_(std::move(q)), a_(std::move(a)) {}

  std::uint64_t p_;
  unsigned k_;
  BigInt q_;
  std::vector<BigInt> a_;

  friend class WeilBox;
};

/// Monic degree-2g polynomial with X^(2g) f(q/X) = q^g f(X).
class FrobeniusPolynomial {
 public:
  /// Validates degree, monicity and q-symmetry; throws InvalidArgument otherwise.
  static FrobeniusPolynomial from_polynomial(IntPolynomial f, unsigned g, std::uint64_t p, unsigned k);

  const IntPolynomial& polynomial() const { return poly_; }
  unsigned g() const { return g_; }
  std::uint64_t p() const { return p_; }
  unsigned k() const { return k_; }
  const BigInt& q() const { return q_; }
  /// (a_1, ..., a_g) read off the coefficients of X^(2g-1), ..., X^g.
  std::vector<BigInt> coefficient_vector() const;

 private:
  FrobeniusPolynomial(IntPolynomial f, unsigned g, std::uint64_t p, unsigned k, BigInt q)
      : poly_(std::move(f)), g_(g), p_(p), k_(k), q_(std::move(q)) {}

  IntPolynomial poly_;
  unsigned g_;
  std::uint64_t p_;
  unsigned k_;
  BigInt q_;

  friend FrobeniusPolynomial expand_frobenius(const WeilCoefficients&);
};

/// Monic degree-g h with f(X) = X^g h(X + q/X); its roots are pi + q/pi.
class TracePolynomial {
 public:
  TracePolynomial(IntPolynomial h, unsigned g, BigInt q);

  const IntPolynomial& polynomial() const { return poly_; }
  unsigned g() const { return g_; }
  const BigInt& q() const { return q_; }
  /// X^g h(X + q/X) as an integer polynomial.
  IntPolynomial expand() const;

 private:
  IntPolynomial poly_;
  unsigned g_;
  BigInt q_;
};

enum class WeilStatus { NotWeil, WeilInterior, WeilWithRealRoot };

std::string to_string(WeilStatus s);

/// (X^2g + q^g) + a_1 (X^(2g-1) + q^(g-1) X) + ... + a_g X^g.
FrobeniusPolynomial expand_frobenius(const WeilCoefficients& w);

TracePolynomial trace_polynomial(const FrobeniusPolynomial& f);

/// Exact test that every root of h lies in [-2 sqrt q, 2 sqrt q]; endpoint roots
/// (real Frobenius roots +-sqrt q) are reported separately.
WeilStatus weil_status(const WeilCoefficients& w);
WeilStatus weil_status(const TracePolynomial& h);

/// The lattice box R_{g,q}: |a_i| <= floor(C(2g,i) q^(i/2)), traversed in
/// lexicographic order. Slabs are the sub-boxes with fixed a_1.
class WeilBox {
 public:
  WeilBox(unsigned g, std::uint64_t p, unsigned k);

  unsigned g() const { return g_; }
  std::uint64_t p() const { return p_; }
  unsigned k() const { return k_; }
  const BigInt& q() const { return q_; }
  /// bounds()[i-1] = floor(C(2g,i) q^(i/2)).
  const std::vector<BigInt>& bounds() const { return bounds_; }
  BigInt cardinality() const;
  bool contains(std::span<const BigInt> a) const;

  /// a_1 values in increasing order; each labels one slab.
  std::vector<BigInt> slab_keys() const;

  template <class Fn>
  void for_each_in_slab(const BigInt& a1, Fn&& fn) const {
    std::vector<BigInt> a(g_);
    a[0] = a1;
    for (unsigned i = 1; i < g_; ++i) a[i] = -bounds_[i];
    while (true) {
      fn(WeilCoefficients(WeilCoefficients::Trusted{}, p_, k_, q_, a));
      unsigned i = g_;
      while (i > 1) {
        --i;
        if (a[i] < bounds_[i]) {
          ++a[i];
          break;
        }
        a[i] = -bounds_[i];
        if (i == 1) return;
      }
      if (g_ == 1) return;
    }
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (const auto& a1 : slab_keys()) for_each_in_slab(a1, fn);
  }

 private:
  unsigned g_;
  std::uint64_t p_;
  unsigned k_;
  BigInt q_;
  std::vector<BigInt> bounds_;
};

/// Default refusal threshold for box enumeration.
inline constexpr std::uint64_t kDefaultBoxLimit = 1'000'000'000;

/// Builds the box for (g, p^k); throws Refusal when its cardinality exceeds limit.
WeilBox enumerate_box(unsigned g, std::uint64_t p, unsigned k, std::uint64_t limit = kDefaultBoxLimit);

/// gcd(a_g, p) = 1.
bool is_ordinary(const WeilCoefficients& w);

/// p-adic valuations of the 2g roots of f, normalized so v(q) = 1, ascending.
std::vector<Rational> newton_slopes(const FrobeniusPolynomial& f);

/// (-1)^g times the sum over I, J subsets of {1..g} with |I| + |J| = g of
/// prod_{i in I} pi_i * prod_{j in J} q/pi_j, from numerically computed roots,
/// rounded to the nearest integer. Throws NumericalFailure if the rounding
/// residue exceeds tol. Limited to g <= 6.
BigInt middle_coefficient_oracle(const FrobeniusPolynomial& f, long double tol);

}  // namespace weilcensus
