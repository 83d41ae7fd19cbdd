#include "weilcensus/weilpoly.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "weilcensus/errors.hpp"
#include "weilcensus/numroots.hpp"
#include "weilcensus/primes.hpp"
#include "weilcensus/sturm.hpp"

namespace weilcensus {

namespace {

void require_field(std::uint64_t p, unsigned k) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  if (k < 1) throw InvalidArgument("exponent k must be at least 1");
}

void require_dimension(unsigned g) {
  if (g < 1 || g > kMaxDimension) {
    throw InvalidArgument("dimension g must lie in [1, " + std::to_string(kMaxDimension) + "]");
  }
}

unsigned p_adic_valuation(BigInt n, std::uint64_t p) {
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace

BigInt coefficient_bound(unsigned g, unsigned i, const BigInt& q) {
  const BigInt c = binomial(2 * g, i);
  if (i % 2 == 0) return c * ipow(q, i / 2);
  return isqrt(c * c * ipow(q, i));
}

WeilCoefficients::WeilCoefficients(std::uint64_t p, unsigned k, std::vector<BigInt> a)
    : p_(p), k_(k), a_(std::move(a)) {
  require_field(p, k);
  require_dimension(g());
  q_ = ipow(BigInt(p), k);
  for (unsigned i = 1; i <= g(); ++i) {
    const BigInt bound = coefficient_bound(g(), i, q_);
    if (boost::multiprecision::abs(a_[i - 1]) > bound) {
      throw InvalidArgument("a_" + std::to_string(i) + " = " + a_[i - 1].str() +
                            " lies outside the box bound " + bound.str());
    }
  }
}

std::string WeilCoefficients::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < a_.size(); ++i) os << (i ? "," : "") << a_[i];
  os << ")";
  return os.str();
}

FrobeniusPolynomial FrobeniusPolynomial::from_polynomial(IntPolynomial f, unsigned g, std::uint64_t p,
                                                         unsigned k) {
  require_field(p, k);
  require_dimension(g);
  if (f.degree() != static_cast<int>(2 * g) || f.leading() != 1) {
    throw InvalidArgument("Frobenius polynomial must be monic of degree 2g");
  }
  BigInt q = ipow(BigInt(p), k);
  for (unsigned i = 0; i <= g; ++i) {
    if (f[i] != ipow(q, g - i) * f[2 * g - i]) {
      throw InvalidArgument("polynomial " + f.to_string() + " is not q-symmetric for q = " + q.str());
    }
  }
  return FrobeniusPolynomial(std::move(f), g, p, k, std::move(q));
}

std::vector<BigInt> FrobeniusPolynomial::coefficient_vector() const {
  std::vector<BigInt> a(g_);
  for (unsigned i = 1; i <= g_; ++i) a[i - 1] = poly_[2 * g_ - i];
  return a;
}

TracePolynomial::TracePolynomial(IntPolynomial h, unsigned g, BigInt q)
    : poly_(std::move(h)), g_(g), q_(std::move(q)) {
  if (poly_.degree() != static_cast<int>(g) || poly_.leading() != 1) {
    throw InvalidArgument("trace polynomial must be monic of degree g");
  }
}

IntPolynomial TracePolynomial::expand() const {
  // X^g h(X + q/X) = sum_j h_j (X^2 + q)^j X^(g-j).
  const IntPolynomial x2q = IntPolynomial({0, 0, 1}) + IntPolynomial(std::vector<BigInt>{q_});
  IntPolynomial result;
  IntPolynomial power = IntPolynomial({1});
  for (unsigned j = 0; j <= g_; ++j) {
    result += power * IntPolynomial::monomial(poly_[j], g_ - j);
    power = power * x2q;
  }
  return result;
}

std::string to_string(WeilStatus s) {
  switch (s) {
    case WeilStatus::NotWeil:
      return "NotWeil";
    case WeilStatus::WeilInterior:
      return "WeilInterior";
    case WeilStatus::WeilWithRealRoot:
      return "WeilWithRealRoot";
  }
  return "?";
}

FrobeniusPolynomial expand_frobenius(const WeilCoefficients& w) {
  const unsigned g = w.g();
  std::vector<BigInt> c(2 * g + 1);
  c[2 * g] = 1;
  c[0] = ipow(w.q(), g);
  for (unsigned i = 1; i < g; ++i) {
    c[2 * g - i] = w(i);
    c[i] = w(i) * ipow(w.q(), g - i);
  }
  c[g] += w(g);
  return FrobeniusPolynomial(IntPolynomial(std::move(c)), g, w.p(), w.k(), w.q());
}

TracePolynomial trace_polynomial(const FrobeniusPolynomial& f) {
  // f / X^g = f_g + sum_{i>=1} f_{g+i} (X^i + q^i X^-i), and the power sums
  // s_i = X^i + q^i X^-i satisfy s_0 = 2, s_1 = y, s_{i+1} = y s_i - q s_{i-1}.
  const unsigned g = f.g();
  const IntPolynomial& poly = f.polynomial();
  const IntPolynomial y{0, 1};
  IntPolynomial prev({2});
  IntPolynomial cur = y;
  IntPolynomial h(std::vector<BigInt>{poly[g]});
  for (unsigned i = 1; i <= g; ++i) {
    h += cur * poly[g + i];
    IntPolynomial next = y * cur - prev * f.q();
    prev = std::move(cur);
    cur = std::move(next);
  }
  return TracePolynomial(std::move(h), g, f.q());
}

WeilStatus weil_status(const TracePolynomial& trace) {
  const auto pk = as_prime_power(trace.q());
  if (!pk) throw InvalidArgument("q is not a prime power");
  const IntPolynomial h = squarefree_part(trace.polynomial());
  // 2 sqrt(q) = 2 p^floor(k/2) sqrt(d), d = p for odd k and 1 for even k.
  const BigInt d = (pk->k % 2) ? BigInt(pk->p) : BigInt(1);
  const BigInt v = 2 * ipow(BigInt(pk->p), pk->k / 2);
  const QuadraticRingElement left(0, -v, d);
  const QuadraticRingElement right(0, v, d);
  const unsigned inside = sturm_root_count(h, left, right);
  const bool left_root = evaluate(h, left).sign() == 0;
  const bool right_root = evaluate(h, right).sign() == 0;
  if (inside + (left_root ? 1 : 0) != static_cast<unsigned>(h.degree())) return WeilStatus::NotWeil;
  return (left_root || right_root) ? WeilStatus::WeilWithRealRoot : WeilStatus::WeilInterior;
}

WeilStatus weil_status(const WeilCoefficients& w) { return weil_status(trace_polynomial(expand_frobenius(w))); }

WeilBox::WeilBox(unsigned g, std::uint64_t p, unsigned k) : g_(g), p_(p), k_(k) {
  require_field(p, k);
  require_dimension(g);
  q_ = ipow(BigInt(p), k);
  for (unsigned i = 1; i <= g; ++i) bounds_.push_back(coefficient_bound(g, i, q_));
}

BigInt WeilBox::cardinality() const {
  BigInt n = 1;
  for (const auto& b : bounds_) n *= 2 * b + 1;
  return n;
}

bool WeilBox::contains(std::span<const BigInt> a) const {
  if (a.size() != g_) return false;
  for (unsigned i = 0; i < g_; ++i) {
    if (boost::multiprecision::abs(a[i]) > bounds_[i]) return false;
  }
  return true;
}

std::vector<BigInt> WeilBox::slab_keys() const {
  std::vector<BigInt> keys;
  for (BigInt a1 = -bounds_[0]; a1 <= bounds_[0]; ++a1) keys.push_back(a1);
  return keys;
}

WeilBox enumerate_box(unsigned g, std::uint64_t p, unsigned k, std::uint64_t limit) {
  WeilBox box(g, p, k);
  const BigInt n = box.cardinality();
  if (n > limit) {
    throw Refusal("box R_{g,q} for g=" + std::to_string(g) + ", q=" + box.q().str() +
                      " exceeds the enumeration limit " + std::to_string(limit),
                  n.str());
  }
  return box;
}

bool is_ordinary(const WeilCoefficients& w) { return w(w.g()) % w.p() != 0; }

std::vector<Rational> newton_slopes(const FrobeniusPolynomial& f) {
  const IntPolynomial& poly = f.polynomial();
  struct Pt {
    long long x, y;
  };
  std::vector<Pt> pts;
  for (int i = 0; i <= poly.degree(); ++i) {
    if (poly[i] != 0) pts.push_back({i, static_cast<long long>(p_adic_valuation(poly[i], f.p()))});
  }
  // Lower convex hull, x increasing.
  std::vector<Pt> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const Pt& a = hull[hull.size() - 2];
      const Pt& b = hull.back();
      // Drop b if it lies on or above the segment a -> pt.
      if ((b.y - a.y) * (pt.x - a.x) >= (pt.y - a.y) * (b.x - a.x)) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(pt);
  }
  std::vector<Rational> slopes;
  for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
    const long long dx = hull[s + 1].x - hull[s].x;
    const long long dy = hull[s].y - hull[s + 1].y;
    const Rational valuation(BigInt(dy), BigInt(dx * static_cast<long long>(f.k())));
    for (long long j = 0; j < dx; ++j) slopes.push_back(valuation);
  }
  std::sort(slopes.begin(), slopes.end());
  return slopes;
}

BigInt middle_coefficient_oracle(const FrobeniusPolynomial& f, long double tol) {
  const unsigned g = f.g();
  if (g > 6) throw InvalidArgument("middle_coefficient_oracle is limited to g <= 6");
  if (!(tol > 0)) throw InvalidArgument("tolerance must be positive");
  const auto roots = complex_roots(f.polynomial());
  const long double q = to_long_double(f.q());
  const auto pairs = pair_q_conjugates(roots, q);

  std::vector<Complex> pi(g);
  for (unsigned i = 0; i < g; ++i) pi[i] = roots[pairs[i].first];

  Complex sum = 0;
  const unsigned full = 1u << g;
  for (unsigned I = 0; I < full; ++I) {
    const int size_i = std::popcount(I);
    for (unsigned J = 0; J < full; ++J) {
      if (size_i + std::popcount(J) != static_cast<int>(g)) continue;
      Complex term = 1;
      for (unsigned i = 0; i < g; ++i) {
        if (I & (1u << i)) term *= pi[i];
        if (J & (1u << i)) term *= q / pi[i];
      }
      sum += term;
    }
  }
  if (g % 2) sum = -sum;
  const long double rounded = std::round(sum.real());
  const long double residue = std::abs(sum - Complex(rounded));
  if (residue > tol) {
    throw NumericalFailure("middle coefficient residue " + std::to_string(static_cast<double>(residue)) +
                           " exceeds tolerance");
  }
  return BigInt(static_cast<long long>(rounded));
}

}  // namespace weilcensus
