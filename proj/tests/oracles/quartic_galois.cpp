#include "oracles/quartic_galois.hpp"

#include <vector>

namespace oracle {

namespace {

using weilcensus::BigInt;

bool is_square(const BigInt& n) {
  if (n < 0) return false;
  const BigInt r = boost::multiprecision::sqrt(n);
  return r * r == n;
}

std::vector<BigInt> divisors(BigInt n) {
  if (n < 0) n = -n;
  std::vector<BigInt> out;
  for (BigInt i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      out.push_back(i);
      if (i * i != n) out.push_back(n / i);
    }
  }
  std::vector<BigInt> signed_out;
  for (const auto& x : out) {
    signed_out.push_back(x);
    signed_out.push_back(-x);
  }
  return signed_out;
}

// Monic integer polynomial (coefficients constant first) has an integer root.
bool has_integer_root(const std::vector<BigInt>& f) {
  if (f[0] == 0) return true;
  for (const auto& r : divisors(f[0])) {
    BigInt v = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) v = v * r + *it;
    if (v == 0) return true;
  }
  return false;
}

std::vector<BigInt> integer_roots(const std::vector<BigInt>& f) {
  std::vector<BigInt> roots;
  std::vector<BigInt> cands = f[0] == 0 ? std::vector<BigInt>{0} : divisors(f[0]);
  if (f[0] == 0) {
    for (const auto& x : divisors(f[1] == 0 ? f[2] : f[1])) cands.push_back(x);
  }
  for (const auto& r : cands) {
    BigInt v = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) v = v * r + *it;
    if (v == 0) roots.push_back(r);
  }
  return roots;
}

bool splits_into_quadratics(const BigInt& A, const BigInt& B, const BigInt& C, const BigInt& D) {
  // (x^2 + a x + b)(x^2 + c x + e) with b e = D, a + c = A, ac + b + e = B, ae + bc = C.
  if (D == 0) return true;
  for (const auto& b : divisors(D)) {
    const BigInt e = D / b;
    if (e != b) {
      const BigInt num = C - b * A;
      const BigInt den = e - b;
      if (num % den != 0) continue;
      const BigInt a = num / den;
      const BigInt c = A - a;
      if (a * c + b + e == B) return true;
    } else {
      if (C != b * A) continue;
      const BigInt disc = A * A - 4 * (B - 2 * b);
      if (is_square(disc)) return true;
    }
  }
  return false;
}

BigInt quartic_discriminant(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d) {
  return 256 * d * d * d - 192 * a * c * d * d - 128 * b * b * d * d + 144 * b * c * c * d - 27 * c * c * c * c +
         144 * a * a * b * d * d - 6 * a * a * c * c * d - 80 * a * b * b * c * d + 18 * a * b * c * c * c +
         16 * b * b * b * b * d - 4 * b * b * b * c * c - 27 * a * a * a * a * d * d + 18 * a * a * a * b * c * d -
         4 * a * a * a * c * c * c - 4 * a * a * b * b * b * d + a * a * b * b * c * c;
}

// x^2 + u x + v splits over Q(sqrt(delta)), delta not a square.
bool splits_over(const BigInt& u, const BigInt& v, const BigInt& delta) {
  const BigInt disc = u * u - 4 * v;
  return is_square(disc) || is_square(disc * delta);
}

}  // namespace

std::string quartic_galois_group(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d) {
  if (has_integer_root({d, c, b, a, 1}) || splits_into_quadratics(a, b, c, d)) return "reducible";
  // Resolvent cubic with roots x1x2 + x3x4 etc.
  const std::vector<BigInt> cubic{-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, 1};
  const BigInt delta = quartic_discriminant(a, b, c, d);
  const std::vector<BigInt> roots = integer_roots(cubic);
  std::vector<BigInt> distinct;
  for (const auto& r : roots) {
    bool seen = false;
    for (const auto& s : distinct) seen = seen || s == r;
    if (!seen) distinct.push_back(r);
  }
  if (distinct.empty()) return is_square(delta) ? "A4" : "S4";
  if (distinct.size() >= 2) return "V4";
  const BigInt r = distinct.front();
  if (splits_over(-r, d, delta) && splits_over(a, b - r, delta)) return "C4";
  return "D4";
}

}  // namespace oracle
