#include "weilcensus/sturm.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "weilcensus/errors.hpp"

namespace weilcensus {

namespace {

bool is_squarefree_integer(const BigInt& d) {
  for (BigInt f = 2; f * f <= d; ++f) {
    if (d % (f * f) == 0) return false;
  }
  return true;
}

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& h) {
  std::vector<IntPolynomial> chain{h, h.derivative()};
  while (chain.back().degree() > 0) {
    const auto& a = chain[chain.size() - 2];
    const auto& b = chain.back();
    IntPolynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // Positive rescaling preserves every sign the count depends on.
    const IntPolynomial next = -r;
    const BigInt c = next.content();
    std::vector<BigInt> reduced(next.coefficients().begin(), next.coefficients().end());
    for (auto& x : reduced) x /= c;
    chain.emplace_back(std::move(reduced));
  }
  return chain;
}

unsigned sign_changes(const std::vector<IntPolynomial>& chain, const QuadraticRingElement& x) {
  unsigned changes = 0;
  int last = 0;
  for (const auto& s : chain) {
    const int sg = evaluate(s, x).sign();
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

}  // namespace

QuadraticRingElement::QuadraticRingElement(BigInt u, BigInt v, BigInt d)
    : u_(std::move(u)), v_(std::move(v)), d_(std::move(d)) {
  if (d_ < 1 || !is_squarefree_integer(d_)) {
    throw InvalidArgument("quadratic ring needs a positive square-free d, got " + d_.str());
  }
}

int QuadraticRingElement::sign() const {
  if (d_ == 1) return BigInt(u_ + v_).sign();
  const int su = u_.sign();
  const int sv = v_.sign();
  if (sv == 0) return su;
  if (su == 0) return sv;
  if (su == sv) return su;
  // Opposite signs: the larger magnitude wins.
  const BigInt uu = u_ * u_;
  const BigInt vv = v_ * v_ * d_;
  if (uu == vv) return 0;
  return uu > vv ? su : sv;
}

long double QuadraticRingElement::approx() const {
  return to_long_double(u_) + to_long_double(v_) * std::sqrt(to_long_double(d_));
}

void QuadraticRingElement::require_same_ring(const QuadraticRingElement& rhs) const {
  if (d_ != rhs.d_) throw InvalidArgument("elements of different quadratic rings");
}

QuadraticRingElement QuadraticRingElement::operator+(const QuadraticRingElement& rhs) const {
  require_same_ring(rhs);
  return {u_ + rhs.u_, v_ + rhs.v_, d_, Unchecked{}};
}

QuadraticRingElement QuadraticRingElement::operator+(const BigInt& n) const {
  return {u_ + n, v_, d_, Unchecked{}};
}

QuadraticRingElement QuadraticRingElement::operator-(const QuadraticRingElement& rhs) const {
  require_same_ring(rhs);
  return {u_ - rhs.u_, v_ - rhs.v_, d_, Unchecked{}};
}

QuadraticRingElement QuadraticRingElement::operator*(const QuadraticRingElement& rhs) const {
  require_same_ring(rhs);
  return {u_ * rhs.u_ + v_ * rhs.v_ * d_, u_ * rhs.v_ + v_ * rhs.u_, d_, Unchecked{}};
}

std::strong_ordering QuadraticRingElement::operator<=>(const QuadraticRingElement& rhs) const {
  const int s = (*this - rhs).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string QuadraticRingElement::to_string() const {
  std::ostringstream os;
  os << u_;
  if (v_ != 0) os << (v_ < 0 ? " - " : " + ") << boost::multiprecision::abs(v_) << "*sqrt(" << d_ << ")";
  return os.str();
}

QuadraticRingElement evaluate(const IntPolynomial& h, const QuadraticRingElement& x) {
  QuadraticRingElement acc(0, 0, x.d());
  for (int i = h.degree(); i >= 0; --i) {
    acc = acc * x + h[i];
  }
  return acc;
}

unsigned sturm_root_count(const IntPolynomial& h, const QuadraticRingElement& left,
                          const QuadraticRingElement& right) {
  if (h.is_zero()) throw InvalidArgument("Sturm count of the zero polynomial");
  if (left.d() != right.d()) throw InvalidArgument("interval endpoints in different quadratic rings");
  if (!(left < right)) throw InvalidArgument("Sturm interval needs left < right");
  if (h.degree() == 0) return 0;
  if (!is_squarefree(h)) {
    throw NotSquarefree("Sturm count needs a squarefree polynomial; deflate with squarefree_part first");
  }
  const auto chain = sturm_chain(h);
  return sign_changes(chain, left) - sign_changes(chain, right);
}

}  // namespace weilcensus
