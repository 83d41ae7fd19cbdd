#include "weilcensus/intpoly.hpp"

#include <sstream>
#include <utility>

#include "weilcensus/errors.hpp"

namespace weilcensus {

namespace {

const BigInt& zero_coefficient() {
  static const BigInt zero = 0;
  return zero;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients, std::size_t max_degree)
    : coefficients_(std::move(coefficients)) {
  normalize();
  if (degree() > static_cast<int>(max_degree)) {
    throw InvalidArgument("polynomial degree " + std::to_string(degree()) +
                          " exceeds the limit " + std::to_string(max_degree));
  }
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients) {
  coefficients_.reserve(coefficients.size());
  for (long long c : coefficients) coefficients_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t n) {
  std::vector<BigInt> v(n + 1);
  v[n] = c;
  return IntPolynomial(std::move(v), std::max(n, kDefaultMaxDegree));
}

void IntPolynomial::normalize() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

const BigInt& IntPolynomial::operator[](std::size_t i) const {
  return i < coefficients_.size() ? coefficients_[i] : zero_coefficient();
}

const BigInt& IntPolynomial::leading() const {
  if (is_zero()) throw InvalidArgument("leading coefficient of the zero polynomial");
  return coefficients_.back();
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coefficients_.size() <= 1) return {};
  std::vector<BigInt> d(coefficients_.size() - 1);
  for (std::size_t i = 1; i < coefficients_.size(); ++i) d[i - 1] = coefficients_[i] * i;
  IntPolynomial r;
  r.coefficients_ = std::move(d);
  r.normalize();
  return r;
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coefficients_) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return boost::multiprecision::abs(g);
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  BigInt c = content();
  if (leading() < 0) c = -c;
  IntPolynomial r = *this;
  for (auto& x : r.coefficients_) x /= c;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) coefficients_.resize(rhs.coefficients_.size());
  for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) coefficients_[i] += rhs.coefficients_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) coefficients_.resize(rhs.coefficients_.size());
  for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) coefficients_[i] -= rhs.coefficients_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& c) {
  for (auto& x : coefficients_) x *= c;
  normalize();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    if (a.coefficients_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) out[i + j] += a.coefficients_[i] * b.coefficients_[j];
  }
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coefficients_[i];
    if (c == 0) continue;
    BigInt mag = boost::multiprecision::abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw InvalidArgument("pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  const int db = b.degree();
  const BigInt lc = b.leading();
  const BigInt lc_abs = boost::multiprecision::abs(lc);
  std::vector<BigInt> r(a.coefficients().begin(), a.coefficients().end());
  // Each step multiplies by |lc| and subtracts sign(lc) * r_top * X^shift * b,
  // which cancels the top term since |lc| * r_top - sign(lc) * r_top * lc = 0.
  const int s = lc.sign();
  for (int top = a.degree(); top >= db; --top) {
    const BigInt t = r[top];
    for (auto& x : r) x *= lc_abs;
    if (t != 0) {
      const int shift = top - db;
      for (int j = 0; j <= db; ++j) r[shift + j] -= s * t * b[j];
    }
    r.resize(top);
  }
  return IntPolynomial(std::move(r), std::max<std::size_t>(kDefaultMaxDegree, r.size()));
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw InvalidArgument("inexact polynomial division");
  const int db = b.degree();
  std::vector<BigInt> r(a.coefficients().begin(), a.coefficients().end());
  std::vector<BigInt> q(a.degree() - db + 1);
  for (int top = a.degree(); top >= db; --top) {
    if (r[top] == 0) continue;
    BigInt rem;
    BigInt c;
    boost::multiprecision::divide_qr(r[top], b.leading(), c, rem);
    if (rem != 0) throw InvalidArgument("inexact polynomial division");
    q[top - db] = c;
    for (int j = 0; j <= db; ++j) r[top - db + j] -= c * b[j];
  }
  for (int i = 0; i < db; ++i) {
    if (r[i] != 0) throw InvalidArgument("inexact polynomial division");
  }
  return IntPolynomial(std::move(q), std::max<std::size_t>(kDefaultMaxDegree, a.coefficients().size()));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x;  // primitive, positive leading
}

IntPolynomial squarefree_part(const IntPolynomial& h) {
  if (h.degree() <= 0) return h.primitive_part();
  IntPolynomial g = gcd(h, h.derivative());
  return divide_exact(h.primitive_part(), g).primitive_part();
}

bool is_squarefree(const IntPolynomial& h) {
  if (h.degree() <= 0) return !h.is_zero();
  return gcd(h, h.derivative()).degree() == 0;
}

}  // namespace weilcensus
