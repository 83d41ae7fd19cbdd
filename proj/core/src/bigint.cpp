#include "weilcensus/bigint.hpp"

#include "weilcensus/errors.hpp"

namespace weilcensus {

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw InvalidArgument("isqrt of a negative integer");
  return boost::multiprecision::sqrt(n);
}

bool is_perfect_square(const BigInt& n) {
  if (n < 0) return false;
  BigInt r = isqrt(n);
  return r * r == n;
}

BigInt ipow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string to_string(const BigInt& n) { return n.str(); }

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

long double to_long_double(const BigInt& n) { return n.convert_to<long double>(); }

}  // namespace weilcensus
