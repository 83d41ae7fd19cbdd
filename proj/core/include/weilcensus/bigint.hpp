#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace weilcensus {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// floor(sqrt(n)) for n >= 0.
BigInt isqrt(const BigInt& n);

/// True if n is the square of an integer (n < 0 is never a square).
bool is_perfect_square(const BigInt& n);

BigInt ipow(const BigInt& base, unsigned exponent);

BigInt binomial(unsigned n, unsigned k);

/// "n/d" with d > 0, or "n" when d == 1.
std::string to_string(const Rational& r);

std::string to_string(const BigInt& n);

/// Nearest long double; exact for magnitudes below 2^64.
long double to_long_double(const BigInt& n);

/// Sign of n: -1, 0 or 1.
inline int sign(const BigInt& n) { return n.sign(); }

}  // namespace weilcensus
