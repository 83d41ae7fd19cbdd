#include "weilcensus/primes.hpp"

#include <limits>
#include <utility>

#include "weilcensus/errors.hpp"

namespace weilcensus {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s) {
  std::uint64_t x = 1, base = a % n, e = d;
  while (e) {
    if (e & 1) x = mul_mod(x, base, n);
    base = mul_mod(base, base, n);
    e >>= 1;
  }
  if (x == 1 || x == n - 1) return false;
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == small) return true;
    if (n % small == 0) return false;
  }
  if (n < 37 * 37) return true;
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is deterministic for all n < 2^64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

std::uint64_t next_prime(std::uint64_t n) {
  std::uint64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

std::optional<PrimePower> as_prime_power(const BigInt& q) {
  if (q < 2) return std::nullopt;
  // Smallest prime factor by trial division; q is small in every caller.
  BigInt p = 0;
  for (BigInt d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;
  if (p > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  BigInt rest = q;
  unsigned k = 0;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) return std::nullopt;
  return PrimePower{p.convert_to<std::uint64_t>(), k};
}

std::uint64_t mod_reduce(const BigInt& a, std::uint64_t m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r.convert_to<std::uint64_t>();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exponent) {
    if (exponent & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exponent >>= 1;
  }
  return r;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw InvalidArgument("inverse of zero modulo " + std::to_string(p));
  // Extended Euclid; p < 2^63 keeps the signed coefficients in range.
  std::int64_t r0 = static_cast<std::int64_t>(p), r1 = static_cast<std::int64_t>(a % p);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t t = r0 / r1;
    r0 = std::exchange(r1, r0 - t * r1);
    s0 = std::exchange(s1, s0 - t * s1);
  }
  return static_cast<std::uint64_t>(s0 < 0 ? s0 + static_cast<std::int64_t>(p) : s0);
}

}  // namespace weilcensus
