#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "weilcensus/bigint.hpp"
#include "weilcensus/weilpoly.hpp"

namespace weilcensus {

/// Parameters of one large-sieve setup: the family of q-symmetric degree-2g
/// polynomials over F_q with q = p^k, sieved for ell-cycles at primes <= y.
struct SieveConfig {
  SieveConfig(unsigned g, std::uint64_t p, unsigned k, unsigned ell, std::uint64_t y);

  unsigned g;
  std::uint64_t p;
  unsigned k;
  unsigned ell;
  std::uint64_t y;
  BigInt q;

  /// Auxiliary primes p' <= y with p' != p, increasing.
  std::vector<std::uint64_t> primes() const;
};

struct OmegaOptions {
  /// Above this many residue vectors omega is estimated by sampling.
  std::uint64_t enumeration_limit = 100'000'000;
  std::uint64_t sample_count = 1'000'000;
  std::uint64_t seed = 0x5eed5eedULL;
};

/// omega(p') = |Omega(p')|, or an estimate scaled to p'^g when sampled.
struct OmegaEntry {
  std::uint64_t prime = 0;
  /// Exact: residue vectors in Omega(p'). Sampled: hits among `population` draws.
  std::uint64_t hits = 0;
  /// Exact: p'^g. Sampled: number of draws.
  std::uint64_t population = 0;
  bool sampled = false;

  double fraction() const { return population ? static_cast<double>(hits) / static_cast<double>(population) : 0.0; }
  /// Binomial standard error of fraction(); zero when exact.
  double standard_error() const;
};

struct OmegaTable {
  std::vector<OmegaEntry> entries;
  bool exact() const;
};

/// True if the reduction mod p' of the family member with residues a lies in Omega(p').
bool in_omega(std::span<const std::uint64_t> a, std::uint64_t prime, const SieveConfig& cfg);

/// Exhaustive count of Omega(p') when p'^g <= enumeration_limit, sampled otherwise.
/// Throws InvalidArgument when p' = p or p' is not prime.
OmegaEntry omega(std::uint64_t prime, const SieveConfig& cfg, const OmegaOptions& options = {});

OmegaTable omega_table(const SieveConfig& cfg, const OmegaOptions& options = {}, unsigned threads = 1);

/// P(y) = sum_{p' <= y, p' != p} omega(p') p'^-g, exact. Requires an exact table.
Rational p_of_y(const OmegaTable& table, unsigned g);
Rational p_of_y(const SieveConfig& cfg);

struct PEstimate {
  double value = 0;
  double standard_error = 0;
};
/// Float P(y) for tables that may contain sampled entries.
PEstimate p_of_y_estimate(const OmegaTable& table);

/// Number of auxiliary primes p' <= y with a mod p' in Omega(p').
unsigned p_a_y(const WeilCoefficients& a, const SieveConfig& cfg);

/// Both sides of the large-sieve variance bound over the census box.
struct VarianceReport {
  BigInt box_count;
  Rational p_y;
  /// sum_a (P(a,y) - P(y))^2, accumulated point by point.
  Rational lhs;
  /// The same quantity from per-prime and per-prime-pair residue-class counts;
  /// empty when that expansion would exceed the work cap.
  std::optional<Rational> lhs_prime_major;
  BigInt sum_p_a_y_point_major;
  std::optional<BigInt> sum_p_a_y_prime_major;
  /// P(y) * prod_i (X_i + y^2) with X_i = C(2g,i) q^(i/2).
  double rhs_core = 0;
  /// lhs / rhs_core, defined as 0 when P(y) = 0.
  double ratio = 0;
};

VarianceReport variance_report(const SieveConfig& cfg, std::uint64_t box_limit = kDefaultBoxLimit);

struct DensityReport {
  std::vector<OmegaEntry> entries;
  /// Mean of omega(p')/p'^g over primes p' in [y/2, y], p' != p.
  double empirical = 0;
  /// C_ell / |W_2g|.
  Rational theoretical;
  double deviation = 0;
};

/// Compares the Omega densities near y with the Chebotarev prediction. The
/// family is the one attached to q = p^k. Requires g <= 4.
DensityReport density_report(unsigned g, std::uint64_t p, unsigned k, unsigned ell, std::uint64_t y,
                             const OmegaOptions& options = {}, unsigned threads = 1);

struct ExceptionBound {
  /// floor(q^(1/4)), the integer stand-in for y with y^2 = q^(1/2).
  std::uint64_t y_used = 0;
  /// q^(g(g+1)/4 - 1/4) log q with implied constant 1.
  double bound = 0;
};

/// Reference magnitude of the exception count; q must be at least 16.
ExceptionBound exception_bound(unsigned g, const BigInt& q);

}  // namespace weilcensus
