#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "weilcensus/bigint.hpp"
#include "weilcensus/weilpoly.hpp"

namespace weilcensus {

struct CensusOptions {
  /// Auxiliary prime bound for Galois certification; 0 selects max(50, ceil(q^(1/4))).
  std::uint64_t sieve_y = 0;
  unsigned threads = 1;
  std::uint64_t box_limit = kDefaultBoxLimit;
};

/// max(50, ceil(q^(1/4))).
std::uint64_t default_sieve_y(const BigInt& q);

/// Counts over a set of box points. Every count except box is restricted to
/// Weil-valid points.
struct CensusCounts {
  std::uint64_t box = 0;
  std::uint64_t weil = 0;
  std::uint64_t real_root = 0;
  std::uint64_t ordinary = 0;
  std::uint64_t certified = 0;
  /// Ordinary, certified and without real roots.
  std::uint64_t both = 0;

  CensusCounts& operator+=(const CensusCounts& other);
  friend bool operator==(const CensusCounts&, const CensusCounts&) = default;
};

struct CensusRecord {
  unsigned g = 0;
  std::uint64_t p = 0;
  unsigned k = 0;
  BigInt q;
  std::uint64_t sieve_y = 0;
  CensusCounts counts;
  /// Wall time; never part of any comparison or default output.
  double elapsed_seconds = 0;

  /// both / weil, 0 when weil = 0.
  Rational ratio() const;
  /// both / (weil - real_root), 0 when that is 0.
  Rational ratio_interior() const;

  friend bool operator==(const CensusRecord& a, const CensusRecord& b) {
    return a.g == b.g && a.p == b.p && a.k == b.k && a.sieve_y == b.sieve_y && a.counts == b.counts;
  }
};

/// Contribution of one box point.
CensusCounts classify_point(const WeilCoefficients& w, std::uint64_t sieve_y);

/// Counts for the slab of the box with the given a_1.
CensusCounts census_slab(const WeilBox& box, const BigInt& a1, std::uint64_t sieve_y);

/// Classifies every point of R_{g,q}, q = p^k. Slabs are distributed over
/// threads; the result does not depend on the thread count.
CensusRecord run_census(unsigned g, std::uint64_t p, unsigned k, const CensusOptions& options = {});

struct TrendSeries {
  unsigned g = 0;
  std::uint64_t p = 0;
  unsigned k0 = 0;
  /// records[n-1] is the census at q = (p^k0)^n.
  std::vector<CensusRecord> records;
  /// Least-squares slope of log weil against log q; empty when fewer than two
  /// usable points exist.
  std::optional<double> growth_exponent;
  unsigned n_max() const { return static_cast<unsigned>(records.size()); }
};

/// Censuses at q0^n for n = 1..n_max. A sieve_y of 0 uses the per-q default.
TrendSeries trend(unsigned g, std::uint64_t p, unsigned k0, unsigned n_max, const CensusOptions& options = {});

struct VgEstimate {
  /// weil(n) * q^n / phi(q^n) * q^(-n g(g+1)/4).
  std::vector<double> from_weil;
  /// Same normalization applied to the ordinary count.
  std::vector<double> from_ordinary;
  /// max over n of |v(n+1) - v(n)| / v(n) for from_weil; 0 for a single term.
  double max_relative_deviation = 0;
};

/// Requires at least two records.
VgEstimate estimate_vg(const TrendSeries& series);

struct ExceptionComparison {
  BigInt q;
  std::uint64_t y_used = 0;
  double bound = 0;
  /// Weil-valid points without a W_2g certificate at primes <= y_used.
  std::uint64_t non_certified = 0;
};

ExceptionComparison compare_exception_bound(unsigned g, std::uint64_t p, unsigned k, const CensusOptions& options = {});

}  // namespace weilcensus
