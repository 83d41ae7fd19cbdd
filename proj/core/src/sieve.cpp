#include "weilcensus/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>

#include "weilcensus/errors.hpp"
#include "weilcensus/galoiscert.hpp"
#include "weilcensus/modpoly.hpp"
#include "weilcensus/primes.hpp"

namespace weilcensus {

namespace {

// Residues c with f = X^2g + q^g + sum_i a_i (X^(2g-i) + q^(g-i) X^i), mod p'.
std::vector<std::uint64_t> family_residues(std::span<const std::uint64_t> a, std::uint64_t prime,
                                           std::uint64_t q_mod, unsigned g) {
  std::vector<std::uint64_t> c(2 * g + 1, 0);
  std::vector<std::uint64_t> qpow(g + 1, 1);
  for (unsigned i = 1; i <= g; ++i) qpow[i] = qpow[i - 1] * q_mod % prime;
  c[2 * g] = 1;
  c[0] = qpow[g];
  for (unsigned i = 1; i < g; ++i) {
    c[2 * g - i] = a[i - 1];
    c[i] = a[i - 1] * qpow[g - i] % prime;
  }
  c[g] = (c[g] + a[g - 1]) % prime;
  return c;
}

bool member(std::span<const std::uint64_t> a, std::uint64_t prime, std::uint64_t q_mod, const SieveConfig& cfg) {
  const DegreePattern pattern = degree_pattern(ModPolynomial::unchecked(prime, family_residues(a, prime, q_mod, cfg.g)));
  return pattern.is_cycle_pattern(static_cast<int>(2 * cfg.g), static_cast<int>(cfg.ell));
}

std::uint64_t checked_power(std::uint64_t base, unsigned e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

// Visits every vector in (Z/m)^g in lexicographic order.
template <class Fn>
void for_each_residue_vector(unsigned g, std::uint64_t m, Fn&& fn) {
  std::vector<std::uint64_t> a(g, 0);
  while (true) {
    fn(std::span<const std::uint64_t>(a));
    unsigned i = g;
    while (true) {
      if (i == 0) return;
      --i;
      if (++a[i] < m) break;
      a[i] = 0;
    }
  }
}

std::vector<std::vector<std::uint64_t>> omega_members(std::uint64_t prime, const SieveConfig& cfg) {
  const std::uint64_t q_mod = mod_reduce(cfg.q, prime);
  std::vector<std::vector<std::uint64_t>> out;
  for_each_residue_vector(cfg.g, prime, [&](std::span<const std::uint64_t> a) {
    if (member(a, prime, q_mod, cfg)) out.emplace_back(a.begin(), a.end());
  });
  return out;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

// Integers x in [-bound, bound] with x = c mod m.
BigInt count_in_class(const BigInt& bound, std::uint64_t c, std::uint64_t m) {
  return floor_div(bound - c, m) - floor_div(-bound - 1 - BigInt(c), m);
}

}  // namespace

SieveConfig::SieveConfig(unsigned g_, std::uint64_t p_, unsigned k_, unsigned ell_, std::uint64_t y_)
    : g(g_), p(p_), k(k_), ell(ell_), y(y_) {
  if (g < 1 || g > kMaxDimension) throw InvalidArgument("dimension out of range");
  if (!is_prime(p) || k < 1) throw InvalidArgument("q must be a prime power p^k");
  if (y < 2) throw InvalidArgument("sieve bound y must be at least 2");
  const auto ells = required_cycle_lengths(g);
  const bool listed = std::find(ells.begin(), ells.end(), ell) != ells.end();
  // For g = 1 the only even length in [2, 2g] is 2.
  if (!(listed || (g == 1 && ell == 2))) {
    throw InvalidArgument("cycle length " + std::to_string(ell) + " is not one of {2, 4, 2g-2, 2g} within [2, 2g]");
  }
  q = ipow(BigInt(p), k);
}

std::vector<std::uint64_t> SieveConfig::primes() const {
  std::vector<std::uint64_t> out;
  for (auto pr : primes_up_to(y)) {
    if (pr != p) out.push_back(pr);
  }
  return out;
}

double OmegaEntry::standard_error() const {
  if (!sampled || population == 0) return 0.0;
  const double f = fraction();
  return std::sqrt(f * (1 - f) / static_cast<double>(population));
}

bool OmegaTable::exact() const {
  return std::none_of(entries.begin(), entries.end(), [](const OmegaEntry& e) { return e.sampled; });
}

bool in_omega(std::span<const std::uint64_t> a, std::uint64_t prime, const SieveConfig& cfg) {
  if (a.size() != cfg.g) throw InvalidArgument("residue vector has the wrong length");
  if (prime == cfg.p) throw InvalidArgument("auxiliary prime must differ from p");
  std::vector<std::uint64_t> reduced(a.begin(), a.end());
  for (auto& x : reduced) x %= prime;
  return member(reduced, prime, mod_reduce(cfg.q, prime), cfg);
}

OmegaEntry omega(std::uint64_t prime, const SieveConfig& cfg, const OmegaOptions& options) {
  if (!is_prime(prime)) throw InvalidArgument(std::to_string(prime) + " is not prime");
  if (prime == cfg.p) throw InvalidArgument("omega(p) is undefined at the characteristic p");
  const std::uint64_t q_mod = mod_reduce(cfg.q, prime);
  OmegaEntry entry;
  entry.prime = prime;
  const std::uint64_t size = checked_power(prime, cfg.g, options.enumeration_limit);
  if (size <= options.enumeration_limit) {
    entry.population = size;
    for_each_residue_vector(cfg.g, prime, [&](std::span<const std::uint64_t> a) {
      if (member(a, prime, q_mod, cfg)) ++entry.hits;
    });
    return entry;
  }
  entry.sampled = true;
  entry.population = options.sample_count;
  std::mt19937_64 rng(options.seed ^ (prime * 0x9e3779b97f4a7c15ULL));
  std::uniform_int_distribution<std::uint64_t> dist(0, prime - 1);
  std::vector<std::uint64_t> a(cfg.g);
  for (std::uint64_t s = 0; s < options.sample_count; ++s) {
    for (auto& x : a) x = dist(rng);
    if (member(a, prime, q_mod, cfg)) ++entry.hits;
  }
  return entry;
}

namespace {

std::vector<OmegaEntry> omega_for_primes(const std::vector<std::uint64_t>& primes, const SieveConfig& cfg,
                                         const OmegaOptions& options, unsigned threads) {
  std::vector<OmegaEntry> out(primes.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < primes.size(); i = next++) out[i] = omega(primes[i], cfg, options);
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(primes.size())));
  if (n <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(work);
  }
  return out;
}

}  // namespace

OmegaTable omega_table(const SieveConfig& cfg, const OmegaOptions& options, unsigned threads) {
  return OmegaTable{omega_for_primes(cfg.primes(), cfg, options, threads)};
}

Rational p_of_y(const OmegaTable& table, unsigned g) {
  Rational sum = 0;
  for (const auto& e : table.entries) {
    if (e.sampled) throw InvalidArgument("exact P(y) requires exhaustive omega values");
    sum += Rational(BigInt(e.hits), ipow(BigInt(e.prime), g));
  }
  return sum;
}

Rational p_of_y(const SieveConfig& cfg) { return p_of_y(omega_table(cfg), cfg.g); }

PEstimate p_of_y_estimate(const OmegaTable& table) {
  PEstimate est;
  double variance = 0;
  for (const auto& e : table.entries) {
    est.value += e.fraction();
    variance += e.standard_error() * e.standard_error();
  }
  est.standard_error = std::sqrt(variance);
  return est;
}

unsigned p_a_y(const WeilCoefficients& a, const SieveConfig& cfg) {
  if (a.g() != cfg.g || a.p() != cfg.p || a.k() != cfg.k) throw InvalidArgument("point does not match the sieve family");
  unsigned count = 0;
  std::vector<std::uint64_t> residues(cfg.g);
  for (auto prime : cfg.primes()) {
    for (unsigned i = 0; i < cfg.g; ++i) residues[i] = mod_reduce(a.a()[i], prime);
    if (member(residues, prime, mod_reduce(cfg.q, prime), cfg)) ++count;
  }
  return count;
}

VarianceReport variance_report(const SieveConfig& cfg, std::uint64_t box_limit) {
  const WeilBox box = enumerate_box(cfg.g, cfg.p, cfg.k, box_limit);
  const auto primes = cfg.primes();
  const OmegaTable table = omega_table(cfg);
  if (!table.exact()) throw InvalidArgument("variance report requires exhaustive omega values");

  VarianceReport report;
  report.box_count = box.cardinality();
  report.p_y = p_of_y(table, cfg.g);

  // Point-major: P(a,y) for every box point.
  box.for_each([&](const WeilCoefficients& w) {
    const unsigned pay = p_a_y(w, cfg);
    report.sum_p_a_y_point_major += pay;
    const Rational diff = Rational(pay) - report.p_y;
    report.lhs += diff * diff;
  });

  // Prime-major: counts of box points in each residue class set, via CRT.
  constexpr std::uint64_t kWorkCap = 100'000'000;
  std::vector<std::vector<std::vector<std::uint64_t>>> members;
  std::uint64_t work = 0;
  bool feasible = true;
  for (const auto& e : table.entries) {
    if (e.population > 1'000'000) {
      feasible = false;
      break;
    }
    work += e.hits;
  }
  if (feasible && work * work * cfg.g <= kWorkCap) {
    for (auto pr : primes) members.push_back(omega_members(pr, cfg));
    const auto& bounds = box.bounds();
    BigInt sum_single = 0;
    BigInt sum_pairs = 0;
    for (std::size_t s = 0; s < primes.size(); ++s) {
      BigInt n_s = 0;
      for (const auto& r : members[s]) {
        BigInt c = 1;
        for (unsigned i = 0; i < cfg.g; ++i) c *= count_in_class(bounds[i], r[i], primes[s]);
        n_s += c;
      }
      sum_single += n_s;
      sum_pairs += n_s;  // diagonal term p' = p''
      for (std::size_t t = 0; t < primes.size(); ++t) {
        if (t == s) continue;
        const std::uint64_t m = primes[s] * primes[t];
        // x = r mod p_s, x = u mod p_t  =>  x = r + p_s * ((u - r) * p_s^-1 mod p_t).
        const std::uint64_t inv = inverse_mod(primes[s] % primes[t], primes[t]);
        for (const auto& r : members[s]) {
          for (const auto& u : members[t]) {
            BigInt c = 1;
            for (unsigned i = 0; i < cfg.g && c != 0; ++i) {
              const std::uint64_t diff = (u[i] + primes[t] - r[i] % primes[t]) % primes[t];
              const std::uint64_t x = r[i] + primes[s] * (diff * inv % primes[t]);
              c *= count_in_class(bounds[i], x % m, m);
            }
            sum_pairs += c;
          }
        }
      }
    }
    report.sum_p_a_y_prime_major = sum_single;
    const Rational n = Rational(report.box_count);
    report.lhs_prime_major =
        Rational(sum_pairs) - 2 * report.p_y * Rational(sum_single) + n * report.p_y * report.p_y;
  }

  double product = 1;
  const double q = cfg.q.convert_to<double>();
  const double y2 = static_cast<double>(cfg.y) * static_cast<double>(cfg.y);
  for (unsigned i = 1; i <= cfg.g; ++i) {
    product *= binomial(2 * cfg.g, i).convert_to<double>() * std::pow(q, i / 2.0) + y2;
  }
  report.rhs_core = report.p_y.convert_to<double>() * product;
  report.ratio = report.p_y == 0 ? 0.0 : report.lhs.convert_to<double>() / report.rhs_core;
  return report;
}

DensityReport density_report(unsigned g, std::uint64_t p, unsigned k, unsigned ell, std::uint64_t y,
                             const OmegaOptions& options, unsigned threads) {
  if (g > 4) throw InvalidArgument("density report needs exact C_ell, available for g <= 4");
  const SieveConfig cfg(g, p, k, ell, y);
  std::vector<std::uint64_t> window;
  for (auto pr : cfg.primes()) {
    if (2 * pr >= y) window.push_back(pr);
  }
  DensityReport report;
  report.entries = omega_for_primes(window, cfg, options, threads);
  double sum = 0;
  for (const auto& e : report.entries) sum += e.fraction();
  report.empirical = report.entries.empty() ? 0.0 : sum / static_cast<double>(report.entries.size());
  report.theoretical = Rational(BigInt(count_l_cycles(g, ell)), weyl_order(g));
  report.deviation = std::fabs(report.empirical - report.theoretical.convert_to<double>());
  return report;
}

ExceptionBound exception_bound(unsigned g, const BigInt& q) {
  if (q < 16) throw InvalidArgument("exception bound needs q >= 16 so that y = q^(1/4) >= 2");
  ExceptionBound b;
  b.y_used = isqrt(isqrt(q)).convert_to<std::uint64_t>();
  const double qd = q.convert_to<double>();
  const double exponent = static_cast<double>(g) * (g + 1) / 4.0 - 0.25;
  b.bound = std::pow(qd, exponent) * std::log(qd);
  return b;
}

}  // namespace weilcensus
