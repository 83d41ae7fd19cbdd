#include "weilcensus/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "weilcensus/errors.hpp"
#include "weilcensus/galoiscert.hpp"
#include "weilcensus/sieve.hpp"

namespace weilcensus {

std::uint64_t default_sieve_y(const BigInt& q) {
  // ceil(q^(1/4)) from the integer fourth root.
  BigInt r = isqrt(isqrt(q));
  if (r * r * r * r < q) ++r;
  return r > 50 ? r.convert_to<std::uint64_t>() : 50;
}

CensusCounts& CensusCounts::operator+=(const CensusCounts& o) {
  box += o.box;
  weil += o.weil;
  real_root += o.real_root;
  ordinary += o.ordinary;
  certified += o.certified;
  both += o.both;
  return *this;
}

Rational CensusRecord::ratio() const {
  if (counts.weil == 0) return Rational(0);
  return Rational(BigInt(counts.both), BigInt(counts.weil));
}

Rational CensusRecord::ratio_interior() const {
  const std::uint64_t interior = counts.weil - counts.real_root;
  if (interior == 0) return Rational(0);
  return Rational(BigInt(counts.both), BigInt(interior));
}

CensusCounts classify_point(const WeilCoefficients& w, std::uint64_t sieve_y) {
  CensusCounts c;
  c.box = 1;
  const WeilStatus status = weil_status(w);
  if (status == WeilStatus::NotWeil) return c;
  c.weil = 1;
  const bool interior = status == WeilStatus::WeilInterior;
  if (!interior) c.real_root = 1;
  const bool ordinary = is_ordinary(w);
  if (ordinary) c.ordinary = 1;
  const bool certified = certify_w2g(expand_frobenius(w), sieve_y).certified();
  if (certified) c.certified = 1;
  if (ordinary && certified && interior) c.both = 1;
  return c;
}

CensusCounts census_slab(const WeilBox& box, const BigInt& a1, std::uint64_t sieve_y) {
  CensusCounts total;
  box.for_each_in_slab(a1, [&](const WeilCoefficients& w) { total += classify_point(w, sieve_y); });
  return total;
}

CensusRecord run_census(unsigned g, std::uint64_t p, unsigned k, const CensusOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const WeilBox box = enumerate_box(g, p, k, options.box_limit);
  CensusRecord rec;
  rec.g = g;
  rec.p = p;
  rec.k = k;
  rec.q = box.q();
  rec.sieve_y = options.sieve_y ? options.sieve_y : default_sieve_y(box.q());

  const std::vector<BigInt> keys = box.slab_keys();
  std::vector<CensusCounts> per_slab(keys.size());
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(keys.size())));
  if (threads == 1) {
    for (std::size_t i = 0; i < keys.size(); ++i) per_slab[i] = census_slab(box, keys[i], rec.sieve_y);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < keys.size(); i = next++) {
            try {
              per_slab[i] = census_slab(box, keys[i], rec.sieve_y);
            } catch (...) {
              std::lock_guard lock(failure_mutex);
              if (!failure) failure = std::current_exception();
            }
          }
        });
      }
    }
    if (failure) std::rethrow_exception(failure);
  }
  // Summed in slab order so the result never depends on scheduling.
  for (const auto& c : per_slab) rec.counts += c;
  rec.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

TrendSeries trend(unsigned g, std::uint64_t p, unsigned k0, unsigned n_max, const CensusOptions& options) {
  if (k0 < 1) throw InvalidArgument("k0 must be positive");
  if (n_max < 1) throw InvalidArgument("n_max must be positive");
  TrendSeries s;
  s.g = g;
  s.p = p;
  s.k0 = k0;
  for (unsigned n = 1; n <= n_max; ++n) s.records.push_back(run_census(g, p, k0 * n, options));

  std::vector<double> xs, ys;
  for (const auto& r : s.records) {
    if (r.counts.weil == 0) continue;
    xs.push_back(std::log(r.q.convert_to<double>()));
    ys.push_back(std::log(static_cast<double>(r.counts.weil)));
  }
  if (xs.size() >= 2) {
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sx += xs[i];
      sy += ys[i];
      sxx += xs[i] * xs[i];
      sxy += xs[i] * ys[i];
    }
    s.growth_exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  return s;
}

VgEstimate estimate_vg(const TrendSeries& series) {
  if (series.records.size() < 2) throw InvalidArgument("v_g estimate needs at least two terms");
  VgEstimate out;
  for (const auto& r : series.records) {
    const double q = r.q.convert_to<double>();
    const double phi_ratio = 1.0 - 1.0 / static_cast<double>(r.p);
    const double scale = std::pow(q, r.g * (r.g + 1) / 4.0) * phi_ratio;
    out.from_weil.push_back(static_cast<double>(r.counts.weil) / scale);
    out.from_ordinary.push_back(static_cast<double>(r.counts.ordinary) / scale);
  }
  for (std::size_t i = 0; i + 1 < out.from_weil.size(); ++i) {
    const double dev = std::abs(out.from_weil[i + 1] - out.from_weil[i]) / out.from_weil[i];
    out.max_relative_deviation = std::max(out.max_relative_deviation, dev);
  }
  return out;
}

ExceptionComparison compare_exception_bound(unsigned g, std::uint64_t p, unsigned k, const CensusOptions& options) {
  const WeilBox probe = enumerate_box(g, p, k, options.box_limit);
  const ExceptionBound eb = exception_bound(g, probe.q());
  CensusOptions opts = options;
  opts.sieve_y = std::max<std::uint64_t>(eb.y_used, 2);
  const CensusRecord rec = run_census(g, p, k, opts);
  ExceptionComparison out;
  out.q = rec.q;
  out.y_used = opts.sieve_y;
  out.bound = eb.bound;
  out.non_certified = rec.counts.weil - rec.counts.certified;
  return out;
}

}  // namespace weilcensus
