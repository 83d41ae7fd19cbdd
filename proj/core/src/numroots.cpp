#include "weilcensus/numroots.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "weilcensus/errors.hpp"

namespace weilcensus {

namespace {

struct Horner {
  Complex value;
  Complex slope;
};

Horner horner(const std::vector<long double>& c, Complex z) {
  Complex v = 0, d = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    d = d * z + v;
    v = v * z + *it;
  }
  return {v, d};
}

}  // namespace

std::vector<Complex> complex_roots(const IntPolynomial& f) {
  const int n = f.degree();
  if (n < 1) throw InvalidArgument("complex_roots needs a nonconstant polynomial");

  std::vector<Complex> roots;
  // Strip roots at zero.
  int low = 0;
  while (f[low] == 0) {
    roots.emplace_back(0);
    ++low;
  }
  const int m = n - low;
  if (m == 0) return roots;

  const long double lead = to_long_double(f.leading());
  const long double scale =
      std::pow(std::fabs(to_long_double(f[low]) / lead), 1.0L / static_cast<long double>(m));

  // Monic, rescaled so the root moduli have geometric mean one.
  std::vector<long double> c(m + 1);
  for (int i = 0; i <= m; ++i) {
    c[i] = to_long_double(f[low + i]) / lead * std::pow(scale, static_cast<long double>(i - m));
  }

  std::vector<Complex> z(m);
  for (int k = 0; k < m; ++k) {
    const long double angle = 2 * std::numbers::pi_v<long double> * k / m + 0.4L;
    z[k] = std::polar(1.0L, angle);
  }

  const long double eps = std::numeric_limits<long double>::epsilon();
  for (int iter = 0; iter < 2000; ++iter) {
    long double largest_step = 0;
    for (int k = 0; k < m; ++k) {
      const Horner h = horner(c, z[k]);
      if (h.value == Complex(0)) continue;
      const Complex ratio = h.value / h.slope;
      Complex repulsion = 0;
      for (int j = 0; j < m; ++j) {
        if (j != k) repulsion += 1.0L / (z[k] - z[j]);
      }
      const Complex step = ratio / (1.0L - ratio * repulsion);
      z[k] -= step;
      largest_step = std::max(largest_step, std::abs(step) / std::max(1.0L, std::abs(z[k])));
    }
    if (largest_step < 8 * eps) break;
  }

  for (auto& r : z) roots.push_back(r * scale);
  return roots;
}

long double max_relative_residual(const IntPolynomial& f, const std::vector<Complex>& roots) {
  long double worst = 0;
  for (const auto& r : roots) {
    Complex v = 0;
    long double mag = 0;
    const long double ar = std::abs(r);
    for (int i = f.degree(); i >= 0; --i) {
      const long double c = to_long_double(f[i]);
      v = v * r + c;
      mag = mag * ar + std::fabs(c);
    }
    if (mag > 0) worst = std::max(worst, std::abs(v) / mag);
  }
  return worst;
}

std::vector<std::pair<std::size_t, std::size_t>> pair_q_conjugates(const std::vector<Complex>& roots,
                                                                   long double q) {
  std::vector<bool> used(roots.size(), false);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    const Complex target = q / roots[i];
    std::size_t best = roots.size();
    long double best_dist = std::numeric_limits<long double>::infinity();
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (used[j]) continue;
      const long double dist = std::abs(roots[j] - target);
      if (dist < best_dist) {
        best_dist = dist;
        best = j;
      }
    }
    if (best == roots.size()) throw NumericalFailure("odd number of roots cannot be paired");
    used[best] = true;
    if (roots[best].imag() > roots[i].imag()) {
      pairs.emplace_back(best, i);
    } else {
      pairs.emplace_back(i, best);
    }
  }
  return pairs;
}

}  // namespace weilcensus
