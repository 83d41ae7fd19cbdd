#include "oracles/brute_factor.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {

namespace {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  for (std::uint64_t x = 1; x < p; ++x) {
    if (a * x % p == 1) return x;
  }
  throw std::logic_error("no inverse");
}

// Returns true and sets quotient when d divides f.
bool divides(const Poly& f, const Poly& d, std::uint64_t p, Poly& quotient) {
  Poly r = f;
  const std::size_t dd = d.size() - 1;
  if (r.size() < d.size()) return false;
  quotient.assign(r.size() - dd, 0);
  const std::uint64_t li = inv(d.back(), p);
  for (std::size_t top = r.size() - 1; top + 1 >= d.size(); --top) {
    const std::uint64_t c = r[top] * li % p;
    quotient[top - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) r[top - dd + j] = (r[top - dd + j] + p * p - c * d[j] % p) % p;
    if (top == dd) break;
  }
  trim(r);
  return r.empty();
}

}  // namespace

std::vector<int> brute_factor_degrees(std::uint64_t p, Poly f) {
  for (auto& x : f) x %= p;
  trim(f);
  if (f.empty()) throw std::invalid_argument("zero polynomial");
  std::vector<int> out;
  for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1;) {
    // Odometer over monic degree-d candidates.
    Poly cand(d + 1, 0);
    cand[d] = 1;
    bool found = false;
    while (true) {
      Poly quotient;
      if (divides(f, cand, p, quotient)) {
        out.push_back(d);
        f = quotient;
        found = true;
        break;
      }
      int i = 0;
      while (i < d && ++cand[i] == p) cand[i++] = 0;
      if (i == d) break;
    }
    // Smallest-degree divisors are irreducible; retry the same degree.
    if (!found) ++d;
  }
  if (f.size() > 1) out.push_back(static_cast<int>(f.size()) - 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
