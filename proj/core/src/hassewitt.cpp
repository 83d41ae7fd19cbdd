#include "weilcensus/hassewitt.hpp"

#include "weilcensus/errors.hpp"
#include "weilcensus/primes.hpp"

namespace weilcensus {

namespace {

void require_odd_prime(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not an odd prime");
}

std::uint64_t power_of(std::uint64_t x, std::uint64_t e, std::uint64_t p) { return pow_mod(x, e, p); }

}  // namespace

HyperellipticCurve::HyperellipticCurve(std::uint64_t p, IntPolynomial f) : p_(p), f_(std::move(f)) {
  require_odd_prime(p);
  const ModPolynomial reduced = ModPolynomial::reduce(f_, p);
  const int d = reduced.degree();
  if (d < 3) throw InvalidArgument("hyperelliptic model needs degree at least 3 mod p");
  if (!degree_pattern(reduced).squarefree) {
    throw InvalidArgument("singular curve: " + f_.to_string('x') + " is not squarefree mod " + std::to_string(p));
  }
  genus_ = static_cast<unsigned>((d - 1) / 2);
}

HasseWittMatrix::HasseWittMatrix(std::uint64_t p, unsigned g, std::vector<std::uint64_t> entries)
    : p_(p), g_(g), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(g) * g) throw InvalidArgument("matrix entry count mismatch");
}

std::uint64_t HasseWittMatrix::determinant() const {
  std::vector<std::uint64_t> m = entries_;
  const unsigned n = g_;
  std::uint64_t det = 1;
  for (unsigned col = 0; col < n; ++col) {
    unsigned pivot = col;
    while (pivot < n && m[pivot * n + col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (unsigned j = 0; j < n; ++j) std::swap(m[pivot * n + j], m[col * n + j]);
      det = (p_ - det) % p_;
    }
    const std::uint64_t pv = m[col * n + col];
    det = det * pv % p_;
    const std::uint64_t inv = inverse_mod(pv, p_);
    for (unsigned row = col + 1; row < n; ++row) {
      const std::uint64_t factor = m[row * n + col] * inv % p_;
      if (factor == 0) continue;
      for (unsigned j = col; j < n; ++j) {
        m[row * n + j] = (m[row * n + j] + p_ - factor * m[col * n + j] % p_) % p_;
      }
    }
  }
  return det;
}

HasseWittMatrix hasse_witt(const HyperellipticCurve& curve) {
  const std::uint64_t p = curve.p();
  const unsigned g = curve.genus();
  const ModPolynomial power = power_coefficients(curve.f(), (p - 1) / 2, p);
  std::vector<std::uint64_t> entries;
  entries.reserve(static_cast<std::size_t>(g) * g);
  for (unsigned i = 1; i <= g; ++i) {
    for (unsigned j = 1; j <= g; ++j) entries.push_back(power[i * p - j]);
  }
  return HasseWittMatrix(p, g, std::move(entries));
}

bool is_ordinary_curve(const HyperellipticCurve& curve, unsigned k) {
  if (k != 1) throw InvalidArgument("matrix ordinarity test is only implemented over the prime field");
  return hasse_witt(curve).determinant() != 0;
}

MillerParity miller_parity(std::uint64_t p, unsigned g) {
  require_odd_prime(p);
  if (g < 1) throw InvalidArgument("genus must be positive");
  if (g % p == 0) throw InvalidArgument("Miller's criterion needs p not dividing g");
  MillerParity out;
  out.p = p;
  out.g = g;
  const std::int64_t half_up = static_cast<std::int64_t>((p + 1) / 2);
  const std::int64_t half_down = static_cast<std::int64_t>((p - 1) / 2);
  const std::int64_t pp = static_cast<std::int64_t>(p);
  const std::int64_t gg = g;
  out.claims_ordinary = true;
  out.parity_claims_ordinary = true;
  for (unsigned u = 0; u < g; ++u) {
    MillerRow row;
    row.u = u;
    // v is the unique residue with p(v+1) = (p+1)/2 + u mod g.
    for (unsigned v = 0; v < g; ++v) {
      if (((pp * (v + 1) - half_up - u) % gg + gg) % gg == 0) {
        row.v = v;
        break;
      }
    }
    const std::int64_t numerator = pp * (row.v + 1) - half_up - u;
    if (numerator % (2 * gg) == 0) {
      row.t = numerator / (2 * gg);
      row.r = half_down - *row.t;
      row.solvable = *row.t >= 0 && *row.r >= 0;
    }
    row.parity_holds = ((row.v + 1) - (u + half_up)) % 2 == 0;
    out.claims_ordinary = out.claims_ordinary && row.solvable;
    out.parity_claims_ordinary = out.parity_claims_ordinary && row.parity_holds;
    out.rows.push_back(row);
  }
  return out;
}

MillerComparison compare_miller(std::uint64_t p, unsigned g) {
  MillerComparison c;
  c.parity = miller_parity(p, g);
  std::vector<BigInt> coeffs(2 * g + 2);
  coeffs[1] = 1;
  coeffs[2 * g + 1] = 1;
  c.matrix_ordinary = is_ordinary_curve(HyperellipticCurve(p, IntPolynomial(std::move(coeffs))));
  return c;
}

IntPolynomial family_T_polynomial(std::uint64_t p, unsigned g, std::uint64_t t, std::uint64_t u) {
  const unsigned delta = (g % p == 0) ? 1 : 0;
  std::vector<BigInt> inner(2 * g + delta + 1);
  inner[0] = 1;
  inner[g] += t;
  inner[2 * g + delta] += 1;
  const IntPolynomial linear{-static_cast<long long>(u), 1};
  return linear * IntPolynomial(std::move(inner));
}

FamilyScan scan_family_T(std::uint64_t p, unsigned g, std::uint64_t max_samples) {
  require_odd_prime(p);
  if (g < 1) throw InvalidArgument("genus must be positive");
  const unsigned delta = (g % p == 0) ? 1 : 0;
  FamilyScan scan;
  for (std::uint64_t t = 0; t < p; ++t) {
    for (std::uint64_t u = 0; u < p; ++u) {
      if (scan.examined >= max_samples) return scan;
      const std::uint64_t domain = (power_of(u, 2 * g + delta, p) + t * power_of(u, g, p) + 1) % p;
      if (domain == 0) {
        ++scan.outside_domain;
        continue;
      }
      std::optional<HyperellipticCurve> curve;
      try {
        curve.emplace(p, family_T_polynomial(p, g, t, u));
      } catch (const InvalidArgument&) {
        ++scan.singular;
        continue;
      }
      ++scan.examined;
      if (is_ordinary_curve(*curve)) {
        scan.witness = FamilyWitness{t, u};
        return scan;
      }
    }
  }
  return scan;
}

S0Table scan_family_S0(std::uint64_t p, unsigned g) {
  require_odd_prime(p);
  if (g < 2 || g % 2 != 0) throw InvalidArgument("family S_u with t = 0 needs an even genus");
  if (g % p == 0) throw InvalidArgument("family S_u with t = 0 needs p not dividing g");
  S0Table table;
  table.p = p;
  table.g = g;
  for (std::uint64_t u = 0; u < p; ++u) {
    const std::uint64_t u2g = power_of(u, 2 * g, p);
    if (u2g == 1) {
      table.excluded.push_back(u);
      continue;
    }
    if (u2g == p - 1) {
      table.singular.push_back(u);
      continue;
    }
    table.rows.push_back({u, is_ordinary_curve(HyperellipticCurve(p, family_T_polynomial(p, g, 0, u)))});
  }
  return table;
}

}  // namespace weilcensus
