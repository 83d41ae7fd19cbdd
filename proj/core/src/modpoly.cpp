#include "weilcensus/modpoly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "weilcensus/errors.hpp"
#include "weilcensus/primes.hpp"

namespace weilcensus {

namespace {

using Poly = std::vector<std::uint64_t>;

// Primes are below 2^32, so products of two residues fit in 64 bits.
constexpr std::uint64_t kMaxPrime = 1ull << 32;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

struct Field {
  explicit Field(std::uint64_t prime) : p(prime), barrett(~std::uint64_t{0} / prime) {}

  std::uint64_t p;
  // floor((2^64 - 1) / p): x mod p by one high multiply and at most two
  // corrections, valid for any 64-bit x.
  std::uint64_t barrett;

  std::uint64_t reduce(std::uint64_t x) const {
    const auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * barrett) >> 64);
    std::uint64_t r = x - q * p;
    while (r >= p) r -= p;
    return r;
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p - b; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return reduce(a * b); }
  std::uint64_t inv(std::uint64_t a) const { return inverse_mod(a, p); }

  Poly mul(const Poly& a, const Poly& b) const {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = add(out[i + j], mul(a[i], b[j]));
    }
    trim(out);
    return out;
  }

  // In-place remainder of a by a monic-normalizable nonzero b.
  void rem(Poly& a, const Poly& b) const {
    const int db = deg(b);
    if (deg(a) < db) return;
    const std::uint64_t lead_inv = b.back() == 1 ? 1 : inv(b.back());
    for (int top = deg(a); top >= db; --top) {
      const std::uint64_t c = lead_inv == 1 ? a[top] : mul(a[top], lead_inv);
      if (c != 0) {
        const int shift = top - db;
        for (int j = 0; j <= db; ++j) a[shift + j] = sub(a[shift + j], mul(c, b[j]));
      }
    }
    a.resize(db);
    trim(a);
  }

  Poly divide(Poly a, const Poly& b) const {
    const int db = deg(b);
    if (deg(a) < db) return {};
    const std::uint64_t lead_inv = inv(b.back());
    Poly q(deg(a) - db + 1, 0);
    for (int top = deg(a); top >= db; --top) {
      const std::uint64_t c = mul(a[top], lead_inv);
      q[top - db] = c;
      if (c != 0) {
        const int shift = top - db;
        for (int j = 0; j <= db; ++j) a[shift + j] = sub(a[shift + j], mul(c, b[j]));
      }
    }
    trim(q);
    return q;
  }

  void make_monic(Poly& a) const {
    if (a.empty() || a.back() == 1) return;
    const std::uint64_t li = inv(a.back());
    for (auto& x : a) x = mul(x, li);
  }

  Poly gcd(Poly a, Poly b) const {
    while (!b.empty()) {
      rem(a, b);
      std::swap(a, b);
    }
    make_monic(a);
    return a;
  }

  Poly derivative(const Poly& a) const {
    if (a.size() <= 1) return {};
    Poly d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = mul(a[i], i % p);
    trim(d);
    return d;
  }

  // out = a * b mod m for monic m; out must not alias a or b.
  void mulmod_into(const Poly& a, const Poly& b, const Poly& m, Poly& out) const {
    out.clear();
    if (a.empty() || b.empty()) return;
    out.assign(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = add(out[i + j], mul(a[i], b[j]));
    }
    const int dm = deg(m);
    for (int top = deg(out); top >= dm; --top) {
      const std::uint64_t c = out[top];
      if (c == 0) continue;
      const int shift = top - dm;
      for (int j = 0; j < dm; ++j) out[shift + j] = sub(out[shift + j], mul(c, m[j]));
      out[top] = 0;
    }
    if (static_cast<int>(out.size()) > dm) out.resize(dm);
    trim(out);
  }

  // base^e mod m, m monic.
  Poly powmod(Poly base, std::uint64_t e, const Poly& m) const {
    Poly r{1};
    Poly scratch;
    rem(base, m);
    while (e) {
      if (e & 1) {
        mulmod_into(r, base, m, scratch);
        std::swap(r, scratch);
      }
      e >>= 1;
      if (e) {
        mulmod_into(base, base, m, scratch);
        std::swap(base, scratch);
      }
    }
    return r;
  }

  // Coefficients at indices divisible by p: the p-th root of a polynomial
  // whose derivative vanishes.
  Poly pth_root(const Poly& a) const {
    Poly r;
    for (std::size_t i = 0; i < a.size(); i += p) r.push_back(a[i]);
    trim(r);
    return r;
  }
};

// Distinct-degree splitting of a monic squarefree polynomial.
void distinct_degree(const Field& F, Poly f, std::vector<int>& out) {
  Poly h{0, 1};  // X
  F.rem(h, f);
  for (int d = 1; 2 * d <= deg(f); ++d) {
    h = F.powmod(h, F.p, f);
    Poly hx = h;
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = F.sub(hx[1], 1);
    trim(hx);
    Poly g = F.gcd(f, hx);
    if (deg(g) > 0) {
      for (int i = 0; i < deg(g) / d; ++i) out.push_back(d);
      f = F.divide(f, g);
      F.rem(h, f);
    }
  }
  if (deg(f) > 0) out.push_back(deg(f));
}

// Squarefree factorization over F_p: appends (part, multiplicity) pairs.
void squarefree_decompose(const Field& F, const Poly& f, std::uint64_t scale,
                          std::vector<std::pair<Poly, std::uint64_t>>& parts) {
  if (deg(f) <= 0) return;
  Poly d = F.derivative(f);
  if (d.empty()) {
    squarefree_decompose(F, F.pth_root(f), scale * F.p, parts);
    return;
  }
  Poly c = F.gcd(f, d);
  Poly w = F.divide(f, c);
  std::uint64_t i = 1;
  while (deg(w) > 0) {
    Poly y = F.gcd(w, c);
    Poly z = F.divide(w, y);
    if (deg(z) > 0) parts.emplace_back(std::move(z), i * scale);
    ++i;
    w = std::move(y);
    c = F.divide(c, w);
  }
  if (deg(c) > 0) squarefree_decompose(F, F.pth_root(c), scale * F.p, parts);
}

}  // namespace

ModPolynomial::ModPolynomial(std::uint64_t prime, std::vector<std::uint64_t> residues)
    : prime_(prime), residues_(std::move(residues)) {
  if (prime >= kMaxPrime || !is_prime(prime)) {
    throw InvalidArgument("modulus " + std::to_string(prime) + " is not a supported prime");
  }
  for (auto& r : residues_) r %= prime_;
  trim(residues_);
}

ModPolynomial::ModPolynomial(Trusted, std::uint64_t prime, std::vector<std::uint64_t> residues)
    : prime_(prime), residues_(std::move(residues)) {
  trim(residues_);
}

ModPolynomial ModPolynomial::unchecked(std::uint64_t prime, std::vector<std::uint64_t> residues) {
  for (auto& r : residues) r %= prime;
  return ModPolynomial(Trusted{}, prime, std::move(residues));
}

ModPolynomial ModPolynomial::reduce(const IntPolynomial& f, std::uint64_t prime) {
  std::vector<std::uint64_t> r;
  r.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients()) r.push_back(mod_reduce(c, prime));
  return ModPolynomial(prime, std::move(r));
}

ModPolynomial operator*(const ModPolynomial& a, const ModPolynomial& b) {
  if (a.prime_ != b.prime_) throw InvalidArgument("product of polynomials over different fields");
  return ModPolynomial(ModPolynomial::Trusted{}, a.prime_, Field{a.prime_}.mul(a.residues_, b.residues_));
}

std::string ModPolynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const std::uint64_t c = residues_[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  os << " (mod " << prime_ << ")";
  return os.str();
}

bool DegreePattern::is_cycle_pattern(int total, int ell) const {
  if (!squarefree) return false;
  if (ell < 1 || ell > total) return false;
  const std::size_t expected = static_cast<std::size_t>(total - ell) + 1;
  if (degrees.size() != expected) return false;
  if (ell == 1) return std::all_of(degrees.begin(), degrees.end(), [](int d) { return d == 1; });
  // Sorted ascending: total - ell ones then ell.
  for (std::size_t i = 0; i + 1 < degrees.size(); ++i) {
    if (degrees[i] != 1) return false;
  }
  return degrees.back() == ell;
}

DegreePattern degree_pattern(const ModPolynomial& f) {
  if (f.is_zero()) throw InvalidArgument("degree pattern of the zero polynomial");
  if (f.degree() > static_cast<int>(kDefaultMaxDegree)) {
    throw InvalidArgument("degree pattern limited to degree " + std::to_string(kDefaultMaxDegree));
  }
  const Field F{f.prime()};
  Poly g(f.residues().begin(), f.residues().end());
  F.make_monic(g);

  DegreePattern out;
  if (deg(g) == 0) return out;

  Poly d = F.derivative(g);
  if (!d.empty() && deg(F.gcd(g, d)) == 0) {
    distinct_degree(F, std::move(g), out.degrees);
  } else {
    out.squarefree = false;
    std::vector<std::pair<Poly, std::uint64_t>> parts;
    squarefree_decompose(F, g, 1, parts);
    for (auto& [part, multiplicity] : parts) {
      std::vector<int> degs;
      distinct_degree(F, std::move(part), degs);
      for (int dd : degs) {
        for (std::uint64_t m = 0; m < multiplicity; ++m) out.degrees.push_back(dd);
      }
    }
  }
  std::sort(out.degrees.begin(), out.degrees.end());
  return out;
}

ModPolynomial power_coefficients(const IntPolynomial& f, std::uint64_t e, std::uint64_t prime) {
  if (e == 0) throw InvalidArgument("power_coefficients requires a positive exponent");
  const ModPolynomial base_poly = ModPolynomial::reduce(f, prime);
  const Field F{prime};
  Poly base(base_poly.residues().begin(), base_poly.residues().end());
  Poly result{1};
  while (e) {
    if (e & 1) result = F.mul(result, base);
    e >>= 1;
    if (e) base = F.mul(base, base);
  }
  return ModPolynomial(ModPolynomial::Trusted{}, prime, std::move(result));
}

}  // namespace weilcensus
