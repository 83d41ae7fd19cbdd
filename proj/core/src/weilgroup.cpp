#include "weilcensus/weilgroup.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "weilcensus/errors.hpp"
#include "weilcensus/numroots.hpp"

namespace weilcensus {

std::string ExponentVector::to_string() const {
  std::ostringstream os;
  os << "(m=" << m << ", n=(";
  for (std::size_t i = 0; i < n.size(); ++i) os << (i ? "," : "") << n[i];
  os << "))";
  return os.str();
}

bool ConstraintSystem::satisfies_family(const ExponentVector& e) const {
  if (e.n.size() != g) return false;
  std::int64_t total = 2 * e.m;
  for (auto x : e.n) total += x;
  if (total != 1) return false;
  for (std::uint64_t subset = 0; subset < (1ull << g); ++subset) {
    std::int64_t s = e.m;
    for (unsigned i = 0; i < g; ++i) {
      if (subset & (1ull << i)) s += e.n[i];
    }
    if (s < 0) return false;
  }
  return true;
}

bool ConstraintSystem::satisfies_bounds(const ExponentVector& e) const {
  for (unsigned i : single_bounds) {
    if (std::abs(e.n[i - 1]) > 1) return false;
  }
  for (const auto& pb : pair_bounds) {
    if (std::abs(e.n[pb.i - 1] + e.n[pb.j - 1]) > 1) return false;
  }
  return true;
}

namespace {

struct Search {
  unsigned g;
  std::int64_t bound;
  std::uint64_t work_limit;
  std::uint64_t nodes = 0;
  ConstraintSystem family;
  std::vector<ExponentVector> solutions;
  ExponentVector current;

  // neg / pos: sums of the negative / positive n_i chosen so far. The subset
  // S = {i : n_i < 0} gives m + neg >= 0; neg only decreases, so this prunes
  // prefixes, and it also caps how far later entries can pull the total down.
  void descend(unsigned i, std::int64_t neg, std::int64_t pos) {
    if (++nodes > work_limit) {
      throw Refusal("constraint search exceeded its work limit of " + std::to_string(work_limit) + " nodes",
                    std::to_string(nodes));
    }
    const std::int64_t m = current.m;
    if (i == g) {
      if (2 * m + neg + pos == 1 && family.satisfies_family(current)) solutions.push_back(current);
      return;
    }
    const std::int64_t remaining = static_cast<std::int64_t>(g - i - 1);
    const std::int64_t target = 1 - 2 * m;  // required value of sum n_i
    for (std::int64_t v = -bound; v <= bound; ++v) {
      const std::int64_t n_neg = neg + std::min<std::int64_t>(v, 0);
      const std::int64_t n_pos = pos + std::max<std::int64_t>(v, 0);
      if (m + n_neg < 0) continue;
      const std::int64_t partial = n_neg + n_pos;
      const std::int64_t lowest = partial - std::min(remaining * bound, m + n_neg);
      const std::int64_t highest = partial + remaining * bound;
      if (lowest > target || highest < target) continue;
      current.n[i] = v;
      descend(i + 1, n_neg, n_pos);
    }
    current.n[i] = 0;
  }
};

}  // namespace

std::vector<ExponentVector> solve_constraints(unsigned g, std::int64_t bound, std::uint64_t work_limit) {
  if (g < 1) throw InvalidArgument("dimension must be positive");
  if (g > 24) throw InvalidArgument("subset family limited to g <= 24");
  if (bound < 1) throw InvalidArgument("box bound must be at least 1");
  Search s{g, bound, work_limit, 0, {}, {}, {}};
  s.family.g = g;
  s.current.n.assign(g, 0);
  // S = {} gives m >= 0.
  for (std::int64_t m = 0; m <= bound; ++m) {
    s.current.m = m;
    s.descend(0, 0, 0);
  }
  std::sort(s.solutions.begin(), s.solutions.end());
  return s.solutions;
}

ConstraintSystem derive_bounds(unsigned g) {
  ConstraintSystem sys;
  sys.g = g;
  for (unsigned i = 1; i <= g; ++i) sys.single_bounds.push_back(i);
  for (unsigned i = 1; i <= g; ++i) {
    for (unsigned j = i + 1; j <= g; ++j) sys.pair_bounds.push_back({i, j});
  }
  const auto solutions = solve_constraints(g, 2);
  sys.bounds_verified = std::all_of(solutions.begin(), solutions.end(),
                                    [&](const ExponentVector& e) { return sys.satisfies_bounds(e); });
  return sys;
}

Prop2Verdict prop2_decide(const WeilCoefficients& w, std::uint64_t y) {
  Prop2Verdict v;
  v.weil = weil_status(w);
  v.ordinary = is_ordinary(w);
  const FrobeniusPolynomial f = expand_frobenius(w);
  v.galois = certify_w2g(f, y);
  if (v.weil == WeilStatus::NotWeil) {
    v.reason = "not a Weil polynomial";
  } else if (v.weil == WeilStatus::WeilWithRealRoot) {
    v.reason = "real root";
  } else if (!v.ordinary) {
    v.reason = "not ordinary";
  } else if (!v.galois.certified()) {
    v.reason = "Galois group not certified";
  } else {
    v.kind = Prop2Verdict::Kind::ConjugatesOnly;
  }
  return v;
}

namespace {

// Visits every nonzero vector of max-norm exactly `shell`, lexicographically.
template <class Fn>
bool visit_shell(unsigned dims, int shell, Fn&& fn) {
  std::vector<int> v(dims, -shell);
  while (true) {
    int norm = 0;
    for (int x : v) norm = std::max(norm, std::abs(x));
    if (norm == shell && fn(v)) return true;
    unsigned i = dims;
    while (i > 0) {
      --i;
      if (v[i] < shell) {
        ++v[i];
        break;
      }
      v[i] = -shell;
      if (i == 0) return false;
    }
  }
}

}  // namespace

std::optional<ExponentVector> relation_search(const FrobeniusPolynomial& f, int max_exponent, long double tol) {
  if (max_exponent < 1 || max_exponent > 6) throw InvalidArgument("relation search exponent bound must be in [1, 6]");
  if (!(tol > 0)) throw InvalidArgument("tolerance must be positive");
  const auto roots = complex_roots(f.polynomial());
  const long double residual = max_relative_residual(f.polynomial(), roots);
  if (residual > tol) {
    throw NumericalFailure("root residual " + std::to_string(static_cast<double>(residual)) +
                           " exceeds the relation-search tolerance");
  }
  const long double q = to_long_double(f.q());
  const auto pairs = pair_q_conjugates(roots, q);
  const unsigned g = f.g();
  std::vector<Complex> pi(g);
  for (unsigned i = 0; i < g; ++i) pi[i] = roots[pairs[i].first];

  std::optional<ExponentVector> hit;
  for (int shell = 1; shell <= max_exponent && !hit; ++shell) {
    visit_shell(g + 1, shell, [&](const std::vector<int>& v) {
      Complex value = std::pow(q, static_cast<long double>(v[0]));
      for (unsigned i = 0; i < g; ++i) value *= std::pow(pi[i], v[i + 1]);
      if (std::abs(value - Complex(1)) < tol) {
        ExponentVector e;
        e.m = v[0];
        e.n.assign(v.begin() + 1, v.end());
        hit = std::move(e);
        return true;
      }
      return false;
    });
  }
  return hit;
}

}  // namespace weilcensus
