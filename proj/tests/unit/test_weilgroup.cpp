#include <doctest.h>

#include <random>

#include "oracles/brute_constraints.hpp"
#include "weilcensus/errors.hpp"
#include "weilcensus/weilgroup.hpp"

using namespace weilcensus;

namespace {

// (0, e_i) for each i, then (1, -e_j), in sorted order.
std::vector<ExponentVector> conjugate_pattern(unsigned g) {
  std::vector<ExponentVector> out;
  for (unsigned i = 0; i < g; ++i) {
    ExponentVector e{0, std::vector<std::int64_t>(g, 0)};
    e.n[i] = 1;
    out.push_back(e);
    ExponentVector f{1, std::vector<std::int64_t>(g, 0)};
    f.n[i] = -1;
    out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

WeilCoefficients W(std::uint64_t p, unsigned k, std::vector<long long> a) {
  return WeilCoefficients(p, k, std::vector<BigInt>(a.begin(), a.end()));
}

}  // namespace

TEST_CASE("solve_constraints examples") {
  CHECK(solve_constraints(1, 3) == std::vector<ExponentVector>{{0, {1}}, {1, {-1}}});
  CHECK(solve_constraints(2, 3) == std::vector<ExponentVector>{{0, {0, 1}}, {0, {1, 0}}, {1, {-1, 0}}, {1, {0, -1}}});
  CHECK(solve_constraints(3, 5).size() == 6);
}

TEST_CASE("solve_constraints errors and refusal") {
  CHECK_THROWS_AS(solve_constraints(0, 1), InvalidArgument);
  CHECK_THROWS_AS(solve_constraints(2, 0), InvalidArgument);
  CHECK_THROWS_AS(solve_constraints(25, 1), InvalidArgument);
  CHECK_THROWS_AS(solve_constraints(8, 5, 10), Refusal);
}

TEST_CASE("property: solution set is the conjugate pattern, independent of B") {
  for (unsigned g = 1; g <= 12; ++g) {
    for (std::int64_t b : {1, 2, 3, 5}) {
      if (g > 8 && b > 2) continue;
      CHECK(solve_constraints(g, b) == conjugate_pattern(g));
    }
  }
}

TEST_CASE("property: pruned search equals exhaustive enumeration") {
  for (unsigned g = 1; g <= 4; ++g) {
    for (std::int64_t b : {1, 2, 3}) {
      const auto brute = oracle::brute_constraints(g, b);
      const auto ours = solve_constraints(g, b);
      REQUIRE(brute.size() == ours.size());
      for (std::size_t i = 0; i < ours.size(); ++i) {
        CHECK(brute[i].first == ours[i].m);
        CHECK(brute[i].second == ours[i].n);
      }
    }
  }
}

TEST_CASE("derive_bounds examples") {
  const ConstraintSystem s1 = derive_bounds(1);
  CHECK(s1.single_bounds.size() == 1);
  CHECK(s1.pair_bounds.empty());
  const ConstraintSystem s2 = derive_bounds(2);
  CHECK(s2.single_bounds == std::vector<unsigned>{1, 2});
  REQUIRE(s2.pair_bounds.size() == 1);
  CHECK(s2.pair_bounds[0].i == 1);
  CHECK(s2.pair_bounds[0].j == 2);
  const ConstraintSystem s3 = derive_bounds(3);
  CHECK(s3.single_bounds.size() == 3);
  CHECK(s3.pair_bounds.size() == 3);
  for (unsigned g = 1; g <= 8; ++g) CHECK(derive_bounds(g).bounds_verified);
}

TEST_CASE("property: every solution meets the derived bounds") {
  for (unsigned g = 1; g <= 6; ++g) {
    const ConstraintSystem s = derive_bounds(g);
    for (const auto& e : solve_constraints(g, 3)) {
      CHECK(s.satisfies_family(e));
      CHECK(s.satisfies_bounds(e));
    }
    ExponentVector bad{0, std::vector<std::int64_t>(g, 0)};
    bad.n[0] = 2;
    CHECK_FALSE(s.satisfies_bounds(bad));
  }
}

TEST_CASE("prop2_decide examples") {
  const Prop2Verdict a = prop2_decide(W(5, 1, {1}), 50);
  CHECK(a.conjugates_only());
  CHECK(a.reason.empty());
  const Prop2Verdict b = prop2_decide(W(3, 1, {1, 3}), 50);
  CHECK_FALSE(b.conjugates_only());
  CHECK(b.reason == "not ordinary");
  const Prop2Verdict c = prop2_decide(W(2, 2, {4}), 50);
  CHECK_FALSE(c.conjugates_only());
  CHECK(c.reason == "real root");
  CHECK(prop2_decide(W(3, 1, {6, 18}), 50).reason == "not a Weil polynomial");
}

TEST_CASE("property: prop2 gates are never bypassed") {
  for (std::uint64_t p : {2, 3, 5}) {
    WeilBox(2, p, 1).for_each([&](const WeilCoefficients& w) {
      const Prop2Verdict v = prop2_decide(w, 60);
      const bool gates = weil_status(w) == WeilStatus::WeilInterior && is_ordinary(w) &&
                         certify_w2g(expand_frobenius(w), 60).certified();
      CHECK(v.conjugates_only() == gates);
      if (!gates) CHECK_FALSE(v.reason.empty());
    });
  }
}

TEST_CASE("relation_search examples") {
  CHECK_FALSE(relation_search(expand_frobenius(W(5, 1, {1})), 4, 1e-8L));
  const auto hit = relation_search(expand_frobenius(W(2, 2, {4})), 4, 1e-8L);
  REQUIRE(hit);
  CHECK(*hit == ExponentVector{-1, {2}});
  CHECK_THROWS_AS(relation_search(expand_frobenius(W(5, 1, {1})), 7, 1e-8L), InvalidArgument);
}

TEST_CASE("property: no relations at certified points, forced relation at boundary points") {
  std::mt19937_64 rng(23);
  int certified = 0;
  for (int trial = 0; certified < 100 && trial < 20000; ++trial) {
    const unsigned g = 1 + trial % 3;
    const std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23}[trial % 9];
    const WeilBox box(g, p, 1);
    std::vector<BigInt> a;
    for (const auto& b : box.bounds()) {
      std::uniform_int_distribution<long long> d(-b.convert_to<long long>(), b.convert_to<long long>());
      a.emplace_back(d(rng));
    }
    const WeilCoefficients w(p, 1, a);
    if (!prop2_decide(w, 100).conjugates_only()) continue;
    const int n = g == 3 ? 2 : 3;
    CHECK_FALSE(relation_search(expand_frobenius(w), n, 1e-8L));
    ++certified;
  }
  CHECK(certified == 100);
  for (std::uint64_t q : {4, 9, 25}) {
    const std::uint64_t p = q == 4 ? 2 : (q == 9 ? 3 : 5);
    const long long s = q == 4 ? 2 : (q == 9 ? 3 : 5);
    CHECK(relation_search(expand_frobenius(W(p, 2, {2 * s})), 2, 1e-8L));
  }
}
