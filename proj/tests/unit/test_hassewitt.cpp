#include <doctest.h>

#include <random>

#include "oracles/point_count.hpp"
#include "weilcensus/errors.hpp"
#include "weilcensus/hassewitt.hpp"
#include "weilcensus/primes.hpp"
#include "weilcensus/weilpoly.hpp"

using namespace weilcensus;

namespace {

HyperellipticCurve curve(std::uint64_t p, std::initializer_list<long long> f) { return HyperellipticCurve(p, IntPolynomial(f)); }

std::vector<long long> as_longs(const IntPolynomial& f) {
  std::vector<long long> out;
  for (const auto& c : f.coefficients()) out.push_back(c.convert_to<long long>());
  return out;
}

// Ordinarity from point counts: p does not divide the middle coefficient.
bool point_count_ordinary(std::uint64_t p, const std::vector<long long>& f) {
  const auto a = oracle::frobenius_coefficients(p, f);
  return is_ordinary(WeilCoefficients(p, 1, a));
}

}  // namespace

TEST_CASE("hasse_witt examples") {
  CHECK(hasse_witt(curve(3, {0, 1, 0, 1})).entries() == std::vector<std::uint64_t>{0});
  CHECK(hasse_witt(curve(5, {0, 1, 0, 1})).entries() == std::vector<std::uint64_t>{2});
  const HasseWittMatrix m = hasse_witt(curve(3, {0, 1, 0, 0, 0, 1}));
  CHECK(m.size() == 2);
  CHECK(m.at(1, 1) == 0);
  CHECK(m.at(1, 2) == 1);
  CHECK(m.at(2, 1) == 1);
  CHECK(m.at(2, 2) == 0);
  CHECK(m.determinant() == 2);
}

TEST_CASE("is_ordinary_curve examples") {
  CHECK(is_ordinary_curve(curve(5, {0, 1, 0, 1})));
  CHECK_FALSE(is_ordinary_curve(curve(3, {0, 1, 0, 1})));
  CHECK(is_ordinary_curve(curve(3, {0, 1, 0, 0, 0, 1})));
  CHECK_THROWS_AS(is_ordinary_curve(curve(3, {0, 1, 0, 1}), 2), InvalidArgument);
}

TEST_CASE("curve validation") {
  CHECK_THROWS_AS(curve(2, {0, 1, 0, 1}), InvalidArgument);
  CHECK_THROWS_AS(curve(9, {0, 1, 0, 1}), InvalidArgument);
  CHECK_THROWS_AS(curve(5, {0, 0, 1, 1}), InvalidArgument);  // x^2 (x + 1)
  CHECK_THROWS_AS(curve(5, {1, 1, 5}), InvalidArgument);     // degree 1 mod 5
  CHECK(curve(7, {1, 0, 0, 0, 0, 0, 1}).genus() == 2);       // sextic
  CHECK(curve(7, {1, 0, 0, 0, 0, 1}).genus() == 2);
  CHECK(curve(7, {1, 1, 0, 1}).genus() == 1);
}

TEST_CASE("determinant over F_p") {
  CHECK(HasseWittMatrix(7, 2, {1, 2, 3, 4}).determinant() == 5);  // -2 mod 7
  CHECK(HasseWittMatrix(7, 2, {0, 2, 3, 0}).determinant() == 1);  // -6 mod 7
  CHECK(HasseWittMatrix(5, 3, {1, 2, 3, 2, 4, 1, 3, 1, 4}).determinant() == 0);
  CHECK_THROWS_AS(HasseWittMatrix(5, 2, {1, 2, 3}), InvalidArgument);
}

TEST_CASE("property: matrix depends only on f mod p") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long long> d(-20, 20);
  for (std::uint64_t p : {5, 7, 11, 13}) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<BigInt> c(6);
      for (auto& x : c) x = d(rng);
      c[5] = 1;
      IntPolynomial f(c);
      std::optional<HyperellipticCurve> base;
      try {
        base.emplace(p, f);
      } catch (const InvalidArgument&) {
        continue;
      }
      std::vector<BigInt> noise(6);
      for (auto& x : noise) x = BigInt(d(rng)) * p;
      noise[5] = 0;
      CHECK(hasse_witt(*base) == hasse_witt(HyperellipticCurve(p, f + IntPolynomial(noise))));
    }
  }
}

TEST_CASE("property: genus 1 matrix ordinarity equals the trace test") {
  std::mt19937_64 rng(41);
  for (std::uint64_t p : primes_up_to(50)) {
    if (p == 2) continue;
    std::uniform_int_distribution<long long> d(0, static_cast<long long>(p) - 1);
    int done = 0;
    while (done < 20) {
      const long long a = d(rng), b = d(rng);
      const std::vector<long long> f{b, a, 0, 1};
      std::optional<HyperellipticCurve> c;
      try {
        c.emplace(p, IntPolynomial{b, a, 0, 1});
      } catch (const InvalidArgument&) {
        continue;
      }
      const long long trace = static_cast<long long>(p) + 1 - static_cast<long long>(oracle::count_points(p, f, 1));
      CHECK(is_ordinary_curve(*c) == (trace % static_cast<long long>(p) != 0));
      ++done;
    }
  }
}

TEST_CASE("property: genus 2 matrix ordinarity equals point-counted Weil ordinarity") {
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    for (std::uint64_t t = 0; t < p; ++t) {
      for (std::uint64_t u = 0; u < p; ++u) {
        const IntPolynomial f = family_T_polynomial(p, 2, t, u);
        std::optional<HyperellipticCurve> c;
        try {
          c.emplace(p, f);
        } catch (const InvalidArgument&) {
          continue;
        }
        CHECK(is_ordinary_curve(*c) == point_count_ordinary(p, as_longs(f)));
      }
    }
  }
}

TEST_CASE("miller_parity examples") {
  const MillerParity a = miller_parity(3, 2);
  CHECK(a.claims_ordinary);
  REQUIRE(a.rows.size() == 2);
  CHECK(a.rows[0].v == 1);
  CHECK(a.rows[0].t == 1);
  CHECK(a.rows[1].v == 0);
  CHECK(a.rows[1].t == 0);

  const MillerParity b = miller_parity(5, 2);
  CHECK_FALSE(b.claims_ordinary);
  CHECK_FALSE(b.rows[0].t.has_value());
  CHECK(b.rows[0].parity_holds);
  CHECK(b.parity_claims_ordinary);

  const MillerComparison c = compare_miller(5, 2);
  CHECK_FALSE(c.matrix_ordinary);
  CHECK(c.system_agrees());
  CHECK_FALSE(c.parity_agrees());
  CHECK(c.disagreement());

  CHECK_THROWS_AS(miller_parity(3, 3), InvalidArgument);
  CHECK_THROWS_AS(miller_parity(5, 10), InvalidArgument);
  CHECK_THROWS_AS(miller_parity(4, 2), InvalidArgument);
}

TEST_CASE("miller p=3, g=4 against the matrix oracle") {
  const MillerComparison c = compare_miller(3, 4);
  const bool matrix = is_ordinary_curve(curve(3, {0, 1, 0, 0, 0, 0, 0, 0, 0, 1}));
  CHECK(c.matrix_ordinary == matrix);
  // Recorded from the first verified run.
  CHECK(c.parity.claims_ordinary == matrix);
}

TEST_CASE("family T polynomial shape") {
  // p | g gives delta = 1: (x - u)(x^(2g+1) + t x^g + 1).
  CHECK(family_T_polynomial(3, 3, 1, 2).degree() == 8);
  CHECK(family_T_polynomial(5, 2, 1, 2) == IntPolynomial{-2, 1, -2, 1, -2, 1});
}

TEST_CASE("scan_family_T examples") {
  const FamilyScan a = scan_family_T(3, 2, 1000);
  REQUIRE(a.witness);
  // Witness of the lexicographic scan, recorded from the first verified run.
  CHECK(a.witness->t == 0);
  CHECK(a.witness->u == 0);

  const FamilyScan b = scan_family_T(5, 2, 1000);
  REQUIRE(b.witness);
  CHECK_FALSE((b.witness->t == 0 && b.witness->u == 0));
  CHECK(is_ordinary_curve(HyperellipticCurve(5, family_T_polynomial(5, 2, b.witness->t, b.witness->u))));

  const FamilyScan c = scan_family_T(3, 3, 1000);
  if (c.witness) {
    CHECK(is_ordinary_curve(HyperellipticCurve(3, family_T_polynomial(3, 3, c.witness->t, c.witness->u))));
  }
  CHECK(c.examined + c.outside_domain + c.singular <= 9);

  const FamilyScan none = scan_family_T(5, 2, 0);
  CHECK_FALSE(none.witness);
  CHECK(none.examined == 0);
}

TEST_CASE("scan_family_S0 examples") {
  const S0Table a = scan_family_S0(3, 2);
  REQUIRE_FALSE(a.rows.empty());
  CHECK(a.rows[0].u == 0);
  CHECK(a.rows[0].ordinary);
  const S0Table b = scan_family_S0(5, 2);
  CHECK(b.rows[0].u == 0);
  CHECK_FALSE(b.rows[0].ordinary);
  // u^4 = 1 for every u != 0 mod 5.
  CHECK(b.excluded == std::vector<std::uint64_t>{1, 2, 3, 4});
  for (const auto& r : scan_family_S0(13, 4).rows) CHECK(pow_mod(r.u, 8, 13) != 1);
  CHECK_THROWS_AS(scan_family_S0(3, 3), InvalidArgument);
  CHECK_THROWS_AS(scan_family_S0(3, 6), InvalidArgument);
}
