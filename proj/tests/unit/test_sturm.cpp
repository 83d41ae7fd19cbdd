#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles/companion_roots.hpp"
#include "weilcensus/errors.hpp"
#include "weilcensus/sturm.hpp"

using namespace weilcensus;

namespace {

QuadraticRingElement qre(long long u, long long v, long long d) { return {u, v, d}; }

}  // namespace

TEST_CASE("sturm examples") {
  CHECK(sturm_root_count(IntPolynomial{0, 1}, QuadraticRingElement::integer(-1), QuadraticRingElement::integer(1)) == 1);
  CHECK(sturm_root_count(IntPolynomial{-2, 0, 1}, qre(0, -2, 2), qre(0, 2, 2)) == 2);
  CHECK(sturm_root_count(IntPolynomial{-4, 1, 1}, qre(0, -2, 3), qre(0, 2, 3)) == 2);
}

TEST_CASE("half-open interval") {
  const IntPolynomial h{-1, 0, 1};  // roots +-1
  CHECK(sturm_root_count(h, QuadraticRingElement::integer(-1), QuadraticRingElement::integer(1)) == 1);
  CHECK(sturm_root_count(h, QuadraticRingElement::integer(-2), QuadraticRingElement::integer(-1)) == 1);
  CHECK(sturm_root_count(h, QuadraticRingElement::integer(-1), QuadraticRingElement::integer(0)) == 0);
  // Root exactly at an irrational endpoint: X^2 - 3 on (-sqrt3, sqrt3].
  CHECK(sturm_root_count(IntPolynomial{-3, 0, 1}, qre(0, -1, 3), qre(0, 1, 3)) == 1);
}

TEST_CASE("sturm errors") {
  CHECK_THROWS_AS(sturm_root_count(IntPolynomial{1, 2, 1}, qre(-5, 0, 1), qre(5, 0, 1)), NotSquarefree);
  CHECK_THROWS_AS(sturm_root_count(IntPolynomial{0, 1}, qre(1, 0, 1), qre(1, 0, 1)), InvalidArgument);
  CHECK_THROWS_AS(sturm_root_count(IntPolynomial{0, 1}, qre(0, 1, 2), qre(1, 0, 2)), InvalidArgument);
  CHECK_THROWS_AS(qre(1, 1, 4), InvalidArgument);
  CHECK_THROWS_AS(qre(1, 1, 0), InvalidArgument);
  CHECK_THROWS_AS(qre(0, 1, 2) + qre(0, 1, 3), InvalidArgument);
}

TEST_CASE("exact signs near cancellation") {
  // 1393 - 985 sqrt2 ~ 3.6e-4 > 0; 1393^2 - 2 * 985^2 = -1 ... sign by magnitude.
  CHECK(qre(1393, -985, 2).sign() == -1);
  CHECK(qre(-1393, 985, 2).sign() == 1);
  CHECK(qre(1394, -985, 2).sign() == 1);
  CHECK(qre(0, 0, 2).sign() == 0);
  CHECK(qre(3, -3, 1).sign() == 0);
  CHECK(qre(2, 0, 3) < qre(0, 2, 3));
}

TEST_CASE("evaluation in Z[sqrt d]") {
  // (X^2 - 2) at sqrt2 = 0; X^2 + X - 4 at 2 sqrt3 = 8 + 2 sqrt3.
  CHECK(evaluate(IntPolynomial{-2, 0, 1}, qre(0, 1, 2)).sign() == 0);
  const QuadraticRingElement v = evaluate(IntPolynomial{-4, 1, 1}, qre(0, 2, 3));
  CHECK(v.u() == 8);
  CHECK(v.v() == 2);
}

TEST_CASE("property: ring signs agree with long double evaluation") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long long> coef(-1000000, 1000000);
  const long long ds[] = {2, 3, 5, 6, 7, 10, 13};
  int compared = 0;
  for (int trial = 0; trial < 5000; ++trial) {
    const QuadraticRingElement x = qre(coef(rng), coef(rng), ds[trial % 7]);
    const long double approx = x.approx();
    if (std::fabs(approx) <= 1e-6L) continue;
    CHECK(x.sign() == (approx > 0 ? 1 : -1));
    ++compared;
  }
  CHECK(compared > 4900);
}

TEST_CASE("property: sturm counts match companion eigenvalues") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coef(-9, 9);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int degree = 1 + trial % 8;
    std::vector<BigInt> c(degree + 1);
    for (auto& x : c) x = coef(rng);
    if (c.back() == 0) c.back() = 1;
    const IntPolynomial h = squarefree_part(IntPolynomial(c));
    if (h.degree() < 1) continue;
    // Cauchy bound 1 + max|c_i / c_n| with integer ceiling.
    BigInt bound = 0;
    for (const auto& x : h.coefficients()) bound = std::max(bound, BigInt(boost::multiprecision::abs(x)));
    bound = bound / boost::multiprecision::abs(h.leading()) + 2;
    const unsigned exact = sturm_root_count(h, QuadraticRingElement::integer(-bound), QuadraticRingElement::integer(bound));
    const auto roots = oracle::companion_roots(h);
    unsigned real = 0;
    bool ambiguous = false;
    for (const auto& r : roots) {
      const double im = std::fabs(r.imag());
      if (im < 1e-6) ++real;
      else if (im < 1e-3) ambiguous = true;
    }
    if (ambiguous) continue;
    CHECK(exact == real);
    ++checked;
  }
  CHECK(checked > 950);
}
