#include <doctest.h>

#include <random>

#include "weilcensus/errors.hpp"
#include "weilcensus/intpoly.hpp"

using namespace weilcensus;

namespace {

IntPolynomial random_poly(std::mt19937_64& rng, int degree, int range) {
  std::uniform_int_distribution<int> dist(-range, range);
  std::vector<BigInt> c(degree + 1);
  for (auto& x : c) x = dist(rng);
  if (c.back() == 0) c.back() = 1;
  return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("construction strips trailing zeros") {
  const IntPolynomial f{1, 2, 0, 0};
  CHECK(f.degree() == 1);
  CHECK(IntPolynomial{}.degree() == -1);
  CHECK(IntPolynomial{0, 0}.is_zero());
  CHECK(f[5] == 0);
}

TEST_CASE("degree cap") {
  std::vector<BigInt> c(42, 1);
  CHECK_THROWS_AS((void)IntPolynomial(c), InvalidArgument);
  CHECK(IntPolynomial(c, 41).degree() == 41);
}

TEST_CASE("leading of zero polynomial throws") { CHECK_THROWS_AS(IntPolynomial{}.leading(), InvalidArgument); }

TEST_CASE("arithmetic") {
  const IntPolynomial a{1, 1};   // X + 1
  const IntPolynomial b{-1, 1};  // X - 1
  CHECK(a * b == IntPolynomial{-1, 0, 1});
  CHECK(a + b == IntPolynomial{0, 2});
  CHECK(a - a == IntPolynomial{});
  CHECK(-a == IntPolynomial{-1, -1});
  CHECK(a * BigInt(3) == IntPolynomial{3, 3});
  CHECK(IntPolynomial::monomial(5, 3) == IntPolynomial{0, 0, 0, 5});
  CHECK(IntPolynomial{1, 2, 3}.derivative() == IntPolynomial{2, 6});
  CHECK(IntPolynomial{1, 2, 3}.evaluate(2) == 17);
}

TEST_CASE("content and primitive part") {
  const IntPolynomial f{-6, 0, -4};
  CHECK(f.content() == 2);
  CHECK(f.primitive_part() == IntPolynomial{3, 0, 2});
  CHECK(IntPolynomial{}.content() == 0);
}

TEST_CASE("exact division and gcd") {
  const IntPolynomial f = IntPolynomial{1, 1} * IntPolynomial{1, 1} * IntPolynomial{-2, 0, 1};
  CHECK(divide_exact(f, IntPolynomial{1, 1}) == IntPolynomial{1, 1} * IntPolynomial{-2, 0, 1});
  CHECK_THROWS_AS(divide_exact(f, IntPolynomial{3, 1}), InvalidArgument);
  CHECK(gcd(f, IntPolynomial{1, 1} * IntPolynomial{5, 1}) == IntPolynomial{1, 1});
  CHECK(gcd(f, f.derivative()) == IntPolynomial{1, 1});
  CHECK(squarefree_part(f) == IntPolynomial{1, 1} * IntPolynomial{-2, 0, 1});
  CHECK_FALSE(is_squarefree(f));
  CHECK(is_squarefree(IntPolynomial{-2, 0, 1}));
}

TEST_CASE("pseudo remainder is a positive multiple of the true remainder") {
  // (2X^2 + 1) mod (2X - 1): remainder over Q is 3/2.
  const IntPolynomial r = pseudo_remainder(IntPolynomial{1, 0, 2}, IntPolynomial{-1, 2});
  REQUIRE(r.degree() == 0);
  CHECK(r[0] > 0);
  CHECK(r[0] * 2 % 3 == 0);
}

TEST_CASE("property: gcd divides both and product factors survive") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const IntPolynomial common = random_poly(rng, 1 + trial % 3, 5);
    const IntPolynomial a = common * random_poly(rng, 2, 5);
    const IntPolynomial b = common * random_poly(rng, 3, 5);
    const IntPolynomial g = gcd(a, b);
    CHECK_NOTHROW(divide_exact(a, g));
    CHECK_NOTHROW(divide_exact(b, g));
    CHECK_NOTHROW(divide_exact(g, common.primitive_part()));
  }
}

TEST_CASE("to_string") {
  CHECK(IntPolynomial{5, -2, 1}.to_string() == "X^2 - 2X + 5");
  CHECK(IntPolynomial{}.to_string() == "0");
}
