#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "romankit/errors.hpp"
#include "romankit/rational.hpp"

using namespace romankit;

namespace {

BigRational frac(long num, long den) { return BigRational(BigInt(num), BigInt(den)); }

// uniformly random small rational, nonzero when asked
BigRational random_rational(std::mt19937& rng, bool nonzero = false) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 30);
  for (;;) {
    BigRational r = frac(num(rng), den(rng));
    if (!nonzero || !r.is_zero()) return r;
  }
}

}  // namespace

TEST_CASE("canonical form") {
  BigRational a = frac(2, -4);
  CHECK(a.str() == "-1/2");
  CHECK(a.numerator() == -1);
  CHECK(a.denominator() == 2);
  CHECK(a == frac(-1, 2));

  CHECK(frac(0, 7).str() == "0");
  CHECK(frac(0, 7).denominator() == 1);
  CHECK(frac(6, 3).str() == "2");
  CHECK(frac(6, 3).is_integer());
  CHECK_THROWS_AS(frac(1, 0), domain_error);
}

TEST_CASE("arithmetic examples") {
  CHECK(rat_arith(frac(1, 2), frac(1, 3), RatOp::add) == frac(5, 6));
  CHECK(rat_arith(frac(-1, 120), BigRational(-120), RatOp::mul) == BigRational(1));
  CHECK_THROWS_AS(rat_arith(frac(3, 4), BigRational(0), RatOp::div), domain_error);
  CHECK(rat_arith(frac(3, 4), frac(1, 4), RatOp::sub) == frac(1, 2));
  CHECK(rat_arith(frac(3, 4), frac(3, 2), RatOp::div) == frac(1, 2));
}

TEST_CASE("rendering contract") {
  CHECK(BigRational(24).str() == "24");
  CHECK(BigRational(-1).str() == "-1");
  CHECK(frac(-1, 120).str() == "-1/120");
  CHECK(frac(1, 6).str() == "1/6");
}

TEST_CASE("parse round-trips the rendering") {
  for (const char* text : {"24", "-1", "-1/120", "5/6", "0", "151/420"}) {
    CHECK(BigRational::parse(text).str() == text);
  }
  CHECK_THROWS_AS(BigRational::parse("x"), usage_error);
  CHECK_THROWS_AS(BigRational::parse("1/2/3"), usage_error);
  CHECK_THROWS_AS(BigRational::parse(""), usage_error);
  CHECK_THROWS_AS(BigRational::parse("1/0"), domain_error);
}

TEST_CASE("field laws on random triples") {
  std::mt19937 rng(20240811);
  for (int i = 0; i < 500; ++i) {
    BigRational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    BigRational d = random_rational(rng, /*nonzero=*/true);
    CHECK(a / d * d == a);
  }
}

TEST_CASE("integer powers") {
  CHECK(frac(2, 3).pow(3) == frac(8, 27));
  CHECK(frac(2, 3).pow(-2) == frac(9, 4));
  CHECK(frac(-2, 3).pow(-3) == frac(-27, 8));
  CHECK(frac(-2, 3).pow(0) == BigRational(1));
  CHECK(BigRational(0).pow(5) == BigRational(0));
  CHECK_THROWS_AS(BigRational(0).pow(-1), domain_error);
}

TEST_CASE("integer helpers") {
  CHECK(factorial_int(0) == 1);
  CHECK(factorial_int(5) == 120);
  CHECK(to_string(factorial_int(20)) == "2432902008176640000");
  CHECK_THROWS_AS(factorial_int(-1), domain_error);

  CHECK(binomial_int(7, 3) == 35);
  CHECK(binomial_int(5, 0) == 1);
  CHECK(binomial_int(3, 5) == 0);
  CHECK(binomial_int(-4, 2) == 10);  // C(-n,k) = (-1)^k C(n+k-1,k)
  CHECK_THROWS_AS(binomial_int(4, -1), domain_error);
}
