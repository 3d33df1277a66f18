#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "romankit/coefficients.hpp"
#include "romankit/errors.hpp"
#include "romankit/resistance.hpp"

using namespace romankit;

namespace {

BigRational frac(long num, long den) { return BigRational(BigInt(num), BigInt(den)); }

}  // namespace

TEST_CASE("direct formula") {
  CHECK(resistance_direct(0).ohms == BigRational(0));
  CHECK(resistance_direct(1).ohms == BigRational(1));
  CHECK(resistance_direct(2).ohms == BigRational(1));
  CHECK(resistance_direct(3).ohms == frac(5, 6));
  CHECK(resistance_direct(4).ohms == frac(2, 3));
  CHECK(resistance_direct(5).ohms == frac(8, 15));
  CHECK(resistance_direct(6).ohms == frac(13, 30));
  // the value forced by both the direct sum and the recurrence;
  // the published table prints 151/340 here
  CHECK(resistance_direct(7).ohms == frac(151, 420));
  CHECK_THROWS_AS(resistance_direct(-1), domain_error);
}

TEST_CASE("roman-coefficient route") {
  CHECK(resistance_via_roman(1).ohms == BigRational(1));
  CHECK(resistance_via_roman(2).ohms == BigRational(1));
  CHECK(resistance_via_roman(3).ohms == frac(5, 6));
  CHECK_THROWS_AS(resistance_via_roman(0), domain_error);
}

TEST_CASE("level resistances") {
  CHECK(level_resistance(3, 0) == frac(1, 3));
  CHECK(level_resistance(3, 1) == frac(1, 6));
  CHECK(level_resistance(3, 2) == frac(1, 3));
  CHECK_THROWS_AS(level_resistance(3, 3), domain_error);
  CHECK_THROWS_AS(level_resistance(3, -1), domain_error);
}

TEST_CASE("level resistances carry the roman form with sign (-1)^(n+i+1)") {
  for (std::int64_t n = 1; n <= 20; ++n) {
    for (std::int64_t i = 0; i < n; ++i) {
      BigRational sgn((n + i + 1) % 2 == 0 ? 1 : -1);
      CHECK(level_resistance(n, i) == sgn * roman_coeff(i, n));
    }
  }
}

TEST_CASE("three evaluators agree exactly") {
  for (std::int64_t n = 1; n <= 64; ++n) {
    BigRational direct = resistance_direct(n).ohms;
    CHECK(resistance_via_roman(n).ohms == direct);
    BigRational level_sum(0);
    for (std::int64_t i = 0; i < n; ++i) level_sum += level_resistance(n, i);
    CHECK(level_sum == direct);
  }
}

TEST_CASE("recurrence 2 R_n = R_(n-1) + 2/n") {
  CHECK(resistance_recurrence_check(1));
  CHECK(resistance_recurrence_check(7));
  CHECK(resistance_recurrence_check(100));
  for (std::int64_t n = 1; n <= 200; ++n) CHECK(resistance_recurrence_check(n));
}

TEST_CASE("bounds, limit and monotonicity") {
  for (std::int64_t n = 0; n <= 200; ++n) {
    BigRational r = resistance_direct(n).ohms;
    CHECK(r >= BigRational(0));
    CHECK(r <= BigRational(n));
  }
  // R_n falls like 2/n: n R_n stays inside (2, 5/2) from n = 10 on
  for (std::int64_t n = 10; n <= 200; ++n) {
    BigRational scaled = BigRational(n) * resistance_direct(n).ohms;
    CHECK(scaled > BigRational(2));
    CHECK(scaled < frac(5, 2));
  }
  BigRational asymptotic = (BigRational(100) * resistance_direct(100).ohms - BigRational(2)).abs();
  CHECK(asymptotic < frac(1, 10));
  for (std::int64_t n = 2; n <= 200; ++n) {
    CHECK(resistance_direct(n + 1).ohms <= resistance_direct(n).ohms);
  }
}
