#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "romankit/errors.hpp"
#include "romankit/identities.hpp"

using namespace romankit;

namespace {

const CoeffScheme kRoman = CoeffScheme::factorial(FactorialScheme::roman());
const CoeffScheme kKnuth = CoeffScheme::factorial(FactorialScheme::knuth());
const CoeffScheme kGamma = CoeffScheme::gamma();

BigRational frac(long num, long den) { return BigRational(BigInt(num), BigInt(den)); }

}  // namespace

TEST_CASE("complementation") {
  IdentityVerdict v = check_complementation(6, -2, kRoman);
  CHECK(v.applicable);
  CHECK(v.holds);
  CHECK(v.lhs == "-1/56");
  CHECK(v.rhs == "-1/56");

  for (std::int64_t n = -6; n <= 6; ++n) {
    CHECK(check_complementation(n, n, kRoman).holds);
    CHECK(check_complementation(n, n, kKnuth).holds);
    CHECK(check_complementation(n, n, kGamma).holds);
  }
  CHECK(check_complementation(-3, -2, kRoman).holds);
}

TEST_CASE("iterative") {
  CHECK(check_iterative(5, 3, 1, kRoman).holds);
  CHECK(check_iterative(-2, 3, -1, kRoman).holds);
  CHECK(check_iterative(4, 4, 4, kRoman).holds);
  CHECK(check_iterative(4, 4, 4, kGamma).holds);
  CHECK(check_iterative(-2, 3, -1, kKnuth).holds);
}

TEST_CASE("pascal") {
  IdentityVerdict v = check_pascal(5, 2, kRoman);
  CHECK(v.applicable);
  CHECK(v.holds);

  v = check_pascal(0, 3, kRoman);
  CHECK_FALSE(v.applicable);  // a = 0 excluded

  CHECK(check_pascal(-2, -5, kRoman).applicable);
  CHECK(check_pascal(-2, -5, kRoman).holds);
  CHECK_FALSE(check_pascal(3, 0, kRoman).applicable);
  CHECK_FALSE(check_pascal(3, 3, kRoman).applicable);

  // symbolic-eps variant carries the tag through the recursion
  CHECK(check_pascal(1, 2, kKnuth).holds);
  CHECK(check_pascal(-1, 1, kKnuth).holds);
}

TEST_CASE("pascal for the gamma limit") {
  IdentityVerdict origin = check_pascal_gamma(0, 0);
  CHECK_FALSE(origin.applicable);
  CHECK_FALSE(origin.holds);  // informational: 1 vs 2
  CHECK(origin.lhs == "1");
  CHECK(origin.rhs == "2");

  CHECK(check_pascal_gamma(5, 2).holds);
  CHECK(check_pascal_gamma(-1, -1).holds);
}

TEST_CASE("corollary sum") {
  IdentityVerdict v = check_corollary_sum(2, 1, 3);
  CHECK(v.applicable);
  CHECK(v.holds);

  // the classical hockey stick: sum_{m=2}^{6} C(m,2) = C(7,3) = 35
  BigRational sum(0);
  for (std::int64_t m = 2; m <= 6; ++m) sum += roman_coeff(m, 2);
  CHECK(sum == BigRational(35));
  CHECK(sum == roman_coeff(7, 3));

  v = check_corollary_sum(-6, -3, 2);
  CHECK(v.applicable);  // all four corner pairs sit in region 6
  CHECK(v.holds);
  CHECK(v.lhs == "-9/20");

  // corners split between regions: reported but not applicable
  v = check_corollary_sum(-2, 1, 4);
  CHECK_FALSE(v.applicable);

  CHECK_THROWS_AS(check_corollary_sum(2, 1, -1), domain_error);
}

TEST_CASE("rotation/reflection") {
  IdentityVerdict v = check_rotation_reflection(1, 2);
  CHECK(v.holds);
  CHECK(v.lhs == "1");
  CHECK(v.rhs == "1");
  CHECK(check_rotation_reflection(0, 0).holds);
  CHECK(check_rotation_reflection(1, -1).holds);
  // reflection form at (1,-1): |1 choose -1] = 1/2 = -|0 choose -2]
  CHECK(roman_coeff(1, -1) == frac(1, 2));
  CHECK(roman_coeff(1, -1) == -roman_coeff(0, -2));
}

TEST_CASE("romans identity, sign-adjusted") {
  IdentityVerdict v = check_romans_identity(2, 0);
  CHECK(v.holds);
  CHECK(v.lhs == "-1/2");
  CHECK(v.note.find("(-1)^(n+k)") != std::string::npos);
  CHECK(v.note.find("(-1)^(n+k+1)") != std::string::npos);

  CHECK(check_romans_identity(1, 0).lhs == "1");
  CHECK(check_romans_identity(1, 0).holds);
  CHECK(check_romans_identity(-2, 1).lhs == "1/3");
  CHECK(check_romans_identity(-2, 1).holds);
  CHECK_THROWS_AS(check_romans_identity(3, 3), domain_error);
}

TEST_CASE("factorial product, sign-adjusted") {
  IdentityVerdict v = check_knuth_factorial_product(2);
  CHECK(v.holds);
  CHECK(v.lhs == "-2");
  CHECK(v.note.find("(-1)^n") != std::string::npos);

  CHECK(check_knuth_factorial_product(0).lhs == "1");
  CHECK(check_knuth_factorial_product(0).holds);
  CHECK(check_knuth_factorial_product(5).lhs == "5");
  CHECK(check_knuth_factorial_product(5).holds);
}

TEST_CASE("grid sweeps hold with zero failures") {
  GridBounds b{-12, 12};

  GridReport r = verify_grid("complementation", b, kRoman);
  CHECK(r.applicable == 25 * 25);
  CHECK(r.failed == 0);
  CHECK(r.held == r.applicable);

  for (const char* scheme : {"knuth", "trivial", "q:2", "q:3/2", "gamma"}) {
    r = verify_grid("complementation", b, CoeffScheme::parse(scheme));
    CHECK(r.failed == 0);
  }

  r = verify_grid("iterative", GridBounds{-6, 6}, kRoman);
  CHECK(r.failed == 0);
  r = verify_grid("iterative", GridBounds{-6, 6}, kGamma);
  CHECK(r.failed == 0);

  r = verify_grid("pascal", b, kRoman);
  CHECK(r.failed == 0);
  CHECK(r.applicable < 25 * 25);  // the excluded lines are not counted

  r = verify_grid("pascal", b, kKnuth);
  CHECK(r.failed == 0);

  r = verify_grid("pascal-gamma", b, kRoman);
  CHECK(r.scheme == "gamma");
  CHECK(r.applicable == 25 * 25 - 1);
  CHECK(r.failed == 0);

  r = verify_grid("corollary-sum", GridBounds{-8, 8}, kRoman);
  CHECK(r.failed == 0);
  CHECK(r.applicable > 0);

  r = verify_grid("rotation-reflection", b, kRoman);
  CHECK(r.failed == 0);

  r = verify_grid("romans-identity", b, kRoman);
  CHECK(r.applicable == 25 * 25 - 25);
  CHECK(r.failed == 0);

  r = verify_grid("knuth-factorial-product", GridBounds{-50, 50}, kRoman);
  CHECK(r.applicable == 101);
  CHECK(r.failed == 0);

  CHECK_THROWS_AS(verify_grid("bogus", b, kRoman), usage_error);
}

TEST_CASE("verdict sides round-trip through the rational parser") {
  for (std::int64_t n = -10; n <= 10; ++n) {
    for (std::int64_t k = -10; k <= 10; ++k) {
      IdentityVerdict v = check_complementation(n, k, kRoman);
      CHECK(BigRational::parse(v.lhs) == roman_coeff(n, k));
      CHECK(BigRational::parse(v.rhs) == roman_coeff(n, n - k));
      if (n != k) {
        IdentityVerdict w = check_romans_identity(n, k);
        CHECK(BigRational::parse(w.lhs) == roman_coeff(n, k) * roman_coeff(k, n));
      }
    }
  }
  // eps-valued sides round-trip through the eps parser
  IdentityVerdict v = check_pascal(2, 5, kKnuth);
  CHECK(EpsLaurent::parse(v.lhs) == knuth_coeff(2, 5));
}

TEST_CASE("identity names are stable") {
  const auto& names = identity_names();
  CHECK(names.size() == 8);
  CHECK(std::find(names.begin(), names.end(), "pascal-gamma") != names.end());
}
