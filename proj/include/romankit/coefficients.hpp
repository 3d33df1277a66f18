#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "romankit/eps_laurent.hpp"
#include "romankit/factorials.hpp"
#include "romankit/rational.hpp"

namespace romankit {

// The partition of the integer plane on which the Roman coefficient takes
// distinct closed forms:
//   R1: n >= k >= 0     R2: k >= 0 > n     R3: 0 > n >= k
//   R4: k > n >= 0      R5: n >= 0 > k     R6: 0 > k > n
enum class Region { r1 = 1, r2, r3, r4, r5, r6 };

std::string to_string(Region r);
Region classify_region(std::int64_t n, std::int64_t k);

// Lower factorial (x)_k: the falling product x(x-1)...(x-k+1) for k >= 0,
// and 1/((x+1)(x+2)...(x-k)) for k < 0. A zero factor in the k < 0
// denominator is a pole error.
BigRational lower_factorial(const BigRational& x, std::int64_t k);

// Classical extended binomial coefficient (x)_k / k!, defined for k >= 0
// only; negative k is a domain error.
BigRational binomial_extended(const BigRational& x, std::int64_t k);

// |n choose k] = |n]! / (|k]! |n-k]!). Total on Z^2 and never zero.
BigRational roman_coeff(std::int64_t n, std::int64_t k);

// The region's primary closed form; equal to roman_coeff everywhere.
BigRational region_closed_form(std::int64_t n, std::int64_t k);

// Every finite closed form for the pair's region (1 form in regions 1-3,
// 4 in region 4, 6 in regions 5 and 6). All entries are equal.
std::vector<BigRational> region_all_forms(std::int64_t n, std::int64_t k);

// The eps-tagged coefficient: a single monomial c*e^m with m = 0 in
// regions 1-3 and m = 1 in regions 4-6, c = roman_coeff(n, k) either way.
EpsLaurent knuth_coeff(std::int64_t n, std::int64_t k);

// The e -> 0 limit of the Knuth coefficient: integer-valued, equal to the
// Roman coefficient in regions 1-3 and zero in regions 4-6.
BigInt gamma_coeff(std::int64_t n, std::int64_t k);

// Coefficient under an arbitrary factorial scheme, as the factorial
// ratio. The trivial scheme gives 1*e^0 for every pair.
EpsLaurent scheme_coeff(const FactorialScheme& s, std::int64_t n, std::int64_t k);

// Stirling number of the second kind: partitions of a j-set into n
// nonempty blocks, by the recurrence S(j,n) = n S(j-1,n) + S(j-1,n-1).
BigInt stirling2(std::int64_t j, std::int64_t n);

// Partial sum of the region-4 series
//   (-1)^(n+k+1) n! sum_{j>=0} S(j,n)/k^(j+1)
// over j = 0..terms-1, exact. Requires k > n >= 1.
BigRational stirling_series_partial(std::int64_t n, std::int64_t k, std::int64_t terms);

// [Delta^order 1/(x-c)] at x = 0, i.e.
//   sum_{j=0}^{order} (-1)^(order-j) C(order,j) / (j-c).
// c in {0, ..., order} is a pole error.
BigRational forward_diff_inverse(std::int64_t order, const BigRational& c);

// Regularized Beta value: the e -> 0 limit of
//   |a-1]!^e |b-1]!^e / |a+b-1]!^e.
// Divergence (a pole surviving the quotient) raises divergence_error.
BigRational beta_limit(std::int64_t a, std::int64_t b);

// Finite integer vector with its cached sum.
class MultiIndex {
 public:
  explicit MultiIndex(std::vector<std::int64_t> entries);
  static MultiIndex parse(std::string_view text);  // "2,2,-1"

  const std::vector<std::int64_t>& entries() const { return entries_; }
  std::int64_t sum() const { return sum_; }
  std::string str() const;

 private:
  std::vector<std::int64_t> entries_;
  std::int64_t sum_;
};

// |a]! / prod |b_i]! when |beta| = a, and 0 otherwise.
BigRational multinomial_roman(std::int64_t a, const MultiIndex& beta);

// Same quotient over Knuth factorials; the eps exponent is never negative
// when the sum matches (a negative one is an internal invariant breach).
EpsLaurent multinomial_knuth(std::int64_t a, const MultiIndex& beta);

// e -> 0 limit of the Knuth multinomial; always an integer.
BigInt multinomial_gamma(std::int64_t a, const MultiIndex& beta);

// Multinomial under an arbitrary factorial scheme.
EpsLaurent multinomial_scheme(const FactorialScheme& s, std::int64_t a,
                              const MultiIndex& beta);

// Coefficient evaluators the identity suite and CLI sweep over: the four
// factorial schemes plus the gamma limit.
class CoeffScheme {
 public:
  static CoeffScheme factorial(const FactorialScheme& s);
  static CoeffScheme gamma();
  // "roman" | "knuth" | "gamma" | "trivial" | "q:<rational>"
  static CoeffScheme parse(std::string_view spec);

  bool is_gamma() const { return gamma_; }
  const FactorialScheme& scheme() const;
  std::string name() const;

  EpsLaurent coeff(std::int64_t n, std::int64_t k) const;
  EpsLaurent multinomial(std::int64_t a, const MultiIndex& beta) const;

 private:
  CoeffScheme() : gamma_(true), scheme_(FactorialScheme::roman()) {}
  explicit CoeffScheme(const FactorialScheme& s) : gamma_(false), scheme_(s) {}

  bool gamma_;
  FactorialScheme scheme_;
};

}  // namespace romankit
