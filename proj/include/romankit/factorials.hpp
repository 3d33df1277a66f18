#pragma once

#include <cstdint>
#include <string>

#include "romankit/eps_laurent.hpp"
#include "romankit/rational.hpp"

namespace romankit {

enum class FactorialKind { roman, knuth, trivial, q_analog };

// Tagged choice of generalized factorial. The q-analog carries its base,
// which must avoid {0, 1}.
class FactorialScheme {
 public:
  static FactorialScheme roman() { return FactorialScheme(FactorialKind::roman); }
  static FactorialScheme knuth() { return FactorialScheme(FactorialKind::knuth); }
  static FactorialScheme trivial() { return FactorialScheme(FactorialKind::trivial); }
  static FactorialScheme q_analog(const BigRational& q);

  FactorialKind kind() const { return kind_; }
  const BigRational& q() const { return q_; }
  std::string name() const;

 private:
  explicit FactorialScheme(FactorialKind kind) : kind_(kind) {}

  FactorialKind kind_;
  BigRational q_;
};

// Roman a: a itself unless a = 0, in which case 1.
std::int64_t roman_bracket(std::int64_t a);
BigRational roman_bracket(const BigRational& a);

// n! extended to all integers: n >= 0 gives n!, n < 0 gives
// (-1)^(n+1)/(-n-1)!. Never zero.
BigRational roman_factorial(std::int64_t n);

// The eps-tagged factorial: n! at exponent 0 for n >= 0, and
// (-1)^(n-1) * w / (-n-1)! for n < 0, where w = e^-1.
EpsLaurent knuth_factorial(std::int64_t n);

// The convolution-sequence choice: identically 1.
BigRational trivial_factorial(std::int64_t n);

// (q^|n] - 1)/(q - 1) where |n] is the Roman bracket. q in {0,1} is a
// domain error; a zero result (q a root of unity) is returned as-is.
BigRational q_bracket(std::int64_t n, const BigRational& q);

// Extension of the factorial to the q-bracket scheme via the ratio law
// |a]!/|a-1]! = |a]: the bracket product for n > 0, the inverted product
// for n < 0. A zero bracket in a denominator is a domain error.
BigRational q_factorial(std::int64_t n, const BigRational& q);

// Dispatch on the scheme; exact-rational schemes embed as c*e^0.
EpsLaurent scheme_factorial(const FactorialScheme& s, std::int64_t n);

// Floating path: Gamma(a+1) away from negative integers, the exact branch
// converted to double at them. |a| <= 170; overflow is a range error.
double roman_factorial_real(double a);

}  // namespace romankit
