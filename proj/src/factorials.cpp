#include "romankit/factorials.hpp"

#include <cmath>

#include "romankit/errors.hpp"

namespace romankit {

FactorialScheme FactorialScheme::q_analog(const BigRational& q) {
  if (q == BigRational(0) || q == BigRational(1)) {
    throw domain_error("q-analog base must avoid {0, 1}");
  }
  FactorialScheme s(FactorialKind::q_analog);
  s.q_ = q;
  return s;
}

std::string FactorialScheme::name() const {
  switch (kind_) {
    case FactorialKind::roman: return "roman";
    case FactorialKind::knuth: return "knuth";
    case FactorialKind::trivial: return "trivial";
    case FactorialKind::q_analog: return "q:" + q_.str();
  }
  return "?";
}

std::int64_t roman_bracket(std::int64_t a) { return a == 0 ? 1 : a; }

BigRational roman_bracket(const BigRational& a) {
  return a.is_zero() ? BigRational(1) : a;
}

BigRational roman_factorial(std::int64_t n) {
  if (n >= 0) return BigRational(factorial_int(n));
  // (-1)^(n+1)/(-n-1)!; the sign has the parity of -n-1
  BigInt num((-n - 1) % 2 == 0 ? 1 : -1);
  return BigRational(num, factorial_int(-n - 1));
}

EpsLaurent knuth_factorial(std::int64_t n) {
  if (n >= 0) return EpsLaurent::monomial(BigRational(factorial_int(n)), 0);
  // (-1)^(n-1) * w / (-n-1)!
  BigInt num((n - 1) % 2 == 0 ? 1 : -1);
  return EpsLaurent::monomial(BigRational(num, factorial_int(-n - 1)), -1);
}

BigRational trivial_factorial(std::int64_t) { return BigRational(1); }

BigRational q_bracket(std::int64_t n, const BigRational& q) {
  if (q == BigRational(0) || q == BigRational(1)) {
    throw domain_error("q-bracket needs q outside {0, 1}");
  }
  return (q.pow(roman_bracket(n)) - BigRational(1)) / (q - BigRational(1));
}

BigRational q_factorial(std::int64_t n, const BigRational& q) {
  if (q == BigRational(0) || q == BigRational(1)) {
    throw domain_error("q-factorial needs q outside {0, 1}");
  }
  if (n >= 0) {
    BigRational p(1);
    for (std::int64_t m = 1; m <= n; ++m) p *= q_bracket(m, q);
    return p;
  }
  BigRational p(1);
  for (std::int64_t m = n + 1; m <= 0; ++m) {
    BigRational b = q_bracket(m, q);
    if (b.is_zero()) {
      throw domain_error("q-factorial hit a zero bracket (q is a root of unity) at m=" +
                         std::to_string(m));
    }
    p *= b;
  }
  return BigRational(1) / p;
}

EpsLaurent scheme_factorial(const FactorialScheme& s, std::int64_t n) {
  switch (s.kind()) {
    case FactorialKind::roman: return EpsLaurent(roman_factorial(n));
    case FactorialKind::knuth: return knuth_factorial(n);
    case FactorialKind::trivial: return EpsLaurent(trivial_factorial(n));
    case FactorialKind::q_analog: return EpsLaurent(q_factorial(n, s.q()));
  }
  throw domain_error("unknown factorial scheme");
}

double roman_factorial_real(double a) {
  if (!(std::abs(a) <= 170.0)) {
    throw range_error("argument outside the representable Gamma range (|a| <= 170)");
  }
  if (a < 0.0 && a == std::floor(a)) {
    return roman_factorial(static_cast<std::int64_t>(a)).to_double();
  }
  double g = std::tgamma(a + 1.0);
  if (!std::isfinite(g)) {
    throw range_error("Gamma overflow at a=" + std::to_string(a));
  }
  return g;
}

}  // namespace romankit
