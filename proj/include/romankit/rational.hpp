#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace romankit {

using BigInt = mpz_class;

std::string to_string(const BigInt& v);

// Exact rational number in canonical form: denominator > 0,
// gcd(|num|, den) = 1, zero stored as 0/1. Immutable in spirit; every
// operation returns a fresh canonical value.
class BigRational {
 public:
  BigRational() : v_(0) {}
  BigRational(int n) : v_(n) {}
  BigRational(long n) : v_(n) {}
  BigRational(long long n) : v_(static_cast<long>(n)) {}
  explicit BigRational(const BigInt& n) : v_(n) {}
  BigRational(const BigInt& num, const BigInt& den);

  // Accepts "p" or "p/q" with an optional leading '-' on p.
  static BigRational parse(std::string_view text);

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return mpz_cmp_ui(v_.get_den().get_mpz_t(), 1) == 0; }
  int sign() const { return sgn(v_); }

  BigRational abs() const;
  // Exact integer power; 0^e with e < 0 is a domain error, x^0 = 1.
  BigRational pow(std::int64_t e) const;
  double to_double() const { return v_.get_d(); }

  // Rendering contract: integers without a denominator ("24", "-1"),
  // everything else "p/q" with the sign on the numerator ("-1/120").
  std::string str() const { return v_.get_str(); }

  friend BigRational operator+(const BigRational& a, const BigRational& b);
  friend BigRational operator-(const BigRational& a, const BigRational& b);
  friend BigRational operator*(const BigRational& a, const BigRational& b);
  friend BigRational operator/(const BigRational& a, const BigRational& b);
  BigRational operator-() const;

  BigRational& operator+=(const BigRational& o) { return *this = *this + o; }
  BigRational& operator-=(const BigRational& o) { return *this = *this - o; }
  BigRational& operator*=(const BigRational& o) { return *this = *this * o; }
  BigRational& operator/=(const BigRational& o) { return *this = *this / o; }

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend bool operator!=(const BigRational& a, const BigRational& b) { return !(a == b); }
  friend bool operator<(const BigRational& a, const BigRational& b) {
    return cmp(a.v_, b.v_) < 0;
  }
  friend bool operator>(const BigRational& a, const BigRational& b) { return b < a; }
  friend bool operator<=(const BigRational& a, const BigRational& b) { return !(b < a); }
  friend bool operator>=(const BigRational& a, const BigRational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& r);

 private:
  mpq_class v_;
};

enum class RatOp { add, sub, mul, div };

// Dispatch form of the four field operations; div by zero is a domain error.
BigRational rat_arith(const BigRational& a, const BigRational& b, RatOp op);

// n! for n >= 0 as an exact integer.
BigInt factorial_int(std::int64_t n);

// Classical binomial C(n, k) for integer n (any sign) and k >= 0.
BigInt binomial_int(std::int64_t n, std::int64_t k);

}  // namespace romankit
