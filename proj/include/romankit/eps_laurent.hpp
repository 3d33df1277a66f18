#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "romankit/rational.hpp"

namespace romankit {

// Finite formal sum  sum_k c_k * e^k  over a formal infinitesimal e, with
// integer exponents of either sign (w = e^-1 lives at exponent -1) and
// exact rational coefficients. Stored sparsely; no zero coefficient is
// ever kept, and the zero element is the empty sum.
class EpsLaurent {
 public:
  EpsLaurent() = default;
  explicit EpsLaurent(const BigRational& constant) { set(0, constant); }

  static EpsLaurent monomial(const BigRational& coeff, std::int64_t exponent);

  const std::map<std::int64_t, BigRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  // Smallest exponent present; undefined on zero (throws).
  std::int64_t min_exponent() const;
  // Coefficient of e^exponent, 0 when absent.
  BigRational coefficient(std::int64_t exponent) const;

  friend EpsLaurent operator+(const EpsLaurent& a, const EpsLaurent& b);
  friend EpsLaurent operator-(const EpsLaurent& a, const EpsLaurent& b);
  friend EpsLaurent operator*(const EpsLaurent& a, const EpsLaurent& b);
  // Defined only for a monomial divisor c*e^k with c != 0: shifts
  // exponents by -k and divides coefficients by c.
  friend EpsLaurent operator/(const EpsLaurent& a, const EpsLaurent& b);
  EpsLaurent operator-() const;

  friend bool operator==(const EpsLaurent& a, const EpsLaurent& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const EpsLaurent& a, const EpsLaurent& b) { return !(a == b); }

  // Value at e -> 0: the e^0 coefficient. Any negative exponent is a pole
  // and raises divergence_error.
  BigRational limit_at_zero() const;

  // Exact evaluation of sum c_k * value^k. value = 0 is allowed only when
  // no negative exponent is present (then the e^0 term survives).
  BigRational substitute(const BigRational& value) const;

  // Terms in increasing exponent joined by " + ": "c" for e^0, "c*e" for
  // e^1, otherwise "c*e^k" ("1*e^-1", "1/30*e"). Zero renders "0".
  std::string str() const;
  static EpsLaurent parse(std::string_view text);

 private:
  void set(std::int64_t exponent, const BigRational& coeff);

  std::map<std::int64_t, BigRational> terms_;
};

enum class EpsOp { add, sub, mul, div };

EpsLaurent eps_arith(const EpsLaurent& a, const EpsLaurent& b, EpsOp op);

}  // namespace romankit
