#include "romankit/resistance.hpp"

#include "romankit/coefficients.hpp"
#include "romankit/errors.hpp"

namespace romankit {

ResistanceResult resistance_direct(std::int64_t n) {
  if (n < 0) throw domain_error("cube dimension must be nonnegative");
  BigRational sum(0);
  BigInt power(1);  // 2^i
  for (std::int64_t i = 1; i <= n; ++i) {
    power *= 2;
    sum += BigRational(power, BigInt(static_cast<long>(i)));
  }
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(n));
  return {n, sum / BigRational(scale)};
}

ResistanceResult resistance_via_roman(std::int64_t n) {
  if (n < 1) throw domain_error("the Roman-coefficient route needs n >= 1");
  BigRational sum(0);
  for (std::int64_t i = -n; i <= -1; ++i) sum += roman_coeff(-n - 1, i);
  return {n, -sum};
}

BigRational level_resistance(std::int64_t n, std::int64_t i) {
  if (n < 1 || i < 0 || i >= n) throw domain_error("level index must satisfy 0 <= i < n");
  return BigRational(BigInt(1), BigInt(static_cast<long>(n - i)) * binomial_int(n, i));
}

bool resistance_recurrence_check(std::int64_t n) {
  if (n < 1) throw domain_error("recurrence starts at n = 1");
  return BigRational(2) * resistance_direct(n).ohms ==
         resistance_direct(n - 1).ohms + BigRational(BigInt(2), BigInt(static_cast<long>(n)));
}

}  // namespace romankit
