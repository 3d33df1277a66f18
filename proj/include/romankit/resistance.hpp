#pragma once

#include <cstdint>

#include "romankit/rational.hpp"

namespace romankit {

// Exact resistance between opposite vertices of the n-cube with unit
// edges. 0 <= ohms <= n always.
struct ResistanceResult {
  std::int64_t n = 0;
  BigRational ohms;
};

// R_n = 2^-n sum_{i=1}^{n} 2^i / i, the empty sum giving R_0 = 0.
ResistanceResult resistance_direct(std::int64_t n);

// R_n = -sum_{i=-n}^{-1} |-n-1 choose i], n >= 1.
ResistanceResult resistance_via_roman(std::int64_t n);

// Resistance between adjacent equipotential levels i and i+1:
// 1/((n-i) C(n,i)), for 0 <= i < n. Equals (-1)^(n+i+1) |i choose n].
BigRational level_resistance(std::int64_t n, std::int64_t i);

// Whether 2 R_n = R_{n-1} + 2/n holds exactly.
bool resistance_recurrence_check(std::int64_t n);

}  // namespace romankit
