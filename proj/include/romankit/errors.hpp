#pragma once

#include <stdexcept>
#include <string>

namespace romankit {

// Base for every failure of an exact operation. The CLI maps these to
// exit code 3.
struct math_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside an operation's domain (division by zero, q in {0,1},
// negative Stirling arguments, ...).
struct domain_error : math_error {
  using math_error::math_error;
};

// A limit that does not exist: an eps-Laurent value with a pole at 0.
struct divergence_error : math_error {
  using math_error::math_error;
};

// A zero factor in a denominator product.
struct pole_error : math_error {
  using math_error::math_error;
};

// Floating-point evaluation left the representable range.
struct range_error : math_error {
  using math_error::math_error;
};

// Malformed command-line input. The CLI maps this to exit code 2.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace romankit
