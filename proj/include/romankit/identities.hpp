#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "romankit/coefficients.hpp"

namespace romankit {

// Outcome of checking one identity at one argument tuple. `holds` is
// meaningful only when `applicable` is true; for excluded tuples it is
// still computed and reported as informational. Rendered sides follow the
// exact-numerics contract.
struct IdentityVerdict {
  std::string identity;
  std::vector<std::int64_t> args;
  bool applicable = false;
  bool holds = false;
  std::string lhs;
  std::string rhs;
  std::string note;  // extra context (both sign conventions, counterexamples)
};

// |a choose b] = |a choose a-b] under the given scheme.
IdentityVerdict check_complementation(std::int64_t n, std::int64_t k,
                                      const CoeffScheme& scheme);

// |a choose b]|b choose c] = |a choose c]|a-c choose b-c].
IdentityVerdict check_iterative(std::int64_t a, std::int64_t b, std::int64_t c,
                                const CoeffScheme& scheme);

// |a choose k] = |a-1 choose k] + |a-1 choose k-1|, applicable when
// a != 0, k != 0 and a != k.
IdentityVerdict check_pascal(std::int64_t a, std::int64_t k, const CoeffScheme& scheme);

// Gamma-limit Pascal recursion, applicable everywhere except the origin,
// where the recursion genuinely fails (1 vs 2).
IdentityVerdict check_pascal_gamma(std::int64_t n, std::int64_t k);

// sum_{m=n}^{n+r} |m choose k] = |n+r+1 choose k+1] - |n choose k+1],
// applicable when (n,k), (n+r,k), (n,k+1), (n+r+1,k+1) share a region.
IdentityVerdict check_corollary_sum(std::int64_t n, std::int64_t k, std::int64_t r);

// (-1)^(k+[k>0]) |-n choose k-1] = (-1)^(n+[n>0]) |-k choose n-1], plus
// the equivalent reflection |n choose k] = (-1)^(n+k+[n<0]+[k<0]) *
// |-k-1 choose -n-1]; holds requires both.
IdentityVerdict check_rotation_reflection(std::int64_t n, std::int64_t k);

// |n choose k]|k choose n] = (-1)^(n+k+1)/|n-k| — the sign that actually
// follows from the definitions; the note also reports the commonly
// printed (-1)^(n+k) variant. n = k is a domain error.
IdentityVerdict check_romans_identity(std::int64_t n, std::int64_t k);

// |n]! |-n]! = (-1)^(n+1) n for n >= 1 (1 at n = 0), sign-adjusted for
// the same reason; the note reports the printed (-1)^n |n| variant.
IdentityVerdict check_knuth_factorial_product(std::int64_t n);

struct GridBounds {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

struct GridFailure {
  std::vector<std::int64_t> args;
  std::string lhs;
  std::string rhs;
};

struct GridReport {
  std::string identity;
  GridBounds bounds;
  std::string scheme;
  std::int64_t applicable = 0;
  std::int64_t held = 0;
  std::int64_t failed = 0;
  std::vector<GridFailure> failures;  // sorted lexicographically by args
};

const std::vector<std::string>& identity_names();

// Runs the named checker over every tuple the identity's shape draws from
// `bounds` (squares for pairs, a cube for the iterative rule, r in [0,6]
// for the corollary, a segment for the factorial product). Unknown names
// are a usage error.
GridReport verify_grid(std::string_view identity, GridBounds bounds,
                       const CoeffScheme& scheme);

}  // namespace romankit
