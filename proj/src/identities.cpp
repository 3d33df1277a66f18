#include "romankit/identities.hpp"

#include <algorithm>

#include "romankit/errors.hpp"

namespace romankit {

namespace {

BigRational rat_sign(std::int64_t e) { return BigRational(e % 2 == 0 ? 1 : -1); }

IdentityVerdict make_verdict(std::string identity, std::vector<std::int64_t> args,
                             bool applicable, const EpsLaurent& lhs,
                             const EpsLaurent& rhs, std::string note = {}) {
  IdentityVerdict v;
  v.identity = std::move(identity);
  v.args = std::move(args);
  v.applicable = applicable;
  v.holds = lhs == rhs;
  v.lhs = lhs.str();
  v.rhs = rhs.str();
  v.note = std::move(note);
  return v;
}

}  // namespace

IdentityVerdict check_complementation(std::int64_t n, std::int64_t k,
                                      const CoeffScheme& scheme) {
  return make_verdict("complementation", {n, k}, true, scheme.coeff(n, k),
                      scheme.coeff(n, n - k));
}

IdentityVerdict check_iterative(std::int64_t a, std::int64_t b, std::int64_t c,
                                const CoeffScheme& scheme) {
  EpsLaurent lhs = scheme.coeff(a, b) * scheme.coeff(b, c);
  EpsLaurent rhs = scheme.coeff(a, c) * scheme.coeff(a - c, b - c);
  return make_verdict("iterative", {a, b, c}, true, lhs, rhs);
}

IdentityVerdict check_pascal(std::int64_t a, std::int64_t k, const CoeffScheme& scheme) {
  bool applicable = a != 0 && k != 0 && a != k;
  EpsLaurent lhs = scheme.coeff(a, k);
  EpsLaurent rhs = scheme.coeff(a - 1, k) + scheme.coeff(a - 1, k - 1);
  return make_verdict("pascal", {a, k}, applicable, lhs, rhs,
                      applicable ? "" : "outside the stated hypothesis; informational");
}

IdentityVerdict check_pascal_gamma(std::int64_t n, std::int64_t k) {
  bool applicable = !(n == 0 && k == 0);
  EpsLaurent lhs(BigRational(gamma_coeff(n, k)));
  EpsLaurent rhs(BigRational(gamma_coeff(n - 1, k) + gamma_coeff(n - 1, k - 1)));
  std::string note;
  if (!applicable) {
    note = "excluded origin: the recursion gives " + rhs.str() + " against " + lhs.str();
  }
  return make_verdict("pascal-gamma", {n, k}, applicable, lhs, rhs, std::move(note));
}

IdentityVerdict check_corollary_sum(std::int64_t n, std::int64_t k, std::int64_t r) {
  if (r < 0) throw domain_error("corollary sum needs r >= 0");
  Region region = classify_region(n, k);
  bool applicable = classify_region(n + r, k) == region &&
                    classify_region(n, k + 1) == region &&
                    classify_region(n + r + 1, k + 1) == region;
  BigRational lhs(0);
  for (std::int64_t m = n; m <= n + r; ++m) lhs += roman_coeff(m, k);
  BigRational rhs = roman_coeff(n + r + 1, k + 1) - roman_coeff(n, k + 1);
  return make_verdict("corollary-sum", {n, k, r}, applicable, EpsLaurent(lhs),
                      EpsLaurent(rhs),
                      applicable ? "" : "corner pairs span several regions; informational");
}

IdentityVerdict check_rotation_reflection(std::int64_t n, std::int64_t k) {
  BigRational lhs = rat_sign(k + (k > 0 ? 1 : 0)) * roman_coeff(-n, k - 1);
  BigRational rhs = rat_sign(n + (n > 0 ? 1 : 0)) * roman_coeff(-k, n - 1);
  BigRational refl = rat_sign(n + k + (n < 0 ? 1 : 0) + (k < 0 ? 1 : 0)) *
                     roman_coeff(-k - 1, -n - 1);
  bool reflection_holds = roman_coeff(n, k) == refl;
  IdentityVerdict v = make_verdict("rotation-reflection", {n, k}, true,
                                   EpsLaurent(lhs), EpsLaurent(rhs));
  v.holds = v.holds && reflection_holds;
  if (!reflection_holds) {
    v.note = "reflection form fails: |n choose k] = " + roman_coeff(n, k).str() +
             " vs " + refl.str();
  }
  return v;
}

IdentityVerdict check_romans_identity(std::int64_t n, std::int64_t k) {
  if (n == k) throw domain_error("Roman's identity needs n != k");
  BigRational product = roman_coeff(n, k) * roman_coeff(k, n);
  std::int64_t gap = n > k ? n - k : k - n;
  BigRational adjusted = rat_sign(n + k + 1) / BigRational(gap);
  BigRational printed = rat_sign(n + k) / BigRational(gap);
  IdentityVerdict v = make_verdict("romans-identity", {n, k}, true,
                                   EpsLaurent(product), EpsLaurent(adjusted));
  v.note = "printed sign (-1)^(n+k) would give " + printed.str() +
           "; derived sign (-1)^(n+k+1) gives " + adjusted.str();
  return v;
}

IdentityVerdict check_knuth_factorial_product(std::int64_t n) {
  BigRational product = roman_factorial(n) * roman_factorial(-n);
  std::int64_t mag = n >= 0 ? n : -n;
  BigRational adjusted = n == 0 ? BigRational(1) : rat_sign(mag + 1) * BigRational(mag);
  BigRational printed = rat_sign(mag) * BigRational(mag);
  IdentityVerdict v = make_verdict("knuth-factorial-product", {n}, true,
                                   EpsLaurent(product), EpsLaurent(adjusted));
  v.note = "printed form (-1)^n |n| would give " + printed.str() +
           "; derived form gives " + adjusted.str();
  return v;
}

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = {
      "complementation",     "iterative",       "pascal",
      "pascal-gamma",        "corollary-sum",   "rotation-reflection",
      "romans-identity",     "knuth-factorial-product",
  };
  return names;
}

namespace {

void tally(GridReport& report, const IdentityVerdict& v) {
  if (!v.applicable) return;
  ++report.applicable;
  if (v.holds) {
    ++report.held;
  } else {
    ++report.failed;
    report.failures.push_back({v.args, v.lhs, v.rhs});
  }
}

}  // namespace

GridReport verify_grid(std::string_view identity, GridBounds bounds,
                       const CoeffScheme& scheme) {
  GridReport report;
  report.identity = std::string(identity);
  report.bounds = bounds;
  report.scheme = scheme.name();
  const std::int64_t lo = bounds.lo, hi = bounds.hi;
  if (lo > hi) throw usage_error("empty bounds");

  if (identity == "complementation") {
    for (std::int64_t n = lo; n <= hi; ++n)
      for (std::int64_t k = lo; k <= hi; ++k) tally(report, check_complementation(n, k, scheme));
  } else if (identity == "iterative") {
    for (std::int64_t a = lo; a <= hi; ++a)
      for (std::int64_t b = lo; b <= hi; ++b)
        for (std::int64_t c = lo; c <= hi; ++c) tally(report, check_iterative(a, b, c, scheme));
  } else if (identity == "pascal") {
    for (std::int64_t a = lo; a <= hi; ++a)
      for (std::int64_t k = lo; k <= hi; ++k) tally(report, check_pascal(a, k, scheme));
  } else if (identity == "pascal-gamma") {
    report.scheme = "gamma";
    for (std::int64_t n = lo; n <= hi; ++n)
      for (std::int64_t k = lo; k <= hi; ++k) tally(report, check_pascal_gamma(n, k));
  } else if (identity == "corollary-sum") {
    report.scheme = "roman";
    for (std::int64_t n = lo; n <= hi; ++n)
      for (std::int64_t k = lo; k <= hi; ++k)
        for (std::int64_t r = 0; r <= 6; ++r) tally(report, check_corollary_sum(n, k, r));
  } else if (identity == "rotation-reflection") {
    report.scheme = "roman";
    for (std::int64_t n = lo; n <= hi; ++n)
      for (std::int64_t k = lo; k <= hi; ++k) tally(report, check_rotation_reflection(n, k));
  } else if (identity == "romans-identity") {
    report.scheme = "roman";
    for (std::int64_t n = lo; n <= hi; ++n)
      for (std::int64_t k = lo; k <= hi; ++k) {
        if (n == k) continue;  // outside the identity's domain
        tally(report, check_romans_identity(n, k));
      }
  } else if (identity == "knuth-factorial-product") {
    report.scheme = "roman";
    for (std::int64_t n = lo; n <= hi; ++n) tally(report, check_knuth_factorial_product(n));
  } else {
    throw usage_error("unknown identity '" + std::string(identity) + "'");
  }

  std::sort(report.failures.begin(), report.failures.end(),
            [](const GridFailure& a, const GridFailure& b) { return a.args < b.args; });
  return report;
}

}  // namespace romankit
