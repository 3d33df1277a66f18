#include "romankit/coefficients.hpp"

#include <charconv>
#include <numeric>

#include "romankit/errors.hpp"

namespace romankit {

std::string to_string(Region r) {
  return "R" + std::to_string(static_cast<int>(r));
}

Region classify_region(std::int64_t n, std::int64_t k) {
  if (n >= k && k >= 0) return Region::r1;
  if (k >= 0 && 0 > n) return Region::r2;
  if (0 > n && n >= k) return Region::r3;
  if (k > n && n >= 0) return Region::r4;
  if (n >= 0 && 0 > k) return Region::r5;
  if (0 > k && k > n) return Region::r6;
  throw domain_error("unclassifiable pair");  // unreachable: the six cases cover Z^2
}

BigRational lower_factorial(const BigRational& x, std::int64_t k) {
  if (k >= 0) {
    BigRational p(1);
    for (std::int64_t i = 0; i < k; ++i) p *= x - BigRational(i);
    return p;
  }
  BigRational p(1);
  for (std::int64_t i = 1; i <= -k; ++i) {
    BigRational factor = x + BigRational(i);
    if (factor.is_zero()) {
      throw pole_error("lower factorial pole: zero factor x+" + std::to_string(i));
    }
    p *= factor;
  }
  return BigRational(1) / p;
}

BigRational binomial_extended(const BigRational& x, std::int64_t k) {
  if (k < 0) throw domain_error("extended binomial needs a nonnegative lower index");
  return lower_factorial(x, k) / BigRational(factorial_int(k));
}

BigRational roman_coeff(std::int64_t n, std::int64_t k) {
  return roman_factorial(n) / (roman_factorial(k) * roman_factorial(n - k));
}

namespace {

BigRational sign(std::int64_t e) { return BigRational(e % 2 == 0 ? 1 : -1); }

BigRational recip(const BigInt& v) { return BigRational(BigInt(1), v); }

}  // namespace

BigRational region_closed_form(std::int64_t n, std::int64_t k) {
  switch (classify_region(n, k)) {
    case Region::r1:
      return BigRational(binomial_int(n, k));
    case Region::r2:
      return sign(k) * BigRational(binomial_int(-n + k - 1, k));
    case Region::r3:
      return sign(n + k) * BigRational(binomial_int(-k - 1, n - k));
    case Region::r4:
      return sign(n + k) * BigRational(BigInt(1), BigInt(static_cast<long>(n - k)) * binomial_int(k, n));
    case Region::r5:
      return sign(k) * BigRational(BigInt(1), BigInt(static_cast<long>(k)) * binomial_int(n - k, n));
    case Region::r6:
      return BigRational(BigInt(1), BigInt(static_cast<long>(n - k)) * binomial_int(-n - 1, -k - 1));
  }
  throw domain_error("unreachable");
}

std::vector<BigRational> region_all_forms(std::int64_t n, std::int64_t k) {
  switch (classify_region(n, k)) {
    case Region::r1:
      return {BigRational(binomial_int(n, k))};
    case Region::r2:
      return {sign(k) * BigRational(binomial_int(-n + k - 1, k))};
    case Region::r3:
      return {sign(n + k) * BigRational(binomial_int(-k - 1, n - k))};
    case Region::r4:
      return {
          sign(n + k) / BigRational(n - k) * recip(binomial_int(k, n)),
          sign(n + k + 1) / BigRational(n + 1) * recip(binomial_int(k, n + 1)),
          sign(n + k + 1) / BigRational(k) * recip(binomial_int(k - 1, n)),
          sign(n + k) * forward_diff_inverse(n, BigRational(k)),
      };
    case Region::r5:
      return {
          sign(k) / BigRational(k) * recip(binomial_int(n - k, n)),
          sign(k) / BigRational(k - n) * recip(binomial_int(n - k - 1, n)),
          // upper index n-k, not the sometimes-printed n-k-1, whose
          // binomial vanishes at k = n-1 and breaks the equality elsewhere
          sign(k + 1) / BigRational(n + 1) * recip(binomial_int(n - k, n + 1)),
          region_closed_form(n, n - k),
          sign(k) * forward_diff_inverse(n, BigRational(n - k)),
          -beta_limit(k - n, -k),
      };
    case Region::r6:
      return {
          BigRational(1) / BigRational(n - k) * recip(binomial_int(-n - 1, -k - 1)),
          BigRational(1) / BigRational(k) * recip(binomial_int(-n - 1, -k)),
          BigRational(1) / BigRational(n + 1) * recip(binomial_int(-n - 2, -k - 1)),
          forward_diff_inverse(k - n - 1, BigRational(-(n + 1))),
          // the sign is (-1)^k: e.g. |-3 choose -2] = -1/2 = (+1)*|0 choose 2]
          sign(k) * region_closed_form(k - n - 1, -n - 1),
          sign(k) * region_closed_form(k - n - 1, k),
      };
  }
  throw domain_error("unreachable");
}

EpsLaurent knuth_coeff(std::int64_t n, std::int64_t k) {
  return knuth_factorial(n) / (knuth_factorial(k) * knuth_factorial(n - k));
}

BigInt gamma_coeff(std::int64_t n, std::int64_t k) {
  BigRational limit = knuth_coeff(n, k).limit_at_zero();
  if (!limit.is_integer()) {
    throw std::logic_error("gamma coefficient came out non-integral");
  }
  return limit.numerator();
}

EpsLaurent scheme_coeff(const FactorialScheme& s, std::int64_t n, std::int64_t k) {
  return scheme_factorial(s, n) / (scheme_factorial(s, k) * scheme_factorial(s, n - k));
}

BigInt stirling2(std::int64_t j, std::int64_t n) {
  if (j < 0 || n < 0) throw domain_error("Stirling numbers need nonnegative arguments");
  if (n == 0) return BigInt(j == 0 ? 1 : 0);
  if (j < n) return BigInt(0);
  // one rolling row of S(., m) for m = 0..n
  std::vector<BigInt> row(static_cast<size_t>(n) + 1, BigInt(0));
  row[0] = 1;  // S(0,0)
  for (std::int64_t jj = 1; jj <= j; ++jj) {
    for (std::int64_t m = n; m >= 1; --m) {
      row[m] = BigInt(static_cast<long>(m)) * row[m] + row[m - 1];
    }
    row[0] = 0;  // S(jj,0) = 0 once jj > 0
  }
  return row[static_cast<size_t>(n)];
}

BigRational stirling_series_partial(std::int64_t n, std::int64_t k, std::int64_t terms) {
  if (terms < 1) throw domain_error("series needs at least one term");
  if (!(k > n && n >= 1)) {
    throw domain_error("Stirling series applies to k > n >= 1 only");
  }
  std::vector<BigInt> row(static_cast<size_t>(n) + 1, BigInt(0));
  row[0] = 1;
  BigRational inv_k = BigRational(1) / BigRational(k);
  BigRational power = inv_k;  // 1/k^(j+1)
  BigRational acc(0);
  for (std::int64_t j = 0; j < terms; ++j) {
    if (j > 0) {
      for (std::int64_t m = n; m >= 1; --m) {
        row[m] = BigInt(static_cast<long>(m)) * row[m] + row[m - 1];
      }
      row[0] = 0;
    }
    acc += BigRational(row[static_cast<size_t>(n)]) * power;
    power *= inv_k;
  }
  return sign(n + k + 1) * BigRational(factorial_int(n)) * acc;
}

BigRational forward_diff_inverse(std::int64_t order, const BigRational& c) {
  if (order < 0) throw domain_error("difference order must be nonnegative");
  BigRational acc(0);
  for (std::int64_t j = 0; j <= order; ++j) {
    BigRational den = BigRational(j) - c;
    if (den.is_zero()) {
      throw pole_error("difference form pole at evaluation point " + std::to_string(j));
    }
    acc += sign(order - j) * BigRational(binomial_int(order, j)) / den;
  }
  return acc;
}

BigRational beta_limit(std::int64_t a, std::int64_t b) {
  EpsLaurent quotient =
      knuth_factorial(a - 1) * knuth_factorial(b - 1) / knuth_factorial(a + b - 1);
  return quotient.limit_at_zero();
}

MultiIndex::MultiIndex(std::vector<std::int64_t> entries)
    : entries_(std::move(entries)),
      sum_(std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0})) {}

MultiIndex MultiIndex::parse(std::string_view text) {
  std::vector<std::int64_t> entries;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string_view part =
        text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || p != part.data() + part.size()) {
      throw usage_error("bad multi-index entry '" + std::string(part) + "'");
    }
    entries.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (entries.empty()) throw usage_error("empty multi-index");
  return MultiIndex(std::move(entries));
}

std::string MultiIndex::str() const {
  std::string out;
  for (std::int64_t e : entries_) {
    if (!out.empty()) out += ",";
    out += std::to_string(e);
  }
  return out;
}

BigRational multinomial_roman(std::int64_t a, const MultiIndex& beta) {
  if (beta.sum() != a) return BigRational(0);
  BigRational v = roman_factorial(a);
  for (std::int64_t b : beta.entries()) v /= roman_factorial(b);
  return v;
}

EpsLaurent multinomial_knuth(std::int64_t a, const MultiIndex& beta) {
  if (beta.sum() != a) return EpsLaurent();
  EpsLaurent v = knuth_factorial(a);
  for (std::int64_t b : beta.entries()) v = v / knuth_factorial(b);
  if (!v.is_zero() && v.min_exponent() < 0) {
    throw std::logic_error("Knuth multinomial produced a negative eps exponent");
  }
  return v;
}

BigInt multinomial_gamma(std::int64_t a, const MultiIndex& beta) {
  BigRational limit = multinomial_knuth(a, beta).limit_at_zero();
  if (!limit.is_integer()) {
    throw std::logic_error("gamma multinomial came out non-integral");
  }
  return limit.numerator();
}

EpsLaurent multinomial_scheme(const FactorialScheme& s, std::int64_t a,
                              const MultiIndex& beta) {
  if (beta.sum() != a) return EpsLaurent();
  EpsLaurent v = scheme_factorial(s, a);
  for (std::int64_t b : beta.entries()) v = v / scheme_factorial(s, b);
  return v;
}

CoeffScheme CoeffScheme::factorial(const FactorialScheme& s) { return CoeffScheme(s); }

CoeffScheme CoeffScheme::gamma() { return CoeffScheme(); }

CoeffScheme CoeffScheme::parse(std::string_view spec) {
  if (spec == "roman") return factorial(FactorialScheme::roman());
  if (spec == "knuth") return factorial(FactorialScheme::knuth());
  if (spec == "trivial") return factorial(FactorialScheme::trivial());
  if (spec == "gamma") return gamma();
  if (spec.rfind("q:", 0) == 0) {
    BigRational q = BigRational::parse(spec.substr(2));
    return factorial(FactorialScheme::q_analog(q));  // may raise domain_error
  }
  throw usage_error("unknown scheme '" + std::string(spec) +
                    "' (expected roman|knuth|gamma|trivial|q:<rational>)");
}

const FactorialScheme& CoeffScheme::scheme() const {
  if (gamma_) throw domain_error("the gamma limit is not a factorial scheme");
  return scheme_;
}

std::string CoeffScheme::name() const { return gamma_ ? "gamma" : scheme_.name(); }

EpsLaurent CoeffScheme::coeff(std::int64_t n, std::int64_t k) const {
  if (gamma_) return EpsLaurent(BigRational(gamma_coeff(n, k)));
  return scheme_coeff(scheme_, n, k);
}

EpsLaurent CoeffScheme::multinomial(std::int64_t a, const MultiIndex& beta) const {
  if (gamma_) return EpsLaurent(BigRational(multinomial_gamma(a, beta)));
  return multinomial_scheme(scheme_, a, beta);
}

}  // namespace romankit
