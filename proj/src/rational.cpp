#include "romankit/rational.hpp"

#include <charconv>
#include <ostream>

#include "romankit/errors.hpp"

namespace romankit {

std::string to_string(const BigInt& v) { return v.get_str(); }

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) {
    throw domain_error("rational with zero denominator");
  }
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) {
    throw usage_error("not a rational: '" + std::string(text) + "'");
  }
  return BigRational(BigInt(std::string(num)), BigInt(std::string(den)));
}

BigRational BigRational::abs() const {
  BigRational r;
  r.v_ = ::abs(v_);
  return r;
}

BigRational BigRational::pow(std::int64_t e) const {
  if (e == 0) return BigRational(1);
  if (is_zero()) {
    if (e < 0) throw domain_error("zero raised to a negative power");
    return BigRational(0);
  }
  BigInt num = v_.get_num(), den = v_.get_den();
  if (e < 0) {
    std::swap(num, den);
    e = -e;
    if (sgn(den) < 0) {  // keep the sign on the numerator
      num = -num;
      den = -den;
    }
  }
  BigInt pn, pd;
  mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(e));
  // powers of a canonical pair stay coprime, no re-reduction needed
  BigRational r;
  r.v_ = mpq_class(pn, pd);
  return r;
}

BigRational operator+(const BigRational& a, const BigRational& b) {
  BigRational r;
  r.v_ = a.v_ + b.v_;
  return r;
}

BigRational operator-(const BigRational& a, const BigRational& b) {
  BigRational r;
  r.v_ = a.v_ - b.v_;
  return r;
}

BigRational operator*(const BigRational& a, const BigRational& b) {
  BigRational r;
  r.v_ = a.v_ * b.v_;
  return r;
}

BigRational operator/(const BigRational& a, const BigRational& b) {
  if (b.is_zero()) throw domain_error("division by zero");
  BigRational r;
  r.v_ = a.v_ / b.v_;
  return r;
}

BigRational BigRational::operator-() const {
  BigRational r;
  r.v_ = -v_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.v_; }

BigRational rat_arith(const BigRational& a, const BigRational& b, RatOp op) {
  switch (op) {
    case RatOp::add: return a + b;
    case RatOp::sub: return a - b;
    case RatOp::mul: return a * b;
    case RatOp::div: return a / b;
  }
  throw domain_error("unknown rational operation");
}

BigInt factorial_int(std::int64_t n) {
  if (n < 0) throw domain_error("factorial of a negative integer");
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

BigInt binomial_int(std::int64_t n, std::int64_t k) {
  if (k < 0) throw domain_error("binomial with negative lower index");
  BigInt r;
  mpz_bin_ui(r.get_mpz_t(), BigInt(static_cast<long>(n)).get_mpz_t(),
             static_cast<unsigned long>(k));
  return r;
}

}  // namespace romankit
