#include "romankit/eps_laurent.hpp"

#include <charconv>

#include "romankit/errors.hpp"

namespace romankit {

void EpsLaurent::set(std::int64_t exponent, const BigRational& coeff) {
  if (coeff.is_zero()) {
    terms_.erase(exponent);
  } else {
    terms_[exponent] = coeff;
  }
}

EpsLaurent EpsLaurent::monomial(const BigRational& coeff, std::int64_t exponent) {
  EpsLaurent r;
  r.set(exponent, coeff);
  return r;
}

std::int64_t EpsLaurent::min_exponent() const {
  if (terms_.empty()) throw domain_error("min_exponent of zero");
  return terms_.begin()->first;
}

BigRational EpsLaurent::coefficient(std::int64_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigRational(0) : it->second;
}

EpsLaurent operator+(const EpsLaurent& a, const EpsLaurent& b) {
  EpsLaurent r = a;
  for (const auto& [e, c] : b.terms_) r.set(e, r.coefficient(e) + c);
  return r;
}

EpsLaurent operator-(const EpsLaurent& a, const EpsLaurent& b) {
  EpsLaurent r = a;
  for (const auto& [e, c] : b.terms_) r.set(e, r.coefficient(e) - c);
  return r;
}

EpsLaurent operator*(const EpsLaurent& a, const EpsLaurent& b) {
  EpsLaurent r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.set(ea + eb, r.coefficient(ea + eb) + ca * cb);
  return r;
}

EpsLaurent operator/(const EpsLaurent& a, const EpsLaurent& b) {
  if (b.is_zero()) throw domain_error("eps-Laurent division by zero");
  if (!b.is_monomial()) throw domain_error("eps-Laurent division by a non-monomial");
  const auto& [be, bc] = *b.terms_.begin();
  EpsLaurent r;
  for (const auto& [e, c] : a.terms_) r.set(e - be, c / bc);
  return r;
}

EpsLaurent EpsLaurent::operator-() const {
  EpsLaurent r;
  for (const auto& [e, c] : terms_) r.set(e, -c);
  return r;
}

BigRational EpsLaurent::limit_at_zero() const {
  if (!terms_.empty() && terms_.begin()->first < 0) {
    throw divergence_error("eps-Laurent diverges at 0 (exponent " +
                           std::to_string(terms_.begin()->first) + ")");
  }
  return coefficient(0);
}

BigRational EpsLaurent::substitute(const BigRational& value) const {
  if (value.is_zero()) {
    if (!terms_.empty() && terms_.begin()->first < 0) {
      throw domain_error("substituting 0 into a term with a negative exponent");
    }
    return coefficient(0);
  }
  BigRational acc(0);
  for (const auto& [e, c] : terms_) acc += c * value.pow(e);
  return acc;
}

std::string EpsLaurent::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (e == 0) {
      out += c.str();
    } else if (e == 1) {
      out += c.str() + "*e";
    } else {
      out += c.str() + "*e^" + std::to_string(e);
    }
  }
  return out;
}

EpsLaurent EpsLaurent::parse(std::string_view text) {
  EpsLaurent r;
  if (text == "0") return r;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t next = text.find(" + ", pos);
    std::string_view term = text.substr(pos, next == std::string_view::npos ? next : next - pos);
    pos = next == std::string_view::npos ? text.size() : next + 3;

    std::int64_t exponent = 0;
    std::string_view coeff = term;
    if (auto star = term.find("*e"); star != std::string_view::npos) {
      coeff = term.substr(0, star);
      std::string_view tail = term.substr(star + 2);
      if (tail.empty()) {
        exponent = 1;
      } else if (tail.front() == '^') {
        tail.remove_prefix(1);
        auto [p, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), exponent);
        if (ec != std::errc() || p != tail.data() + tail.size()) {
          throw usage_error("bad eps exponent in '" + std::string(term) + "'");
        }
      } else {
        throw usage_error("bad eps term '" + std::string(term) + "'");
      }
    }
    r.set(exponent, r.coefficient(exponent) + BigRational::parse(coeff));
  }
  return r;
}

EpsLaurent eps_arith(const EpsLaurent& a, const EpsLaurent& b, EpsOp op) {
  switch (op) {
    case EpsOp::add: return a + b;
    case EpsOp::sub: return a - b;
    case EpsOp::mul: return a * b;
    case EpsOp::div: return a / b;
  }
  throw domain_error("unknown eps-Laurent operation");
}

}  // namespace romankit
