#include "sumprodlab/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace sumprodlab {

ExactScalar::ExactScalar(const BigInt& numerator, const BigInt& denominator) {
  if (sgn(denominator) == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

namespace {

bool valid_integer_token(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

ExactScalar ExactScalar::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!valid_integer_token(text)) {
      throw std::invalid_argument("malformed rational literal: '" + text + "'");
    }
    return ExactScalar(BigInt(text));
  }
  const std::string num_part = text.substr(0, slash);
  const std::string den_part = text.substr(slash + 1);
  if (!valid_integer_token(num_part) || !valid_integer_token(den_part)) {
    throw std::invalid_argument("malformed rational literal: '" + text + "'");
  }
  return ExactScalar(BigInt(num_part), BigInt(den_part));
}

std::string ExactScalar::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::optional<std::int64_t> ExactScalar::as_int64() const {
  if (!is_integer()) return std::nullopt;
  const mpz_class& n = value_.get_num();
  if (!n.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(n.get_si());
}

ExactScalar ExactScalar::operator-() const { return ExactScalar(mpq_class(-value_)); }

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
  return ExactScalar(mpq_class(value_ + o.value_));
}

ExactScalar ExactScalar::operator-(const ExactScalar& o) const {
  return ExactScalar(mpq_class(value_ - o.value_));
}

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
  return ExactScalar(mpq_class(value_ * o.value_));
}

ExactScalar ExactScalar::operator/(const ExactScalar& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero");
  return ExactScalar(mpq_class(value_ / o.value_));
}

ExactScalar ExactScalar::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), value_.get_mpq_t());
  return ExactScalar(std::move(r));
}

ExactScalar ExactScalar::abs() const {
  return sign() < 0 ? -*this : *this;
}

BigInt ceil_of(const ExactScalar& x) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
  return q;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& x) {
  return os << x.str();
}

}  // namespace sumprodlab
