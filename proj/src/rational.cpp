#include "fpslab/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace fpslab {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(numerator, 1);
  value_ /= mpq_class(denominator, 1);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) {
    throw std::domain_error("Rational: zero denominator");
  }
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"}
                                      : text.substr(slash + 1);
  std::string_view num_digits = num;
  if (!num_digits.empty() && (num_digits[0] == '-' || num_digits[0] == '+')) {
    num_digits.remove_prefix(1);
  }
  if (!all_digits(num_digits) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) +
                                "'");
  }
  std::string num_str(num);
  if (num_str[0] == '+') num_str.erase(0, 1);
  mpz_class p(num_str, 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) {
    throw std::invalid_argument("rational with zero denominator: '" +
                                std::string(text) + "'");
  }
  return Rational(mpq_class(p, q));
}

Rational Rational::factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative integer");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpq_class(f));
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational operator-(const Rational& a) {
  Rational r;
  r.value_ = -a.value_;
  return r;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent != 0) b *= b;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace fpslab
