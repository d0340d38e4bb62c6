#ifndef FPSLAB_RATIONAL_HPP
#define FPSLAB_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fpslab {

/// Exact arbitrary-precision rational number.
///
/// Always held in canonical form: positive denominator, numerator and
/// denominator coprime. Equality is therefore structural.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral T>
  Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT

  template <std::unsigned_integral T>
  Rational(T value) : value_(static_cast<unsigned long>(value)) {}  // NOLINT

  /// Throws std::domain_error on a zero denominator.
  Rational(long numerator, long denominator);

  explicit Rational(mpq_class value);

  /// Accepts "p/q" or "p" (optional leading sign on p, q > 0).
  /// Non-reduced input such as "2/4" is accepted and canonicalized.
  /// Throws std::invalid_argument on malformed text.
  static Rational parse(std::string_view text);

  static Rational factorial(long n);

  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& value() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator-(const Rational& a);
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  mpq_class value_{0};
};

Rational pow(const Rational& base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace fpslab

#endif  // FPSLAB_RATIONAL_HPP
