#ifndef FPSLAB_POWER_SERIES_HPP
#define FPSLAB_POWER_SERIES_HPP

#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpslab/rational.hpp"

namespace fpslab {

/// Raised when a coefficient beyond the provable truncation window is
/// requested.
class TruncationError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Truncated formal power series c_0 + c_1 x + ... + c_N x^N + O(x^{N+1}).
///
/// The truncation order N is part of the value: two series with the same
/// coefficients but different orders compare unequal. Binary operations
/// return the smaller of the operand orders.
class PowerSeries {
 public:
  /// Order is coeffs.size() - 1; throws std::invalid_argument if empty.
  explicit PowerSeries(std::vector<Rational> coeffs);

  /// Pads with zeros (or drops the tail) to exactly order + 1 entries.
  PowerSeries(std::vector<Rational> coeffs, int order);

  static PowerSeries zero(int order);
  static PowerSeries one(int order);
  static PowerSeries constant(const Rational& c, int order);
  /// The identity change of variable x.
  static PowerSeries variable(int order);
  static PowerSeries monomial(const Rational& c, int degree, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Unchecked access, 0 <= k <= order().
  const Rational& operator[](int k) const { return coeffs_[k]; }

  /// Zero for k < 0, throws TruncationError for k > order().
  Rational coefficient(int k) const;

  std::span<const Rational> coefficients() const { return coeffs_; }

  /// Throws std::invalid_argument if new_order > order().
  PowerSeries truncated(int new_order) const;

  /// Index of the first nonzero coefficient, or order() + 1 if none.
  int valuation() const;
  bool is_zero() const { return valuation() > order(); }

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a);
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(const Rational& c, const PowerSeries& a);

PowerSeries power(const PowerSeries& a, unsigned exponent);

/// outer(inner(x)). inner must have zero constant term.
PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner);

/// Multiplicative inverse; constant term must be nonzero.
PowerSeries reciprocal(const PowerSeries& a);

/// exp(a) for a with zero constant term.
PowerSeries exp_series(const PowerSeries& a);

/// log(a) = -sum_{n>=1} (-1)^n (a-1)^n / n for a with constant term 1.
PowerSeries log_series(const PowerSeries& a);

/// Compositional inverse of f = x + a_2 x^2 + ...
PowerSeries reversion(const PowerSeries& f);

/// e^{c x} - 1 for the common special case, to the given order.
PowerSeries exp_minus_one(int order, const Rational& c = Rational(1));

/// Human-readable form, e.g. "x - 1/2*x^2 + O(x^4)".
std::string to_string(const PowerSeries& a);
std::ostream& operator<<(std::ostream& os, const PowerSeries& a);

}  // namespace fpslab

#endif  // FPSLAB_POWER_SERIES_HPP
