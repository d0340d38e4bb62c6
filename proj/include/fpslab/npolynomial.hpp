#ifndef FPSLAB_NPOLYNOMIAL_HPP
#define FPSLAB_NPOLYNOMIAL_HPP

#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "fpslab/rational.hpp"

namespace fpslab {

/// Dense univariate polynomial in n with rational coefficients, stored
/// lowest degree first and kept trimmed (no trailing zero coefficients).
class NPolynomial {
 public:
  NPolynomial() = default;
  explicit NPolynomial(std::vector<Rational> coeffs);
  NPolynomial(std::initializer_list<Rational> coeffs)
      : NPolynomial(std::vector<Rational>(coeffs)) {}

  static NPolynomial constant(const Rational& c);
  /// n - root.
  static NPolynomial linear_factor(const Rational& root);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Rational> coefficients() const { return coeffs_; }
  Rational coefficient(int k) const;

  Rational evaluate(const Rational& n) const;

  friend bool operator==(const NPolynomial&, const NPolynomial&) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

NPolynomial operator+(const NPolynomial& a, const NPolynomial& b);
NPolynomial operator-(const NPolynomial& a, const NPolynomial& b);
NPolynomial operator*(const NPolynomial& a, const NPolynomial& b);
NPolynomial operator*(const Rational& c, const NPolynomial& a);

/// The unique polynomial of degree < xs.size() through (xs[i], ys[i]).
/// Throws std::invalid_argument on repeated nodes or size mismatch.
NPolynomial interpolate(std::span<const Rational> xs,
                        std::span<const Rational> ys);

/// E.g. "1/8*n^2 - 13/24*n + 1/2".
std::string to_string(const NPolynomial& p);
std::ostream& operator<<(std::ostream& os, const NPolynomial& p);

}  // namespace fpslab

#endif  // FPSLAB_NPOLYNOMIAL_HPP
