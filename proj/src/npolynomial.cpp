#include "fpslab/npolynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace fpslab {

NPolynomial::NPolynomial(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

void NPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

NPolynomial NPolynomial::constant(const Rational& c) {
  return NPolynomial(std::vector<Rational>{c});
}

NPolynomial NPolynomial::linear_factor(const Rational& root) {
  return NPolynomial(std::vector<Rational>{-root, Rational(1)});
}

Rational NPolynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return coeffs_[k];
}

Rational NPolynomial::evaluate(const Rational& n) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * n + *it;
  }
  return acc;
}

NPolynomial operator+(const NPolynomial& a, const NPolynomial& b) {
  std::vector<Rational> c(std::max(a.degree(), b.degree()) + 1);
  for (int k = 0; k < static_cast<int>(c.size()); ++k) {
    c[k] = a.coefficient(k) + b.coefficient(k);
  }
  return NPolynomial(std::move(c));
}

NPolynomial operator-(const NPolynomial& a, const NPolynomial& b) {
  return a + Rational(-1) * b;
}

NPolynomial operator*(const NPolynomial& a, const NPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return NPolynomial();
  std::vector<Rational> c(a.degree() + b.degree() + 1);
  for (int i = 0; i <= a.degree(); ++i) {
    for (int j = 0; j <= b.degree(); ++j) {
      c[i + j] += a.coefficients()[i] * b.coefficients()[j];
    }
  }
  return NPolynomial(std::move(c));
}

NPolynomial operator*(const Rational& c, const NPolynomial& a) {
  std::vector<Rational> r(a.coefficients().begin(), a.coefficients().end());
  for (auto& x : r) x *= c;
  return NPolynomial(std::move(r));
}

NPolynomial interpolate(std::span<const Rational> xs,
                        std::span<const Rational> ys) {
  if (xs.size() != ys.size()) {
    throw std::invalid_argument("interpolate: node/value size mismatch");
  }
  const std::size_t m = xs.size();
  // Newton divided differences, in place.
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = m - 1; i >= level; --i) {
      const Rational gap = xs[i] - xs[i - level];
      if (gap.is_zero()) {
        throw std::invalid_argument("interpolate: repeated node");
      }
      dd[i] = (dd[i] - dd[i - 1]) / gap;
    }
  }
  // Expand the Newton form back to monomials by Horner.
  NPolynomial p;
  for (std::size_t i = m; i-- > 0;) {
    p = p * NPolynomial::linear_factor(xs[i]) + NPolynomial::constant(dd[i]);
  }
  return p;
}

std::string to_string(const NPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational& c = p.coefficients()[k];
    if (c.is_zero()) continue;
    const Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != Rational(1)) os << mag << "*";
    os << "n";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const NPolynomial& p) {
  return os << to_string(p);
}

}  // namespace fpslab
