#include "fpslab/power_series.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace fpslab {

namespace {

void require_order(int order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
}

}  // namespace

PowerSeries::PowerSeries(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("PowerSeries needs at least one coefficient");
  }
}

PowerSeries::PowerSeries(std::vector<Rational> coeffs, int order)
    : coeffs_(std::move(coeffs)) {
  require_order(order);
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

PowerSeries PowerSeries::zero(int order) { return PowerSeries({}, order); }

PowerSeries PowerSeries::one(int order) { return constant(Rational(1), order); }

PowerSeries PowerSeries::constant(const Rational& c, int order) {
  return monomial(c, 0, order);
}

PowerSeries PowerSeries::variable(int order) {
  return monomial(Rational(1), 1, order);
}

PowerSeries PowerSeries::monomial(const Rational& c, int degree, int order) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  PowerSeries s = zero(order);
  if (degree <= order) s.coeffs_[degree] = c;
  return s;
}

Rational PowerSeries::coefficient(int k) const {
  if (k < 0) return Rational(0);
  if (k > order()) {
    throw TruncationError("coefficient x^" + std::to_string(k) +
                          " beyond truncation order " +
                          std::to_string(order()));
  }
  return coeffs_[k];
}

PowerSeries PowerSeries::truncated(int new_order) const {
  require_order(new_order);
  if (new_order > order()) {
    throw std::invalid_argument("cannot extend a series past its order");
  }
  return PowerSeries(
      std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

int PowerSeries::valuation() const {
  for (int k = 0; k <= order(); ++k) {
    if (!coeffs_[k].is_zero()) return k;
  }
  return order() + 1;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Rational> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = a[k] + b[k];
  return PowerSeries(std::move(c));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Rational> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = a[k] - b[k];
  return PowerSeries(std::move(c));
}

PowerSeries operator-(const PowerSeries& a) {
  std::vector<Rational> c(a.coefficients().begin(), a.coefficients().end());
  for (auto& x : c) x = -x;
  return PowerSeries(std::move(c));
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Rational> c(n + 1);
  for (int i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (!b[j].is_zero()) c[i + j] += a[i] * b[j];
    }
  }
  return PowerSeries(std::move(c));
}

PowerSeries operator*(const Rational& c, const PowerSeries& a) {
  std::vector<Rational> r(a.coefficients().begin(), a.coefficients().end());
  for (auto& x : r) x *= c;
  return PowerSeries(std::move(r));
}

PowerSeries power(const PowerSeries& a, unsigned exponent) {
  PowerSeries result = PowerSeries::one(a.order());
  PowerSeries base = a;
  while (exponent != 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent != 0) base = base * base;
  }
  return result;
}

PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner) {
  if (!inner[0].is_zero()) {
    throw std::domain_error("compose: inner series has nonzero constant term");
  }
  const int n = std::min(outer.order(), inner.order());
  const PowerSeries in = inner.truncated(n);
  // Horner: outer_n, then (acc * inner + outer_k) down to k = 0.
  PowerSeries acc = PowerSeries::constant(outer[n], n);
  for (int k = n - 1; k >= 0; --k) {
    acc = acc * in + PowerSeries::constant(outer[k], n);
  }
  return acc;
}

PowerSeries reciprocal(const PowerSeries& a) {
  if (a[0].is_zero()) {
    throw std::domain_error("reciprocal: zero constant term");
  }
  const int n = a.order();
  const Rational inv0 = Rational(1) / a[0];
  std::vector<Rational> b(n + 1);
  b[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    Rational s;
    for (int i = 1; i <= k; ++i) {
      if (!a[i].is_zero()) s += a[i] * b[k - i];
    }
    b[k] = -(s * inv0);
  }
  return PowerSeries(std::move(b));
}

PowerSeries exp_series(const PowerSeries& a) {
  if (!a[0].is_zero()) {
    throw std::domain_error("exp_series: nonzero constant term");
  }
  // e' = a' e, i.e. k e_k = sum_{i=1}^k i a_i e_{k-i}.
  const int n = a.order();
  std::vector<Rational> e(n + 1);
  e[0] = Rational(1);
  for (int k = 1; k <= n; ++k) {
    Rational s;
    for (int i = 1; i <= k; ++i) {
      if (!a[i].is_zero()) s += Rational(i) * a[i] * e[k - i];
    }
    e[k] = s / Rational(k);
  }
  return PowerSeries(std::move(e));
}

PowerSeries log_series(const PowerSeries& a) {
  if (a[0] != Rational(1)) {
    throw std::domain_error("log_series: constant term must be 1");
  }
  // a l' = a', i.e. k l_k = k a_k - sum_{i=1}^{k-1} i l_i a_{k-i}.
  const int n = a.order();
  std::vector<Rational> l(n + 1);
  for (int k = 1; k <= n; ++k) {
    Rational s = Rational(k) * a[k];
    for (int i = 1; i < k; ++i) {
      if (!a[k - i].is_zero()) s -= Rational(i) * l[i] * a[k - i];
    }
    l[k] = s / Rational(k);
  }
  return PowerSeries(std::move(l));
}

PowerSeries reversion(const PowerSeries& f) {
  if (f.order() < 1 || !f[0].is_zero() || f[1] != Rational(1)) {
    throw std::domain_error(
        "reversion: series must have the form x + a_2 x^2 + ...");
  }
  const int n = f.order();
  // Solve g(f(x)) = x one coefficient at a time:
  // [x^k] sum_i g_i f^i = 0 for k >= 2, and [x^k] f^k = 1.
  std::vector<PowerSeries> powers;
  powers.reserve(n + 1);
  powers.push_back(PowerSeries::one(n));
  for (int i = 1; i <= n; ++i) powers.push_back(powers.back() * f);

  std::vector<Rational> g(n + 1);
  g[1] = Rational(1);
  for (int k = 2; k <= n; ++k) {
    Rational s;
    for (int i = 1; i < k; ++i) {
      if (!g[i].is_zero()) s += g[i] * powers[i][k];
    }
    g[k] = -s;
  }
  return PowerSeries(std::move(g));
}

PowerSeries exp_minus_one(int order, const Rational& c) {
  require_order(order);
  std::vector<Rational> e(order + 1);
  Rational term(1);
  for (int k = 1; k <= order; ++k) {
    term = term * c / Rational(k);
    e[k] = term;
  }
  return PowerSeries(std::move(e));
}

std::string to_string(const PowerSeries& a) {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= a.order(); ++k) {
    const Rational& c = a[k];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
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
    os << "x";
    if (k > 1) os << "^" << k;
  }
  if (first) os << "0";
  os << " + O(x^" << a.order() + 1 << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PowerSeries& a) {
  return os << to_string(a);
}

}  // namespace fpslab
