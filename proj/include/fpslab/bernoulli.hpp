#ifndef FPSLAB_BERNOULLI_HPP
#define FPSLAB_BERNOULLI_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fpslab/laurent_series.hpp"
#include "fpslab/npolynomial.hpp"
#include "fpslab/rational.hpp"

// Bernoulli numbers and the Bernoulli-type numbers q^{(m,n)}_k, the
// coefficients of x^k in e^{mx} / (e^x - 1)^n.

namespace fpslab::bernoulli {

/// B_0..B_J with B_j = B_j(1), i.e. B_1 = +1/2.
class BernoulliTable {
 public:
  explicit BernoulliTable(std::vector<Rational> values)
      : values_(std::move(values)) {}

  int max_index() const { return static_cast<int>(values_.size()) - 1; }
  const Rational& operator[](int j) const { return values_.at(j); }
  std::span<const Rational> values() const { return values_; }

 private:
  std::vector<Rational> values_;
};

/// From e^x / (e^x - 1) = sum_j B_j / j! x^{j-1}.
BernoulliTable bernoulli_numbers(int max_index);

/// B_j(t) from e^{tx} / (e^x - 1) = sum_j B_j(t) / j! x^{j-1}.
Rational bernoulli_polynomial_value(int j, const Rational& t);

/// q^{(m,n)}_k for -n <= k <= top. Entries below -n vanish.
class QTable {
 public:
  QTable(int m, int n, std::vector<Rational> coeffs);

  int m() const { return m_; }
  int n() const { return n_; }
  int lowest() const { return -n_; }
  int top() const { return series_.top(); }

  /// Zero for k < -n; TruncationError for k > top().
  Rational at(int k) const { return series_.coefficient(k); }
  /// q^{(m,n)}_{-n+j}.
  Rational from_lowest(int j) const { return at(-n_ + j); }

  const LaurentSeries& series() const { return series_; }
  std::span<const Rational> coefficients() const {
    return series_.coefficients();
  }

  friend bool operator==(const QTable&, const QTable&) = default;

 private:
  int m_;
  int n_;
  LaurentSeries series_;
};

/// Direct Laurent expansion of e^{mx} / (e^x - 1)^n through x^top.
/// Throws std::invalid_argument if top < -n.
QTable q_series(int m, int n, int top);

/// Recursion in n for q^{(1,n)}_{-n+j}:
///   q_{-n} = 1,
///   q_{-n+j} = -(1/j) (B_j/j! (n-j-1)
///              + sum_{i=1}^{j-1} i q^{(1,n+i-j)}_{-n+j} q^{(1,-n-i+j+2)}_{n-2}).
/// Sub-values are memoized by (n, j). The only external input is the
/// Bernoulli table.
class QRecursion {
 public:
  explicit QRecursion(int max_j);

  /// q^{(1,n)}_{-n+j}; throws std::out_of_range if j exceeds max_j.
  const Rational& value(int n, int j);

  std::size_t memo_size() const { return memo_.size(); }

 private:
  BernoulliTable bernoulli_;
  std::vector<Rational> bernoulli_over_factorial_;
  std::map<std::pair<int, int>, Rational> memo_;
};

/// q^{(1,n)}_{-n+j}, 0 <= j <= j_max, computed by QRecursion only.
QTable q_recursive(int n, int j_max);

/// Grows q_series tables for m = 1 on demand, keyed by n.
class QSeriesCache {
 public:
  Rational value(int n, int k);

 private:
  std::map<int, QTable> tables_;
};

struct ConvolutionReport {
  int m = 0;
  int n = 0;
  int j = 0;
  Rational lhs;
  Rational rhs;
  bool passed() const { return lhs == rhs; }
};

/// sum_{k=m}^{-n+j} q^{(1,k+1)}_{-m-1} q^{(1,j-k+1)}_{-n-1}
///   == q^{(1,j+1)}_{-m-n-1}.
ConvolutionReport convolution_check(int m, int n, int j);
ConvolutionReport convolution_check(QSeriesCache& cache, int m, int n, int j);

/// sum_{k=m}^{-n} k q^{(1,k+1)}_{-m-1} q^{(1,-k+1)}_{-n-1} == m delta_{m+n,0}.
/// The report's j field is unused (0).
ConvolutionReport weighted_convolution_check(int m, int n);
ConvolutionReport weighted_convolution_check(QSeriesCache& cache, int m,
                                             int n);

struct ExpansionPolynomial {
  int j = 0;
  NPolynomial polynomial;
  std::vector<int> sample_points;
  std::vector<int> validation_points;
  /// First validation n where the polynomial disagreed with the expansion.
  std::optional<int> first_failure;

  bool validated() const { return !first_failure && polynomial.degree() <= j; }
};

/// q^{(1,n)}_{-n+j} as a polynomial in n, interpolated on n = j+2..2j+2 and
/// validated on [-3..0] and n = 2j+3, 2j+4, ... (at least j+3 points).
ExpansionPolynomial expansion_polynomial(int j);

struct DivisibilityReport {
  int j = 0;
  /// (n, value of the polynomial at n) for each required root.
  std::vector<std::pair<int, Rational>> roots;
  bool polynomial_validated = false;
  bool passed() const;
};

/// Requires j >= 1. Checks vanishing at n = j+1, at n = 1 for odd j > 1 and
/// at n = 2 for odd j.
DivisibilityReport divisibility_check(int j);

nlohmann::json to_json(const BernoulliTable& t);
nlohmann::json to_json(const QTable& t);
QTable qtable_from_json(const nlohmann::json& j);

/// CSV with header "m,n,k,q".
std::string to_csv(std::span<const QTable> tables);
std::vector<QTable> qtables_from_csv(const std::string& csv);

}  // namespace fpslab::bernoulli

#endif  // FPSLAB_BERNOULLI_HPP
