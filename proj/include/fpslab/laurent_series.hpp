#ifndef FPSLAB_LAURENT_SERIES_HPP
#define FPSLAB_LAURENT_SERIES_HPP

#include <span>
#include <vector>

#include "fpslab/power_series.hpp"
#include "fpslab/rational.hpp"

namespace fpslab {

/// Truncated Laurent series sum_{k=lowest}^{top} c_k x^k + O(x^{top+1}).
///
/// `lowest` is recorded exactly as the producer asked for it, even when the
/// coefficient there is zero; call normalized() to strip leading zeros.
/// Everything below `lowest` is known to vanish.
class LaurentSeries {
 public:
  /// top = lowest + coeffs.size() - 1; throws if coeffs is empty.
  LaurentSeries(int lowest, std::vector<Rational> coeffs);

  /// x^shift * p.
  static LaurentSeries from_power_series(const PowerSeries& p, int shift);

  int lowest() const { return lowest_; }
  int top() const { return lowest_ + static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Rational> coefficients() const { return coeffs_; }

  /// Exact zero for k < lowest(); TruncationError for k > top().
  Rational coefficient(int k) const;

  /// Drops leading zero coefficients (keeps at least one entry).
  LaurentSeries normalized() const;

  friend bool operator==(const LaurentSeries&,
                         const LaurentSeries&) = default;

 private:
  int lowest_;
  std::vector<Rational> coeffs_;
};

/// Product with lowest = a.lowest + b.lowest and
/// top = min(a.top + b.lowest, b.top + a.lowest).
LaurentSeries laurent_mul(const LaurentSeries& a, const LaurentSeries& b);

inline LaurentSeries operator*(const LaurentSeries& a,
                               const LaurentSeries& b) {
  return laurent_mul(a, b);
}

inline Rational laurent_coefficient(const LaurentSeries& a, int k) {
  return a.coefficient(k);
}

}  // namespace fpslab

#endif  // FPSLAB_LAURENT_SERIES_HPP
