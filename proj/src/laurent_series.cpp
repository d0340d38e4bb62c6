#include "fpslab/laurent_series.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace fpslab {

LaurentSeries::LaurentSeries(int lowest, std::vector<Rational> coeffs)
    : lowest_(lowest), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("LaurentSeries needs at least one coefficient");
  }
}

LaurentSeries LaurentSeries::from_power_series(const PowerSeries& p,
                                               int shift) {
  return LaurentSeries(shift, std::vector<Rational>(p.coefficients().begin(),
                                                    p.coefficients().end()));
}

Rational LaurentSeries::coefficient(int k) const {
  if (k < lowest_) return Rational(0);
  if (k > top()) {
    throw TruncationError("coefficient x^" + std::to_string(k) +
                          " beyond known window [" + std::to_string(lowest_) +
                          ".." + std::to_string(top()) + "]");
  }
  return coeffs_[k - lowest_];
}

LaurentSeries LaurentSeries::normalized() const {
  std::size_t first = 0;
  while (first + 1 < coeffs_.size() && coeffs_[first].is_zero()) ++first;
  return LaurentSeries(lowest_ + static_cast<int>(first),
                       std::vector<Rational>(coeffs_.begin() + first,
                                             coeffs_.end()));
}

LaurentSeries laurent_mul(const LaurentSeries& a, const LaurentSeries& b) {
  const int lowest = a.lowest() + b.lowest();
  const int top = std::min(a.top() + b.lowest(), b.top() + a.lowest());
  const int len = top - lowest + 1;
  const auto ac = a.coefficients();
  const auto bc = b.coefficients();
  std::vector<Rational> c(len);
  for (int i = 0; i < len && i < static_cast<int>(ac.size()); ++i) {
    if (ac[i].is_zero()) continue;
    for (int j = 0; i + j < len && j < static_cast<int>(bc.size()); ++j) {
      if (!bc[j].is_zero()) c[i + j] += ac[i] * bc[j];
    }
  }
  return LaurentSeries(lowest, std::move(c));
}

}  // namespace fpslab
