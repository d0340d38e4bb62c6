#ifndef FPSLAB_TESTS_TEST_SUPPORT_HPP
#define FPSLAB_TESTS_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include "fpslab/power_series.hpp"
#include "fpslab/rational.hpp"

namespace fpslab::testing {

inline Rational R(long p, long q = 1) { return Rational(p, q); }

inline PowerSeries series(std::vector<Rational> c, int order) {
  return PowerSeries(std::move(c), order);
}

/// Small random rational p/q, |p| <= 6, 1 <= q <= 5.
inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 5);
  return Rational(num(rng), den(rng));
}

inline PowerSeries random_series(std::mt19937_64& rng, int order) {
  std::vector<Rational> c(order + 1);
  for (auto& x : c) x = random_rational(rng);
  return PowerSeries(std::move(c));
}

/// x + a_2 x^2 + ... with random a_k.
inline PowerSeries random_change_of_variable(std::mt19937_64& rng, int order) {
  std::vector<Rational> c(order + 1);
  c[1] = Rational(1);
  for (int k = 2; k <= order; ++k) c[k] = random_rational(rng);
  return PowerSeries(std::move(c));
}

}  // namespace fpslab::testing

#endif  // FPSLAB_TESTS_TEST_SUPPORT_HPP
