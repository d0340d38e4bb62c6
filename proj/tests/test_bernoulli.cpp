#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "fpslab/bernoulli.hpp"
#include "fpslab/npolynomial.hpp"
#include "test_support.hpp"

namespace fpslab::bernoulli {
namespace {

using testing::R;

// Classical recurrence sum_{k=0}^{j} C(j+1, k) B_k(0) = 0 for j >= 1, an
// oracle that never touches the series kernel. Returns the B_1 = +1/2 form.
std::vector<Rational> bernoulli_by_recurrence(int max_index) {
  std::vector<Rational> b(max_index + 1);
  b[0] = Rational(1);
  for (int j = 1; j <= max_index; ++j) {
    Rational s;
    Rational binom(1);  // C(j+1, k)
    for (int k = 0; k < j; ++k) {
      s += binom * b[k];
      binom = binom * Rational(j + 1 - k) / Rational(k + 1);
    }
    b[j] = -s / Rational(j + 1);
  }
  if (max_index >= 1) b[1] = -b[1];
  return b;
}

NPolynomial n_minus(const Rational& root) {
  return NPolynomial::linear_factor(root);
}

TEST(BernoulliNumbers, Convention) {
  const auto t = bernoulli_numbers(6);
  EXPECT_EQ(t[0], R(1));
  EXPECT_EQ(t[1], R(1, 2));
  EXPECT_EQ(t[2], R(1, 6));
  EXPECT_EQ(t[3], R(0));
  EXPECT_EQ(t[4], R(-1, 30));
}

TEST(BernoulliNumbers, MatchRecurrenceOracle) {
  const auto t = bernoulli_numbers(30);
  const auto oracle = bernoulli_by_recurrence(30);
  for (int j = 0; j <= 30; ++j) EXPECT_EQ(t[j], oracle[j]) << j;
  for (int j = 3; j <= 30; j += 2) EXPECT_TRUE(t[j].is_zero()) << j;
}

TEST(BernoulliPolynomial, Values) {
  const auto t = bernoulli_numbers(20);
  for (int j = 0; j <= 20; ++j) {
    EXPECT_EQ(bernoulli_polynomial_value(j, R(1)), t[j]) << j;
  }
  EXPECT_EQ(bernoulli_polynomial_value(1, R(0)), R(-1, 2));
  // B_2(t) = t^2 - t + 1/6; both the closed form and a sympy expansion of
  // e^{3x}/(e^x - 1) give 37/6.
  EXPECT_EQ(bernoulli_polynomial_value(2, R(3)), R(37, 6));
  EXPECT_EQ(bernoulli_polynomial_value(2, R(1, 2)), R(-1, 12));
}

TEST(QSeries, LeadingCoefficientIsOne) {
  for (int n = -5; n <= 10; ++n) {
    const auto t = q_series(1, n, -n + 3);
    EXPECT_EQ(t.lowest(), -n);
    EXPECT_EQ(t.at(-n), R(1)) << n;
    EXPECT_EQ(t.at(-n - 1), R(0));
    EXPECT_THROW(t.at(-n + 4), TruncationError);
  }
}

TEST(QSeries, SimplePoleGivesBernoulliPolynomials) {
  for (int m = -4; m <= 4; ++m) {
    const auto t = q_series(m, 1, 10);
    for (int j = 0; j <= 11; ++j) {
      EXPECT_EQ(t.at(j - 1),
                bernoulli_polynomial_value(j, R(m)) / Rational::factorial(j))
          << "m=" << m << " j=" << j;
    }
  }
}

TEST(QSeries, ResidueOfExactDerivativeVanishes) {
  for (int j = 1; j <= 10; ++j) EXPECT_EQ(q_series(1, j + 1, -1).at(-1), R(0));
}

TEST(QSeries, NonPositiveNIsAPowerSeries) {
  // e^x (e^x - 1)^2 = x^2 + 2x^3 + ...; lowest recorded as -n = 2.
  const auto t = q_series(1, -2, 4);
  EXPECT_EQ(t.lowest(), 2);
  EXPECT_EQ(t.at(2), R(1));
  EXPECT_EQ(t.at(3), R(2));
  EXPECT_EQ(q_series(0, 0, 3).at(0), R(1));
  EXPECT_EQ(q_series(0, 0, 3).at(2), R(0));
  EXPECT_THROW(q_series(1, 3, -4), std::invalid_argument);
}

TEST(QSeries, NegativeM) {
  // e^{-x} = 1 - x + x^2/2 - ...
  const auto t = q_series(-1, 0, 3);
  EXPECT_EQ(t.at(1), R(-1));
  EXPECT_EQ(t.at(3), R(-1, 6));
}

TEST(QSeries, ParityOfSecondOrderPole) {
  const auto t = q_series(1, 2, 20);
  for (int k = -1; k <= 20; k += 2) EXPECT_TRUE(t.at(k).is_zero()) << k;
}

TEST(QRecursive, LowOrderClosedForms) {
  for (int n = -5; n <= 10; ++n) {
    const auto t = q_recursive(n, 3);
    EXPECT_EQ(t.from_lowest(0), R(1));
    EXPECT_EQ(t.from_lowest(1), R(-(n - 2), 2)) << n;
    EXPECT_EQ(t.from_lowest(3), R(-1, 48) * R(n - 1) * R(n - 2) * R(n - 4))
        << n;
  }
}

TEST(QRecursive, AgreesWithDirectExpansion) {
  for (int n = -6; n <= 12; ++n) {
    EXPECT_EQ(q_recursive(n, 20), q_series(1, n, -n + 20)) << n;
  }
}

TEST(QRecursion, MemoIsShared) {
  QRecursion r(12);
  const Rational v = r.value(5, 12);
  const std::size_t size = r.memo_size();
  EXPECT_EQ(r.value(5, 12), v);
  EXPECT_EQ(r.memo_size(), size);
  EXPECT_THROW(r.value(5, 13), std::out_of_range);
}

TEST(Convolution, BaseAndBernoulliCases) {
  for (int m = -4; m <= 4; ++m) {
    const auto base = convolution_check(m, -m, 0);
    EXPECT_EQ(base.lhs, R(1));
    EXPECT_EQ(base.rhs, R(1));
  }
  const auto b = bernoulli_numbers(8);
  // With the superscript shift at 0 and m + n = -j the right side is
  // q^{(1,1)}_{j-1} = B_j / j!.
  for (int j = 1; j <= 8; ++j) {
    const int m = 2;
    const auto r = convolution_check(m, -m - j, 0);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.rhs, b[j] / Rational::factorial(j)) << j;
  }
}

TEST(Convolution, Grid) {
  QSeriesCache cache;
  for (int m = -6; m <= 6; ++m)
    for (int n = -6; n <= 6; ++n)
      for (int j = -6; j <= 6; ++j) {
        const auto r = convolution_check(cache, m, n, j);
        EXPECT_TRUE(r.passed()) << m << "," << n << "," << j;
      }
}

TEST(WeightedConvolution, Examples) {
  EXPECT_EQ(weighted_convolution_check(3, -3).lhs, R(3));
  EXPECT_TRUE(weighted_convolution_check(3, -3).passed());
  EXPECT_EQ(weighted_convolution_check(2, 1).lhs, R(0));
  EXPECT_TRUE(weighted_convolution_check(2, 1).passed());
  for (int n = -5; n <= 5; ++n) {
    EXPECT_EQ(weighted_convolution_check(0, n).lhs, R(0)) << n;
  }
  QSeriesCache cache;
  for (int m = -8; m <= 8; ++m)
    for (int n = -8; n <= 8; ++n)
      EXPECT_TRUE(weighted_convolution_check(cache, m, n).passed())
          << m << "," << n;
}

TEST(NPolynomial, InterpolateRecoversCubic) {
  const NPolynomial p{R(1, 3), R(-2), R(0), R(5, 7)};
  std::vector<Rational> xs, ys;
  for (int i = -1; i <= 2; ++i) {
    xs.emplace_back(i);
    ys.push_back(p.evaluate(R(i)));
  }
  EXPECT_EQ(interpolate(xs, ys), p);
  xs[1] = xs[0];
  EXPECT_THROW(interpolate(xs, ys), std::invalid_argument);
  EXPECT_EQ(to_string(p), "5/7*n^3 - 2*n + 1/3");
  EXPECT_EQ(NPolynomial().degree(), -1);
}

TEST(ExpansionPolynomial, ClosedForms) {
  const std::vector<NPolynomial> expected = {
      NPolynomial::constant(R(1)),
      R(-1, 2) * n_minus(R(2)),
      R(1, 8) * n_minus(R(3)) * n_minus(R(4, 3)),
      R(-1, 48) * n_minus(R(1)) * n_minus(R(2)) * n_minus(R(4)),
      R(1, 384) * n_minus(R(5)) * NPolynomial{R(-16, 5), R(22, 3), R(-5), R(1)},
      R(-1, 3840) * n_minus(R(1)) * n_minus(R(2)) * n_minus(R(6)) *
          NPolynomial{R(8, 3), R(-13, 3), R(1)},
  };
  for (int j = 0; j <= 5; ++j) {
    const auto e = expansion_polynomial(j);
    EXPECT_TRUE(e.validated()) << j;
    EXPECT_EQ(e.polynomial, expected[j]) << "j=" << j << ": " << e.polynomial;
  }
}

TEST(ExpansionPolynomial, SamplingPlan) {
  const auto e = expansion_polynomial(8);
  EXPECT_EQ(e.sample_points.front(), 10);
  EXPECT_EQ(e.sample_points.back(), 18);
  EXPECT_GE(e.validation_points.size(), 11u);
  EXPECT_EQ(e.validation_points.front(), -3);
  const auto small = expansion_polynomial(1);
  EXPECT_EQ(small.validation_points,
            (std::vector<int>{-3, -2, -1, 0, 5, 6, 7}));
}

TEST(ExpansionPolynomial, DegreeBound) {
  for (int j = 0; j <= 12; ++j) {
    const auto e = expansion_polynomial(j);
    EXPECT_TRUE(e.validated()) << j;
    EXPECT_LE(e.polynomial.degree(), j);
  }
}

TEST(Divisibility, Examples) {
  const auto one = divisibility_check(1);
  EXPECT_TRUE(one.passed());
  ASSERT_EQ(one.roots.size(), 2u);
  EXPECT_EQ(one.roots[0].first, 2);
  EXPECT_EQ(one.roots[1].first, 2);

  const auto three = divisibility_check(3);
  EXPECT_TRUE(three.passed());
  std::vector<int> roots;
  for (const auto& r : three.roots) roots.push_back(r.first);
  EXPECT_EQ(roots, (std::vector<int>{4, 1, 2}));

  const auto two = divisibility_check(2);
  EXPECT_TRUE(two.passed());
  ASSERT_EQ(two.roots.size(), 1u);
  EXPECT_EQ(two.roots[0].first, 3);

  EXPECT_THROW(divisibility_check(0), std::invalid_argument);
}

TEST(Divisibility, UpToTwelve) {
  for (int j = 1; j <= 12; ++j) EXPECT_TRUE(divisibility_check(j).passed()) << j;
}

TEST(QTableIo, JsonAndCsvRoundTrip) {
  const auto t = q_series(1, 2, 1);
  EXPECT_EQ(to_json(t).dump(),
            R"({"coeffs":["1","0","-1/12","0"],"lowest":-2,"m":1,"n":2})");
  EXPECT_EQ(qtable_from_json(to_json(t)), t);

  std::vector<QTable> tables = {q_series(1, 2, 1), q_series(3, -1, 3)};
  const std::string csv = to_csv(tables);
  EXPECT_EQ(csv.substr(0, 24), "m,n,k,q\n1,2,-2,1\n1,2,-1,");
  const auto parsed = qtables_from_csv(csv);
  EXPECT_EQ(parsed, tables);
  EXPECT_EQ(to_csv(parsed), csv);
  EXPECT_THROW(qtables_from_csv("m,n,k\n"), std::invalid_argument);
  EXPECT_THROW(qtables_from_csv("m,n,k,q\n1,2,0,1\n"), std::invalid_argument);
}

}  // namespace
}  // namespace fpslab::bernoulli
