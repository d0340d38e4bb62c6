#include <stdexcept>

#include <gtest/gtest.h>

#include "fpslab/jacobi.hpp"
#include "test_support.hpp"

namespace fpslab::jacobi {
namespace {

using testing::R;

TEST(GeneralizedBinomial, Examples) {
  EXPECT_EQ(generalized_binomial(5, 2), R(10));
  EXPECT_EQ(generalized_binomial(-3, 2), R(6));
  EXPECT_EQ(generalized_binomial(7, 0), R(1));
  EXPECT_EQ(generalized_binomial(3, 5), R(0));
  for (int k = 0; k <= 12; ++k) {
    EXPECT_EQ(generalized_binomial(-1, k), R(k % 2 == 0 ? 1 : -1)) << k;
  }
  EXPECT_THROW(generalized_binomial(3, -1), std::invalid_argument);
}

TEST(GeneralizedBinomial, PascalRecurrence) {
  for (long t = -15; t <= 15; ++t) {
    for (long b = 1; b <= 12; ++b) {
      EXPECT_EQ(generalized_binomial(t, b),
                generalized_binomial(t - 1, b) + generalized_binomial(t - 1, b - 1))
          << t << "," << b;
    }
  }
}

TEST(Residue, Examples) {
  EXPECT_EQ(residue_formula(1, 1), R(1));
  EXPECT_EQ(residue_oracle(1, 1), R(1));
  EXPECT_EQ(residue_formula(0, 2), R(-1));
  EXPECT_EQ(residue_oracle(0, 2), R(-1));
  EXPECT_EQ(residue_formula(3, 2), R(2));
  EXPECT_EQ(residue_oracle(3, 2), R(2));
  for (int j = 1; j <= 10; ++j) EXPECT_EQ(residue_oracle(1, j + 1), R(0));
  EXPECT_THROW(residue_formula(1, 0), std::invalid_argument);
  EXPECT_THROW(residue_oracle(1, -2), std::invalid_argument);
}

TEST(Residue, FormulaMatchesExpansion) {
  const auto rows = residue_table({-12, 12}, {1, 12});
  ASSERT_EQ(rows.size(), 300u);
  for (const auto& r : rows) {
    EXPECT_TRUE(r.agrees()) << r.m << "," << r.n;
  }
}

TEST(Commutator, Examples) {
  EXPECT_EQ(commutator_coefficient({.weight = 1, .j = 0, .k = 0, .n = 0}), R(1));
  EXPECT_EQ(commutator_coefficient({.weight = 2, .j = 0, .k = 1, .n = 0}), R(1));
  for (int w = -2; w <= 3; ++w)
    for (int j = -3; j <= 3; ++j)
      EXPECT_EQ(commutator_coefficient({.weight = w, .j = j, .k = 1, .n = 2}),
                R(0));
}

TEST(Commutator, MatchesResidueOracle) {
  for (int w = 0; w <= 4; ++w)
    for (int n = -2; n <= 2; ++n) {
      const auto t = coefficient_table(w, n, {-6, 6}, {n, n + 8});
      ASSERT_EQ(t.entries.size(), 13u * 9u);
      for (const auto& e : t.entries) {
        const auto& q = e.query;
        EXPECT_EQ(e.value, residue_oracle(w - q.j, q.k - n + 1))
            << w << "," << n << "," << q.j << "," << q.k;
        EXPECT_TRUE(e.value.is_integer());
      }
    }
}

TEST(Commutator, ZeroSliceAndFiniteSupport) {
  const auto t = coefficient_table(1, 0, {-4, 4}, {0, 6});
  for (const auto& e : t.entries) {
    EXPECT_EQ(e.value, generalized_binomial(-e.query.j, e.query.k));
  }
  // w - j - 1 >= 0: the row stops after k - n = w - j - 1.
  for (int j = -3; j <= 2; ++j) {
    const int top = 3 - j - 1;
    for (int k = top + 1; k <= top + 5; ++k) {
      EXPECT_EQ(commutator_coefficient({.weight = 3, .j = j, .k = k, .n = 0}),
                R(0));
    }
  }
  EXPECT_THROW(coefficient_table(1, 2, {0, 1}, {1, 3}), std::invalid_argument);
}

TEST(TableIo, RoundTrip) {
  const auto t = coefficient_table(2, -1, {-1, 1}, {-1, 0});
  const std::string csv = to_csv(t);
  EXPECT_EQ(csv.substr(0, 30), "w,n,j,k,value\n2,-1,-1,-1,1\n2,-");
  const auto j = to_json(t);
  EXPECT_EQ(j["entries"][0].dump(), R"({"j":-1,"k":-1,"value":1})");
  const auto back = coefficient_table_from_json(j);
  EXPECT_EQ(to_json(back).dump(), j.dump());
  EXPECT_EQ(to_csv(back), csv);

  const auto rows = residue_table({0, 1}, {1, 2});
  EXPECT_EQ(to_csv(rows), "m,n,formula,oracle\n0,1,1,1\n0,2,-1,-1\n1,1,1,1\n1,2,0,0\n");
}

}  // namespace
}  // namespace fpslab::jacobi
