#include <gtest/gtest.h>

#include "helpers.hpp"
#include "qcalc/bernstein.hpp"
#include "qcalc/errors.hpp"
#include "qcalc/qcore.hpp"

namespace qcalc {
namespace {

TEST(Bernstein, Values) {
  EXPECT_TRUE(bivar_equal(bernstein(1, 1), x_q()));
  EXPECT_TRUE(bivar_equal(bernstein(0, 1), one_minus_x_q()));
  EXPECT_TRUE(bivar_equal(bernstein(1, 2), BivariateElement(2) * x_q() * one_minus_x_q()));
  EXPECT_THROW(bernstein(3, 2), IndexError);
  EXPECT_THROW(bernstein(-1, 2), IndexError);
}

TEST(Bernstein, Operator) {
  const RationalFunctionQ c = RationalFunctionQ(5) / RationalFunctionQ(3);
  for (int n = 0; n <= 4; ++n) {
    std::vector<RationalFunctionQ> samples(static_cast<std::size_t>(n) + 1, c);
    EXPECT_TRUE(bivar_equal(bernstein_operator(samples, n), BivariateElement(c) * (x_q() + one_minus_x_q()).pow(n)));
  }
  std::vector<RationalFunctionQ> up{0, 1}, down{1, 0};
  EXPECT_TRUE(bivar_equal(bernstein_operator(up, 1), x_q()));
  EXPECT_TRUE(bivar_equal(bernstein_operator(down, 1), one_minus_x_q()));
}

TEST(Bernstein, GeneratingCoefficient) {
  EXPECT_TRUE(generating_coefficient(0, 0).is_one());
  EXPECT_TRUE(generating_coefficient(2, 1).is_zero());
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) EXPECT_TRUE(bivar_equal(generating_coefficient(k, n), bernstein(k, n))) << k << "," << n;
}

TEST(Bernstein, BinomialSum) {
  for (int n = 0; n <= 8; ++n) {
    auto basis = bernstein_basis(n);
    BivariateElement sum;
    for (const auto& b : basis.elements) sum += b;
    EXPECT_TRUE(bivar_equal(sum, (x_q() + one_minus_x_q()).pow(n))) << n;
    if (n > 0) EXPECT_FALSE(sum.is_one());
  }
}

TEST(Bernstein, Symmetry) {
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) EXPECT_TRUE(bivar_equal(bernstein(k, n).reflect(), bernstein(n - k, n))) << k << "," << n;
}

TEST(Bernstein, PartitionLhs) {
  EXPECT_TRUE(bivar_equal(partition_lhs(1, 1), x_q()));
  EXPECT_TRUE(bivar_equal(partition_lhs(1, 2), x_q()));
  for (int n = 1; n <= 6; ++n) {
    EXPECT_TRUE(bivar_equal(partition_lhs(n, n), x_q().pow(n)));
    for (int i = 1; i <= n; ++i) {
      auto lhs = partition_lhs(i, n);
      if (bivar_equal(lhs, x_q().pow(i))) EXPECT_TRUE(lhs.is_polynomial()) << i << "," << n;
    }
  }
}

TEST(Bernstein, EvalPoint) {
  EXPECT_EQ(eval_point(bernstein(1, 1), 1, ratio(1, 2)), 1);
  EXPECT_EQ(eval_point(bernstein(0, 1), 0, 7), 1);
  EXPECT_EQ(eval_point(bernstein(1, 2), 1, 2), 0);
}

}  // namespace
}  // namespace qcalc
