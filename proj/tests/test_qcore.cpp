#include <gtest/gtest.h>

#include "helpers.hpp"
#include "qcalc/bernstein.hpp"
#include "qcalc/errors.hpp"
#include "qcalc/qcore.hpp"

namespace qcalc {
namespace {

using testing::P;
using testing::R;

// Direct numeric oracle: [y]_{q0} for an integer y (negative y allowed).
Rational qnum(long y, const Rational& q0) {
  if (q0 == 1) return y;
  Rational qy = 1;
  for (long i = 0; i < std::labs(y); ++i) qy *= q0;
  if (y < 0) qy = 1 / qy;
  return (1 - qy) / (1 - q0);
}

TEST(QCore, QInt) {
  EXPECT_TRUE(q_int(0).is_zero());
  EXPECT_EQ(q_int(1), P({1}));
  EXPECT_EQ(q_int(3), P({1, 1, 1}));
}

TEST(QCore, QIntAnyNegative) {
  // [-1]_q = -1/q
  EXPECT_EQ(q_int_any(-1), R(P({-1}), P({0, 1})));
}

TEST(QCore, QFactorial) {
  EXPECT_EQ(q_factorial(0), P({1}));
  EXPECT_EQ(q_factorial(2), P({1, 1}));
  EXPECT_EQ(q_factorial(3), P({1, 2, 2, 1}));
}

TEST(QCore, GaussBinom) {
  EXPECT_EQ(gauss_binom(4, 2), P({1, 1, 2, 1, 1}));
  EXPECT_EQ(gauss_binom(5, 0), P({1}));
  EXPECT_TRUE(gauss_binom(3, 5).is_zero());
  EXPECT_TRUE(gauss_binom(3, -1).is_zero());
}

TEST(QCore, GaussBinomKernelProperties) {
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      PolyQ g = gauss_binom(n, k);
      EXPECT_EQ(g.degree(), k * (n - k));
      for (const auto& c : g.coeffs()) {
        EXPECT_EQ(c.get_den(), 1);
        EXPECT_GE(sgn(c), 0);
      }
      EXPECT_EQ(g.eval(1), Rational(binomial(n, k)));
      // factorial-ratio route
      EXPECT_EQ(g * q_factorial(k) * q_factorial(n - k), q_factorial(n));
      if (n > 0 && k > 0) {
        EXPECT_EQ(g, gauss_binom(n - 1, k - 1) + gauss_binom(n - 1, k).shifted(k)) << n << "," << k;
      }
    }
  }
}

TEST(QCore, XForms) {
  const auto t = BivariateElement::t_power(1);
  const auto one_minus_q = R(P({1, -1}));
  EXPECT_TRUE(bivar_equal(x_q(), (BivariateElement(1) - t) / one_minus_q));
  EXPECT_TRUE(bivar_equal(one_minus_x_q(), (t - RationalFunctionQ::q()) / (t * one_minus_q)));
  EXPECT_TRUE(q_pow_x(0).is_one());
  EXPECT_TRUE(bivar_equal(RationalFunctionQ::q() * x_minus_q(1), x_q() - 1));
}

TEST(QCore, QFalling) {
  EXPECT_TRUE(q_falling(0).is_one());
  EXPECT_TRUE(bivar_equal(q_falling(1), x_q()));
  const auto t = BivariateElement::t_power(1);
  const auto one_minus_q = R(P({1, -1}));
  auto k2 = (BivariateElement(1) - t) * (BivariateElement(1) - t / RationalFunctionQ::q()) / (one_minus_q * one_minus_q);
  EXPECT_TRUE(bivar_equal(q_falling(2), k2));
}

TEST(QCore, QBinomX) {
  EXPECT_TRUE(q_binom_x(0).is_one());
  EXPECT_TRUE(bivar_equal(q_binom_x(1), x_q()));
  EXPECT_TRUE(bivar_equal(q_binom_x(2), q_falling(2) / RationalFunctionQ(P({1, 1}))));
  // At x = n it reduces to the Gaussian binomial.
  for (int n = 0; n <= 5; ++n)
    for (int k = 0; k <= 4; ++k) EXPECT_EQ(q_binom_x(k).specialize(n), RationalFunctionQ(gauss_binom(n, k)));
}

TEST(QCore, QDifference) {
  std::vector<RationalFunctionQ> ab{R(P({0, 3})), R(P({5}))};
  EXPECT_EQ(q_difference<RationalFunctionQ>(ab, 1), ab[1] - ab[0]);
  EXPECT_EQ(q_difference<RationalFunctionQ>(std::span(ab).first(1), 0), ab[0]);
  std::vector<RationalFunctionQ> sq;
  for (int j = 0; j <= 2; ++j) sq.push_back(RationalFunctionQ(q_int(j) * q_int(j)));
  RationalFunctionQ two = RationalFunctionQ(q_int(2));
  EXPECT_EQ(q_difference<RationalFunctionQ>(sq, 2), two * two - two);
  EXPECT_THROW(q_difference<RationalFunctionQ>(ab, 2), ArityError);
}

TEST(QCore, NewtonReconstruct) {
  std::vector<RationalFunctionQ> lin{0, 1};
  EXPECT_EQ(newton_reconstruct(lin, 3), RationalFunctionQ(q_int(3)));
  std::vector<RationalFunctionQ> c{7, 7, 7};
  EXPECT_EQ(newton_reconstruct(c, 5), RationalFunctionQ(7));
  std::vector<RationalFunctionQ> sq{0, 1, RationalFunctionQ(q_int(2).pow(2))};
  EXPECT_EQ(newton_reconstruct(sq, 4), RationalFunctionQ(q_int(4).pow(2)));
}

TEST(QCore, NewtonReconstructPowers) {
  for (int m = 0; m <= 5; ++m) {
    std::vector<RationalFunctionQ> samples;
    for (int j = 0; j <= m; ++j) samples.push_back(RationalFunctionQ(q_int(j).pow(static_cast<unsigned>(m))));
    for (int x0 = 0; x0 <= 8; ++x0) {
      EXPECT_EQ(newton_reconstruct(samples, x0), RationalFunctionQ(q_int(x0).pow(static_cast<unsigned>(m))));
    }
  }
}

TEST(QCore, SubstitutionConsistency) {
  const Rational q0s[] = {2, ratio(1, 3), -3};
  for (const auto& q0 : q0s) {
    for (int x0 = 0; x0 <= 4; ++x0) {
      EXPECT_EQ(eval_point(x_q(), x0, q0), qnum(x0, q0));
      EXPECT_EQ(eval_point(one_minus_x_q(), x0, q0), qnum(1 - x0, q0));
      for (int k = 0; k <= 3; ++k) {
        Rational falling = 1;
        for (int i = 0; i < k; ++i) falling *= qnum(x0 - i, q0);
        EXPECT_EQ(eval_point(q_falling(k), x0, q0), falling);
      }
    }
  }
}

}  // namespace
}  // namespace qcalc
