#include <gtest/gtest.h>

#include <thread>

#include "helpers.hpp"
#include "qcalc/bernoulli.hpp"
#include "qcalc/errors.hpp"
#include "qcalc/qcore.hpp"

namespace qcalc {
namespace {

using testing::P;
using testing::R;

// Classical B_n from sum_{j<=n} C(n+1,j) B_j = [n=0].
std::vector<Rational> classical_bernoulli(int max_n) {
  std::vector<Rational> b;
  for (int n = 0; n <= max_n; ++n) {
    Rational acc = n == 0 ? 1 : 0;
    for (int j = 0; j < n; ++j) acc -= Rational(binomial(n + 1, j)) * b[static_cast<std::size_t>(j)];
    b.push_back(acc / (n + 1));
  }
  return b;
}

TEST(Bernoulli, ClassicalOracleSanity) {
  auto b = classical_bernoulli(4);
  EXPECT_EQ(b[1], ratio(-1, 2));
  EXPECT_EQ(b[2], ratio(1, 6));
  EXPECT_EQ(b[4], ratio(-1, 30));
}

TEST(Bernoulli, Values) {
  EXPECT_TRUE(beta(0).is_one());
  EXPECT_EQ(beta(1), R(P({-1}), P({1, 1})));
  EXPECT_EQ(beta(2), R(P({0, 1}), q_int(2) * q_int(3)));
  EXPECT_EQ(ratfun_eval(beta(2), 1), ratio(1, 6));
}

TEST(Bernoulli, DualRoute) {
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(beta(n), beta_via_moments(n)) << n;
}

TEST(Bernoulli, ClassicalLimit) {
  auto b = classical_bernoulli(10);
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(ratfun_eval(beta(n), 1), b[static_cast<std::size_t>(n)]) << n;
}

TEST(Bernoulli, BetaAtMatchesEvaluation) {
  for (int n = 0; n <= 8; ++n) {
    EXPECT_EQ(beta_at(n, 4), ratfun_eval(beta(n), 4));
    EXPECT_EQ(beta_at(n, ratio(2, 3)), ratfun_eval(beta(n), ratio(2, 3)));
  }
}

TEST(Bernoulli, Moments) {
  EXPECT_TRUE(moment(0).is_one());
  EXPECT_EQ(moment(1), R(P({2}), P({1, 1})));
  EXPECT_THROW(moment(-1), LogarithmicMoment);
}

TEST(Bernoulli, MomentIdentity) {
  const RationalFunctionQ qm1 = R(P({-1, 1}));
  for (int n = 0; n <= 10; ++n) {
    RationalFunctionQ rhs;
    for (int m = 0; m <= n; ++m) rhs += RationalFunctionQ(Rational(binomial(n, m))) * qm1.pow(m) * beta(m);
    EXPECT_EQ(RationalFunctionQ(n + 1) / RationalFunctionQ(q_int(n + 1)), rhs) << n;
  }
}

TEST(Bernoulli, IntegrateExact) {
  EXPECT_EQ(integrate_exact(x_q()), beta(1));
  EXPECT_TRUE(integrate_exact(BivariateElement(1)).is_one());
  EXPECT_EQ(integrate_exact(BivariateElement::t_power(2)), R(P({3}), q_int(3)));
  EXPECT_THROW(integrate_exact(BivariateElement::t_power(-1)), LogarithmicMoment);
  EXPECT_THROW(integrate_exact(BivariateElement(1) / (BivariateElement::t_power(1) + 1)), NotIntegrable);
}

TEST(Bernoulli, HigherOrder) {
  EXPECT_TRUE(beta_order(0, 1).is_one());
  EXPECT_EQ(beta_order(1, 1), beta(1));
  EXPECT_EQ(beta_order(2, 1), beta(2));
  // n = 0 leaves k!/([k]_q...[1]_q)
  for (int k = 1; k <= 4; ++k) {
    EXPECT_EQ(beta_order(0, k), RationalFunctionQ(Rational(factorial(k))) / RationalFunctionQ(q_factorial(k)));
  }
}

TEST(Bernoulli, InverseOrder) {
  EXPECT_TRUE(beta_inverse_order(0, 1).is_one());
  EXPECT_EQ(beta_inverse_order(0, 2), R(P({1, 1})) / RationalFunctionQ(2));
  RationalFunctionQ two_term = (RationalFunctionQ(q_int(1)) - RationalFunctionQ(q_int(2)) / RationalFunctionQ(2)) / R(P({1, -1}));
  EXPECT_EQ(beta_inverse_order(1, 1), two_term);
}

TEST(Bernoulli, FromInverse) {
  EXPECT_TRUE(s2_from_inverse(0, 0).is_one());
  // 2 [1]_q! (1-q)^{-1} (1 - [2]_q/2)
  EXPECT_EQ(s2_from_inverse(1, 1),
            RationalFunctionQ(2) * (RationalFunctionQ(1) - R(q_int(2)) / RationalFunctionQ(2)) / R(P({1, -1})));
}

TEST(Bernoulli, NormalForm) {
  for (int n = 0; n <= 8; ++n) {
    auto b = beta(n);
    EXPECT_EQ(b.denom().lead(), 1);
    EXPECT_EQ(ratfun_normalize(b.numer(), b.denom()), b);
  }
}

TEST(Bernoulli, CacheIsOrderIndependent) {
  BernoulliCache descending, concurrent;
  std::vector<RationalFunctionQ> down(9);
  for (int n = 8; n >= 0; --n) down[static_cast<std::size_t>(n)] = descending.beta(n);
  std::vector<std::thread> workers;
  std::vector<RationalFunctionQ> par(9);
  for (int n = 0; n <= 8; ++n) workers.emplace_back([&, n] { par[static_cast<std::size_t>(n)] = concurrent.beta(n); });
  for (auto& w : workers) w.join();
  for (int n = 0; n <= 8; ++n) {
    EXPECT_EQ(down[static_cast<std::size_t>(n)], beta(n));
    EXPECT_EQ(par[static_cast<std::size_t>(n)], beta(n));
  }
}

}  // namespace
}  // namespace qcalc
