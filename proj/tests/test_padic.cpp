#include <gtest/gtest.h>

#include "qcalc/bernoulli.hpp"
#include "qcalc/errors.hpp"
#include "qcalc/padic.hpp"
#include "qcalc/qcore.hpp"

namespace qcalc {
namespace {

PadicValue Z(std::uint64_t p, long x, int prec) { return PadicValue::from_integer(p, x, prec); }

int rational_valuation(const Rational& x, unsigned long p) {
  return valuation(x.get_num(), p) - valuation(x.get_den(), p);
}

TEST(Padic, Arithmetic) {
  EXPECT_TRUE(padic_arith(Z(3, 13, 3), Z(3, 14, 3), PadicOp::add).is_zero());
  EXPECT_EQ(padic_arith(Z(3, 2, 3), Z(3, 0, 3), PadicOp::inv).residue(), 14U);
  EXPECT_THROW(padic_arith(Z(3, 3, 3), Z(3, 0, 3), PadicOp::inv), NonUnit);
  EXPECT_EQ(padic_arith(Z(3, 2, 3), Z(3, 0, 3), PadicOp::pow, 3).residue(), 8U);
  EXPECT_EQ(padic_arith(Z(3, 2, 3), Z(3, 0, 3), PadicOp::pow, -1).residue(), 14U);
  EXPECT_EQ(padic_arith(Z(3, 5, 3), Z(3, 7, 3), PadicOp::mul).residue(), 8U);
  EXPECT_EQ(padic_arith(Z(3, 5, 3), Z(3, 7, 3), PadicOp::sub).residue(), 25U);
}

TEST(Padic, PrecisionIsMinimum) {
  auto s = Z(3, 1, 5) + Z(3, 1, 3);
  EXPECT_EQ(s.precision(), 3);
  // x * (p^2 u) keeps absolute precision 2 + min relative precisions
  auto m = Z(3, 2, 4) * Z(3, 9, 4);
  EXPECT_EQ(m.valuation().value, 2);
  EXPECT_LE(m.precision(), 4 + 2);
}

TEST(Padic, Valuation) {
  EXPECT_EQ(Z(3, 18, 5).valuation().value, 2);
  EXPECT_FALSE(Z(3, 18, 5).valuation().at_least);
  auto zero = PadicValue::zero(3, 5);
  EXPECT_TRUE(zero.valuation().at_least);
  EXPECT_EQ(zero.valuation().to_string(), "≥ 5");
  EXPECT_EQ(Z(3, 7, 5).valuation().value, 0);
}

TEST(Padic, Rationals) {
  auto x = PadicValue::from_rational(3, ratio(-1, 5), 4);
  EXPECT_EQ((x * Z(3, 5, 4)).residue(), 80U);  // -1 mod 81
  auto y = PadicValue::from_rational(3, ratio(1, 9), 4);
  EXPECT_EQ(y.valuation().value, -2);
  EXPECT_THROW(y.residue(), NonUnit);
  EXPECT_EQ(y.residue_string(), "1/3^2");
}

TEST(Padic, WorkingRange) {
  // 3^40 exceeds the 2^62 residue window.
  EXPECT_THROW(make_padic_context(3, 40, 4), InadmissibleContext);
}

TEST(Padic, Admissibility) {
  EXPECT_NO_THROW(make_padic_context(3, 8, 4));
  EXPECT_NO_THROW(make_padic_context(5, 6, ratio(6, 11)));
  EXPECT_THROW(make_padic_context(3, 8, 3), InadmissibleContext);   // not a unit
  EXPECT_THROW(make_padic_context(3, 8, 2), InadmissibleContext);   // v_3(q-1) = 0
  EXPECT_THROW(make_padic_context(3, 8, 1), InadmissibleContext);   // excluded
  EXPECT_THROW(make_padic_context(2, 8, 5), InadmissibleContext);   // odd primes only
  EXPECT_THROW(make_padic_context(9, 4, 10), InadmissibleContext);  // not prime
  EXPECT_THROW(make_padic_context(3, 0, 4), InadmissibleContext);
  EXPECT_THROW(make_padic_context(3, 8, ratio(4, 3)), InadmissibleContext);
}

TEST(Padic, QNumberOfPrimePowerHasValuationN) {
  const std::vector<std::pair<std::uint64_t, Rational>> contexts{{3, 4}, {3, 7}, {3, ratio(4, 7)}, {5, 6}, {7, 8}};
  for (const auto& [p, q] : contexts) {
    for (int level = 0; level <= 8 && (p < 5 || level <= 5); ++level) {
      // [p^level]_q as an exact rational
      Integer pl = 1;
      for (int i = 0; i < level; ++i) pl *= static_cast<unsigned long>(p);
      Rational qp;
      mpz_pow_ui(qp.get_num_mpz_t(), q.get_num_mpz_t(), pl.get_ui());
      mpz_pow_ui(qp.get_den_mpz_t(), q.get_den_mpz_t(), pl.get_ui());
      qp.canonicalize();
      EXPECT_EQ(rational_valuation((qp - 1) / (q - 1), p), level) << p << " " << q << " " << level;
    }
  }
  EXPECT_EQ(rational_valuation(Rational((Integer(1) << 18) - 1) / 3, 3), 2);  // [9]_4
}

TEST(Padic, RiemannConstant) {
  auto ctx = make_padic_context(3, 8, 4);
  for (int level = 1; level <= 7; ++level) {
    auto v = riemann_integral(ctx, IntegrandSpec::constant(), level);
    EXPECT_EQ(agreement(v, ctx.embed(1)).to_string(), "≥ 8");
    EXPECT_EQ(v.residue(), 1U);
  }
}

TEST(Padic, RiemannApproachesBeta) {
  auto ctx = make_padic_context(3, 8, 4);
  const auto target = ctx.embed(ratio(-1, 5));
  EXPECT_EQ(ratfun_eval(beta(1), 4), ratio(-1, 5));
  auto a5 = agreement(riemann_integral(ctx, IntegrandSpec::power_xq(1), 5), target);
  auto a6 = agreement(riemann_integral(ctx, IntegrandSpec::power_xq(1), 6), target);
  EXPECT_GE(a5.value, 4);
  EXPECT_GT(a6.value, a5.value);
}

TEST(Padic, PowerProfilesAreMonotone) {
  auto ctx = make_padic_context(3, 8, 4);
  int worst_gap = 0;
  for (int n = 0; n <= 4; ++n) {
    auto rows = convergence_profile(ctx, IntegrandSpec::power_xq(n), 3, 7, ratfun_eval(beta(n), 4));
    for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_GE(rows[i].agreement->value, rows[i - 1].agreement->value);
    for (const auto& r : rows) {
      if (!r.agreement->at_least) worst_gap = std::max(worst_gap, r.level - r.agreement->value);
    }
    EXPECT_GE(rows.back().agreement->value, 5);
  }
  // agreement >= level - c with c measured here
  EXPECT_LE(worst_gap, 1);
}

TEST(Padic, MomentProfiles) {
  auto ctx = make_padic_context(3, 8, 4);
  for (int m = 0; m <= 6; ++m) {
    auto rows = convergence_profile(ctx, IntegrandSpec::qpow(m), 3, 8, ratfun_eval(moment(m), 4));
    for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_GE(rows[i].agreement->value, rows[i - 1].agreement->value);
    EXPECT_GE(rows.back().agreement->value, 6) << m;
  }
  auto rows = convergence_profile(ctx, IntegrandSpec::qpow(2), 3, 6, ratio(3, 21));
  ASSERT_EQ(rows.size(), 4U);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_GE(rows[i].agreement->value, rows[i - 1].agreement->value);
}

TEST(Padic, ZeroPowerIsExact) {
  auto ctx = make_padic_context(3, 8, 4);
  for (const auto& r : convergence_profile(ctx, IntegrandSpec::power_xq(0), 1, 6, Rational(1))) {
    EXPECT_TRUE(r.agreement->at_least);
    EXPECT_EQ(r.agreement->to_string(), "≥ 8");
  }
}

TEST(Padic, QBinomProfile) {
  auto ctx = make_padic_context(3, 8, 4);
  auto rows = convergence_profile(ctx, IntegrandSpec::qbinom_x(1), 7, 7, ratfun_eval(beta(1), 4));
  EXPECT_GE(rows[0].agreement->value, 6);
  auto r2 = convergence_profile(ctx, IntegrandSpec::qbinom_x(2), 7, 7, ratfun_eval(integrate_exact(q_binom_x(2)), 4));
  EXPECT_GE(r2[0].agreement->value, 5);
}

TEST(Padic, CustomSamplesMatchTag) {
  auto ctx = make_padic_context(3, 6, 4);
  std::vector<Rational> samples;
  Rational qx = 1;
  for (int x = 0; x < 81; ++x) {
    samples.push_back((1 - qx) / (1 - Rational(4)));
    qx *= 4;
  }
  EXPECT_EQ(agreement(riemann_integral(ctx, IntegrandSpec::custom(samples), 4),
                      riemann_integral(ctx, IntegrandSpec::power_xq(1), 4))
                .to_string(),
            "≥ 6");
}

TEST(Padic, TailSums) {
  auto ctx = make_padic_context(3, 6, 4);
  auto zero = truncated_tail_sum(ctx, [&](int) { return PadicValue::zero(3, 6); }, 1);
  EXPECT_TRUE(zero.value.is_zero());
  auto geo = truncated_tail_sum(ctx, [&](int m) { return ctx.embed(3).pow(m); }, 1);
  EXPECT_EQ(geo.cutoff, 6);
  // 1/(1-3) = -1/2
  EXPECT_EQ(agreement(geo.value, ctx.embed(ratio(-1, 2))).to_string(), "≥ 6");
  EXPECT_THROW(truncated_tail_sum(ctx, [&](int) { return ctx.embed(1); }, 0), DivergentTail);
  EXPECT_THROW(riemann_integral(ctx, IntegrandSpec::constant(), 0), IndexError);
}

TEST(Padic, TailSumOrderIndependence) {
  auto ctx = make_padic_context(3, 8, 4);
  auto term = [&](int m) { return ctx.embed(Rational(m + 1) * Rational(Integer(3) * m + 1) / 7) * ctx.embed(3).pow(m); };
  auto forward = truncated_tail_sum(ctx, term, 1);
  PadicValue backward = PadicValue::zero(3, 8);
  for (int m = forward.cutoff - 1; m >= 0; --m) backward += term(m);
  EXPECT_EQ(agreement(forward.value, backward).to_string(), "≥ 8");
}

TEST(Padic, BernsteinSeriesSides) {
  // (k, n) = (1, 2): Riemann sum of B_{1,2} against the series in Carlitz numbers.
  auto ctx = make_padic_context(3, 8, 4);
  const int k = 1, n = 2;
  std::vector<Rational> b;
  int offset = 0;
  for (int j = 0; j <= 40; ++j) {
    b.push_back(beta_at(j, 4));
    if (sgn(b.back()) != 0) offset = std::min(offset, rational_valuation(b.back(), 3));
  }
  auto term = [&](int m) {
    Rational acc = 0;
    Rational qm1 = 1;
    for (int i = 0; i < m; ++i) qm1 *= 3;
    for (int l = 0; l <= n - k; ++l) {
      Rational c = Rational(binomial(l + m - 1, m) * binomial(n - k, l));
      if ((l + m) % 2) c = -c;
      Rational ql = l ? Rational(4) : Rational(1);
      acc += c * ql * qm1 * b[static_cast<std::size_t>(l + m + k)];
    }
    return ctx.embed(acc, -offset);
  };
  auto rhs = truncated_tail_sum(ctx, term, 1, offset).value;
  auto lhs = riemann_integral(ctx, IntegrandSpec::bernstein(k, n), 8);
  // Agreement holds once the binomial weight C(n,k) = 2 multiplies the series.
  EXPECT_GE(agreement(lhs, rhs * ctx.embed(2)).value, 6);
  EXPECT_LT(agreement(lhs, rhs).value, 6);
}

}  // namespace
}  // namespace qcalc
