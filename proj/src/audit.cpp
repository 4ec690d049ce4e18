#include "qcalc/audit.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "qcalc/bernoulli.hpp"
#include "qcalc/bernstein.hpp"
#include "qcalc/errors.hpp"
#include "qcalc/qcore.hpp"
#include "qcalc/serialize.hpp"
#include "qcalc/stirling.hpp"

namespace qcalc {

namespace {

using RF = RationalFunctionQ;
using BV = BivariateElement;
using Value = std::variant<std::monostate, RF, BV, PadicValue>;

struct Evaluation {
  std::optional<std::string> malformed;
  Value lhs;
  Value rhs;
};

struct Env {
  const PadicContext* ctx = nullptr;
};

using Evaluator = std::function<Evaluation(const std::string& variant, const Params&, const Env&)>;
using TupleGen = std::function<std::vector<Params>(int bound)>;

struct Claim {
  std::string label;
  std::vector<std::string> variants;  // {""} when the label has a single reading
  AuditMode mode;
  int bound;
  std::string anchor;
  TupleGen tuples;
  Evaluator eval;
};

int get(const Params& params, const std::string& name) {
  for (const auto& [k, v] : params) {
    if (k == name) return v;
  }
  throw IndexError("missing parameter '" + name + "'");
}

RF q_minus_one() { return RF(PolyQ(std::vector<Rational>{-1, 1})); }
RF one_minus_q() { return RF(PolyQ(std::vector<Rational>{1, -1})); }
RF r(const Integer& z) { return RF(Rational(z)); }
RF sign(int e) { return RF(e % 2 == 0 ? 1 : -1); }
BV bv(const RF& f) { return BV(f); }

FirstKind first_kind(const std::string& variant) {
  return variant.find("signed") != std::string::npos ? FirstKind::signed_product : FirstKind::generating;
}

RF s1(const std::string& variant, int n, int k) { return RF(s1_value(first_kind(variant), n, k)); }

// S_2 with a negative index is 0.
RF s2(int n, int k) { return (n < 0 || k < 0) ? RF() : s2_explicit(n, k); }

// sum_k q^{C(k,2)} binom(x,k)_q [k]_q! c_k for the given coefficients.
BV falling_sum(const std::vector<RF>& coeffs) {
  BV acc;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    const int ki = static_cast<int>(k);
    acc += q_binom_x(ki) * bv(q_pow_binom2(ki) * RF(q_factorial(ki)) * coeffs[k]);
  }
  return acc;
}

// ---------------------------------------------------------------- tuples

std::vector<Params> single(const std::string& name, int lo, int hi) {
  std::vector<Params> out;
  for (int v = lo; v <= hi; ++v) out.push_back({{name, v}});
  return out;
}

// (a, b) with a in [a_lo, hi] and b in [b_lo(a), b_hi(a)].
std::vector<Params> pairs(const std::string& a, int a_lo, int hi, const std::string& b,
                          const std::function<int(int)>& b_lo, const std::function<int(int)>& b_hi) {
  std::vector<Params> out;
  for (int x = a_lo; x <= hi; ++x) {
    for (int y = b_lo(x); y <= b_hi(x); ++y) out.push_back({{a, x}, {b, y}});
  }
  return out;
}

std::function<int(int)> constant_fn(int c) {
  return [c](int) { return c; };
}
const std::function<int(int)> identity_fn = [](int x) { return x; };

// ---------------------------------------------------------------- p-adic helpers

constexpr int kGuard = 4;

std::vector<Rational> carlitz_at(int upto, const Rational& q0) {
  std::vector<Rational> b{Rational(1)};
  for (int m = 1; m <= upto; ++m) {
    Rational acc = 0;
    Rational qj = 1;
    for (int j = 0; j < m; ++j) {
      acc += Rational(binomial(m, j)) * qj * b[static_cast<std::size_t>(j)];
      qj *= q0;
    }
    b.push_back((Rational(m == 1 ? 1 : 0) - q0 * acc) / (qj * q0 - 1));
  }
  return b;
}

int padic_valuation(const Rational& x, std::uint64_t p) {
  if (sgn(x) == 0) return 1 << 20;
  return valuation(x.get_num(), p) - valuation(x.get_den(), p);
}

Rational rpow(const Rational& x, int e) {
  Rational out = 1;
  for (int i = 0; i < e; ++i) out *= x;
  return out;
}

Rational q_int_at(int n, const Rational& q0) {
  // [n]_q = (1 - q^n)/(1 - q), valid for any integer n when q0 != 1.
  Rational qn = n >= 0 ? rpow(q0, n) : 1 / rpow(q0, -n);
  return (1 - qn) / (1 - q0);
}

struct TailContext {
  PadicContext work;  // precision N + guard
  int rate = 1;
};

TailContext tail_context(const PadicContext& ctx) {
  TailContext tc{ctx, 1};
  tc.work.precision = ctx.precision + kGuard;
  tc.rate = padic_valuation(ctx.q - 1, ctx.p);
  return tc;
}

PadicValue tail_sum(const PadicContext& ctx, const std::function<Rational(int)>& term, int offset) {
  TailContext tc = tail_context(ctx);
  auto t = truncated_tail_sum(
      tc.work, [&](int m) { return tc.work.embed(term(m)); }, tc.rate, offset);
  return t.value.with_precision(ctx.precision);
}

// ---------------------------------------------------------------- registry

std::vector<Claim> build_registry() {
  std::vector<Claim> reg;
  const std::vector<std::string> kinds{"gen-S1", "signed-S1"};

  reg.push_back({"EQ4_NEWTON", {""}, AuditMode::exact_Qq, 5,
                 "Newton series in q-binomials of x with q-differences at 0, for f(x) = [x]_q^m",
                 [](int b) { return pairs("m", 0, b, "x", constant_fn(0), constant_fn(8)); },
                 [](const std::string&, const Params& ps, const Env&) {
                   const int m = get(ps, "m"), x = get(ps, "x");
                   std::vector<RF> values;
                   for (int j = 0; j <= m + 1; ++j) values.push_back(RF(q_int(j)).pow(m));
                   return Evaluation{{}, newton_reconstruct(values, x), RF(q_int(x)).pow(m)};
                 }});

  reg.push_back({"EQ8_VS_DELTA", {""}, AuditMode::exact_Qq, 10,
                 "S_2 by the explicit alternating sum against q^{-C(k,2)}/[k]_q! Delta_q^k 0^n",
                 [](int b) { return pairs("n", 0, b, "k", constant_fn(0), [b](int) { return b; }); },
                 [](const std::string&, const Params& ps, const Env&) {
                   const int n = get(ps, "n"), k = get(ps, "k");
                   std::vector<RF> values;
                   for (int j = 0; j <= k; ++j) values.push_back(RF(q_int(j)).pow(n));
                   RF lhs = s2_explicit(n, k) * RF(q_factorial(k)) * q_pow_binom2(k);
                   return Evaluation{{}, lhs, q_difference<RF>(values, k)};
                 }});

  reg.push_back({"EQ7_CONVOLUTION", {"duality", "vs-explicit"}, AuditMode::exact_Qq, 6,
                 "Taylor coefficients of prod 1/(1+[k]_q z): convolution with S_1, and equality with explicit S_2",
                 [](int b) { return pairs("n", 0, b, "k", constant_fn(0), identity_fn); },
                 [](const std::string& variant, const Params& ps, const Env&) {
                   const int n = get(ps, "n"), k = get(ps, "k");
                   std::vector<RF> inv = s2_gen(n, k);
                   if (variant == "duality") {
                     std::vector<PolyQ> gen = s1_gen(n);
                     RF acc;
                     for (int j = 0; j <= std::min(k, n); ++j) {
                       acc += RF(gen[static_cast<std::size_t>(j)]) * inv[static_cast<std::size_t>(k - j)];
                     }
                     return Evaluation{{}, acc, RF(k == 0 ? 1 : 0)};
                   }
                   return Evaluation{{}, inv[static_cast<std::size_t>(k)], s2_explicit(n, k)};
                 }});

  reg.push_back({"EQ9_PADIC", {""}, AuditMode::padic, 4,
                 "[1-x]_q^{n-k} as a double series in [x]_q and (q-1), evaluated at integer x",
                 [](int b) {
                   std::vector<Params> out;
                   for (int n = 0; n <= b; ++n)
                     for (int k = 0; k <= n; ++k)
                       for (int x = 0; x <= 3; ++x) out.push_back({{"n", n}, {"k", k}, {"x", x}});
                   return out;
                 },
                 [](const std::string&, const Params& ps, const Env& env) {
                   const PadicContext& ctx = *env.ctx;
                   const int n = get(ps, "n"), k = get(ps, "k"), x = get(ps, "x");
                   const int e = n - k;
                   const Rational X = q_int_at(x, ctx.q);
                   const Rational Y = q_int_at(1 - x, ctx.q);
                   auto term = [&](int m) {
                     Rational acc = 0;
                     for (int l = 0; l <= e; ++l) {
                       Rational c = Rational(binomial(l + m - 1, m) * binomial(e, l));
                       if (sgn(c) == 0) continue;
                       if ((l + m) % 2 == 1) c = -c;
                       acc += c * rpow(ctx.q, l) * rpow(X, l + m) * rpow(ctx.q - 1, m);
                     }
                     return acc;
                   };
                   PadicValue lhs = ctx.embed(rpow(Y, e));
                   return Evaluation{{}, lhs, tail_sum(ctx, term, 0)};
                 }});

  reg.push_back({"EQ10", {""}, AuditMode::bivariate_Qqt, 8,
                 "[x]_q^n = sum_k q^{C(k,2)} binom(x,k)_q [k]_q! S_2(n,k)",
                 [](int b) { return single("n", 0, b); },
                 [](const std::string&, const Params& ps, const Env&) {
                   auto [lhs, rhs] = power_to_falling(get(ps, "n"));
                   return Evaluation{{}, lhs, rhs};
                 }});

  reg.push_back({"EQ11", {""}, AuditMode::bivariate_Qqt, 8,
                 "weighted Bernstein sum over ([x]_q+[1-x]_q)^{n-i} equals [x]_q^i",
                 [](int b) { return pairs("i", 1, b, "n", identity_fn, [b](int) { return b; }); },
                 [](const std::string&, const Params& ps, const Env&) {
                   const int i = get(ps, "i"), n = get(ps, "n");
                   return Evaluation{{}, partition_lhs(i, n), x_q().pow(i)};
                 }});

  reg.push_back({"EQ12_THM2_PADIC", {""}, AuditMode::padic, 4,
                 "beta_i as a quadruple series over m, k, l, r of Carlitz numbers (summation index renamed r)",
                 [](int b) { return pairs("i", 1, b, "n", identity_fn, [b](int) { return b; }); },
                 [](const std::string&, const Params& ps, const Env& env) -> Evaluation {
                   const PadicContext& ctx = *env.ctx;
                   const int i = get(ps, "i"), n = get(ps, "n");
                   if (n > i) {
                     // m = n+1, k = i, l = r = 0 carries coefficient C(2n-i, n+1) != 0 on beta_{-1}.
                     const int m = n + 1;
                     return Evaluation{"beta index n-i-m+k+r+l = -1 at (m=" + std::to_string(m) + ", k=" +
                                           std::to_string(i) + ", l=0, r=0) with coefficient " +
                                           binomial(2 * n - i, m).get_str() +
                                           "; the m-sum has no (q-1)^m factor and does not converge p-adically",
                                       {}, {}};
                   }
                   const int cap = n + ctx.precision + 2 * kGuard + 8;
                   const std::vector<Rational> b = carlitz_at(cap, ctx.q);
                   int offset = 0;
                   for (const auto& v : b) offset = std::min(offset, padic_valuation(v, ctx.p));
                   const Rational ci = Rational(binomial(n, i));
                   // n == i: only m = 0 survives since C(m-1, m) = 0 for m >= 1.
                   auto term = [&](int rr) {
                     Rational acc = 0;
                     for (int k = i - 1; k <= n; ++k) {
                       const Rational w = Rational(binomial(k, i) * binomial(n, k)) / ci;
                       if (sgn(w) == 0) continue;
                       for (int l = 0; l <= n - k; ++l) {
                         Rational c = w * Rational(binomial(l + rr - 1, rr) * binomial(n - k, l));
                         if (sgn(c) == 0) continue;
                         if ((l + rr) % 2 == 1) c = -c;
                         const int idx = n - i + k + rr + l;
                         if (idx >= static_cast<int>(b.size())) throw PrecisionExhausted("Carlitz table too short");
                         acc += c * rpow(ctx.q, l) * rpow(ctx.q - 1, rr) * b[static_cast<std::size_t>(idx)];
                       }
                     }
                     return acc;
                   };
                   return Evaluation{{}, ctx.embed(b[static_cast<std::size_t>(i)]), tail_sum(ctx, term, offset)};
                 }});

  reg.push_back({"EQ13", {""}, AuditMode::bivariate_Qqt, 6,
                 "weighted Bernstein sum equals sum_k q^{C(k,2)} binom(x,k)_q [k]_q! S_2(i,k)",
                 [](int b) { return pairs("i", 1, b, "n", identity_fn, [b](int) { return b; }); },
                 [](const std::string&, const Params& ps, const Env&) {
                   const int i = get(ps, "i"), n = get(ps, "n");
                   std::vector<RF> c;
                   for (int k = 0; k <= i; ++k) c.push_back(s2(i, k));
                   return Evaluation{{}, partition_lhs(i, n), falling_sum(c)};
                 }});

  reg.push_back({"EQ14", {""}, AuditMode::exact_Qq, 6,
                 "integral of binom(x,n)_q equals (-1)^n q^{(n+1)-C(n+1,2)}/[n+1]_q",
                 [](int b) { return single("n", 0, b); },
                 [](const std::string&, const Params& ps, const Env&) {
                   const int n = get(ps, "n");
                   RF rhs = sign(n) * RF::q_power(n + 1) / q_pow_binom2(n + 1) / RF(q_int(n + 1));
                   return Evaluation{{}, integrate_exact(q_binom_x(n)), rhs};
                 }});

  reg.push_back({"POST14_COROLLARY", {""}, AuditMode::exact_Qq, 5,
                 "beta_n = q sum_{k<=m} [k]_q!/[k+1]_q (-1)^k S_2(k,n-k) with m free",
                 [](int b) {
                   std::vector<Params> out{Params{}};
                   auto rest = pairs("n", 0, b, "m", constant_fn(0), [b](int) { return b; });
                   out.insert(out.end(), rest.begin(), rest.end());
                   return out;
                 },
                 [](const std::string&, const Params& ps, const Env&) -> Evaluation {
                   if (ps.empty()) return Evaluation{"upper summation limit m is not bound by the statement", {}, {}};
                   const int n = get(ps, "n"), m = get(ps, "m");
                   RF acc;
                   for (int k = 0; k <= m; ++k) {
                     acc += sign(k) * RF(q_factorial(k)) / RF(q_int(k + 1)) * s2(k, n - k);
                   }
                   return Evaluation{{}, beta(n), RF::q() * acc};
                 }});

  reg.push_back({"EQ15_VS_EQ8", {""}, AuditMode::exact_Qq, 6,
                 "S_2 by (1-q)^{-k} sum (-1)^{k-j} C(k+n,k-j) binom(j+n,j)_q against the explicit sum",
                 [](int b) { return pairs("n", 0, b, "k", constant_fn(0), [b](int) { return b; }); },
                 [](const std::string&, const Params& ps, const Env&) {
                   const int n = get(ps, "n"), k = get(ps, "k");
                   return Evaluation{{}, s2_alt(n, k), s2_explicit(n, k)};
                 }});

  reg.push_back({"POST15_QBINOM", {""}, AuditMode::exact_Qq, 6,
                 "binom(n,k)_q = sum_j C(n,j) (q-1)^{j-k} S_2(k,j-k)",
                 [](int b) { return pairs("n", 0, b, "k", constant_fn(0), identity_fn); },
                 [](const std::string&, const Params& ps, const Env&) {
                   const int n = get(ps, "n"), k = get(ps, "k");
                   RF acc;
                   for (int j = 0; j <= n; ++j) {
                     RF c = s2(k, j - k);
                     if (c.is_zero()) continue;
                     acc += r(binomial(n, j)) * q_minus_one().pow(j - k) * c;
                   }
                   return Evaluation{{}, RF(gauss_binom(n, k)), acc};
                 }});

  reg.push_back({"EQ16", {"middle", "right-gen-S1", "right-signed-S1"}, AuditMode::bivariate_Qqt, 6,
                 "q^{nx} through q-falling factorials, and regrouped in powers of [x]_q with S_1",
                 [](int b) { return single("n", 0, b); },
                 [](const std::string& variant, const Params& ps, const Env&) {
                   const int n = get(ps, "n");
                   BV acc;
                   if (variant == "middle") {
                     for (int k = 0; k <= n; ++k) {
                       acc += q_falling(k) * bv(q_minus_one().pow(k) * q_pow_binom2(k) * RF(gauss_binom(n, k)));
                     }
                   } else {
                     for (int m = 0; m <= n; ++m) {
                       RF c;
                       for (int k = m; k <= n; ++k) {
                         c += q_minus_one().pow(k) * RF(gauss_binom(n, k)) * s1(variant, k, m);
                       }
                       acc += x_q().pow(m) * bv(c);
                     }
                   }
                   return Evaluation{{}, q_pow_x(n), acc};
                 }});

  reg.push_back({"EQ17", {""}, AuditMode::exact_Qq, 10,
                 "integral of q^{nx} equals sum_m C(n,m) (q-1)^m beta_m",
                 [](int b) { return single("n", 0, b); },
                 [](const std::string&, const Params& ps, const Env&) {
                   const int n = get(ps, "n");
                   RF acc;
                   for (int m = 0; m <= n; ++m) acc += r(binomial(n, m)) * q_minus_one().pow(m) * beta(m);
                   return Evaluation{{}, moment(n), acc};
                 }});

  reg.push_back({"POST17_QBINOM", kinds, AuditMode::exact_Qq, 6,
                 "binom(n,m)_q = sum_{k>=m} (q-1)^{k-m} binom(n,k)_q S_1(k,m)",
                 [](int b) { return pairs("n", 0, b, "m", constant_fn(0), identity_fn); },
                 [](const std::string& variant, const Params& ps, const Env&) {
                   const int n = get(ps, "n"), m = get(ps, "m");
                   RF acc;
                   for (int k = m; k <= n; ++k) {
                     acc += q_minus_one().pow(k - m) * RF(gauss_binom(n, k)) * s1(variant, k, m);
                   }
                   return Evaluation{{}, RF(gauss_binom(n, m)), acc};
                 }});

  reg.push_back({"THM1_PADIC", {""}, AuditMode::padic, 4,
                 "integral of B_{k,n}(x,q) as a double series in Carlitz numbers",
                 [](int b) { return pairs("n", 0, b, "k", constant_fn(0), identity_fn); },
                 [](const std::string&, const Params& ps, const Env& env) {
                   const PadicContext& ctx = *env.ctx;
                   const int n = get(ps, "n"), k = get(ps, "k");
                   PadicValue lhs = riemann_integral(ctx, IntegrandSpec::bernstein(k, n), ctx.precision);
                   const int cap = n + ctx.precision + 2 * kGuard + 8;
                   const std::vector<Rational> b = carlitz_at(cap, ctx.q);
                   int offset = 0;
                   for (const auto& v : b) offset = std::min(offset, padic_valuation(v, ctx.p));
                   auto term = [&](int m) {
                     Rational acc = 0;
                     for (int l = 0; l <= n - k; ++l) {
                       Rational c = Rational(binomial(l + m - 1, m) * binomial(n - k, l));
                       if (sgn(c) == 0) continue;
                       if ((l + m) % 2 == 1) c = -c;
                       const int idx = l + m + k;
                       if (idx >= static_cast<int>(b.size())) throw PrecisionExhausted("Carlitz table too short");
                       acc += c * rpow(ctx.q, l) * rpow(ctx.q - 1, m) * b[static_cast<std::size_t>(idx)];
                     }
                     return acc;
                   };
                   return Evaluation{{}, lhs, tail_sum(ctx, term, offset)};
                 }});

  reg.push_back({"THM3", kinds, AuditMode::bivariate_Qqt, 6,
                 "B_{k,n}(x,q) rewritten with (q-1)^{m-k} binom(n,m)_q S_1(m,k)",
                 [](int b) { return pairs("n", 0, b, "k", constant_fn(0), identity_fn); },
                 [](const std::string& variant, const Params& ps, const Env&) {
                   const int n = get(ps, "n"), k = get(ps, "k");
                   RF c;
                   for (int m = k; m <= n; ++m) c += q_minus_one().pow(m - k) * RF(gauss_binom(n, m)) * s1(variant, m, k);
                   BV rhs = bv(c) * x_q().pow(k) * one_minus_x_q().pow(n - k);
                   return Evaluation{{}, bernstein(k, n), rhs};
                 }});

  reg.push_back({"EQ18", kinds, AuditMode::bivariate_Qqt, 6,
                 "q^{C(n,2)} binom(x,n)_q [n]_q! = sum_k S_1(n,k) [x]_q^k",
                 [](int b) { return single("n", 0, b); },
                 [](const std::string& variant, const Params& ps, const Env&) {
                   const int n = get(ps, "n");
                   BV lhs = q_binom_x(n) * bv(q_pow_binom2(n) * RF(q_factorial(n)));
                   BV rhs;
                   for (int k = 0; k <= n; ++k) rhs += x_q().pow(k) * bv(s1(variant, n, k));
                   return Evaluation{{}, lhs, rhs};
                 }});

  reg.push_back({"THM4", kinds, AuditMode::bivariate_Qqt, 5,
                 "weighted Bernstein sum equals sum_k sum_{l<=k} S_1(n,l) S_2(i,k) [x]_q^l",
                 [](int b) { return pairs("i", 1, b, "n", identity_fn, [b](int) { return b; }); },
                 [](const std::string& variant, const Params& ps, const Env&) {
                   const int i = get(ps, "i"), n = get(ps, "n");
                   BV rhs;
                   for (int k = 0; k <= i; ++k) {
                     const RF s = s2(i, k);
                     if (s.is_zero()) continue;
                     for (int l = 0; l <= k; ++l) rhs += x_q().pow(l) * bv(s1(variant, n, l) * s);
                   }
                   return Evaluation{{}, partition_lhs(i, n), rhs};
                 }});

  reg.push_back({"COR5", kinds, AuditMode::exact_Qq, 5,
                 "beta_i = sum_k sum_{l<=k} S_1(n,l) S_2(i,k) beta_l with n free",
                 [](int b) {
                   std::vector<Params> out{Params{}};
                   auto rest = pairs("i", 1, b, "n", constant_fn(0), [b](int) { return b; });
                   out.insert(out.end(), rest.begin(), rest.end());
                   return out;
                 },
                 [](const std::string& variant, const Params& ps, const Env&) -> Evaluation {
                   if (ps.empty()) return Evaluation{"n appears on the right but is not bound by the statement", {}, {}};
                   const int i = get(ps, "i"), n = get(ps, "n");
                   RF acc;
                   for (int k = 0; k <= i; ++k) {
                     const RF s = s2(i, k);
                     if (s.is_zero()) continue;
                     for (int l = 0; l <= k; ++l) acc += s1(variant, n, l) * s * beta(l);
                   }
                   return Evaluation{{}, beta(i), acc};
                 }});

  reg.push_back({"EQ19_VS_BETA", {""}, AuditMode::exact_Qq, 8,
                 "order-1 q-Bernoulli number from the factored multiple integral against beta_n",
                 [](int b) { return single("n", 0, b); },
                 [](const std::string&, const Params& ps, const Env&) {
                   const int n = get(ps, "n");
                   return Evaluation{{}, beta_order(n, 1), beta(n)};
                 }});

  reg.push_back({"EQ20_SIGN", {""}, AuditMode::exact_Qq, 5,
                 "inverse-order number with overall sign (-1)^n against the (-1)^j form",
                 [](int b) { return pairs("n", 0, b, "k", constant_fn(1), [b](int) { return b; }); },
                 [](const std::string&, const Params& ps, const Env&) {
                   const int n = get(ps, "n"), k = get(ps, "k");
                   return Evaluation{{}, beta_inverse_order_signed_display(n, k), beta_inverse_order(n, k)};
                 }});

  reg.push_back({"EQ21_INTERNAL", {"line2", "line3", "line4"}, AuditMode::exact_Qq, 5,
                 "successive rewritings of beta^{(-n)}_k compared against the first form",
                 [](int b) { return pairs("k", 0, b, "n", constant_fn(1), [b](int) { return b; }); },
                 [](const std::string& variant, const Params& ps, const Env&) {
                   const int k = get(ps, "k"), n = get(ps, "n");
                   const RF scale = one_minus_q().pow(-k);
                   const RF nfact_q(q_factorial(n));
                   const Integer ckn = binomial(k + n, n);
                   RF acc;
                   for (int j = 0; j <= k; ++j) {
                     const RF g(gauss_binom(j + n, n));
                     RF term;
                     if (variant == "line2") {
                       term = RF(ratio(binomial(k, j) * factorial(j), factorial(j + n))) * nfact_q * g;
                     } else if (variant == "line3") {
                       term = RF(ratio(binomial(k + n, n - j), ckn * factorial(n))) * g * nfact_q;
                     } else {
                       term = r(binomial(k + n, k - j)) * g;
                     }
                     acc += sign(j) * term;
                   }
                   RF rhs = acc * scale;
                   if (variant == "line4") rhs *= nfact_q * RF(ratio(1, ckn * factorial(n)));
                   return Evaluation{{}, beta_inverse_order(k, n), rhs};
                 }});

  reg.push_back({"EQ22", {"as-printed", "swapped"}, AuditMode::exact_Qq, 5,
                 "S_2(n,k) = C(k+n,n) [n]_q!/n! times an inverse-order number, against the (1-q)^{-k} form of S_2",
                 [](int b) { return pairs("n", 0, b, "k", constant_fn(0), [b](int) { return b; }); },
                 [](const std::string& variant, const Params& ps, const Env&) {
                   const int n = get(ps, "n"), k = get(ps, "k");
                   RF rhs = variant == "as-printed"
                                ? s2_from_inverse(n, k)
                                : RF(q_factorial(n)) * RF(ratio(binomial(k + n, n), factorial(n))) *
                                      beta_inverse_order(n, k);
                   return Evaluation{{}, s2_alt(n, k), rhs};
                 }});

  reg.push_back({"THM6", {""}, AuditMode::bivariate_Qqt, 5,
                 "weighted Bernstein sum through inverse-order numbers in place of S_2",
                 [](int b) { return pairs("i", 1, b, "n", identity_fn, [b](int) { return b; }); },
                 [](const std::string&, const Params& ps, const Env&) {
                   const int i = get(ps, "i"), n = get(ps, "n");
                   std::vector<RF> c;
                   for (int k = 0; k <= i; ++k) {
                     c.push_back(RF(q_factorial(i)) * RF(ratio(binomial(k + i, i), factorial(i))) *
                                 beta_inverse_order(k, i));
                   }
                   return Evaluation{{}, partition_lhs(i, n), falling_sum(c)};
                 }});

  reg.push_back({"EQ23", {"product", "sum-gen-S1", "sum-signed-S1"}, AuditMode::bivariate_Qqt, 6,
                 "q^{C(n,2)} binom(x,n)_q as prod_{k<n}([x]_q-[k]_q)/[n]_q! and as a signed S_1(n-1,k) sum",
                 [](int b) { return single("n", 1, b); },
                 [](const std::string& variant, const Params& ps, const Env&) {
                   const int n = get(ps, "n");
                   const BV lhs = q_binom_x(n) * bv(q_pow_binom2(n));
                   const BV inv_fact = bv(RF(q_factorial(n)).inverse());
                   BV rhs(1);
                   if (variant == "product") {
                     for (int k = 0; k < n; ++k) rhs *= x_q() - bv(RF(q_int(k)));
                   } else {
                     rhs = BV();
                     for (int k = 0; k <= n; ++k) rhs += x_q().pow(n - k) * bv(sign(k) * s1(variant, n - 1, k));
                   }
                   return Evaluation{{}, lhs, rhs * inv_fact};
                 }});

  reg.push_back({"COR7", kinds, AuditMode::bivariate_Qqt, 5,
                 "weighted Bernstein sum through S_1(k-1,j) and inverse-order numbers",
                 [](int b) { return pairs("i", 1, b, "n", identity_fn, [b](int) { return b; }); },
                 [](const std::string& variant, const Params& ps, const Env&) {
                   const int i = get(ps, "i"), n = get(ps, "n");
                   BV rhs;
                   for (int k = 0; k <= i; ++k) {
                     const RF w = RF(q_factorial(i)) * RF(ratio(binomial(k + i, i), factorial(i))) *
                                  beta_inverse_order(k, i);
                     if (w.is_zero()) continue;
                     for (int j = 0; j <= k; ++j) {
                       const RF c = sign(j) * s1(variant, k - 1, j);
                       if (c.is_zero()) continue;
                       rhs += x_q().pow(n - j) * bv(c * w);
                     }
                   }
                   return Evaluation{{}, partition_lhs(i, n), rhs};
                 }});

  reg.push_back({"GENFUN_BERNSTEIN", {""}, AuditMode::bivariate_Qqt, 8,
                 "n! [s^n] s^k e^{[1-x]_q s} [x]_q^k / k! equals B_{k,n}(x,q)",
                 [](int b) { return pairs("n", 0, b, "k", constant_fn(0), identity_fn); },
                 [](const std::string&, const Params& ps, const Env&) {
                   const int n = get(ps, "n"), k = get(ps, "k");
                   return Evaluation{{}, generating_coefficient(k, n), bernstein(k, n)};
                 }});

  return reg;
}

const std::vector<Claim>& registry() {
  static const std::vector<Claim> reg = build_registry();
  return reg;
}

const Claim& find_claim(const std::string& label) {
  for (const auto& c : registry()) {
    if (c.label == label) return c;
  }
  throw UnknownIdentity("no registered identity '" + label + "'");
}

void check_variant(const Claim& c, const std::string& variant) {
  if (std::find(c.variants.begin(), c.variants.end(), variant) == c.variants.end()) {
    throw UnknownIdentity("label " + c.label + " has no variant '" + variant + "'");
  }
}

// ---------------------------------------------------------------- serialization

nlohmann::json padic_json(const PadicValue& v) {
  return {{"residue", v.residue_string()}, {"precision", v.precision()}, {"valuation", v.valuation().to_string()}};
}

nlohmann::json value_json(const Value& v) {
  if (const auto* f = std::get_if<RF>(&v)) return to_json(*f);
  if (const auto* e = std::get_if<BV>(&v)) return to_json(*e);
  if (const auto* p = std::get_if<PadicValue>(&v)) return padic_json(*p);
  return nullptr;
}

std::string value_text(const Value& v) {
  if (const auto* f = std::get_if<RF>(&v)) return f->to_string();
  if (const auto* e = std::get_if<BV>(&v)) return e->to_string();
  if (const auto* p = std::get_if<PadicValue>(&v)) return p->residue_string() + " + O(p^" + std::to_string(p->precision()) + ")";
  return "";
}

Value difference(const Value& a, const Value& b) {
  if (std::holds_alternative<RF>(a)) return std::get<RF>(a) - std::get<RF>(b);
  if (std::holds_alternative<BV>(a)) return std::get<BV>(a) - std::get<BV>(b);
  return std::get<PadicValue>(a) - std::get<PadicValue>(b);
}

bool is_zero_value(const Value& v) {
  if (const auto* f = std::get_if<RF>(&v)) return f->is_zero();
  if (const auto* e = std::get_if<BV>(&v)) return e->is_zero();
  return std::get<PadicValue>(v).is_zero();
}

nlohmann::json witness_json(const Value& lhs, const Value& rhs, const Value& diff) {
  return {{"lhs", value_json(lhs)},
          {"rhs", value_json(rhs)},
          {"difference", value_json(diff)},
          {"lhs_text", value_text(lhs)},
          {"rhs_text", value_text(rhs)},
          {"difference_text", value_text(diff)}};
}

int effective_threshold(const PadicContext& ctx, std::optional<int> threshold) {
  return threshold ? *threshold : ctx.precision - 2;
}

bool lex_less_equal(const Params& a, const Params& b) {
  std::vector<int> va, vb;
  for (const auto& kv : a) va.push_back(kv.second);
  for (const auto& kv : b) vb.push_back(kv.second);
  return va <= vb;
}

int bound_for(const Claim& c, const AuditBounds& bounds) { return bounds.max_n ? *bounds.max_n : c.bound; }

}  // namespace

std::string to_string(AuditMode mode) {
  switch (mode) {
    case AuditMode::exact_Qq: return "exact_Qq";
    case AuditMode::bivariate_Qqt: return "bivariate_Qqt";
    case AuditMode::padic: return "padic";
  }
  return "?";
}

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::VERIFIED: return "VERIFIED";
    case VerdictKind::FALSIFIED: return "FALSIFIED";
    case VerdictKind::NUMERICALLY_CONSISTENT: return "NUMERICALLY_CONSISTENT";
    case VerdictKind::MALFORMED: return "MALFORMED";
  }
  return "?";
}

std::string params_to_string(const Params& params) {
  if (params.empty()) return "(as stated)";
  std::string out = "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ", ";
    out += params[i].first + "=" + std::to_string(params[i].second);
  }
  return out + ")";
}

nlohmann::json to_json(const AuditVerdict& v, bool with_timing) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, x] : v.params) params[k] = x;
  nlohmann::json j = {{"id", v.id.label},
                      {"variant", v.id.variant.empty() ? nlohmann::json(nullptr) : nlohmann::json(v.id.variant)},
                      {"params", params},
                      {"mode", to_string(v.mode)},
                      {"verdict", to_string(v.verdict)}};
  if (v.agreement) {
    j["agreement_valuation"] = *v.agreement;
    if (v.agreement_at_least) j["agreement_at_least"] = true;
  }
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (!v.witness.is_null()) j["witness"] = v.witness;
  if (with_timing) j["elapsed_ms"] = v.elapsed_ms;
  return j;
}

const std::vector<std::string>& registered_labels() {
  static const std::vector<std::string> labels = [] {
    std::vector<std::string> out;
    for (const auto& c : registry()) out.push_back(c.label);
    return out;
  }();
  return labels;
}

std::vector<std::string> label_variants(const std::string& label) { return find_claim(label).variants; }
AuditMode label_mode(const std::string& label) { return find_claim(label).mode; }
int default_bound(const std::string& label) { return find_claim(label).bound; }
std::string label_anchor(const std::string& label) { return find_claim(label).anchor; }

std::vector<Params> label_tuples(const std::string& label, int bound) { return find_claim(label).tuples(bound); }

AuditVerdict audit_tuple(const IdentityId& id, const Params& params, const std::optional<PadicContext>& ctx,
                         std::optional<int> threshold) {
  const Claim& c = find_claim(id.label);
  check_variant(c, id.variant);
  if (c.mode == AuditMode::padic && !ctx) {
    throw InadmissibleContext(id.label + " needs a p-adic context");
  }
  AuditVerdict v{id, params, c.mode, VerdictKind::VERIFIED, {}, false, {}, nullptr, 0};
  const auto start = std::chrono::steady_clock::now();
  Env env{ctx ? &*ctx : nullptr};
  try {
    Evaluation e = c.eval(id.variant, params, env);
    if (e.malformed) {
      v.verdict = VerdictKind::MALFORMED;
      v.reason = *e.malformed;
    } else if (c.mode == AuditMode::padic) {
      const auto& a = std::get<PadicValue>(e.lhs);
      const auto& b = std::get<PadicValue>(e.rhs);
      const Valuation agree = agreement(a, b);
      v.agreement = agree.value;
      v.agreement_at_least = agree.at_least;
      if (agree.value >= effective_threshold(*ctx, threshold)) {
        v.verdict = VerdictKind::NUMERICALLY_CONSISTENT;
      } else {
        v.verdict = VerdictKind::FALSIFIED;
        v.witness = witness_json(e.lhs, e.rhs, difference(e.lhs, e.rhs));
      }
    } else {
      const Value diff = difference(e.lhs, e.rhs);
      if (!is_zero_value(diff)) {
        v.verdict = VerdictKind::FALSIFIED;
        v.witness = witness_json(e.lhs, e.rhs, diff);
      }
    }
  } catch (const Error& err) {
    v.verdict = VerdictKind::MALFORMED;
    v.reason = err.what();
  }
  v.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return v;
}

std::vector<AuditVerdict> audit_identity(const IdentityId& id, const AuditBounds& bounds,
                                         const std::optional<PadicContext>& ctx, std::optional<int> threshold,
                                         unsigned threads) {
  const Claim& c = find_claim(id.label);
  std::vector<std::string> variants;
  if (id.variant.empty() && !(c.variants.size() == 1 && c.variants[0].empty())) {
    variants = c.variants;
  } else {
    check_variant(c, id.variant);
    variants = {id.variant};
  }
  const std::vector<Params> tuples = c.tuples(bound_for(c, bounds));
  std::vector<std::pair<std::string, const Params*>> jobs;
  for (const auto& var : variants) {
    for (const auto& t : tuples) jobs.emplace_back(var, &t);
  }
  std::vector<AuditVerdict> out(jobs.size());
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, jobs.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      out[i] = audit_tuple({c.label, jobs[i].first}, *jobs[i].second, ctx, threshold);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return out;
}

Params minimize_counterexample(const IdentityId& id, const Params& tuple, const AuditBounds& bounds,
                               const std::optional<PadicContext>& ctx, std::optional<int> threshold) {
  const Claim& c = find_claim(id.label);
  check_variant(c, id.variant);
  if (audit_tuple(id, tuple, ctx, threshold).verdict != VerdictKind::FALSIFIED) {
    throw NotACounterexample(id.label + " " + params_to_string(tuple) + " does not falsify the identity");
  }
  for (const auto& t : c.tuples(bound_for(c, bounds))) {
    if (!lex_less_equal(t, tuple)) break;
    if (t == tuple) return t;
    if (audit_tuple(id, t, ctx, threshold).verdict == VerdictKind::FALSIFIED) return t;
  }
  return tuple;
}

nlohmann::json AuditReport::to_json() const {
  nlohmann::json verdicts_json = nlohmann::json::array();
  for (const auto& v : verdicts) verdicts_json.push_back(qcalc::to_json(v, with_timing));
  nlohmann::json summary_json = nlohmann::json::array();
  for (const auto& s : summary) {
    nlohmann::json line = {{"id", s.id.label},
                           {"variant", s.id.variant.empty() ? nlohmann::json(nullptr) : nlohmann::json(s.id.variant)},
                           {"VERIFIED", s.verified},
                           {"FALSIFIED", s.falsified},
                           {"NUMERICALLY_CONSISTENT", s.consistent},
                           {"MALFORMED", s.malformed}};
    if (s.minimal_counterexample) {
      nlohmann::json p = nlohmann::json::object();
      for (const auto& [k, x] : *s.minimal_counterexample) p[k] = x;
      line["minimal_counterexample"] = p;
    } else {
      line["minimal_counterexample"] = nullptr;
    }
    summary_json.push_back(line);
  }
  return {{"meta", meta}, {"verdicts", verdicts_json}, {"summary", summary_json}};
}

std::string AuditReport::to_text() const {
  auto name_of = [](const IdentityId& id) { return id.label + (id.variant.empty() ? "" : "[" + id.variant + "]"); };
  const auto skipped = meta.value("skipped_by_config", nlohmann::json::array());
  std::size_t width = 0;
  for (const auto& s : summary) width = std::max(width, name_of(s.id).size());
  for (const auto& label : skipped) width = std::max(width, label.get<std::string>().size());
  auto pad = [width](const std::string& name) { return name + std::string(width + 2 - name.size(), ' '); };

  std::ostringstream out;
  for (const auto& s : summary) {
    out << pad(name_of(s.id)) << "VERIFIED=" << s.verified << " FALSIFIED=" << s.falsified
        << " NUMERICALLY_CONSISTENT=" << s.consistent << " MALFORMED=" << s.malformed << " min_counterexample="
        << (s.minimal_counterexample ? params_to_string(*s.minimal_counterexample) : std::string("-")) << "\n";
  }
  for (const auto& label : skipped) out << pad(label.get<std::string>()) << "SKIPPED-by-config\n";
  return out.str();
}

AuditReport audit_all(const AuditConfig& config) {
  std::vector<std::string> labels = config.labels.empty() ? registered_labels() : config.labels;
  for (const auto& l : labels) find_claim(l);

  AuditReport report;
  report.with_timing = config.with_timing;
  nlohmann::json per_label = nlohmann::json::object();
  nlohmann::json variants = nlohmann::json::object();
  nlohmann::json skipped = nlohmann::json::array();
  nlohmann::json timing = nlohmann::json::object();

  for (const auto& label : labels) {
    const Claim& c = find_claim(label);
    if (c.mode == AuditMode::padic && !config.include_padic) {
      skipped.push_back(label);
      continue;
    }
    per_label[label] = bound_for(c, config.bounds);
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : c.variants) vs.push_back(v.empty() ? nlohmann::json(nullptr) : nlohmann::json(v));
    variants[label] = vs;

    const auto start = std::chrono::steady_clock::now();
    std::optional<PadicContext> ctx;
    if (c.mode == AuditMode::padic) ctx = config.padic;
    std::vector<AuditVerdict> vs_out = audit_identity({label, ""}, config.bounds, ctx, config.threshold, config.threads);
    timing[label] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    for (const auto& variant : c.variants) {
      SummaryLine line{{label, variant}, 0, 0, 0, 0, std::nullopt};
      for (const auto& v : vs_out) {
        if (v.id.variant != variant) continue;
        switch (v.verdict) {
          case VerdictKind::VERIFIED: ++line.verified; break;
          case VerdictKind::FALSIFIED:
            ++line.falsified;
            if (!line.minimal_counterexample) line.minimal_counterexample = v.params;
            break;
          case VerdictKind::NUMERICALLY_CONSISTENT: ++line.consistent; break;
          case VerdictKind::MALFORMED: ++line.malformed; break;
        }
      }
      report.summary.push_back(std::move(line));
    }
    report.verdicts.insert(report.verdicts.end(), std::make_move_iterator(vs_out.begin()),
                           std::make_move_iterator(vs_out.end()));
  }

  std::string stamp = config.generated_at;
  if (stamp.empty()) {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    stamp = buf;
  }
  nlohmann::json padic = nullptr;
  if (config.include_padic) {
    padic = {{"p", config.padic.p},
             {"q", to_fraction_string(config.padic.q)},
             {"precision", config.padic.precision},
             {"threshold", effective_threshold(config.padic, config.threshold)}};
  }
  report.meta = {
      {"bounds", {{"max_n", config.bounds.max_n ? nlohmann::json(*config.bounds.max_n) : nlohmann::json(nullptr)},
                  {"per_label", per_label}}},
      {"padic_context", padic},
      {"variants", variants},
      {"skipped_by_config", skipped},
      {"notes",
       {"EQ12_THM2_PADIC: the inner summation index that shares its letter with the prime is renamed r.",
        "POST14_COROLLARY: the upper limit m is free; audited for each binding m <= bound and reported MALFORMED as stated.",
        "COR5: n is free; audited for each binding n <= bound and reported MALFORMED as stated.",
        "gen-S1: coefficients of prod_{k=1}^{n}(1+[k]_q z). signed-S1: coefficients of prod_{k=0}^{n-1}([x]_q-[k]_q) in powers of [x]_q.",
        "S_2 inside identity checks is s2_explicit (alternating q-difference sum); S_1 or S_2 with a negative index is 0.",
        "THM1_PADIC: left side is the Riemann sum at level N; right side is the tail-truncated series with Carlitz numbers evaluated at q.",
        "padic verdicts: NUMERICALLY_CONSISTENT when the agreement valuation reaches the threshold, FALSIFIED otherwise."}},
      {"generated_at", stamp}};
  if (config.with_timing) report.meta["timing"] = timing;
  return report;
}

}  // namespace qcalc
