#include "qcalc/padic.hpp"

#include <algorithm>
#include <thread>

#include "qcalc/errors.hpp"

namespace qcalc {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kResidueLimit = u64{1} << 62;

// p^k, or PrecisionExhausted when it leaves the 62-bit working range.
u64 power_of(u64 p, int k) {
  u64 r = 1;
  for (int i = 0; i < k; ++i) {
    if (r > kResidueLimit / p) {
      throw PrecisionExhausted(std::to_string(p) + "^" + std::to_string(k) + " exceeds the 62-bit working modulus");
    }
    r *= p;
  }
  return r;
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 addmod(u64 a, u64 b, u64 m) {
  u64 s = a + b;  // both < 2^62, no overflow
  return s >= m ? s - m : s;
}

u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

u64 powmod(u64 a, unsigned long e, u64 m) {
  u64 r = 1 % m;
  while (e) {
    if (e & 1UL) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1UL;
  }
  return r;
}

// Inverse of a unit mod m by extended Euclid.
u64 invmod(u64 a, u64 m) {
  __int128 t = 0, nt = 1;
  __int128 r = m, nr = a % m;
  while (nr != 0) {
    __int128 q = r / nr;
    __int128 tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw NonUnit(std::to_string(a) + " is not invertible mod " + std::to_string(m));
  if (t < 0) t += m;
  return static_cast<u64>(t);
}

u64 reduce(const Integer& x, u64 m) {
  Integer r;
  Integer mod(static_cast<unsigned long>(m));
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
  return r.get_ui();
}

// Residue of a rational with denominator prime to p.
u64 reduce(const Rational& x, u64 m) {
  return mulmod(reduce(x.get_num(), m), invmod(reduce(x.get_den(), m), m), m);
}

}  // namespace

std::string Valuation::to_string() const {
  return at_least ? "\xe2\x89\xa5 " + std::to_string(value) : std::to_string(value);
}

PadicValue PadicValue::zero(u64 p, int precision) { return PadicValue(p, precision, 0, precision); }

PadicValue PadicValue::from_residue(u64 p, u64 x, int base_valuation, int precision) {
  if (x == 0 || base_valuation >= precision) return zero(p, precision);
  int k = 0;
  while (x % p == 0) {
    x /= p;
    ++k;
  }
  const int v = base_valuation + k;
  if (v >= precision) return zero(p, precision);
  return PadicValue(p, v, x % power_of(p, precision - v), precision);
}

PadicValue PadicValue::from_integer(u64 p, const Integer& x, int precision) {
  return from_rational(p, Rational(x), precision);
}

PadicValue PadicValue::from_rational(u64 p, const Rational& x, int precision) {
  if (sgn(x) == 0) return zero(p, precision);
  const int vn = qcalc::valuation(x.get_num(), p);
  const int vd = qcalc::valuation(x.get_den(), p);
  const int v = vn - vd;
  if (v >= precision) return zero(p, precision);
  const Integer pp(static_cast<unsigned long>(p));
  Integer num = x.get_num();
  Integer den = x.get_den();
  for (int i = 0; i < vn; ++i) mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), pp.get_mpz_t());
  for (int i = 0; i < vd; ++i) mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t());
  const u64 m = power_of(p, precision - v);
  return PadicValue(p, v, mulmod(reduce(num, m), invmod(reduce(den, m), m), m), precision);
}

Valuation PadicValue::valuation() const {
  if (is_zero()) return {precision_, true};
  return {valuation_, false};
}

u64 PadicValue::residue() const {
  if (is_zero()) return 0;
  if (valuation_ < 0) throw NonUnit("value with valuation " + std::to_string(valuation_) + " is not in Z_p");
  return unit_ * power_of(p_, valuation_);
}

std::string PadicValue::residue_string() const {
  if (is_zero() || valuation_ >= 0) return std::to_string(residue());
  return std::to_string(unit_) + "/" + std::to_string(p_) + "^" + std::to_string(-valuation_);
}

PadicValue PadicValue::with_precision(int digits) const {
  if (digits >= precision_) return *this;
  if (is_zero() || valuation_ >= digits) return zero(p_, digits);
  return PadicValue(p_, valuation_, unit_ % power_of(p_, digits - valuation_), digits);
}

PadicValue PadicValue::inverse() const {
  if (!is_unit()) throw NonUnit(residue_string() + " is not a unit of Z_" + std::to_string(p_));
  return PadicValue(p_, 0, invmod(unit_, power_of(p_, precision_)), precision_);
}

PadicValue PadicValue::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  // x^0 = 1 exactly, so it keeps the larger of the two precisions.
  PadicValue result = from_integer(p_, 1, e == 0 ? std::max(precision_, relative_precision()) : relative_precision());
  PadicValue base = *this;
  while (e) {
    if (e & 1L) result = result * base;
    e >>= 1L;
    if (e) base = base * base;
  }
  return result;
}

PadicValue PadicValue::operator-() const {
  if (is_zero()) return *this;
  const u64 m = power_of(p_, relative_precision());
  return PadicValue(p_, valuation_, m - unit_, precision_);
}

PadicValue operator+(const PadicValue& a, const PadicValue& b) {
  if (a.p_ != b.p_) throw InadmissibleContext("mixing primes " + std::to_string(a.p_) + " and " + std::to_string(b.p_));
  const u64 p = a.p_;
  const int prec = std::min(a.precision_, b.precision_);
  const int e = std::min(a.valuation_, b.valuation_);
  if (e >= prec) return PadicValue::zero(p, prec);
  const u64 m = power_of(p, prec - e);
  auto lift = [&](const PadicValue& x) -> u64 {
    if (x.is_zero() || x.valuation_ >= prec) return 0;
    const u64 unit = x.unit_ % power_of(p, prec - x.valuation_);
    return mulmod(unit, power_of(p, x.valuation_ - e), m);
  };
  return PadicValue::from_residue(p, addmod(lift(a), lift(b), m), e, prec);
}

PadicValue operator*(const PadicValue& a, const PadicValue& b) {
  if (a.p_ != b.p_) throw InadmissibleContext("mixing primes " + std::to_string(a.p_) + " and " + std::to_string(b.p_));
  const u64 p = a.p_;
  if (a.is_zero() || b.is_zero()) {
    return PadicValue::zero(p, std::min(a.precision_ + b.valuation_, b.precision_ + a.valuation_));
  }
  const int rel = std::min(a.relative_precision(), b.relative_precision());
  const u64 m = power_of(p, rel);
  const int v = a.valuation_ + b.valuation_;
  return PadicValue(p, v, mulmod(a.unit_ % m, b.unit_ % m, m), v + rel);
}

PadicValue operator/(const PadicValue& a, const PadicValue& b) {
  if (b.is_zero()) throw DivisionByZero("p-adic divisor is zero to " + std::to_string(b.precision_) + " digits");
  if (a.p_ != b.p_) throw InadmissibleContext("mixing primes " + std::to_string(a.p_) + " and " + std::to_string(b.p_));
  const u64 p = a.p_;
  if (a.is_zero()) return PadicValue::zero(p, a.precision_ - b.valuation_);
  const int rel = std::min(a.relative_precision(), b.relative_precision());
  const u64 m = power_of(p, rel);
  const int v = a.valuation_ - b.valuation_;
  return PadicValue(p, v, mulmod(a.unit_ % m, invmod(b.unit_ % m, m), m), v + rel);
}

Valuation agreement(const PadicValue& a, const PadicValue& b) { return (a - b).valuation(); }

PadicValue padic_arith(const PadicValue& a, const PadicValue& b, PadicOp kind, long exponent) {
  switch (kind) {
    case PadicOp::add: return a + b;
    case PadicOp::sub: return a - b;
    case PadicOp::mul: return a * b;
    case PadicOp::inv: return a.inverse();
    case PadicOp::pow: return a.pow(exponent);
  }
  return a;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PadicContext make_padic_context(u64 p, int precision, const Rational& q) {
  if (p == 2 || !is_prime(p)) throw InadmissibleContext("p = " + std::to_string(p) + " is not an odd prime");
  if (precision < 1) throw InadmissibleContext("precision must be positive, got " + std::to_string(precision));
  try {
    power_of(p, precision);
  } catch (const PrecisionExhausted&) {
    throw InadmissibleContext(std::to_string(p) + "^" + std::to_string(precision) + " exceeds the working range");
  }
  const std::string qs = to_display_string(q);
  if (mpz_divisible_ui_p(q.get_den().get_mpz_t(), p)) {
    throw InadmissibleContext("q = " + qs + " is not in Z_" + std::to_string(p) + " (denominator divisible by p)");
  }
  if (sgn(q) == 0 || mpz_divisible_ui_p(q.get_num().get_mpz_t(), p)) {
    throw InadmissibleContext("q = " + qs + " is not a unit of Z_" + std::to_string(p));
  }
  Rational d = q - 1;
  if (sgn(d) == 0) throw InadmissibleContext("q = 1 is excluded: [x]_q and the (q-1) tail bounds degenerate");
  if (!mpz_divisible_ui_p(d.get_num().get_mpz_t(), p)) {
    throw InadmissibleContext("q = " + qs + " violates v_p(q-1) >= 1 for p = " + std::to_string(p));
  }
  return PadicContext{p, precision, q};
}

std::string IntegrandSpec::to_string() const {
  switch (tag) {
    case IntegrandTag::constant: return "const";
    case IntegrandTag::power_xq: return "power_xq(" + std::to_string(a) + ")";
    case IntegrandTag::qpow: return "qpow(" + std::to_string(a) + ")";
    case IntegrandTag::qbinom_x: return "qbinom_x(" + std::to_string(a) + ")";
    case IntegrandTag::bernstein: return "bernstein(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case IntegrandTag::custom_samples: return "custom(" + std::to_string(samples.size()) + " samples)";
  }
  return "?";
}

namespace {

constexpr int kGuardDigits = 4;

// Everything the inner loop needs, reduced mod the working modulus.
struct SumPlan {
  u64 m = 1;
  u64 q = 1;
  u64 q_inv = 1;
  std::vector<u64> q_ints;   // [i]_q for i < n (qbinom_x)
  std::vector<u64> samples;  // scaled custom samples
  IntegrandTag tag = IntegrandTag::constant;
  int a = 0;
  int b = 0;
};

struct Partial {
  u64 sum = 0;
};

// q^s and [s]_q mod m by binary expansion of s.
std::pair<u64, u64> start_state(u64 s, u64 q, u64 m) {
  u64 qs = 1 % m, bs = 0;
  for (int bit = 63; bit >= 0; --bit) {
    bs = mulmod(bs, addmod(1 % m, qs, m), m);  // [2s] = [s](1+q^s)
    qs = mulmod(qs, qs, m);
    if ((s >> bit) & 1U) {
      bs = addmod(1 % m, mulmod(q, bs, m), m);  // [s+1] = 1 + q[s]
      qs = mulmod(qs, q, m);
    }
  }
  return {qs, bs};
}

u64 sum_range(const SumPlan& plan, u64 begin, u64 end) {
  const u64 m = plan.m;
  auto [qx, bx] = start_state(begin, plan.q, m);
  u64 qinvx = powmod(plan.q_inv, begin, m);
  const u64 one = 1 % m;
  u64 acc = 0;
  for (u64 x = begin; x < end; ++x) {
    u64 fx = one;
    switch (plan.tag) {
      case IntegrandTag::constant: break;
      case IntegrandTag::power_xq: fx = powmod(bx, static_cast<unsigned long>(plan.a), m); break;
      case IntegrandTag::qpow:
        fx = plan.a >= 0 ? powmod(qx, static_cast<unsigned long>(plan.a), m)
                         : powmod(qinvx, static_cast<unsigned long>(-plan.a), m);
        break;
      case IntegrandTag::qbinom_x:
        for (u64 qi : plan.q_ints) fx = mulmod(fx, submod(bx, qi, m), m);
        break;
      case IntegrandTag::bernstein: {
        const u64 y = mulmod(qinvx, submod(one, bx, m), m);  // [1-x]_q = q^{-x}(1-[x]_q)
        fx = mulmod(powmod(bx, static_cast<unsigned long>(plan.a), m),
                    powmod(y, static_cast<unsigned long>(plan.b - plan.a), m), m);
        break;
      }
      case IntegrandTag::custom_samples: fx = plan.samples[x]; break;
    }
    acc = addmod(acc, mulmod(fx, qx, m), m);
    bx = addmod(one, mulmod(plan.q, bx, m), m);
    qx = mulmod(qx, plan.q, m);
    qinvx = mulmod(qinvx, plan.q_inv, m);
  }
  return acc;
}

}  // namespace

PadicValue riemann_integral(const PadicContext& ctx, const IntegrandSpec& f, int level) {
  if (level < 1) throw IndexError("level must be positive, got " + std::to_string(level));
  const u64 p = ctx.p;
  const u64 count = power_of(p, level);

  // Constant factor pulled out of the sum, handled exactly in Q.
  Rational factor = 1;
  SumPlan plan;
  plan.tag = f.tag;
  plan.a = f.a;
  plan.b = f.b;
  switch (f.tag) {
    case IntegrandTag::constant: break;
    case IntegrandTag::power_xq:
    case IntegrandTag::qbinom_x:
      if (f.a < 0) throw IndexError(f.to_string() + " needs a nonnegative index");
      break;
    case IntegrandTag::qpow: break;
    case IntegrandTag::bernstein:
      if (f.a < 0 || f.b < f.a) throw IndexError(f.to_string() + " needs 0 <= k <= n");
      factor = Rational(binomial(f.b, f.a));
      break;
    case IntegrandTag::custom_samples:
      if (f.samples.size() < count) {
        throw ArityError(f.to_string() + " needs " + std::to_string(count) + " samples at level " +
                         std::to_string(level));
      }
      break;
  }
  if (f.tag == IntegrandTag::qbinom_x) {
    // binom(x,n)_q = q^{-C(n,2)} prod_{i<n}([x]_q - [i]_q) / [n]_q!
    Rational qn_fact = 1;
    Rational qi = 0;  // [i]_q
    Rational qpow_i = 1;
    for (int i = 0; i < f.a; ++i) {
      qi += qpow_i;  // now [i+1]_q
      qpow_i *= ctx.q;
      qn_fact *= qi;
    }
    Rational qpow_c2 = 1;
    for (int i = 0; i < f.a * (f.a - 1) / 2; ++i) qpow_c2 *= ctx.q;
    factor = 1 / (qn_fact * qpow_c2);
  }

  int scale_digits = 0;  // p^scale_digits clears p from custom-sample denominators
  if (f.tag == IntegrandTag::custom_samples) {
    for (u64 x = 0; x < count; ++x) {
      const Rational& s = f.samples[x];
      if (sgn(s) != 0) scale_digits = std::max(scale_digits, valuation(s.get_den(), p));
    }
  }
  int factor_loss = 0;
  if (sgn(factor) != 0) factor_loss = std::max(0, valuation(factor.get_den(), p) - valuation(factor.get_num(), p));

  const int digits = ctx.precision + level + kGuardDigits + factor_loss + scale_digits;
  plan.m = power_of(p, digits);
  plan.q = reduce(ctx.q, plan.m);
  plan.q_inv = invmod(plan.q, plan.m);
  if (f.tag == IntegrandTag::qbinom_x) {
    u64 qi = 0;
    for (int i = 0; i < f.a; ++i) {
      plan.q_ints.push_back(qi);
      qi = addmod(1, mulmod(plan.q, qi, plan.m), plan.m);
    }
  }
  if (f.tag == IntegrandTag::custom_samples) {
    const Rational lift(Integer(power_of(p, scale_digits)));
    plan.samples.reserve(count);
    for (u64 x = 0; x < count; ++x) plan.samples.push_back(reduce(f.samples[x] * lift, plan.m));
    factor /= lift;
  }

  // Fixed chunking keeps the reduction order independent of the thread count.
  constexpr u64 kChunk = u64{1} << 14;
  const u64 chunks = (count + kChunk - 1) / kChunk;
  std::vector<u64> partial(chunks, 0);
  const unsigned workers = static_cast<unsigned>(
      std::min<u64>(chunks, std::max(1U, std::thread::hardware_concurrency())));
  if (workers <= 1) {
    for (u64 c = 0; c < chunks; ++c) partial[c] = sum_range(plan, c * kChunk, std::min(count, (c + 1) * kChunk));
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (u64 c = w; c < chunks; c += workers) {
          partial[c] = sum_range(plan, c * kChunk, std::min(count, (c + 1) * kChunk));
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  u64 total = 0;
  for (u64 s : partial) total = addmod(total, s, plan.m);

  const u64 bracket = start_state(count, plan.q, plan.m).second;  // [p^level]_q
  PadicValue sum = PadicValue::from_integer(p, Integer(total), digits);
  PadicValue denom = PadicValue::from_integer(p, Integer(bracket), digits);
  PadicValue value = sum / denom * PadicValue::from_rational(p, factor, digits);
  value = value.with_precision(ctx.precision);
  if (value.precision() <= 0) {
    throw PrecisionExhausted("no digits left after dividing by [" + std::to_string(p) + "^" + std::to_string(level) + "]_q");
  }
  return value;
}

std::vector<ProfileRow> convergence_profile(const PadicContext& ctx, const IntegrandSpec& f, int first_level,
                                            int last_level, const std::optional<Rational>& target) {
  if (first_level < 1 || last_level < first_level) {
    throw IndexError("bad level range " + std::to_string(first_level) + ".." + std::to_string(last_level));
  }
  std::optional<PadicValue> exact;
  if (target) exact = ctx.embed(*target);
  std::vector<ProfileRow> rows;
  for (int level = first_level; level <= last_level; ++level) {
    ProfileRow row{level, riemann_integral(ctx, f, level), std::nullopt};
    if (exact) row.agreement = agreement(row.value, *exact);
    rows.push_back(std::move(row));
  }
  return rows;
}

TailSum truncated_tail_sum(const PadicContext& ctx, const std::function<PadicValue(int)>& term, int rate,
                           int offset) {
  if (rate < 1) throw DivergentTail("tail valuation rate " + std::to_string(rate) + " < 1 per index");
  TailSum out{PadicValue::zero(ctx.p, ctx.precision), 0};
  int m = 0;
  for (; m * rate + offset < ctx.precision; ++m) out.value += term(m);
  out.cutoff = m;
  out.value = out.value.with_precision(ctx.precision);
  return out;
}

}  // namespace qcalc
