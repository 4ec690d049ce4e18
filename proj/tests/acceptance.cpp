// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "qcalc/audit.hpp"
#include "qcalc/bernoulli.hpp"
#include "qcalc/bernstein.hpp"
#include "qcalc/cli.hpp"
#include "qcalc/qcore.hpp"
#include "qcalc/stirling.hpp"

using namespace qcalc;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void check(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_ms, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (limit_ms > 0 && ms > limit_ms) o.check(false, "runtime " + std::to_string(ms) + " ms over limit");
  std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << name << " (" << static_cast<long>(ms) << " ms)";
  if (!o.ok) std::cout << " -- " << o.detail;
  std::cout << "\n";
  if (!o.ok) ++failures;
}

std::string at(int n) { return "n=" + std::to_string(n); }
std::string at(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

std::vector<Rational> classical_bernoulli(int max_n) {
  std::vector<Rational> b;
  for (int n = 0; n <= max_n; ++n) {
    Rational acc = n == 0 ? 1 : 0;
    for (int j = 0; j < n; ++j) acc -= Rational(binomial(n + 1, j)) * b[static_cast<std::size_t>(j)];
    b.push_back(acc / (n + 1));
  }
  return b;
}

bool all_verdicts(const std::vector<AuditVerdict>& vs, VerdictKind kind) {
  if (vs.empty()) return false;
  for (const auto& v : vs)
    if (v.verdict != kind) return false;
  return true;
}

std::string normalized(const AuditReport& r) {
  auto j = r.to_json();
  j["meta"].erase("generated_at");
  return j.dump();
}

}  // namespace

int main() {
  criterion(1, "Gaussian binomials n <= 12: nonnegative integer coefficients, degree k(n-k), value C(n,k) at q=1", 1000,
            [] {
              Outcome o;
              for (int n = 0; n <= 12; ++n) {
                for (int k = 0; k <= n; ++k) {
                  PolyQ g = gauss_binom(n, k);
                  o.check(g.degree() == k * (n - k), "degree at " + at(n, k));
                  for (const auto& c : g.coeffs()) o.check(c.get_den() == 1 && sgn(c) >= 0, "coefficient at " + at(n, k));
                  o.check(g.eval(1) == Rational(binomial(n, k)), "q=1 value at " + at(n, k));
                }
              }
              return o;
            });

  criterion(2, "beta(n) equals the moment route and the classical B_n at q=1 for n <= 10", 5000, [] {
    Outcome o;
    auto b = classical_bernoulli(10);
    o.check(b[1] == ratio(-1, 2) && b[2] == ratio(1, 6) && b[4] == ratio(-1, 30), "classical oracle");
    for (int n = 0; n <= 10; ++n) {
      o.check(beta(n) == beta_via_moments(n), "dual route at " + at(n));
      o.check(ratfun_eval(beta(n), 1) == b[static_cast<std::size_t>(n)], "classical limit at " + at(n));
    }
    return o;
  });

  criterion(3, "moment identity (n+1)/[n+1]_q = sum C(n,m)(q-1)^m beta(m) for n <= 10", 0, [] {
    Outcome o;
    const RationalFunctionQ qm1 = RationalFunctionQ(PolyQ(std::vector<Rational>{-1, 1}));
    for (int n = 0; n <= 10; ++n) {
      RationalFunctionQ rhs;
      for (int m = 0; m <= n; ++m) rhs += RationalFunctionQ(Rational(binomial(n, m))) * qm1.pow(m) * beta(m);
      o.check(RationalFunctionQ(n + 1) / RationalFunctionQ(q_int(n + 1)) == rhs, "at " + at(n));
    }
    return o;
  });

  criterion(4, "explicit S_2 scaled by [k]_q! q^C(k,2) equals the q-difference of 0^n, n,k <= 10 (strict gate)", 0, [] {
    Outcome o;
    for (int n = 0; n <= 10; ++n) {
      for (int k = 0; k <= 10; ++k) {
        std::vector<RationalFunctionQ> samples;
        for (int j = 0; j <= k; ++j) samples.push_back(RationalFunctionQ(q_int(j).pow(static_cast<unsigned>(n))));
        o.check(s2_explicit(n, k) * RationalFunctionQ(q_factorial(k)) * q_pow_binom2(k) ==
                    q_difference<RationalFunctionQ>(samples, k),
                "at " + at(n, k));
      }
    }
    o.check(all_verdicts(audit_identity({"EQ8_VS_DELTA", ""}, {10}, std::nullopt), VerdictKind::VERIFIED),
            "EQ8_VS_DELTA audit");
    std::ostringstream out, err;
    o.check(run_cli({"audit", "--id", "EQ8_VS_DELTA", "--max-n", "10", "--strict"}, out, err) == 0, "--strict exit");
    return o;
  });

  criterion(5, "EQ10 for n <= 8, EQ11 for 1 <= i <= n <= 8, generating coefficients equal B_{k,n} for k <= n <= 8",
            120000, [] {
              Outcome o;
              auto eq10 = audit_identity({"EQ10", ""}, {8}, std::nullopt);
              o.check(eq10.size() == 9 && all_verdicts(eq10, VerdictKind::VERIFIED), "EQ10");
              auto eq11 = audit_identity({"EQ11", ""}, {8}, std::nullopt);
              o.check(eq11.size() == 36 && all_verdicts(eq11, VerdictKind::VERIFIED), "EQ11");
              for (int n = 0; n <= 8; ++n)
                for (int k = 0; k <= n; ++k)
                  o.check(bivar_equal(generating_coefficient(k, n), bernstein(k, n)), "generating coefficient at " + at(k, n));
              return o;
            });

  criterion(6, "Newton reconstruction of [x]_q^m at x = 0..8 for m <= 5", 0, [] {
    Outcome o;
    for (int m = 0; m <= 5; ++m) {
      std::vector<RationalFunctionQ> samples;
      for (int j = 0; j <= m; ++j) samples.push_back(RationalFunctionQ(q_int(j).pow(static_cast<unsigned>(m))));
      for (int x = 0; x <= 8; ++x)
        o.check(newton_reconstruct(samples, x) == RationalFunctionQ(q_int(x).pow(static_cast<unsigned>(m))), "at " + at(m, x));
    }
    return o;
  });

  criterion(7, "p=3, q=4, N=8: Riemann sums of [x]_q^n approach beta(n), nondecreasing over levels 3..7, >= 5 at 7",
            60000, [] {
              Outcome o;
              auto ctx = make_padic_context(3, 8, 4);
              for (int n = 0; n <= 4; ++n) {
                auto rows = convergence_profile(ctx, IntegrandSpec::power_xq(n), 3, 7, ratfun_eval(beta(n), 4));
                for (std::size_t i = 1; i < rows.size(); ++i)
                  o.check(rows[i].agreement->value >= rows[i - 1].agreement->value, "monotone at " + at(n));
                o.check(rows.back().agreement->value >= 5, "level 7 agreement at " + at(n));
              }
              return o;
            });

  criterion(8, "THM1_PADIC n <= 4: agreement >= N-2 or FALSIFIED with witness, stable across runs", 0, [] {
    Outcome o;
    auto ctx = make_padic_context(3, 8, 4);
    auto a = audit_identity({"THM1_PADIC", ""}, {4}, ctx);
    auto b = audit_identity({"THM1_PADIC", ""}, {4}, ctx);
    o.check(a.size() == 15 && b.size() == 15, "tuple count");
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
      const auto& v = a[i];
      const std::string where = params_to_string(v.params);
      if (v.verdict == VerdictKind::NUMERICALLY_CONSISTENT) {
        o.check(v.agreement && *v.agreement >= 6, "agreement at " + where);
      } else {
        o.check(v.verdict == VerdictKind::FALSIFIED && v.witness.contains("difference"), "verdict at " + where);
      }
      o.check(to_json(v) == to_json(b[i]), "stability at " + where);
    }
    return o;
  });

  AuditReport first, second;
  criterion(9, "default audit covers every label once, MALFORMED as-stated entries, byte-identical reruns", 300000,
            [&] {
              Outcome o;
              first = audit_all(AuditConfig{});
              second = audit_all(AuditConfig{});
              o.check(normalized(first) == normalized(second), "determinism");
              std::set<std::pair<std::string, std::string>> seen;
              for (const auto& s : first.summary) o.check(seen.insert({s.id.label, s.id.variant}).second, "duplicate " + s.id.label);
              for (const auto& label : registered_labels())
                for (const auto& variant : label_variants(label))
                  o.check(seen.count({label, variant}) == 1, "missing " + label + "[" + variant + "]");
              for (const std::string label : {"POST14_COROLLARY", "COR5"}) {
                bool malformed = false;
                for (const auto& v : first.verdicts)
                  malformed |= v.id.label == label && v.params.empty() && v.verdict == VerdictKind::MALFORMED;
                o.check(malformed, label + " as stated");
              }
              return o;
            });

  criterion(10, "EQ18/THM4/COR7 under both S_1 variants; EQ23 verified for n <= 6; EQ18 signed-S1 consistent", 0, [&] {
    Outcome o;
    auto verdicts_of = [&](const std::string& label, const std::string& variant) {
      std::vector<AuditVerdict> out;
      for (const auto& v : first.verdicts)
        if (v.id.label == label && v.id.variant == variant) out.push_back(v);
      return out;
    };
    for (const std::string label : {"EQ18", "THM4", "COR7"})
      for (const std::string variant : {"gen-S1", "signed-S1"})
        o.check(!verdicts_of(label, variant).empty(), label + "[" + variant + "] missing");
    for (const std::string variant : {"product", "sum-gen-S1"}) {
      auto vs = verdicts_of("EQ23", variant);
      o.check(vs.size() == 6 && all_verdicts(vs, VerdictKind::VERIFIED), "EQ23[" + variant + "]");
    }
    o.check(all_verdicts(verdicts_of("EQ18", "signed-S1"), VerdictKind::VERIFIED), "EQ18[signed-S1]");
    o.check(bivar_equal(RationalFunctionQ::q() * x_minus_q(1), x_q() - 1), "q[x-1]_q = [x]_q - 1");
    return o;
  });

  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}
