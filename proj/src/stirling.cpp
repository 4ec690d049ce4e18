#include "qcalc/stirling.hpp"

#include "qcalc/qcore.hpp"
#include "qcalc/series.hpp"

namespace qcalc {

namespace {

RationalFunctionQ q_minus_one_pow(int k) {
  return RationalFunctionQ(PolyQ(std::vector<Rational>{-1, 1})).pow(k);
}

}  // namespace

std::vector<PolyQ> s1_gen(int n) {
  std::vector<PolyQ> e{PolyQ(1)};
  for (int j = 1; j <= n; ++j) {
    const PolyQ qj = q_int(j);
    e.emplace_back();
    for (int k = j; k >= 1; --k) e[static_cast<std::size_t>(k)] += qj * e[static_cast<std::size_t>(k - 1)];
  }
  return e;
}

std::vector<RationalFunctionQ> s2_gen(int n, int max_k) {
  std::vector<RationalFunctionQ> prod;
  for (const auto& c : s1_gen(n)) prod.emplace_back(c);
  auto series = TruncatedSeries<RationalFunctionQ>::polynomial(max_k, prod);
  return series.inverse().coeffs();
}

RationalFunctionQ s2_explicit(int n, int k) {
  if (k < 0 || n < 0) return {};
  PolyQ sum;
  for (int j = 0; j <= k; ++j) {
    PolyQ term = gauss_binom(k, j) * q_int(k - j).pow(static_cast<unsigned>(n));
    if (term.is_zero()) continue;
    // q^{j(j-1)/2} >= 0 so it stays inside PolyQ.
    term = term.shifted(j * (j - 1) / 2);
    if (j % 2 == 1) term = -term;
    sum += term;
  }
  return RationalFunctionQ(sum, q_factorial(k).shifted(k * (k - 1) / 2));
}

RationalFunctionQ s2_alt(int n, int k) {
  if (k < 0 || n < 0) return {};
  PolyQ sum;
  for (int j = 0; j <= k; ++j) {
    Rational c(binomial(k + n, k - j));
    if ((k - j) % 2 == 1) c = -c;
    sum += gauss_binom(j + n, j) * c;
  }
  return RationalFunctionQ(sum, PolyQ(std::vector<Rational>{1, -1}).pow(static_cast<unsigned>(k)));
}

std::vector<PolyQ> s1_signed(int n) {
  std::vector<PolyQ> e{PolyQ(1)};
  for (int j = 0; j < n; ++j) {
    const PolyQ qj = q_int(j);
    std::vector<PolyQ> next(e.size() + 1);
    for (std::size_t k = 0; k < e.size(); ++k) {
      next[k + 1] += e[k];
      next[k] -= qj * e[k];
    }
    e = std::move(next);
  }
  return e;
}

PolyQ s1_value(FirstKind kind, int n, int k) {
  if (n < 0 || k < 0 || k > n) return {};
  auto row = kind == FirstKind::generating ? s1_gen(n) : s1_signed(n);
  return row[static_cast<std::size_t>(k)];
}

std::pair<BivariateElement, BivariateElement> power_to_falling(int n) {
  BivariateElement lhs = x_q().pow(n);
  BivariateElement rhs;
  for (int k = 0; k <= n; ++k) {
    RationalFunctionQ c = q_pow_binom2(k) * RationalFunctionQ(q_factorial(k)) * s2_explicit(n, k);
    if (c.is_zero()) continue;
    rhs += q_binom_x(k) * BivariateElement(c);
  }
  return {lhs, rhs};
}

std::tuple<BivariateElement, BivariateElement, BivariateElement> qpow_expansion(int n) {
  BivariateElement first = q_pow_x(n);
  BivariateElement middle;
  for (int k = 0; k <= n; ++k) {
    RationalFunctionQ c = q_minus_one_pow(k) * q_pow_binom2(k) * RationalFunctionQ(gauss_binom(n, k));
    middle += q_falling(k) * BivariateElement(c);
  }
  std::vector<std::vector<PolyQ>> s1;
  for (int k = 0; k <= n; ++k) s1.push_back(s1_gen(k));
  BivariateElement right;
  const BivariateElement x = x_q();
  for (int m = 0; m <= n; ++m) {
    RationalFunctionQ c;
    for (int k = m; k <= n; ++k) {
      c += q_minus_one_pow(k) * RationalFunctionQ(gauss_binom(n, k) * s1[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)]);
    }
    right += x.pow(m) * BivariateElement(c);
  }
  return {first, middle, right};
}

std::string to_string(StirlingKind kind) {
  switch (kind) {
    case StirlingKind::first_gen: return "first_gen";
    case StirlingKind::second_gen: return "second_gen";
    case StirlingKind::second_explicit: return "second_explicit";
    case StirlingKind::second_alt: return "second_alt";
    case StirlingKind::first_signed: return "first_signed";
  }
  return "?";
}

std::vector<RationalFunctionQ> StirlingTable::row(int n) const {
  std::vector<RationalFunctionQ> out;
  for (int k = 0; k <= n; ++k) {
    auto it = entries.find({n, k});
    out.push_back(it == entries.end() ? RationalFunctionQ() : it->second);
  }
  return out;
}

StirlingTable make_stirling_table(StirlingKind kind, int max_n) {
  StirlingTable table{kind, max_n, {}};
  for (int n = 0; n <= max_n; ++n) {
    std::vector<RationalFunctionQ> row;
    switch (kind) {
      case StirlingKind::first_gen:
        for (auto& p : s1_gen(n)) row.emplace_back(p);
        break;
      case StirlingKind::first_signed:
        for (auto& p : s1_signed(n)) row.emplace_back(p);
        break;
      case StirlingKind::second_gen:
        row = s2_gen(n, n);
        break;
      case StirlingKind::second_explicit:
        for (int k = 0; k <= n; ++k) row.push_back(s2_explicit(n, k));
        break;
      case StirlingKind::second_alt:
        for (int k = 0; k <= n; ++k) row.push_back(s2_alt(n, k));
        break;
    }
    for (int k = 0; k <= n; ++k) table.entries.emplace(std::make_pair(n, k), row[static_cast<std::size_t>(k)]);
  }
  return table;
}

}  // namespace qcalc
