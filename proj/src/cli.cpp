#include "qcalc/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>

#include "qcalc/audit.hpp"
#include "qcalc/bernoulli.hpp"
#include "qcalc/bernstein.hpp"
#include "qcalc/errors.hpp"
#include "qcalc/padic.hpp"
#include "qcalc/qcore.hpp"
#include "qcalc/stirling.hpp"
#include "qcalc/tables.hpp"

namespace qcalc {

namespace {

constexpr int kComputationFailure = 1;
constexpr int kUsage = 2;
constexpr int kStrictGate = 3;

// Thrown for flag combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string labels_footer() {
  std::string text = "Audit labels:\n";
  for (const auto& label : registered_labels()) {
    text += "  " + label;
    auto variants = label_variants(label);
    if (!(variants.empty() || (variants.size() == 1 && variants[0].empty()))) {
      text += " [";
      for (std::size_t i = 0; i < variants.size(); ++i) text += (i ? ", " : "") + variants[i];
      text += "]";
    }
    text += "\n";
  }
  return text;
}

struct EvalFlags {
  std::string object;
  std::optional<int> n, k, x;
  std::optional<std::string> at;
  std::string variant = "gen";
  std::string route = "explicit";
};

struct AuditFlags {
  std::vector<std::string> ids;
  bool all = false;
  std::optional<int> max_n;
  std::uint64_t p = 3;
  std::string q = "4";
  int prec = 8;
  std::optional<int> threshold;
  bool no_padic = false;
  std::string out_path;
  std::string format = "json";
  bool strict = false;
  bool timing = false;
  unsigned threads = 0;
};

struct PadicFlags {
  std::string integrand = "const";
  int n = 1, m = 1, k = 0;
  std::uint64_t p = 3;
  std::string q = "4";
  int prec = 8;
  std::string levels;
};

struct TableFlags {
  std::string kind;
  int max_n = 5;
  std::string format = "csv";
};

int need(const std::optional<int>& v, const char* flag, const std::string& object) {
  if (!v) throw UsageError("eval " + object + " needs " + flag);
  return *v;
}

int run_eval(const EvalFlags& f, std::ostream& out) {
  std::optional<Rational> q0;
  if (f.at) q0 = parse_rational(*f.at);
  auto emit = [&](const RationalFunctionQ& v) {
    out << (q0 ? ratfun_eval(v, *q0).get_str() : v.to_string()) << "\n";
  };
  const std::string& o = f.object;
  if (o == "beta") {
    emit(beta(need(f.n, "--n", o)));
  } else if (o == "beta-order") {
    emit(beta_order(need(f.n, "--n", o), need(f.k, "--k", o)));
  } else if (o == "beta-inverse") {
    // --k is the subscript, --n the (negated) order.
    emit(beta_inverse_order(need(f.k, "--k", o), need(f.n, "--n", o)));
  } else if (o == "stirling1") {
    const FirstKind kind = f.variant == "signed" ? FirstKind::signed_product : FirstKind::generating;
    emit(RationalFunctionQ(s1_value(kind, need(f.n, "--n", o), need(f.k, "--k", o))));
  } else if (o == "stirling2") {
    const int n = need(f.n, "--n", o), k = need(f.k, "--k", o);
    if (f.route == "alt") {
      emit(s2_alt(n, k));
    } else if (f.route == "gen") {
      emit(k < 0 ? RationalFunctionQ() : s2_gen(n, k)[static_cast<std::size_t>(k)]);
    } else {
      emit(s2_explicit(n, k));
    }
  } else if (o == "qbinom") {
    emit(RationalFunctionQ(gauss_binom(need(f.n, "--n", o), need(f.k, "--k", o))));
  } else if (o == "bernstein") {
    BivariateElement b = bernstein(need(f.k, "--k", o), need(f.n, "--n", o));
    if (q0) {
      out << eval_point(b, need(f.x, "--x (with --at)", o), *q0).get_str() << "\n";
    } else if (f.x) {
      out << b.specialize(*f.x).to_string() << "\n";
    } else {
      out << b.to_string() << "\n";
    }
  }
  return 0;
}

int run_audit(const AuditFlags& f, std::ostream& out, std::ostream& err) {
  if (f.all == !f.ids.empty()) throw UsageError("audit needs exactly one of --id or --all");
  const auto& known = registered_labels();
  for (const auto& id : f.ids) {
    if (std::find(known.begin(), known.end(), id) == known.end()) {
      throw UsageError("unknown audit label '" + id + "' (see --help)");
    }
  }
  if (f.max_n && *f.max_n < 0) throw UsageError("--max-n must be nonnegative");
  AuditConfig config;
  config.bounds.max_n = f.max_n;
  config.labels = f.ids;
  config.include_padic = !f.no_padic;
  if (!f.no_padic) config.padic = make_padic_context(f.p, f.prec, parse_rational(f.q));
  config.threshold = f.threshold;
  config.threads = f.threads;
  config.with_timing = f.timing;

  AuditReport report = audit_all(config);
  const std::string body = f.format == "text" ? report.to_text() : report.to_json().dump(2) + "\n";
  if (f.out_path.empty()) {
    out << body;
  } else {
    std::ofstream file(f.out_path, std::ios::binary);
    if (!file || !(file << body)) {
      err << "cannot write " << f.out_path << "\n";
      return kComputationFailure;
    }
  }
  if (f.strict) {
    for (const auto& v : report.verdicts) {
      if ((v.id.label == "EQ8_VS_DELTA" || v.id.label == "EQ10") && v.verdict != VerdictKind::VERIFIED) {
        err << "strict: " << v.id.label << " " << params_to_string(v.params) << " is " << to_string(v.verdict) << "\n";
        return kStrictGate;
      }
    }
  }
  return 0;
}

std::pair<int, int> parse_levels(const std::string& text, int prec) {
  if (text.empty()) return {1, prec};
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int l = std::stoi(text);
      return {l, l};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("--levels expects a..b, got '" + text + "'");
  }
}

int run_padic(const PadicFlags& f, std::ostream& out) {
  PadicContext ctx = make_padic_context(f.p, f.prec, parse_rational(f.q));
  auto [first, last] = parse_levels(f.levels, f.prec);
  if (first < 1 || last < first) throw UsageError("--levels needs 1 <= a <= b");

  IntegrandSpec spec;
  std::optional<Rational> target;
  const Rational& q = ctx.q;
  if (f.integrand == "const") {
    spec = IntegrandSpec::constant();
    target = Rational(1);
  } else if (f.integrand == "power_xq") {
    if (f.n < 0) throw UsageError("--n must be nonnegative");
    spec = IntegrandSpec::power_xq(f.n);
    target = ratfun_eval(beta(f.n), q);
  } else if (f.integrand == "qpow") {
    spec = IntegrandSpec::qpow(f.m);
    if (f.m != -1) target = ratfun_eval(moment(f.m), q);
  } else if (f.integrand == "qbinom_x") {
    if (f.n < 0) throw UsageError("--n must be nonnegative");
    spec = IntegrandSpec::qbinom_x(f.n);
    target = ratfun_eval(integrate_exact(q_binom_x(f.n)), q);
  } else {
    if (f.k < 0 || f.k > f.n) throw UsageError("bernstein needs 0 <= k <= n");
    spec = IntegrandSpec::bernstein(f.k, f.n);
  }

  for (const auto& row : convergence_profile(ctx, spec, first, last, target)) {
    out << row.level << "," << row.value.residue_string() << "," << row.value.precision();
    if (row.agreement) out << "," << row.agreement->to_string();
    out << "\n";
  }
  return 0;
}

int run_table(const TableFlags& f, std::ostream& out) {
  if (f.max_n < 0) throw UsageError("--max-n must be nonnegative");
  out << render_table(make_table(f.kind, f.max_n), parse_table_format(f.format));
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-analog arithmetic and identity audits"};
  app.name("qcalc");
  app.require_subcommand(1);
  app.footer(labels_footer());

  EvalFlags ef;
  auto* eval = app.add_subcommand("eval", "Evaluate one object exactly in Q(q), or at q = --at");
  eval->add_option("object", ef.object, "Object to evaluate")
      ->required()
      ->check(CLI::IsMember({"beta", "beta-order", "beta-inverse", "stirling1", "stirling2", "qbinom", "bernstein"}));
  eval->add_option("--n", ef.n, "Index n (order for beta-inverse)");
  eval->add_option("--k", ef.k, "Index k (subscript for beta-inverse)");
  eval->add_option("--x", ef.x, "Integer x for bernstein (t = q^x)");
  eval->add_option("--at", ef.at, "Rational q0 (\"a/b\" or integer)");
  eval->add_option("--variant", ef.variant, "stirling1 convention: gen or signed")
      ->check(CLI::IsMember({"gen", "signed"}))
      ->capture_default_str();
  eval->add_option("--route", ef.route, "stirling2 route: explicit, gen or alt")
      ->check(CLI::IsMember({"explicit", "gen", "alt"}))
      ->capture_default_str();

  AuditFlags af;
  auto* audit = app.add_subcommand("audit", "Audit the registered identities");
  audit->footer(labels_footer());
  audit->add_option("--id", af.ids, "Label to audit (repeatable)");
  audit->add_flag("--all", af.all, "Audit every registered label");
  audit->add_option("--max-n", af.max_n, "Shared bound on the leading index (default: per label)");
  audit->add_option("--p", af.p, "Odd prime for p-adic labels")->capture_default_str();
  audit->add_option("--q", af.q, "Rational q for p-adic labels")->capture_default_str();
  audit->add_option("--prec", af.prec, "Working precision N")->capture_default_str();
  audit->add_option("--threshold", af.threshold, "Agreement needed for NUMERICALLY_CONSISTENT (default N-2)");
  audit->add_flag("--no-padic", af.no_padic, "Skip p-adic labels");
  audit->add_option("--out", af.out_path, "Write the report here instead of stdout");
  audit->add_option("--format", af.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  audit->add_flag("--strict", af.strict, "Exit 3 when any EQ8_VS_DELTA or EQ10 verdict is not VERIFIED");
  audit->add_flag("--timing", af.timing, "Record per-label timing in meta.timing");
  audit->add_option("--threads", af.threads, "Worker threads (0: hardware concurrency)")->capture_default_str();

  PadicFlags pf;
  auto* padic = app.add_subcommand("padic", "Convergence profile of a p-adic Riemann sum");
  padic->add_option("--integrand", pf.integrand, "Integrand")
      ->check(CLI::IsMember({"const", "power_xq", "qpow", "qbinom_x", "bernstein"}))
      ->capture_default_str();
  padic->add_option("--n", pf.n, "n for power_xq, qbinom_x and bernstein")->capture_default_str();
  padic->add_option("--m", pf.m, "m for qpow")->capture_default_str();
  padic->add_option("--k", pf.k, "k for bernstein")->capture_default_str();
  padic->add_option("--p", pf.p, "Odd prime")->capture_default_str();
  padic->add_option("--q", pf.q, "Rational q with v_p(q-1) >= 1")->capture_default_str();
  padic->add_option("--prec", pf.prec, "Working precision N")->capture_default_str();
  padic->add_option("--levels", pf.levels, "Level range a..b (default 1..N)");

  TableFlags tf;
  auto* table = app.add_subcommand("table", "Print a table of exact values");
  table->add_option("kind", tf.kind, "Table kind")->required()->check(CLI::IsMember(table_kinds()));
  table->add_option("--max-n", tf.max_n, "Largest row index")->capture_default_str();
  table->add_option("--format", tf.format, "csv, json, latex or text")
      ->check(CLI::IsMember({"csv", "json", "latex", "text"}))
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (eval->parsed()) return run_eval(ef, out);
    if (audit->parsed()) return run_audit(af, out, err);
    if (padic->parsed()) return run_padic(pf, out);
    return run_table(tf, out);
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const InadmissibleContext& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const IndexError& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const UnknownIdentity& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kComputationFailure;
  }
}

}  // namespace qcalc
