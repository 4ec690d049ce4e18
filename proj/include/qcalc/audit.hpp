#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qcalc/bivariate.hpp"
#include "qcalc/padic.hpp"
#include "qcalc/ratfun.hpp"

namespace qcalc {

enum class AuditMode { exact_Qq, bivariate_Qqt, padic };
enum class VerdictKind { VERIFIED, FALSIFIED, NUMERICALLY_CONSISTENT, MALFORMED };

std::string to_string(AuditMode mode);
std::string to_string(VerdictKind kind);

/// Label plus the variant under which it is checked ("" when the label has one reading).
struct IdentityId {
  std::string label;
  std::string variant;
  friend bool operator==(const IdentityId&, const IdentityId&) = default;
};

/// Ordered (name, value) pairs; tuples compare lexicographically by value.
using Params = std::vector<std::pair<std::string, int>>;

std::string params_to_string(const Params& params);

struct AuditVerdict {
  IdentityId id;
  Params params;
  AuditMode mode = AuditMode::exact_Qq;
  VerdictKind verdict = VerdictKind::VERIFIED;
  std::optional<int> agreement;  // NUMERICALLY_CONSISTENT and padic FALSIFIED
  bool agreement_at_least = false;
  std::string reason;            // MALFORMED
  nlohmann::json witness;        // lhs, rhs, difference for FALSIFIED
  double elapsed_ms = 0;
};

nlohmann::json to_json(const AuditVerdict& v, bool with_timing = false);

/// Shared upper bound on the leading index of every label; unset uses per-label defaults.
struct AuditBounds {
  std::optional<int> max_n;
};

struct AuditConfig {
  AuditBounds bounds;
  std::vector<std::string> labels;  // empty: every registered label
  bool include_padic = true;
  PadicContext padic = make_padic_context(3, 8, 4);
  std::optional<int> threshold;  // agreement needed for NUMERICALLY_CONSISTENT; default N-2
  unsigned threads = 0;          // 0: hardware concurrency
  bool with_timing = false;      // per-label elapsed time in meta.timing
  std::string generated_at;      // filled by audit_all when empty
};

/// Registry introspection.
const std::vector<std::string>& registered_labels();
std::vector<std::string> label_variants(const std::string& label);
AuditMode label_mode(const std::string& label);
int default_bound(const std::string& label);
/// Short anchor text naming the display each label encodes.
std::string label_anchor(const std::string& label);

/// Parameter tuples for a label at the given leading bound, in lexicographic order.
std::vector<Params> label_tuples(const std::string& label, int bound);

/// One verdict per tuple (per variant when `id.variant` is empty), deterministic order.
/// Throws UnknownIdentity for unregistered labels or variants.
std::vector<AuditVerdict> audit_identity(const IdentityId& id, const AuditBounds& bounds,
                                         const std::optional<PadicContext>& ctx, std::optional<int> threshold = {},
                                         unsigned threads = 0);

/// Verdict for a single tuple.
AuditVerdict audit_tuple(const IdentityId& id, const Params& params, const std::optional<PadicContext>& ctx,
                         std::optional<int> threshold = {});

/// Lexicographically smallest falsifying tuple within bounds.
/// Throws NotACounterexample when `tuple` itself does not falsify.
Params minimize_counterexample(const IdentityId& id, const Params& tuple, const AuditBounds& bounds,
                               const std::optional<PadicContext>& ctx, std::optional<int> threshold = {});

struct SummaryLine {
  IdentityId id;
  int verified = 0;
  int falsified = 0;
  int consistent = 0;
  int malformed = 0;
  std::optional<Params> minimal_counterexample;
};

struct AuditReport {
  nlohmann::json meta;
  std::vector<AuditVerdict> verdicts;
  std::vector<SummaryLine> summary;
  bool with_timing = false;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

AuditReport audit_all(const AuditConfig& config);

}  // namespace qcalc
