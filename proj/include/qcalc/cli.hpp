#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qcalc {

/// Runs `qcalc <args...>` (program name excluded) against the given streams.
/// Exit codes: 0 success, 1 computation failure (e.g. a pole), 2 usage error,
/// 3 --strict gate tripped by an EQ8_VS_DELTA or EQ10 verdict.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcalc
