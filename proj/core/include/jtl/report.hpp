#pragma once

#include <string>
#include <vector>

#include "jtl/suites.hpp"

namespace jtl {

// One record per line; byte-identical across runs for identical inputs
// (elapsed times are deliberately excluded).
std::string emit_jsonl(const std::vector<SuiteReport>& reports);

// Per-suite pass/fail/skip aggregation plus an overall verdict line.
std::string emit_summary(const std::vector<SuiteReport>& reports);

bool has_failures(const std::vector<SuiteReport>& reports);

}  // namespace jtl
