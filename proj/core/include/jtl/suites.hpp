#pragma once

#include <string>
#include <vector>

#include "jtl/catalog.hpp"

namespace jtl {

enum class SuiteStatus { pass, fail, skipped };

std::string to_string(SuiteStatus status);

struct SuiteReport {
  std::string suite_id;
  std::string ring;
  std::string instance;
  SuiteStatus status = SuiteStatus::pass;
  std::string note;          // "vacuous", budget message, ...
  std::string witness_json;  // compact JSON object; empty when absent
  long elapsed_ms = 0;       // in-memory only; never serialized
};

// Registered suite ids, in execution order.
const std::vector<std::string>& suite_ids();

// Runs one suite (or every suite for "all") over the catalog; reports come
// back sorted by (suite, ring, instance) and are identical for identical
// inputs regardless of the worker count.
std::vector<SuiteReport> run_suites(const Catalog& catalog,
                                    const std::string& suite_or_all,
                                    int jobs = 1,
                                    const Limits& limits = default_limits());

}  // namespace jtl
