#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frattini/checks.hpp"
#include "frattini/group.hpp"

namespace frattini {

struct GroupSpec {
  std::string spec;        // builtin expression, or a file path
  bool from_file = false;
  Budgets budgets;
};

struct SuiteConfig {
  std::vector<GroupSpec> groups;
  std::vector<std::string> checks;        // subset of check_registry()
  std::uint64_t max_order = 2000;         // ceiling for the per-normal-subgroup suites
  std::vector<unsigned> vdovin_ns = {3, 4, 5, 6, 7, 8};
  std::string format = "json";            // json | text
  std::string out;                        // empty: stdout
};

std::vector<std::string> check_registry();

// The pinned corpus: every builtin at small parameters, with budget
// overrides for the handful of large members.
SuiteConfig default_suite();

// Deterministic record list, ordered by (group order, group name, check
// name).  Failures are isolated per (group, check).
std::vector<CheckRecord> run_suite(const SuiteConfig& config);

std::string emit_report(const std::vector<CheckRecord>& records, const std::string& format);

unsigned count_status(const std::vector<CheckRecord>& records, CheckStatus s);

}  // namespace frattini
