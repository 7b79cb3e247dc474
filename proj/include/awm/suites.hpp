#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "awm/arith.hpp"
#include "awm/report.hpp"

namespace awm {

// n, when given, lowers every size inside a suite to at most n; the defaults
// are also the caps.
struct SuiteOptions {
  std::optional<long> n;
  uint64_t seed = 1;
};

// suites run by "all", in order
std::vector<std::string> suite_names();
// every accepted name, including aliases that select part of a suite
std::vector<std::string> known_suites();
// throws std::invalid_argument for an unknown name
VerificationReport run_suite(const std::string& name, const SuiteOptions& o = {});

// conjecture scans; violations are reported, never thrown
VerificationReport scan_conjectures(const SuiteOptions& o = {});

// Closed-form and connection formulas by name, for export.  Each returns the
// value at index n (for the symmetric and antisymmetric families, the moment
// of order 2n).  Throws std::invalid_argument for an unknown name or an index
// above the formula's cap.
std::vector<std::string> formula_names();
RatFunc eval_formula(const std::string& name, long n);

}  // namespace awm
