#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "somf/report.h"

// The top-level verification suites. Each suite batches the checks for one
// acceptance row: exact symbolic identities run as equalities, numeric ones as
// residual bounds with pinned tolerances. Suites are independent and
// deterministic given (seed, budget), so reports are reproducible bytes.

namespace somf::suites {

struct SuiteOptions {
    std::uint64_t seed = 42;
    // Multiplies every inexact upper bound; 1 is the pinned contract. Lower
    // bounds (failure detectors) are never scaled.
    double tol_scale = 1.0;
    // Enumeration cap forwarded to the p-adic counting routines.
    long long budget = 100000000;
};

// Names in fixed display order, one per acceptance row.
const std::vector<std::string>& suite_names();

// One-line description of what the named suite establishes.
std::string suite_summary(const std::string& name);

// Wall-clock ceiling the suite commits to, in seconds.
double suite_time_limit(const std::string& name);

// Runs one suite. Throws UnknownName for names not in suite_names(); any
// other exception escaping a check is converted into a failed assertion so
// batch runs always complete.
rep::SuiteReport run_suite(const std::string& name, const SuiteOptions& opt);

std::vector<rep::SuiteReport> run_all(const SuiteOptions& opt);

} // namespace somf::suites
