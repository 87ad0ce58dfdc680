#pragma once

#include <string>
#include <utility>
#include <vector>

// Result types shared by the verification suites, the CLI and the acceptance
// runner. A suite is a batch of named assertions; each assertion carries the
// measured quantity (residual, order, count of mismatches...) and the bound it
// was held to, so reports stay auditable without rerunning anything.

namespace somf::rep {

struct Assertion {
    std::string name;   // what was checked, in plain terms
    std::string anchor; // the identity or quantity the check pins down
    bool pass = false;
    double measured = 0.0;  // semantics given by the name
    double tolerance = 0.0; // 0 for exact checks
};

struct SuiteReport {
    std::string suite;
    // Ordered key/value pairs (seed, tolerance scale, draw counts...). Kept as
    // strings so exact rationals survive serialization.
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<Assertion> assertions;
    double seconds = 0.0;

    bool all_pass() const;
    int failures() const;
};

// Exact-check assertion: measured is 0 on success, 1 on failure.
Assertion exact(std::string name, std::string anchor, bool ok);
// Residual-style assertion: passes iff |measured| <= tolerance.
Assertion bounded(std::string name, std::string anchor, double measured, double tolerance);
// Order-of-vanishing assertion: measured is the computed order.
Assertion order_is(std::string name, std::string anchor, long order, long want);
Assertion order_at_least(std::string name, std::string anchor, long order, long min);

// Stable JSON: object {suite, params, assertions:[{name, anchor, status,
// measured, tolerance}]}, key order fixed, reports wrapped in an array.
// Identical inputs produce identical bytes.
std::string to_json(const std::vector<SuiteReport>& reports);

// Human-readable rendering; one line per assertion when verbose, otherwise
// only failures are itemized.
std::string to_text(const SuiteReport& report, bool verbose);

} // namespace somf::rep
