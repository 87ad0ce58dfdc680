// Acceptance runner: executes every verification suite with the pinned
// default options and prints one line per suite. A suite line fails if any
// of its assertions failed or if it blew its own time budget. Exit status is
// 0 only when every line passes, so ctest can gate on this binary directly.

#include <chrono>
#include <cstdio>
#include <string>

#include "somf/report.h"
#include "somf/suites.h"

int main() {
    using clock = std::chrono::steady_clock;
    somf::suites::SuiteOptions opt; // seed 42, pinned tolerances

    const auto& names = somf::suites::suite_names();
    int failed = 0;
    for (size_t i = 0; i < names.size(); ++i) {
        const std::string& name = names[i];
        auto t0 = clock::now();
        somf::rep::SuiteReport r = somf::suites::run_suite(name, opt);
        double dt = std::chrono::duration<double>(clock::now() - t0).count();
        double limit = somf::suites::suite_time_limit(name);

        bool pass = r.all_pass() && dt <= limit;
        if (!pass) ++failed;
        std::printf("%s  %2zu/%zu  %-16s  %3d checks  %6.2fs (limit %.0fs)\n",
                    pass ? "PASS" : "FAIL", i + 1, names.size(), name.c_str(),
                    static_cast<int>(r.assertions.size()), dt, limit);
        if (!r.all_pass()) {
            for (const somf::rep::Assertion& a : r.assertions) {
                if (a.pass) continue;
                std::printf("      failed: %s (measured=%g tol=%g)\n", a.name.c_str(), a.measured,
                            a.tolerance);
                std::printf("              %s\n", a.anchor.c_str());
            }
        } else if (dt > limit) {
            std::printf("      exceeded the %.0fs budget\n", limit);
        }
    }
    if (failed == 0) {
        std::printf("all %zu suites pass\n", names.size());
        return 0;
    }
    std::printf("%d of %zu suites FAILED\n", failed, names.size());
    return 1;
}
