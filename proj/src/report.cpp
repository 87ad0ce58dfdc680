#include "somf/report.h"

#include <cmath>
#include <sstream>

#include "json.hpp"

namespace somf::rep {

bool SuiteReport::all_pass() const { return failures() == 0; }

int SuiteReport::failures() const {
    int bad = 0;
    for (const Assertion& a : assertions)
        if (!a.pass) ++bad;
    return bad;
}

Assertion exact(std::string name, std::string anchor, bool ok) {
    Assertion a;
    a.name = std::move(name);
    a.anchor = std::move(anchor);
    a.pass = ok;
    a.measured = ok ? 0.0 : 1.0;
    a.tolerance = 0.0;
    return a;
}

Assertion bounded(std::string name, std::string anchor, double measured, double tolerance) {
    Assertion a;
    a.name = std::move(name);
    a.anchor = std::move(anchor);
    a.measured = measured;
    a.tolerance = tolerance;
    a.pass = std::abs(measured) <= tolerance;
    return a;
}

Assertion order_is(std::string name, std::string anchor, long order, long want) {
    Assertion a;
    a.name = std::move(name);
    a.anchor = std::move(anchor);
    a.measured = static_cast<double>(order);
    a.tolerance = 0.0;
    a.pass = order == want;
    return a;
}

Assertion order_at_least(std::string name, std::string anchor, long order, long min) {
    Assertion a;
    a.name = std::move(name);
    a.anchor = std::move(anchor);
    a.measured = static_cast<double>(order);
    a.tolerance = 0.0;
    a.pass = order >= min;
    return a;
}

std::string to_json(const std::vector<SuiteReport>& reports) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const SuiteReport& r : reports) {
        nlohmann::ordered_json jr;
        jr["suite"] = r.suite;
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.params) params[k] = v;
        jr["params"] = std::move(params);
        nlohmann::ordered_json as = nlohmann::ordered_json::array();
        for (const Assertion& a : r.assertions) {
            nlohmann::ordered_json ja;
            ja["name"] = a.name;
            ja["anchor"] = a.anchor;
            ja["status"] = a.pass ? "pass" : "fail";
            ja["measured"] = a.measured;
            ja["tolerance"] = a.tolerance;
            as.push_back(std::move(ja));
        }
        jr["assertions"] = std::move(as);
        out.push_back(std::move(jr));
    }
    return out.dump(2) + "\n";
}

std::string to_text(const SuiteReport& report, bool verbose) {
    std::ostringstream os;
    const int n = static_cast<int>(report.assertions.size());
    const int bad = report.failures();
    os << (bad == 0 ? "PASS" : "FAIL") << "  " << report.suite << "  (" << (n - bad) << "/" << n
       << " checks";
    if (!report.params.empty()) {
        os << "; ";
        bool first = true;
        for (const auto& [k, v] : report.params) {
            if (!first) os << ", ";
            os << k << "=" << v;
            first = false;
        }
    }
    os << ")\n";
    for (const Assertion& a : report.assertions) {
        if (!verbose && a.pass) continue;
        os << "  [" << (a.pass ? "pass" : "FAIL") << "] " << a.name << "  measured="
           << a.measured;
        if (a.tolerance != 0.0) os << " tol=" << a.tolerance;
        os << "\n";
        if (!a.pass) os << "         " << a.anchor << "\n";
    }
    return os.str();
}

} // namespace somf::rep
