// Command-line front end for the verification suites.
//
//   verify --all [--seed N] [--out report.json]      run every suite
//   verify --suite padic --suite weyl-walk           run a selection
//   verify --list                                    show the suite table
//   verify cfunc --suite e8 --at 9 --at 20           order/leading table
//   verify padic --p 3 --n 2 --rmax 2 --s 3          one local J-factor
//
// Exit status: 0 all checks pass, 1 some check failed, 2 usage error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "somf/cfunc.h"
#include "somf/errors.h"
#include "somf/padic_sums.h"
#include "somf/rational.h"
#include "somf/report.h"
#include "somf/sfunc.h"
#include "somf/suites.h"

using namespace somf;

namespace {

Rational parse_rational(const std::string& text) {
    try {
        Rational q(text);
        q.canonicalize();
        return q;
    } catch (const std::exception&) {
        throw UnknownName("cannot parse rational '" + text + "'");
    }
}

std::string classify(long order) {
    if (order > 0) return "zero";
    if (order < 0) return "pole";
    return "nonzero";
}

int run_cfunc_table(const std::string& selector, long a, long b,
                    const std::vector<std::string>& at) {
    std::vector<std::pair<std::string, sym::SFunction>> rows;
    if (selector == "e8") {
        // The parameterless family group around the rank-eight chain.
        for (const char* name :
             {"e8-cf-w0", "e8-cf-wm1", "e8-cmid", "e8-cinf-w0", "e8-w0-total"})
            rows.emplace_back(name, cfn::c_named(name));
    } else {
        rows.emplace_back(selector, cfn::c_named(selector, a, b));
    }
    std::vector<Rational> points;
    points.reserve(at.size());
    for (const std::string& t : at) points.push_back(parse_rational(t));

    std::cout << std::left << std::setw(16) << "family" << std::setw(10) << "point"
              << std::setw(8) << "order" << std::setw(10) << "class" << "leading" << "\n";
    for (const auto& [label, f] : rows) {
        for (const cfn::OrderRow& row : cfn::order_report(f, points)) {
            std::ostringstream pt;
            pt << row.point;
            std::cout << std::left << std::setw(16) << label << std::setw(10) << pt.str()
                      << std::setw(8) << row.order << std::setw(10) << classify(row.order)
                      << row.leading << "\n";
        }
    }
    return 0;
}

int run_padic_value(long p, long n, long rmax, long s, long long budget) {
    Rational j = padic::j_local(rat(s), n, p, padic::eta_standard(n), rmax, budget);
    std::cout << "J(s=" << s << "; n=" << n << ", p=" << p << ", r_max=" << rmax
              << ", eta=standard) = " << j << "\n";
    return 0;
}

void print_suite_list() {
    const auto& names = suites::suite_names();
    for (size_t i = 0; i < names.size(); ++i) {
        std::cout << std::setw(2) << (i + 1) << ". " << std::left << std::setw(16) << names[i]
                  << std::right << suites::suite_summary(names[i]) << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numeric and symbolic verification suites"};
    app.set_config("--config", "", "Read options from a key = value file");

    bool all = false;
    bool list = false;
    std::vector<std::string> selected;
    std::string out_path;
    suites::SuiteOptions opt;

    app.add_flag("--all", all, "Run every suite");
    app.add_flag("--list", list, "Print the suite table and exit");
    app.add_option("--suite", selected, "Run the named suite (repeatable)");
    app.add_option("--seed", opt.seed, "Seed for the randomized draws")->capture_default_str();
    app.add_option("--out", out_path, "Write the JSON report to this path");
    app.add_option("--tol-override", opt.tol_scale,
                   "Scale every inexact tolerance by this factor")
        ->capture_default_str();
    app.add_option("--budget", opt.budget, "Enumeration cap for the p-adic suite")
        ->capture_default_str();

    CLI::App* cfunc = app.add_subcommand("cfunc", "Order/leading table for a c-function family");
    std::string cf_selector;
    long cf_a = 0, cf_b = 0;
    std::vector<std::string> cf_at;
    cfunc->add_option("--suite", cf_selector, "Family group ('e8') or a single family name")
        ->required();
    cfunc->add_option("--a", cf_a, "First family parameter, when the family takes one");
    cfunc->add_option("--b", cf_b, "Second family parameter");
    cfunc->add_option("--at", cf_at, "Evaluation point, rational in s (repeatable)")->required();

    CLI::App* padic_cmd = app.add_subcommand("padic", "Evaluate one local J-factor");
    long pd_p = 0, pd_n = 0, pd_rmax = 1, pd_s = 0;
    padic_cmd->add_option("--p", pd_p, "Odd residue characteristic")->required();
    padic_cmd->add_option("--n", pd_n, "Number of hyperbolic planes")->required();
    padic_cmd->add_option("--rmax", pd_rmax, "Depth cap of the r-sum")->capture_default_str();
    padic_cmd->add_option("--s", pd_s, "Integer evaluation point")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cfunc->parsed()) return run_cfunc_table(cf_selector, cf_a, cf_b, cf_at);
        if (padic_cmd->parsed()) return run_padic_value(pd_p, pd_n, pd_rmax, pd_s, opt.budget);
        if (list) {
            print_suite_list();
            return 0;
        }
        if (!all && selected.empty()) {
            std::cerr << "nothing to do: pass --all, --suite, --list, or a subcommand\n";
            return 2;
        }

        std::vector<std::string> names = all ? suites::suite_names() : selected;
        std::vector<rep::SuiteReport> reports;
        for (const std::string& name : names) reports.push_back(suites::run_suite(name, opt));

        bool pass = true;
        for (const rep::SuiteReport& r : reports) {
            std::cout << rep::to_text(r, false);
            pass = pass && r.all_pass();
        }
        if (!out_path.empty()) {
            std::ofstream os(out_path, std::ios::binary);
            if (!os) {
                std::cerr << "cannot open '" << out_path << "' for writing\n";
                return 2;
            }
            os << rep::to_json(reports);
        }
        return pass ? 0 : 1;
    } catch (const UnknownName& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
