#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vknot/family.hpp"
#include "vknot/invariants.hpp"
#include "vknot/report_io.hpp"
#include "vknot/verify.hpp"

namespace {

using vknot::OutputFormat;

int report_one(const std::string& code, OutputFormat format) {
    const vknot::LongDiagram d = vknot::LongDiagram::parse(code);
    const vknot::InvariantReport r = vknot::full_report(d);
    const vknot::ClosedInvariants c = vknot::closed_invariants(vknot::closure(d));
    const vknot::DerivativeChecks checks = vknot::check_derivative_identities(r);
    std::cout << vknot::render_invariant_report(d.code(), r, c, checks, format);
    return checks.all() ? 0 : 1;
}

std::vector<std::string> read_codes(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::vector<std::string> codes;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r\n");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r\n");
        codes.push_back(line.substr(first, last - first + 1));
    }
    return codes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Writhe and intersection polynomials of long virtual knots"};
    app.require_subcommand(1);
    std::string format_name = "text";
    app.add_option("--format", format_name, "Output format: json, text, or latex")
        ->check(CLI::IsMember({"json", "text", "latex"}));

    auto* inv = app.add_subcommand("invariants", "Compute all invariants of a Gauss code");
    inv->fallthrough();
    std::string code;
    std::string file;
    inv->add_option("code", code, "Gauss code, e.g. \"O1+ U2+ O3+ U1+ O2+ U3+\"");
    inv->add_option("--file", file, "File with one Gauss code per line; # starts a comment");

    auto* verify = app.add_subcommand("verify", "Run a randomized property suite");
    verify->fallthrough();
    std::string suite;
    int trials = 200;
    std::uint64_t seed = 0;
    verify->add_option("suite", suite, "One of: moves, symmetry, product, crossing-change, finite-type, closure, derivatives")
        ->required()
        ->check(CLI::IsMember(vknot::suite_names()));
    verify->add_option("--trials", trials, "Number of randomized trials");
    verify->add_option("--seed", seed, "Random seed");

    auto* family = app.add_subcommand("family", "Golden test family diagrams");
    family->fallthrough();
    std::string family_name;
    int family_n = 2;
    family->add_option("name", family_name, "K or Kprime")
        ->required()
        ->check(CLI::IsMember({"K", "Kprime"}));
    family->add_option("n", family_n, "Family parameter (>= 2)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code_ = app.exit(e);
        return code_ == 0 ? 0 : 2;
    }

    try {
        const OutputFormat format = vknot::parse_format(format_name);
        if (inv->parsed()) {
            if (!file.empty()) {
                int rc = 0;
                for (const std::string& c : read_codes(file)) rc |= report_one(c, format);
                return rc;
            }
            return report_one(code, format);
        }
        if (verify->parsed()) {
            const vknot::SuiteResult r = vknot::run_suite(suite, trials, seed);
            std::cout << vknot::render_suite_result(r, format);
            return r.passed() ? 0 : 1;
        }
        // family
        const vknot::LongDiagram d = family_name == "K" ? vknot::family_K(family_n)
                                                        : vknot::family_Kprime(family_n);
        const vknot::InvariantReport actual = vknot::full_report(d);
        const vknot::InvariantReport expected = family_name == "K"
                                                    ? vknot::family_K_expected(family_n)
                                                    : vknot::family_Kprime_expected(family_n);
        const auto report = vknot::family_report_json(
            family_name, family_n, d, actual, expected, vknot::pairing_tables(d),
            vknot::family_expected_tables(family_n));
        std::cout << vknot::render_family_report(report, format);
        return report["matches_closed_form"].get<bool>() ? 0 : 1;
    } catch (const vknot::parse_error& e) {
        std::cerr << "parse error at byte " << e.position() << ": " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
