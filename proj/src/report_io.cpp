#include "vknot/report_io.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace vknot {

namespace {

using nlohmann::ordered_json;

std::vector<std::pair<std::string, const LaurentPoly*>> slots(const InvariantReport& r) {
    std::vector<std::pair<std::string, const LaurentPoly*>> out;
    out.emplace_back("W0", &r.W[0]);
    out.emplace_back("W1", &r.W[1]);
    for (const auto& [name, table] :
         std::initializer_list<std::pair<const char*, const std::array<std::array<LaurentPoly, 2>, 2>*>>{
             {"F", &r.F}, {"G", &r.G}, {"H", &r.H}})
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                out.emplace_back(name + std::to_string(a) + std::to_string(b),
                                 &(*table)[a][b]);
    out.emplace_back("Wtilde", &r.W_tilde);
    out.emplace_back("Ftilde", &r.F_tilde);
    out.emplace_back("Gtilde", &r.G_tilde);
    out.emplace_back("Htilde", &r.H_tilde);
    return out;
}

ordered_json checks_json(const DerivativeChecks& c) {
    return ordered_json{{"writhe_first_equal", c.writhe_first_equal},
                        {"g_diagonal_vanish", c.g_diagonal_vanish},
                        {"g_off_diagonal_cancel", c.g_off_diagonal_cancel},
                        {"f_matches_h_offdiag", c.f_matches_h_offdiag},
                        {"second_derivative_mod4", c.second_derivative_mod4},
                        {"all", c.all()}};
}

ordered_json tables_json(const PairingTables& t) {
    return ordered_json{
        {"labels", t.labels}, {"A", t.A}, {"B", t.B}, {"C", t.C}, {"v", t.v}};
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "json") return OutputFormat::Json;
    if (name == "text") return OutputFormat::Text;
    if (name == "latex") return OutputFormat::Latex;
    throw std::invalid_argument("unknown format: " + name);
}

ordered_json invariant_report_json(const std::string& code, const InvariantReport& r,
                                   const ClosedInvariants& c, const DerivativeChecks& checks) {
    ordered_json polys;
    for (const auto& [name, p] : slots(r)) polys[name] = p->str();
    return ordered_json{{"schema", "vknot-report-v1"},
                        {"code", code},
                        {"n_chords", r.n_chords},
                        {"genus", r.genus},
                        {"omega", {r.omega[0], r.omega[1]}},
                        {"polynomials", polys},
                        {"closure", ordered_json{{"W", c.W.str()},
                                                 {"I", c.first.str()},
                                                 {"II", c.second.str()}}},
                        {"derivative_checks", checks_json(checks)}};
}

std::string render_invariant_report(const std::string& code, const InvariantReport& r,
                                    const ClosedInvariants& c, const DerivativeChecks& checks,
                                    OutputFormat format) {
    if (format == OutputFormat::Json)
        return invariant_report_json(code, r, c, checks).dump(2) + "\n";
    std::ostringstream os;
    if (format == OutputFormat::Text) {
        os << "code: " << code << "\n";
        os << "chords: " << r.n_chords << "  genus: " << r.genus << "  omega: ("
           << r.omega[0] << ", " << r.omega[1] << ")\n";
        for (const auto& [name, p] : slots(r)) os << name << " = " << p->str() << "\n";
        os << "closure W = " << c.W.str() << "\n";
        os << "closure I = " << c.first.str() << "\n";
        os << "closure II = " << c.second.str() << "\n";
        os << "derivative identities: " << (checks.all() ? "all hold" : "VIOLATED") << "\n";
    } else {
        os << "\\begin{align*}\n";
        for (const auto& [name, p] : slots(r)) {
            std::string label = name;
            if (label.size() == 3)
                label = label.substr(0, 1) + "_{" + label.substr(1) + "}";
            else if (label == "W0" || label == "W1")
                label = "W_{" + label.substr(1) + "}";
            else
                label = "\\widetilde{" + label.substr(0, 1) + "}";
            os << label << "(K;t) &= " << p->latex() << " \\\\\n";
        }
        os << "W(\\widehat{K};t) &= " << c.W.latex() << " \\\\\n";
        os << "I(\\widehat{K};t) &= " << c.first.latex() << " \\\\\n";
        os << "I\\!I(\\widehat{K};t) &= " << c.second.latex() << "\n";
        os << "\\end{align*}\n";
    }
    return os.str();
}

ordered_json family_report_json(const std::string& name, int n, const LongDiagram& d,
                                const InvariantReport& actual, const InvariantReport& expected,
                                const PairingTables& tables,
                                const PairingTables& expected_tables) {
    ordered_json polys, mismatches = ordered_json::array();
    for (const auto& [slot, p] : slots(actual)) polys[slot] = p->str();
    const auto exp_slots = slots(expected);
    const auto act_slots = slots(actual);
    for (std::size_t i = 0; i < act_slots.size(); ++i)
        if (*act_slots[i].second != *exp_slots[i].second)
            mismatches.push_back(act_slots[i].first);
    const bool tables_match = tables == expected_tables;
    return ordered_json{{"schema", "vknot-family-v1"},
                        {"family", name},
                        {"n", n},
                        {"code", d.code()},
                        {"tables", tables_json(tables)},
                        {"tables_match_closed_form", tables_match},
                        {"polynomials", polys},
                        {"mismatched_slots", mismatches},
                        {"matches_closed_form", mismatches.empty() && tables_match}};
}

std::string render_family_report(const ordered_json& report, OutputFormat format) {
    if (format == OutputFormat::Json) return report.dump(2) + "\n";
    std::ostringstream os;
    os << "family " << report["family"].get<std::string>() << "(" << report["n"] << ")\n";
    os << "code: " << report["code"].get<std::string>() << "\n";
    for (const auto& [name, p] : report["polynomials"].items())
        os << name << " = " << p.get<std::string>() << "\n";
    os << "tables match closed form: "
       << (report["tables_match_closed_form"].get<bool>() ? "yes" : "NO") << "\n";
    os << "polynomials match closed form: "
       << (report["mismatched_slots"].empty() ? "yes" : "NO") << "\n";
    return os.str();
}

std::string render_suite_result(const SuiteResult& r, OutputFormat format) {
    if (format == OutputFormat::Json) return r.to_json().dump(2) + "\n";
    std::ostringstream os;
    os << "suite " << r.suite << ": " << (r.passed() ? "pass" : "FAIL") << " (" << r.checks
       << " checks, " << r.failures << " failures, trials=" << r.trials << ", seed=" << r.seed
       << ")\n";
    if (!r.passed()) os << r.certificates.dump(2) << "\n";
    return os.str();
}

}  // namespace vknot
