#pragma once

#include <string>

#include <json.hpp>

#include "vknot/invariants.hpp"
#include "vknot/verify.hpp"

namespace vknot {

enum class OutputFormat { Json, Text, Latex };

/// Accepts "json", "text", or "latex".
OutputFormat parse_format(const std::string& name);

/// Machine report for one long diagram: code, sizes, all polynomials in
/// fixed slot order (W0 W1 F00 F01 F10 F11 G.. H.. tildes), the closure
/// invariants, and the derivative-identity booleans.
nlohmann::ordered_json invariant_report_json(const std::string& code, const InvariantReport& r,
                                             const ClosedInvariants& c,
                                             const DerivativeChecks& checks);

std::string render_invariant_report(const std::string& code, const InvariantReport& r,
                                    const ClosedInvariants& c, const DerivativeChecks& checks,
                                    OutputFormat format);

/// Family report: the generated code, its pairing tables, computed
/// polynomials, and whether they match the closed forms.
nlohmann::ordered_json family_report_json(const std::string& name, int n,
                                          const LongDiagram& d, const InvariantReport& actual,
                                          const InvariantReport& expected,
                                          const PairingTables& tables,
                                          const PairingTables& expected_tables);

std::string render_family_report(const nlohmann::ordered_json& report, OutputFormat format);

std::string render_suite_result(const SuiteResult& r, OutputFormat format);

}  // namespace vknot
