#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace vknot {

/// Outcome of one randomized property suite. Deterministic in (trials,
/// seed): per-trial randomness is derived from seed + trial index.
struct SuiteResult {
    std::string suite;
    int trials = 0;
    std::uint64_t seed = 0;
    int checks = 0;
    int failures = 0;
    nlohmann::ordered_json certificates = nlohmann::ordered_json::array();

    bool passed() const { return failures == 0; }
    nlohmann::ordered_json to_json() const;
};

/// Known suites: moves, symmetry, product, crossing-change, finite-type,
/// closure, derivatives. Throws std::invalid_argument on other names.
SuiteResult run_suite(const std::string& name, int trials, std::uint64_t seed);

std::vector<std::string> suite_names();

}  // namespace vknot
