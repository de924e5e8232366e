#pragma once

#include "relkit/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace relkit {

struct VerifyConfig {
    std::uint64_t seed = 42;
    int trials = 100;
    int max_dim = 8;
    Tolerances tol;

    void validate() const {
        if (trials < 1) throw InvalidInput("VerifyConfig: trials must be >= 1");
        if (max_dim < 1) throw InvalidInput("VerifyConfig: max_dim must be >= 1");
        tol.validate();
    }
};

struct PropertyResult {
    std::string name;
    int trials = 0;
    int passes = 0;
    double worst_residual = 0.0;
    std::string first_failure;  ///< empty when all trials passed
};

struct VerifyReport {
    VerifyConfig config;
    std::vector<PropertyResult> properties;
    bool all_passed = false;
};

/// Runs every named invariant suite for `trials` seeded random instances.
/// Per-trial seeds derive from (seed, property name, trial index), so the
/// report is reproducible for a fixed configuration.
VerifyReport run_verify(const VerifyConfig& config);

nlohmann::json verify_report_to_json(const VerifyReport& report);

std::vector<std::string> property_names();

}  // namespace relkit
