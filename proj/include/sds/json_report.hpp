#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sds/phase_space.hpp"
#include "sds/verify.hpp"

namespace sds {

// Machine-readable build report. Top-level keys: config (echoed from the
// caller), components, fixed_points, goe_count, timings. Component entries
// carry size, depth, shape, cycle_states, goe_count; states render as bit
// strings.
nlohmann::json phase_space_json(
    const PhaseSpace& ps,
    const nlohmann::json& config,
    const std::vector<std::pair<std::string, double>>& timings);

// Machine-readable verification report: config, suite, seed, cases,
// failure_count, all_passed, wall_seconds.
nlohmann::json verification_json(const VerificationReport& report,
                                 const nlohmann::json& config);

}  // namespace sds
