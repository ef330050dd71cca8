#include "sds/json_report.hpp"

#include "sds/state.hpp"

namespace sds {

namespace {

nlohmann::json states_json(const std::vector<state_t>& states, int n) {
    nlohmann::json arr = nlohmann::json::array();
    for (const state_t s : states) arr.push_back(format_state(s, n));
    return arr;
}

}  // namespace

nlohmann::json phase_space_json(
    const PhaseSpace& ps,
    const nlohmann::json& config,
    const std::vector<std::pair<std::string, double>>& timings) {
    nlohmann::json report;
    report["config"] = config;

    nlohmann::json comps = nlohmann::json::array();
    for (const ComponentReport& c : components(ps)) {
        comps.push_back({
            {"size", c.member_count},
            {"depth", c.depth},
            {"shape", to_string(c.shape)},
            {"cycle_states", states_json(c.cycle, ps.n)},
            {"goe_count", c.goe_count},
        });
    }
    report["components"] = comps;
    report["fixed_points"] = states_json(fixed_points(ps), ps.n);
    report["goe_count"] = goe_states(ps).size();

    nlohmann::json times = nlohmann::json::object();
    for (const auto& [label, seconds] : timings) times[label] = seconds;
    report["timings"] = times;
    return report;
}

nlohmann::json verification_json(const VerificationReport& report,
                                 const nlohmann::json& config) {
    nlohmann::json out;
    out["config"] = config;
    out["suite"] = report.suite;
    out["seed"] = report.seed;

    nlohmann::json cases = nlohmann::json::array();
    for (const VerificationCase& c : report.cases) {
        cases.push_back({
            {"claim", c.claim},
            {"params", c.params},
            {"predicted", c.predicted},
            {"measured", c.measured},
            {"pass", c.pass},
            {"counterexample", c.counterexample},
        });
    }
    out["cases"] = cases;
    out["failure_count"] = report.failure_count();
    out["all_passed"] = report.all_passed();
    out["wall_seconds"] = report.wall_seconds;
    return out;
}

}  // namespace sds
