#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "oracles.hpp"
#include "sds/dot_export.hpp"
#include "sds/json_report.hpp"
#include "sds/phase_space.hpp"
#include "sds/state.hpp"
#include "sds/verify.hpp"
#include "sds/version.hpp"

namespace {

std::size_t count_of(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (auto pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size())) {
        ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("state rendering puts vertex zero leftmost") {
    CHECK(sds::format_state(1, 2) == "10");
    CHECK(sds::format_state(2, 2) == "01");
    CHECK(sds::format_state(0b0110u, 4) == "0110");
    CHECK(sds::parse_state("10") == 1);
    CHECK(sds::parse_state("01") == 2);
    for (sds::state_t s = 0; s < 64; ++s) {
        CHECK(sds::parse_state(sds::format_state(s, 6)) == s);
    }
    CHECK(sds::state_to_bits(0b101u, 3) == std::vector<int>{1, 0, 1});
    CHECK(sds::state_from_bits({1, 0, 1}) == 0b101u);

    CHECK_THROWS_AS(sds::parse_state("012"), std::invalid_argument);
    CHECK_THROWS_AS(sds::parse_state(""), std::invalid_argument);
    CHECK_THROWS_AS(sds::format_state(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(sds::format_state(0, 31), std::invalid_argument);
    CHECK_THROWS_AS(sds::state_from_bits({1, 2}), std::invalid_argument);
}

TEST_CASE("phase-space json schema") {
    const sds::ThresholdSds sys(sds::complete_graph(4), 2,
                                sds::UpdateSequence::identity(4));
    const sds::PhaseSpace ps = sds::build_phase_space(sys);
    const nlohmann::json config = {{"version", sds::kVersion},
                                   {"family", "complete"},
                                   {"n", 4},
                                   {"k", 2}};
    const nlohmann::json report =
        sds::phase_space_json(ps, config, {{"build_seconds", 0.25}});

    const std::set<std::string> top_keys = {"config", "components",
                                            "fixed_points", "goe_count",
                                            "timings"};
    std::set<std::string> seen;
    for (const auto& item : report.items()) seen.insert(item.key());
    CHECK(seen == top_keys);

    CHECK(report["config"]["version"] == sds::kVersion);
    CHECK(report["config"]["n"] == 4);
    CHECK(report["fixed_points"] ==
          nlohmann::json::array({"0000", "1111"}));
    CHECK(report["goe_count"] == 14);
    CHECK(report["timings"]["build_seconds"] == 0.25);

    REQUIRE(report["components"].size() == 2);
    const std::set<std::string> comp_keys = {"size", "depth", "shape",
                                             "cycle_states", "goe_count"};
    for (const auto& comp : report["components"]) {
        std::set<std::string> keys;
        for (const auto& item : comp.items()) keys.insert(item.key());
        CHECK(keys == comp_keys);
    }
    CHECK(report["components"][0]["size"] == 5);
    CHECK(report["components"][0]["shape"] == "star-shaped");
    CHECK(report["components"][0]["cycle_states"] ==
          nlohmann::json::array({"0000"}));
    CHECK(report["components"][1]["size"] == 11);
}

TEST_CASE("verification json schema") {
    const auto suite = sds::verify_complete({3, 4}, 1, 9);
    const nlohmann::json config = {{"version", sds::kVersion}};
    const nlohmann::json out = sds::verification_json(suite, config);

    CHECK(out["suite"] == "complete");
    CHECK(out["seed"] == 9);
    CHECK(out["all_passed"] == true);
    CHECK(out["failure_count"] == 0);
    CHECK(out["cases"].size() == suite.cases.size());
    const std::set<std::string> case_keys = {"claim",    "params",
                                             "predicted", "measured",
                                             "pass",     "counterexample"};
    std::set<std::string> keys;
    for (const auto& item : out["cases"][0].items()) keys.insert(item.key());
    CHECK(keys == case_keys);
    CHECK(out["cases"][0]["pass"] == true);
}

TEST_CASE("dot export") {
    const sds::ThresholdSds sys(sds::circle_graph(4), 1,
                                sds::UpdateSequence::identity(4));
    const sds::PhaseSpace ps = sds::build_phase_space(sys);
    const std::string dot = sds::dot_string(ps);

    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(count_of(dot, " -> ") == 16);
    CHECK(count_of(dot, "label=") == 16);
    CHECK(dot.find("label=\"0110\"") != std::string::npos);
    // fixed points appear as self-loops
    CHECK(dot.find("s0 -> s0;") != std::string::npos);

    const auto goe = sds::goe_states(ps);
    CHECK(count_of(dot, "goe=true") == goe.size());

    std::ostringstream stream;
    sds::write_dot(stream, ps);
    CHECK(stream.str() == dot);
}
