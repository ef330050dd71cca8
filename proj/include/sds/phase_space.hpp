#pragma once

#include <cstdint>
#include <vector>

#include "sds/sds_engine.hpp"
#include "sds/state.hpp"

namespace sds {

inline constexpr int kDefaultPhaseSpaceCap = 24;

// The functional digraph of an SDS map over all 2^n states: one out-edge per
// state. successor and in_degree are indexed by state.
struct PhaseSpace {
    int n = 0;
    std::vector<state_t> successor;
    std::vector<std::uint32_t> in_degree;

    std::uint64_t size() const { return successor.size(); }
    bool is_fixed_point(state_t s) const { return successor[s] == s; }
};

// Evaluates the map on every state. Throws CapError when n exceeds
// max_vertices (default kDefaultPhaseSpaceCap); large spaces are filled with
// a few worker threads, each writing a disjoint slice.
PhaseSpace build_phase_space(const ThresholdSds& sds,
                             int max_vertices = kDefaultPhaseSpaceCap);

// Wraps an arbitrary successor table (size must be a power of two, entries in
// range). Lets the analysis below be exercised on maps no threshold system
// produces, e.g. ones with long cycles.
PhaseSpace phase_space_from_successors(std::vector<state_t> successor);

enum class ComponentShape {
    IsolatedFixedPoint,  // a fixed point with no other state mapping to it
    StarShaped,          // fixed point, every other member at distance 1
    RootedTree,          // fixed point, some member at distance >= 2
    CycleComponent,      // periodic cycle of length >= 2
};

const char* to_string(ComponentShape shape);

struct ComponentReport {
    std::uint64_t member_count = 0;
    // Periodic states, starting from the smallest and following the map.
    std::vector<state_t> cycle;
    // Largest distance from a member to the cycle.
    int depth = 0;
    std::uint64_t goe_count = 0;
    ComponentShape shape = ComponentShape::IsolatedFixedPoint;
};

std::vector<state_t> fixed_points(const PhaseSpace& ps);

// Every periodic cycle (fixed points included, as length-1 cycles), each
// starting from its smallest state; cycles sorted by that state.
std::vector<std::vector<state_t>> periodic_cycles(const PhaseSpace& ps);

// States with no preimage ("garden of Eden" states).
std::vector<state_t> goe_states(const PhaseSpace& ps);

std::vector<state_t> predecessors(const PhaseSpace& ps, state_t target);

// Weakly connected components, sorted by smallest member state.
std::vector<ComponentReport> components(const PhaseSpace& ps);

// Recomputes a tree component's depth by walking orbits, independently of the
// peeling pass inside components(). Throws std::domain_error when the
// component's cycle is longer than 1.
int component_depth(const PhaseSpace& ps, const ComponentReport& component);

// States whose orbit reaches the given fixed point, excluding the fixed point
// itself. Throws std::domain_error when target is not a fixed point.
std::vector<state_t> basin(const PhaseSpace& ps, state_t target);

// Largest distance from any state to its periodic cycle; equals the smallest
// r with map^r = map^(r+1) applied pointwise.
int max_transient_depth(const PhaseSpace& ps);

}  // namespace sds
