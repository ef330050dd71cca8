#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sds/base_graph.hpp"
#include "sds/state.hpp"

namespace sds {

// A permutation of {0..n-1}: the order in which vertices fire during one
// system update. Validated on construction.
class UpdateSequence {
public:
    explicit UpdateSequence(std::vector<int> order);

    static UpdateSequence identity(int n);
    // Fisher-Yates with explicit draws so results are stable across library
    // implementations for a given seed.
    static UpdateSequence random(int n, std::mt19937_64& rng);

    int size() const { return static_cast<int>(order_.size()); }
    int operator[](int i) const { return order_[i]; }
    const std::vector<int>& order() const { return order_; }

    std::string to_string() const;  // comma-separated, e.g. "2,0,1"

    friend bool operator==(const UpdateSequence&, const UpdateSequence&) = default;

private:
    std::vector<int> order_;
};

// A k-threshold sequential dynamical system: every vertex fires the same rule
// (1 iff at least k ones in its closed neighborhood), in a fixed order.
// Immutable once built; safe to share across threads.
struct ThresholdSds {
    ThresholdSds(BaseGraph base, int threshold, UpdateSequence update_order);

    BaseGraph graph;
    int k;
    UpdateSequence order;
    // Bit mask of v's closed neighborhood, so one local update is a masked
    // popcount against k.
    std::vector<state_t> neighborhood_mask;
    // k == 0 or k > max_degree + 1: the threshold is unsatisfiable or always
    // satisfied, and the system collapses in one step.
    bool degenerate_k = false;

    int n() const { return graph.n_vertices; }
};

// 1 iff at least k of the bits are 1. k <= 0 is always satisfied.
int threshold_eval(int k, const std::vector<int>& neighborhood_bits);

// Fires vertex v once; only bit v may change.
inline state_t local_update(const ThresholdSds& sds, state_t s, int v) {
    const int have = std::popcount(s & sds.neighborhood_mask[v]);
    return with_bit(s, v, have >= sds.k ? 1 : 0);
}

// One full system update: vertices fire in order[0], order[1], ..., each seeing
// the updates already made before it.
inline state_t sds_step(const ThresholdSds& sds, state_t s) {
    for (int v : sds.order.order()) {
        const state_t mask = state_t{1} << v;
        if (std::popcount(s & sds.neighborhood_mask[v]) >= sds.k) {
            s |= mask;
        } else {
            s &= ~mask;
        }
    }
    return s;
}

// As sds_step, but reports each firing: visit(v, state_before_firing, new_bit).
template <typename Visit>
state_t sds_step_traced(const ThresholdSds& sds, state_t s, Visit&& visit) {
    for (int v : sds.order.order()) {
        const int bit = std::popcount(s & sds.neighborhood_mask[v]) >= sds.k ? 1 : 0;
        visit(v, s, bit);
        s = with_bit(s, v, bit);
    }
    return s;
}

struct Orbit {
    std::vector<state_t> transient;  // before the first repeated state
    std::vector<state_t> cycle;      // the periodic part, in visit order
};

// Iterates sds_step from start until a state repeats. Throws CapError if no
// repeat occurs within max_steps applications; max_steps >= 2^n always
// terminates normally.
Orbit forward_orbit(const ThresholdSds& sds, state_t start, std::uint64_t max_steps);

// Smallest r with step^r(start) a fixed point. Throws std::domain_error when
// the orbit ends in a cycle of length >= 2 instead.
int transient_length(const ThresholdSds& sds, state_t start);

}  // namespace sds
