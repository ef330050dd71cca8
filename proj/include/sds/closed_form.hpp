#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sds/base_graph.hpp"
#include "sds/sds_engine.hpp"
#include "sds/state.hpp"

namespace sds {

enum class Family { Complete, Star, Circle, Line };

// A graph family instance: n is the vertex count, except for Star where it is
// the arm count (so the graph has n + 1 vertices).
struct FamilyKind {
    Family tag = Family::Complete;
    int n = 0;

    int vertex_count() const;
    BaseGraph make_graph() const;
    std::string name() const;  // "complete", "star", "circ", "line"
};

std::optional<Family> parse_family(const std::string& name);

std::uint64_t binomial(int n, int k);

// Complete graph, 1 <= k <= n: predicted basin sizes of the two fixed points.
// The basin of all-zeros collects exactly the states with fewer than k ones
// (minus all-zeros itself); everything else falls to all-ones.
std::uint64_t kn_basin_zero_size(int n, int k);   // sum_{i=1}^{k-1} C(n,i)
std::uint64_t kn_basin_one_size(int n, int k);    // 2^n - kn_basin_zero_size - 2

// Star with 2-threshold: fixed points are exactly {center 1, arms arbitrary}
// plus all-zeros, i.e. 2^n_arms of them.
std::uint64_t star2_fixed_point_count(int n_arms);

// Largest transient depth over all update orders, where a closed form is
// known. Returns nullopt when k > max_degree + 1 (the one-step collapse
// regime) or k < 1.
std::optional<int> predicted_max_depth(const FamilyKind& family, int k);

// Update order under which the circle's unique longest transient is realized
// from the isolated-ones state e_i (k=1), or from its complement (k=3):
// starting opposite i and alternating outward. Realizes depth floor(n/2).
UpdateSequence extremal_order_circle(int n, int i);

struct LineExtremal {
    UpdateSequence order;
    state_t start;
};

// Line extremal witnesses: k=1 pairs the identity order with the last-vertex
// singleton (depth n-1); k=3 walks center-out from all-ones (depth ceil(n/2)).
LineExtremal extremal_order_line(int n, int k);

// Whether s has no preimage under every update order, on the circle. k=1:
// nonempty independent sets (no two cyclically adjacent ones). k=3: the same
// under complement. Throws std::invalid_argument for other k.
bool circ_goe_predicate(int n, int k, state_t s);

}  // namespace sds
