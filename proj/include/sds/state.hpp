#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace sds {

// A system state packs one bit per vertex: bit v of a state_t is the value of
// vertex v. With at most kMaxVertices vertices every state index fits in 32 bits,
// so a whole phase space is addressable as array indices.
using state_t = std::uint32_t;

inline constexpr int kMaxVertices = 30;

constexpr state_t state_count(int n_vertices) {
    return state_t{1} << n_vertices;
}

constexpr state_t all_ones_state(int n_vertices) {
    return state_count(n_vertices) - 1;
}

constexpr int state_bit(state_t s, int v) {
    return static_cast<int>((s >> v) & 1u);
}

constexpr state_t with_bit(state_t s, int v, int value) {
    const state_t mask = state_t{1} << v;
    return value ? (s | mask) : (s & ~mask);
}

inline int ones_count(state_t s) {
    return std::popcount(s);
}

// Renders vertex 0 leftmost, so complete_graph(2) state with only vertex 1 set
// prints as "01".
std::string format_state(state_t s, int n_vertices);

// Inverse of format_state. Throws std::invalid_argument on characters outside
// {0,1} or on lengths outside [1, kMaxVertices].
state_t parse_state(const std::string& bits);

std::vector<int> state_to_bits(state_t s, int n_vertices);
state_t state_from_bits(const std::vector<int>& bits);

}  // namespace sds
