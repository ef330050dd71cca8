#include "sds/state.hpp"

#include <stdexcept>

namespace sds {

std::string format_state(state_t s, int n_vertices) {
    if (n_vertices < 1 || n_vertices > kMaxVertices) {
        throw std::invalid_argument("format_state: vertex count out of range");
    }
    std::string out(static_cast<std::size_t>(n_vertices), '0');
    for (int v = 0; v < n_vertices; ++v) {
        if (state_bit(s, v)) out[static_cast<std::size_t>(v)] = '1';
    }
    return out;
}

state_t parse_state(const std::string& bits) {
    const int n = static_cast<int>(bits.size());
    if (n < 1 || n > kMaxVertices) {
        throw std::invalid_argument("parse_state: length out of range");
    }
    state_t s = 0;
    for (int v = 0; v < n; ++v) {
        const char c = bits[static_cast<std::size_t>(v)];
        if (c != '0' && c != '1') {
            throw std::invalid_argument("parse_state: expected only '0'/'1'");
        }
        if (c == '1') s |= state_t{1} << v;
    }
    return s;
}

std::vector<int> state_to_bits(state_t s, int n_vertices) {
    if (n_vertices < 1 || n_vertices > kMaxVertices) {
        throw std::invalid_argument("state_to_bits: vertex count out of range");
    }
    std::vector<int> bits(static_cast<std::size_t>(n_vertices));
    for (int v = 0; v < n_vertices; ++v) bits[static_cast<std::size_t>(v)] = state_bit(s, v);
    return bits;
}

state_t state_from_bits(const std::vector<int>& bits) {
    const int n = static_cast<int>(bits.size());
    if (n < 1 || n > kMaxVertices) {
        throw std::invalid_argument("state_from_bits: length out of range");
    }
    state_t s = 0;
    for (int v = 0; v < n; ++v) {
        const int b = bits[static_cast<std::size_t>(v)];
        if (b != 0 && b != 1) {
            throw std::invalid_argument("state_from_bits: bits must be 0 or 1");
        }
        if (b) s |= state_t{1} << v;
    }
    return s;
}

}  // namespace sds
