#include "sds/sds_engine.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "sds/errors.hpp"

namespace sds {

UpdateSequence::UpdateSequence(std::vector<int> order) : order_(std::move(order)) {
    const int n = static_cast<int>(order_.size());
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : order_) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument(
                "UpdateSequence: not a permutation of 0..n-1");
        }
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

UpdateSequence UpdateSequence::identity(int n) {
    if (n < 0) throw std::invalid_argument("UpdateSequence: negative size");
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    return UpdateSequence(std::move(order));
}

UpdateSequence UpdateSequence::random(int n, std::mt19937_64& rng) {
    if (n < 0) throw std::invalid_argument("UpdateSequence: negative size");
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
    }
    return UpdateSequence(std::move(order));
}

std::string UpdateSequence::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < order_.size(); ++i) {
        if (i) out << ',';
        out << order_[i];
    }
    return out.str();
}

ThresholdSds::ThresholdSds(BaseGraph base, int threshold, UpdateSequence update_order)
    : graph(std::move(base)), k(threshold), order(std::move(update_order)) {
    if (graph.n_vertices < 1 || graph.n_vertices > kMaxVertices) {
        throw std::invalid_argument("ThresholdSds: need 1 <= n <= 30 vertices");
    }
    if (k < 0) {
        throw std::invalid_argument("ThresholdSds: threshold must be >= 0");
    }
    if (order.size() != graph.n_vertices) {
        throw std::invalid_argument(
            "ThresholdSds: update order length must equal the vertex count");
    }
    neighborhood_mask.resize(static_cast<std::size_t>(graph.n_vertices), 0);
    for (int v = 0; v < graph.n_vertices; ++v) {
        state_t mask = state_t{1} << v;
        for (int u : graph.adjacency[static_cast<std::size_t>(v)]) {
            mask |= state_t{1} << u;
        }
        neighborhood_mask[static_cast<std::size_t>(v)] = mask;
    }
    degenerate_k = (k == 0) || (k > graph.max_degree() + 1);
}

int threshold_eval(int k, const std::vector<int>& neighborhood_bits) {
    int sum = 0;
    for (int b : neighborhood_bits) {
        if (b != 0 && b != 1) {
            throw std::invalid_argument("threshold_eval: bits must be 0 or 1");
        }
        sum += b;
    }
    return sum >= k ? 1 : 0;
}

Orbit forward_orbit(const ThresholdSds& sds, state_t start, std::uint64_t max_steps) {
    if (start >= state_count(sds.n())) {
        throw std::out_of_range("forward_orbit: start state out of range");
    }
    std::unordered_map<state_t, std::size_t> first_seen;
    std::vector<state_t> seq;
    state_t cur = start;
    for (std::uint64_t step = 0; step <= max_steps; ++step) {
        if (const auto it = first_seen.find(cur); it != first_seen.end()) {
            Orbit orbit;
            orbit.transient.assign(seq.begin(),
                                   seq.begin() + static_cast<std::ptrdiff_t>(it->second));
            orbit.cycle.assign(seq.begin() + static_cast<std::ptrdiff_t>(it->second),
                               seq.end());
            return orbit;
        }
        first_seen.emplace(cur, seq.size());
        seq.push_back(cur);
        cur = sds_step(sds, cur);
    }
    throw CapError("forward_orbit: no recurrence within the step cap");
}

int transient_length(const ThresholdSds& sds, state_t start) {
    const Orbit orbit = forward_orbit(sds, start, state_count(sds.n()) + 1ull);
    if (orbit.cycle.size() != 1) {
        throw std::domain_error(
            "transient_length: orbit ends in a cycle, not a fixed point");
    }
    return static_cast<int>(orbit.transient.size());
}

}  // namespace sds
