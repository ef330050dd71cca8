#include "sds/phase_space.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "sds/errors.hpp"

namespace sds {

namespace {

// Union-find with path halving. join keeps the smaller state as root, so a
// component's root is always its minimum member.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), state_t{0});
    }

    state_t find(state_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void join(state_t a, state_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent_[b] = a;
    }

private:
    std::vector<state_t> parent_;
};

// Source-peeling pass. States never peeled are exactly the periodic ones;
// replaying the peel backwards yields each state's distance to the periodic
// part and the periodic state its orbit first reaches.
struct Analysis {
    std::vector<char> periodic;
    std::vector<std::int32_t> depth;
    std::vector<state_t> terminal;
};

Analysis analyze(const PhaseSpace& ps) {
    const std::size_t size = ps.successor.size();
    Analysis a;
    a.periodic.assign(size, 1);
    a.depth.assign(size, 0);
    a.terminal.resize(size);

    std::vector<std::uint32_t> remaining = ps.in_degree;
    std::vector<state_t> peel;
    peel.reserve(size);
    for (std::size_t s = 0; s < size; ++s) {
        if (remaining[s] == 0) peel.push_back(static_cast<state_t>(s));
    }
    for (std::size_t head = 0; head < peel.size(); ++head) {
        const state_t s = peel[head];
        a.periodic[s] = 0;
        const state_t t = ps.successor[s];
        if (--remaining[t] == 0) peel.push_back(t);
    }
    for (std::size_t s = 0; s < size; ++s) {
        if (a.periodic[s]) a.terminal[s] = static_cast<state_t>(s);
    }
    // A peeled state's successor is peeled later (or periodic), so its depth
    // and terminal are final by the time the reverse sweep reaches it.
    for (auto it = peel.rbegin(); it != peel.rend(); ++it) {
        const state_t s = *it;
        const state_t t = ps.successor[s];
        a.depth[s] = a.depth[t] + 1;
        a.terminal[s] = a.terminal[t];
    }
    return a;
}

void fill_in_degrees(PhaseSpace& ps) {
    ps.in_degree.assign(ps.successor.size(), 0);
    for (const state_t t : ps.successor) ++ps.in_degree[t];
}

}  // namespace

PhaseSpace build_phase_space(const ThresholdSds& sds, int max_vertices) {
    if (max_vertices < 1 || max_vertices > kMaxVertices) {
        throw std::invalid_argument("build_phase_space: cap must be in 1..30");
    }
    const int n = sds.n();
    if (n > max_vertices) {
        throw CapError("build_phase_space: " + std::to_string(n) +
                       " vertices exceeds the phase-space cap of " +
                       std::to_string(max_vertices));
    }

    PhaseSpace ps;
    ps.n = n;
    const std::uint64_t size = state_count(n);
    ps.successor.resize(size);

    const auto fill = [&sds, &ps](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t s = lo; s < hi; ++s) {
            ps.successor[s] = sds_step(sds, static_cast<state_t>(s));
        }
    };

    const unsigned hw = std::thread::hardware_concurrency();
    const unsigned workers =
        (size >= (1u << 18) && hw > 1) ? std::min(hw, 8u) : 1u;
    if (workers == 1) {
        fill(0, size);
    } else {
        // sds is immutable and every worker writes a disjoint slice.
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (size + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t lo = w * chunk;
            const std::uint64_t hi = std::min(size, lo + chunk);
            if (lo < hi) pool.emplace_back(fill, lo, hi);
        }
        for (auto& t : pool) t.join();
    }

    fill_in_degrees(ps);
    return ps;
}

PhaseSpace phase_space_from_successors(std::vector<state_t> successor) {
    const std::uint64_t size = successor.size();
    if (size < 2 || !std::has_single_bit(size) ||
        size > state_count(kMaxVertices)) {
        throw std::invalid_argument(
            "phase_space_from_successors: size must be 2^n with 1 <= n <= 30");
    }
    for (const state_t t : successor) {
        if (t >= size) {
            throw std::invalid_argument(
                "phase_space_from_successors: successor out of range");
        }
    }
    PhaseSpace ps;
    ps.n = std::countr_zero(size);
    ps.successor = std::move(successor);
    fill_in_degrees(ps);
    return ps;
}

const char* to_string(ComponentShape shape) {
    switch (shape) {
        case ComponentShape::IsolatedFixedPoint: return "isolated-fixed-point";
        case ComponentShape::StarShaped: return "star-shaped";
        case ComponentShape::RootedTree: return "rooted-tree";
        case ComponentShape::CycleComponent: return "cycle";
    }
    return "unknown";
}

std::vector<state_t> fixed_points(const PhaseSpace& ps) {
    std::vector<state_t> out;
    for (std::uint64_t s = 0; s < ps.size(); ++s) {
        if (ps.successor[s] == s) out.push_back(static_cast<state_t>(s));
    }
    return out;
}

std::vector<std::vector<state_t>> periodic_cycles(const PhaseSpace& ps) {
    const Analysis a = analyze(ps);
    std::vector<char> visited(ps.size(), 0);
    std::vector<std::vector<state_t>> cycles;
    for (std::uint64_t s = 0; s < ps.size(); ++s) {
        if (!a.periodic[s] || visited[s]) continue;
        std::vector<state_t> cycle;
        state_t cur = static_cast<state_t>(s);
        do {
            visited[cur] = 1;
            cycle.push_back(cur);
            cur = ps.successor[cur];
        } while (cur != s);
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

std::vector<state_t> goe_states(const PhaseSpace& ps) {
    std::vector<state_t> out;
    for (std::uint64_t s = 0; s < ps.size(); ++s) {
        if (ps.in_degree[s] == 0) out.push_back(static_cast<state_t>(s));
    }
    return out;
}

std::vector<state_t> predecessors(const PhaseSpace& ps, state_t target) {
    if (target >= ps.size()) {
        throw std::out_of_range("predecessors: state out of range");
    }
    std::vector<state_t> out;
    for (std::uint64_t s = 0; s < ps.size(); ++s) {
        if (ps.successor[s] == target) out.push_back(static_cast<state_t>(s));
    }
    return out;
}

std::vector<ComponentReport> components(const PhaseSpace& ps) {
    const std::size_t size = ps.successor.size();
    const Analysis a = analyze(ps);

    UnionFind uf(size);
    for (std::size_t s = 0; s < size; ++s) {
        uf.join(static_cast<state_t>(s), ps.successor[s]);
    }

    // Roots are component minima, so first-appearance order during an
    // ascending scan sorts components by smallest member.
    std::vector<std::int32_t> slot(size, -1);
    std::vector<ComponentReport> reports;
    std::vector<std::vector<state_t>> periodic_members;
    for (std::size_t s = 0; s < size; ++s) {
        const state_t root = uf.find(static_cast<state_t>(s));
        if (slot[root] < 0) {
            slot[root] = static_cast<std::int32_t>(reports.size());
            reports.emplace_back();
            periodic_members.emplace_back();
        }
        ComponentReport& rep = reports[static_cast<std::size_t>(slot[root])];
        rep.member_count++;
        if (ps.in_degree[s] == 0) rep.goe_count++;
        rep.depth = std::max(rep.depth, static_cast<int>(a.depth[s]));
        if (a.periodic[s]) {
            periodic_members[static_cast<std::size_t>(slot[root])].push_back(
                static_cast<state_t>(s));
        }
    }

    for (std::size_t i = 0; i < reports.size(); ++i) {
        ComponentReport& rep = reports[i];
        const state_t start = periodic_members[i].front();
        state_t cur = start;
        do {
            rep.cycle.push_back(cur);
            cur = ps.successor[cur];
        } while (cur != start);

        if (rep.cycle.size() >= 2) {
            rep.shape = ComponentShape::CycleComponent;
        } else if (rep.member_count == 1) {
            rep.shape = ComponentShape::IsolatedFixedPoint;
        } else if (rep.depth <= 1) {
            rep.shape = ComponentShape::StarShaped;
        } else {
            rep.shape = ComponentShape::RootedTree;
        }
    }
    return reports;
}

int component_depth(const PhaseSpace& ps, const ComponentReport& component) {
    if (component.cycle.size() != 1) {
        throw std::domain_error("component_depth: component is not a tree");
    }
    const state_t root = component.cycle.front();
    if (ps.successor[root] != root) {
        throw std::domain_error("component_depth: cycle state is not fixed");
    }
    // Independent of the peeling pass: walk every orbit to its fixed point.
    const std::uint64_t bound = ps.size();
    int best = 0;
    for (std::uint64_t s = 0; s < ps.size(); ++s) {
        state_t cur = static_cast<state_t>(s);
        std::uint64_t steps = 0;
        while (ps.successor[cur] != cur && steps <= bound) {
            cur = ps.successor[cur];
            ++steps;
        }
        if (cur == root && ps.successor[cur] == cur) {
            best = std::max(best, static_cast<int>(steps));
        }
    }
    return best;
}

std::vector<state_t> basin(const PhaseSpace& ps, state_t target) {
    if (target >= ps.size()) {
        throw std::out_of_range("basin: state out of range");
    }
    if (ps.successor[target] != target) {
        throw std::domain_error("basin: target is not a fixed point");
    }
    const Analysis a = analyze(ps);
    std::vector<state_t> out;
    for (std::uint64_t s = 0; s < ps.size(); ++s) {
        if (s != target && a.terminal[s] == target) {
            out.push_back(static_cast<state_t>(s));
        }
    }
    return out;
}

int max_transient_depth(const PhaseSpace& ps) {
    const Analysis a = analyze(ps);
    std::int32_t best = 0;
    for (const std::int32_t d : a.depth) best = std::max(best, d);
    return static_cast<int>(best);
}

}  // namespace sds
