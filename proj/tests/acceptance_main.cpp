// Acceptance gate: one line per criterion, [PASS]/[FAIL], exit 0 iff all
// criteria pass. Every check is an exact integer comparison over an
// exhaustively enumerated grid; failures name the first offending instance.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sds/base_graph.hpp"
#include "sds/closed_form.hpp"
#include "sds/phase_space.hpp"
#include "sds/sds_engine.hpp"
#include "sds/state.hpp"
#include "sds/verify.hpp"

namespace {

struct Criterion {
    bool pass = true;
    std::string detail;
    long checks = 0;

    void fail(const std::string& what) {
        if (pass) {
            pass = false;
            detail = what;
        }
    }
};

int g_failures = 0;

void report(int id, const std::string& title, const Criterion& c) {
    if (c.pass) {
        std::cout << "[PASS] " << id << ". " << title << ": " << c.checks
                  << " checks\n";
    } else {
        ++g_failures;
        std::cout << "[FAIL] " << id << ". " << title << ": " << c.detail
                  << "\n";
    }
}

std::string instance_tag(const std::string& family, int n, int k,
                         const sds::UpdateSequence& order) {
    std::ostringstream out;
    out << family << " n=" << n << " k=" << k << " order=" << order.to_string();
    return out.str();
}

// identity plus `extra` seeded random orders, deterministic per call site.
std::vector<sds::UpdateSequence> orders_for(int n, int extra,
                                            std::uint64_t seed) {
    std::vector<sds::UpdateSequence> out;
    out.push_back(sds::UpdateSequence::identity(n));
    std::mt19937_64 rng(seed);
    for (int i = 0; i < extra; ++i) {
        out.push_back(sds::UpdateSequence::random(n, rng));
    }
    return out;
}

// Grid of criterion 1/2: complete graphs, n 3..10, every k, identity + 5
// random orders.
template <typename Fn>
void for_complete_grid(std::uint64_t seed, Fn&& fn) {
    for (int n = 3; n <= 10; ++n) {
        for (int k = 1; k <= n; ++k) {
            for (const auto& order : orders_for(n, 5, seed + n * 37 + k)) {
                fn(n, k, order);
            }
        }
    }
}

Criterion criterion_complete_structure() {
    Criterion c;
    for_complete_grid(101, [&](int n, int k, const sds::UpdateSequence& order) {
        const sds::ThresholdSds sds(sds::complete_graph(n), k, order);
        const auto ps = sds::build_phase_space(sds);
        const auto tag = instance_tag("complete", n, k, order);

        const auto comps = sds::components(ps);
        if (comps.size() != 2) {
            c.fail(tag + ": expected 2 components, found " +
                   std::to_string(comps.size()));
            return;
        }
        const auto fixed = sds::fixed_points(ps);
        const std::vector<sds::state_t> expected{0, sds::all_ones_state(n)};
        if (fixed != expected) {
            c.fail(tag + ": fixed points are not all-zeros and all-ones");
            return;
        }
        for (sds::state_t s = 0; s < ps.size(); ++s) {
            if (ps.successor[s] != s && !ps.is_fixed_point(ps.successor[s])) {
                c.fail(tag + ": state " + sds::format_state(s, n) +
                       " is further than one step from a fixed point");
                return;
            }
        }
        // The map itself is order-independent on complete graphs.
        const sds::ThresholdSds base(sds::complete_graph(n), k,
                                     sds::UpdateSequence::identity(n));
        const auto base_ps = sds::build_phase_space(base);
        if (base_ps.successor != ps.successor) {
            c.fail(tag + ": successor table differs from the identity order");
            return;
        }
        c.checks += static_cast<long>(ps.size()) + 3;
    });
    return c;
}

Criterion criterion_complete_basins() {
    Criterion c;
    for_complete_grid(202, [&](int n, int k, const sds::UpdateSequence& order) {
        const sds::ThresholdSds sds(sds::complete_graph(n), k, order);
        const auto ps = sds::build_phase_space(sds);
        const auto tag = instance_tag("complete", n, k, order);

        const auto zero_basin = sds::basin(ps, 0).size();
        const auto ones_basin = sds::basin(ps, sds::all_ones_state(n)).size();
        if (zero_basin != sds::kn_basin_zero_size(n, k)) {
            c.fail(tag + ": basin(all-zeros) = " + std::to_string(zero_basin) +
                   ", closed form " +
                   std::to_string(sds::kn_basin_zero_size(n, k)));
            return;
        }
        if (ones_basin != sds::kn_basin_one_size(n, k)) {
            c.fail(tag + ": basin(all-ones) = " + std::to_string(ones_basin) +
                   ", closed form " +
                   std::to_string(sds::kn_basin_one_size(n, k)));
            return;
        }
        // The same count written as the upper tail of the binomial row.
        std::uint64_t tail = 0;
        for (int i = k; i <= n - 1; ++i) tail += sds::binomial(n, i);
        if (ones_basin != tail) {
            c.fail(tag + ": basin(all-ones) misses the tail-sum identity");
            return;
        }
        c.checks += 3;
    });
    if (c.pass) {
        const sds::ThresholdSds sds(sds::complete_graph(4), 2,
                                    sds::UpdateSequence::identity(4));
        const auto ps = sds::build_phase_space(sds);
        if (sds::basin(ps, 0).size() != 4 ||
            sds::basin(ps, sds::all_ones_state(4)).size() != 10) {
            c.fail("complete n=4 k=2: spot basin sizes are not (4, 10)");
        }
        ++c.checks;
    }
    return c;
}

Criterion criterion_star_fixed_count() {
    Criterion c;
    for (int arms = 1; arms <= 12; ++arms) {
        const int n = arms + 1;
        for (const auto& order : orders_for(n, 9, 303 + arms)) {
            const sds::ThresholdSds sds(sds::star_graph(arms), 2, order);
            const auto ps = sds::build_phase_space(sds);
            const auto count = sds::fixed_points(ps).size();
            if (count != sds::star2_fixed_point_count(arms)) {
                c.fail(instance_tag("star", arms, 2, order) + ": " +
                       std::to_string(count) + " fixed points, expected " +
                       std::to_string(sds::star2_fixed_point_count(arms)));
                return c;
            }
            ++c.checks;
        }
    }
    return c;
}

Criterion criterion_star_shapes() {
    Criterion c;
    for (int arms = 1; arms <= 12; ++arms) {
        const int n = arms + 1;
        for (int k = 1; k <= arms + 1; ++k) {
            for (const auto& order : orders_for(n, 9, 404 + arms * 17 + k)) {
                const sds::ThresholdSds sds(sds::star_graph(arms), k, order);
                const auto ps = sds::build_phase_space(sds);
                const auto tag = instance_tag("star", arms, k, order);
                if (k == 1) {
                    const auto comps = sds::components(ps);
                    if (comps.size() != 2 ||
                        comps[0].shape !=
                            sds::ComponentShape::IsolatedFixedPoint ||
                        comps[0].cycle != std::vector<sds::state_t>{0}) {
                        c.fail(tag +
                               ": all-zeros is not an isolated fixed point");
                        return c;
                    }
                    if (comps[1].cycle !=
                            std::vector<sds::state_t>{
                                sds::all_ones_state(n)} ||
                        comps[1].depth > 2) {
                        c.fail(tag + ": remaining states do not form a tree "
                                     "of depth <= 2 rooted at all-ones");
                        return c;
                    }
                } else if (k == 2) {
                    for (sds::state_t s = 0; s < ps.size(); ++s) {
                        if (ps.successor[ps.successor[s]] != ps.successor[s]) {
                            c.fail(tag + ": map is not idempotent at " +
                                   sds::format_state(s, n));
                            return c;
                        }
                    }
                } else {
                    const auto comps = sds::components(ps);
                    const auto fixed = sds::fixed_points(ps);
                    if (comps.size() != 1 ||
                        comps[0].cycle != std::vector<sds::state_t>{0} ||
                        comps[0].depth > 2 ||
                        fixed != std::vector<sds::state_t>{0}) {
                        c.fail(tag + ": expected one tree of depth <= 2 "
                                     "rooted at the sole fixed point "
                                     "all-zeros");
                        return c;
                    }
                }
                ++c.checks;
            }
        }
    }
    return c;
}

Criterion criterion_idempotence_k2() {
    Criterion c;
    std::vector<sds::FamilyKind> grid;
    for (int n = 1; n <= 12; ++n) grid.push_back({sds::Family::Complete, n});
    for (int n = 1; n <= 12; ++n) grid.push_back({sds::Family::Star, n});
    for (int n = 3; n <= 12; ++n) grid.push_back({sds::Family::Circle, n});
    for (int n = 2; n <= 12; ++n) grid.push_back({sds::Family::Line, n});
    for (const auto& family : grid) {
        const int n = family.vertex_count();
        for (const auto& order : orders_for(n, 19, 505 + family.n * 13)) {
            const sds::ThresholdSds sds(family.make_graph(), 2, order);
            const auto ps = sds::build_phase_space(sds);
            for (sds::state_t s = 0; s < ps.size(); ++s) {
                if (ps.successor[ps.successor[s]] != ps.successor[s]) {
                    c.fail(instance_tag(family.name(), family.n, 2, order) +
                           ": F(F(s)) != F(s) at s = " +
                           sds::format_state(s, n));
                    return c;
                }
            }
            ++c.checks;
        }
    }
    return c;
}

Criterion criterion_circle_extremal() {
    Criterion c;
    for (int n = 3; n <= 12; ++n) {
        for (int k : {1, 3}) {
            for (int i = 0; i < n; ++i) {
                const auto order = sds::extremal_order_circle(n, i);
                const sds::ThresholdSds sds(sds::circle_graph(n), k, order);
                const sds::state_t single = sds::state_t{1} << i;
                const sds::state_t seed =
                    k == 1 ? single
                           : static_cast<sds::state_t>(
                                 sds::all_ones_state(n) ^ single);
                const int depth = sds::transient_length(sds, seed);
                if (depth != n / 2) {
                    c.fail(instance_tag("circ", n, k, order) + ": depth " +
                           std::to_string(depth) + " from " +
                           sds::format_state(seed, n) + ", expected " +
                           std::to_string(n / 2));
                    return c;
                }
                ++c.checks;
            }
        }
    }
    for (int n = 3; n <= 7; ++n) {
        for (int k : {1, 3}) {
            const auto scan = sds::scan_orders({sds::Family::Circle, n}, k);
            if (scan.max_depth != n / 2) {
                c.fail("circ n=" + std::to_string(n) + " k=" +
                       std::to_string(k) + ": exhaustive max depth " +
                       std::to_string(scan.max_depth) + " != " +
                       std::to_string(n / 2));
                return c;
            }
            ++c.checks;
        }
    }
    return c;
}

Criterion criterion_line_extremal() {
    Criterion c;
    for (int n = 2; n <= 12; ++n) {
        const auto witness = sds::extremal_order_line(n, 1);
        const sds::ThresholdSds sds(sds::line_graph(n), 1, witness.order);
        const int depth = sds::transient_length(sds, witness.start);
        if (depth != n - 1) {
            c.fail(instance_tag("line", n, 1, witness.order) + ": depth " +
                   std::to_string(depth) + ", expected " +
                   std::to_string(n - 1));
            return c;
        }
        ++c.checks;
    }
    for (int n = 3; n <= 12; ++n) {
        const auto witness = sds::extremal_order_line(n, 3);
        const sds::ThresholdSds sds(sds::line_graph(n), 3, witness.order);
        const int depth = sds::transient_length(sds, witness.start);
        if (depth != (n + 1) / 2) {
            c.fail(instance_tag("line", n, 3, witness.order) + ": depth " +
                   std::to_string(depth) + ", expected " +
                   std::to_string((n + 1) / 2));
            return c;
        }
        ++c.checks;
    }
    for (int n = 2; n <= 7; ++n) {
        for (int k : {1, 3}) {
            if (k == 3 && n < 3) continue;
            const int expected = k == 1 ? n - 1 : (n + 1) / 2;
            const auto scan = sds::scan_orders({sds::Family::Line, n}, k);
            if (scan.max_depth != expected) {
                c.fail("line n=" + std::to_string(n) + " k=" +
                       std::to_string(k) + ": exhaustive max depth " +
                       std::to_string(scan.max_depth) + " != " +
                       std::to_string(expected));
                return c;
            }
            ++c.checks;
        }
    }
    return c;
}

Criterion criterion_depth_table() {
    Criterion c;
    const auto report = sds::verify_depth_table({6, 7}, 8, 5, 808);
    for (const auto& vcase : report.cases) {
        if (vcase.pass) {
            ++c.checks;
            continue;
        }
        const std::string what =
            vcase.params + ": measured " + std::to_string(vcase.measured) +
            ", predicted " + std::to_string(vcase.predicted);
        if (c.pass) {
            c.fail(what);
        } else {
            c.detail += "; " + what;
        }
    }
    return c;
}

Criterion criterion_no_long_cycles() {
    Criterion c;
    std::vector<sds::FamilyKind> grid;
    for (int n = 1; n <= 12; ++n) grid.push_back({sds::Family::Complete, n});
    for (int n = 1; n <= 12; ++n) grid.push_back({sds::Family::Star, n});
    for (int n = 3; n <= 12; ++n) grid.push_back({sds::Family::Circle, n});
    for (int n = 2; n <= 12; ++n) grid.push_back({sds::Family::Line, n});
    for (const auto& family : grid) {
        const auto graph = family.make_graph();
        const int n = graph.n_vertices;
        const int k_hi = graph.max_degree() + 2;
        for (int k = 0; k <= k_hi; ++k) {
            for (const auto& order :
                 orders_for(n, 19, 909 + family.n * 11 + k)) {
                const sds::ThresholdSds sds(graph, k, order);
                const auto ps = sds::build_phase_space(sds);
                for (const auto& cycle : sds::periodic_cycles(ps)) {
                    if (cycle.size() != 1) {
                        c.fail(instance_tag(family.name(), family.n, k,
                                            order) +
                               ": periodic cycle of length " +
                               std::to_string(cycle.size()));
                        return c;
                    }
                }
                ++c.checks;
            }
        }
    }
    return c;
}

Criterion criterion_degenerate_regimes() {
    Criterion c;
    std::vector<sds::FamilyKind> grid;
    for (int n = 1; n <= 10; ++n) grid.push_back({sds::Family::Complete, n});
    for (int n = 1; n <= 10; ++n) grid.push_back({sds::Family::Star, n});
    for (int n = 3; n <= 10; ++n) grid.push_back({sds::Family::Circle, n});
    for (int n = 2; n <= 10; ++n) grid.push_back({sds::Family::Line, n});
    for (const auto& family : grid) {
        const auto graph = family.make_graph();
        const int n = graph.n_vertices;
        const sds::state_t ones = sds::all_ones_state(n);
        for (const auto& order : orders_for(n, 3, 1010 + family.n * 7)) {
            const sds::ThresholdSds zero_k(graph, 0, order);
            const sds::ThresholdSds big_k(graph, graph.max_degree() + 2,
                                          order);
            for (sds::state_t s = 0; s < sds::state_count(n); ++s) {
                if (sds::sds_step(zero_k, s) != ones) {
                    c.fail(instance_tag(family.name(), family.n, 0, order) +
                           ": " + sds::format_state(s, n) +
                           " does not reach all-ones in one step");
                    return c;
                }
                if (sds::sds_step(big_k, s) != 0) {
                    c.fail(instance_tag(family.name(), family.n,
                                        graph.max_degree() + 2, order) +
                           ": " + sds::format_state(s, n) +
                           " does not reach all-zeros in one step");
                    return c;
                }
            }
            c.checks += 2;
        }
    }
    return c;
}

Criterion criterion_monotonicity() {
    Criterion c;
    std::vector<sds::FamilyKind> grid;
    for (int n = 1; n <= 14; ++n) grid.push_back({sds::Family::Complete, n});
    for (int n = 1; n <= 13; ++n) grid.push_back({sds::Family::Star, n});
    for (int n = 3; n <= 14; ++n) grid.push_back({sds::Family::Circle, n});
    for (int n = 2; n <= 14; ++n) grid.push_back({sds::Family::Line, n});
    std::mt19937_64 pair_rng(1111);
    for (const auto& family : grid) {
        const auto graph = family.make_graph();
        const int n = graph.n_vertices;
        std::set<int> k_values{0, 1, 2, 3, graph.max_degree() + 1,
                               graph.max_degree() + 2};
        for (int k : k_values) {
            for (const auto& order :
                 orders_for(n, 2, 1111 + family.n * 19 + k)) {
                const sds::ThresholdSds sds(graph, k, order);
                const auto tag = instance_tag(family.name(), family.n, k,
                                              order);
                if (n <= 10) {
                    // Every comparable pair: t and each submask s of t.
                    const auto ps = sds::build_phase_space(sds);
                    for (sds::state_t t = 0; t < ps.size(); ++t) {
                        sds::state_t s = t;
                        while (true) {
                            if ((ps.successor[s] & ~ps.successor[t]) != 0) {
                                c.fail(tag + ": F(" +
                                       sds::format_state(s, n) +
                                       ") is not contained in F(" +
                                       sds::format_state(t, n) + ")");
                                return c;
                            }
                            if (s == 0) break;
                            s = (s - 1) & t;
                        }
                    }
                } else {
                    for (int trial = 0; trial < 2000; ++trial) {
                        const sds::state_t t = static_cast<sds::state_t>(
                            pair_rng() & sds::all_ones_state(n));
                        const sds::state_t s =
                            t & static_cast<sds::state_t>(pair_rng());
                        if ((sds::sds_step(sds, s) & ~sds::sds_step(sds, t)) !=
                            0) {
                            c.fail(tag + ": F(" + sds::format_state(s, n) +
                                   ") is not contained in F(" +
                                   sds::format_state(t, n) + ")");
                            return c;
                        }
                    }
                }
                ++c.checks;
            }
        }
    }
    return c;
}

Criterion criterion_circle_goe_direction() {
    Criterion c;
    for (int n = 3; n <= 12; ++n) {
        for (int k : {1, 3}) {
            for (const auto& order : orders_for(n, 9, 1212 + n * 3 + k)) {
                const sds::ThresholdSds sds(sds::circle_graph(n), k, order);
                const auto ps = sds::build_phase_space(sds);
                for (sds::state_t s = 0; s < ps.size(); ++s) {
                    if (sds::circ_goe_predicate(n, k, s) &&
                        ps.in_degree[s] != 0) {
                        c.fail(instance_tag("circ", n, k, order) + ": " +
                               sds::format_state(s, n) +
                               " satisfies the no-preimage predicate but has "
                               "in-degree " +
                               std::to_string(ps.in_degree[s]));
                        return c;
                    }
                }
                ++c.checks;
            }
        }
    }
    return c;
}

}  // namespace

int main() {
    report(1, "complete-graph structure", criterion_complete_structure());
    report(2, "complete-graph basin sizes", criterion_complete_basins());
    report(3, "star 2-threshold fixed-point count",
           criterion_star_fixed_count());
    report(4, "star component shapes", criterion_star_shapes());
    report(5, "2-threshold idempotence across families",
           criterion_idempotence_k2());
    report(6, "circle extremal transient depth", criterion_circle_extremal());
    report(7, "line extremal transient depths", criterion_line_extremal());
    report(8, "depth-table reproduction", criterion_depth_table());
    report(9, "fixed points are the only periodic states",
           criterion_no_long_cycles());
    report(10, "degenerate thresholds collapse in one step",
           criterion_degenerate_regimes());
    report(11, "the system map is monotone", criterion_monotonicity());
    report(12, "circle no-preimage predicate implies in-degree zero",
           criterion_circle_goe_direction());

    if (g_failures == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << g_failures << " criteria failed\n";
    return 1;
}
