#include "sds/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <iomanip>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <tuple>

#include "sds/errors.hpp"
#include "sds/phase_space.hpp"

namespace sds {

bool VerificationReport::all_passed() const {
    return failure_count() == 0;
}

std::size_t VerificationReport::failure_count() const {
    std::size_t n = 0;
    for (const VerificationCase& c : cases) {
        if (!c.pass) ++n;
    }
    return n;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void add_case(VerificationReport& report, std::string claim, std::string params,
              std::int64_t predicted, std::int64_t measured,
              std::string counterexample = {}) {
    VerificationCase c;
    c.claim = std::move(claim);
    c.params = std::move(params);
    c.predicted = predicted;
    c.measured = measured;
    c.pass = predicted == measured;
    if (!c.pass) c.counterexample = std::move(counterexample);
    report.cases.push_back(std::move(c));
}

void add_check(VerificationReport& report, std::string claim, std::string params,
               bool ok, std::string counterexample = {}) {
    add_case(report, std::move(claim), std::move(params), 1, ok ? 1 : 0,
             std::move(counterexample));
}

std::string describe(const std::string& family, int n, int k,
                     const UpdateSequence& order) {
    std::ostringstream out;
    out << "family=" << family << " n=" << n << " k=" << k
        << " order=" << order.to_string();
    return out.str();
}

std::vector<UpdateSequence> make_orders(int n, int random_orders,
                                        std::mt19937_64& rng) {
    std::vector<UpdateSequence> orders;
    orders.push_back(UpdateSequence::identity(n));
    for (int i = 0; i < random_orders; ++i) {
        orders.push_back(UpdateSequence::random(n, rng));
    }
    return orders;
}

const ComponentReport* component_rooted_at(
    const std::vector<ComponentReport>& comps, state_t fixed) {
    for (const ComponentReport& c : comps) {
        if (c.cycle.size() == 1 && c.cycle.front() == fixed) return &c;
    }
    return nullptr;
}

bool is_idempotent(const PhaseSpace& ps, state_t* witness) {
    for (std::uint64_t s = 0; s < ps.size(); ++s) {
        const state_t t = ps.successor[s];
        if (ps.successor[t] != t) {
            if (witness) *witness = static_cast<state_t>(s);
            return false;
        }
    }
    return true;
}

bool fixed_points_are(const PhaseSpace& ps, std::vector<state_t> expected) {
    std::sort(expected.begin(), expected.end());
    return fixed_points(ps) == expected;
}

// Order-independence is checked at two levels; this is the coarser one.
using Profile =
    std::vector<std::tuple<std::uint64_t, int, int, std::vector<state_t>>>;

Profile profile_of(const std::vector<ComponentReport>& comps) {
    Profile p;
    p.reserve(comps.size());
    for (const ComponentReport& c : comps) {
        p.emplace_back(c.member_count, c.depth, static_cast<int>(c.shape),
                       c.cycle);
    }
    std::sort(p.begin(), p.end());
    return p;
}

std::string state_label(state_t s, int n) {
    return format_state(s, n);
}

// ---- complete graphs -------------------------------------------------------

void check_complete_instance(VerificationReport& report, const PhaseSpace& ps,
                             int n, int k, const std::string& params) {
    const auto comps = components(ps);
    const state_t ones = all_ones_state(n);

    add_case(report, "kn-component-count", params, 2,
             static_cast<std::int64_t>(comps.size()));

    bool shapes_ok = true;
    std::string bad_shape;
    for (const ComponentReport& c : comps) {
        if (c.shape != ComponentShape::StarShaped &&
            c.shape != ComponentShape::IsolatedFixedPoint) {
            shapes_ok = false;
            bad_shape = std::string("component at ") +
                        state_label(c.cycle.front(), n) + " has shape " +
                        to_string(c.shape);
            break;
        }
    }
    add_check(report, "kn-component-shapes", params, shapes_ok, bad_shape);

    add_check(report, "kn-fixed-points", params,
              fixed_points_are(ps, {0, ones}));

    add_case(report, "kn-max-depth", params, n == 1 ? 0 : 1,
             max_transient_depth(ps));

    state_t witness = 0;
    const bool idem = is_idempotent(ps, &witness);
    add_check(report, "kn-idempotent", params, idem,
              idem ? "" : "state " + state_label(witness, n));

    add_case(report, "kn-basin-zero", params,
             static_cast<std::int64_t>(kn_basin_zero_size(n, k)),
             static_cast<std::int64_t>(basin(ps, 0).size()));
    add_case(report, "kn-basin-one", params,
             static_cast<std::int64_t>(kn_basin_one_size(n, k)),
             static_cast<std::int64_t>(basin(ps, ones).size()));
}

// ---- stars ------------------------------------------------------------------

state_t star_arm_mask(int n_arms) {
    return all_ones_state(n_arms + 1) & ~state_t{1};
}

void check_star_rules(VerificationReport& report, const ThresholdSds& sds,
                      const std::string& params) {
    // Local firing rules at k = 2: an arm copies its value when the center is
    // up and clears otherwise; the center needs two arm ones to rise from 0
    // and one to stay at 1.
    const int n_vtx = sds.n();
    const state_t arms = star_arm_mask(n_vtx - 1);
    bool ok = true;
    std::string bad;
    for (state_t s = 0; s < state_count(n_vtx) && ok; ++s) {
        sds_step_traced(sds, s, [&](int v, state_t pre, int bit) {
            if (!ok) return;
            const int center = state_bit(pre, 0);
            const int arm_ones = ones_count(pre & arms);
            int expect = 0;
            if (v == 0) {
                expect = center ? (arm_ones >= 1) : (arm_ones >= 2);
            } else {
                expect = center && state_bit(pre, v);
            }
            if (bit != expect) {
                ok = false;
                bad = "state " + state_label(s, n_vtx) + " vertex " +
                      std::to_string(v);
            }
        });
    }
    add_check(report, "star-k2-local-rules", params, ok, bad);
}

void check_star_instance(VerificationReport& report, const ThresholdSds& sds,
                         const PhaseSpace& ps, int n_arms, int k,
                         const std::string& params) {
    const int n_vtx = n_arms + 1;
    const state_t ones = all_ones_state(n_vtx);
    const auto comps = components(ps);

    if (k == 1) {
        add_case(report, "star-k1-component-count", params, 2,
                 static_cast<std::int64_t>(comps.size()));
        const ComponentReport* zero = component_rooted_at(comps, 0);
        add_check(report, "star-k1-zero-isolated", params,
                  zero && zero->member_count == 1);
        const ComponentReport* root = component_rooted_at(comps, ones);
        add_check(report, "star-k1-ones-root", params, root != nullptr);
        add_check(report, "star-k1-depth-bound", params,
                  max_transient_depth(ps) <= 2,
                  "max depth = " + std::to_string(max_transient_depth(ps)));
        add_check(report, "star-k1-fixed-points", params,
                  fixed_points_are(ps, {0, ones}));
    } else if (k == 2) {
        state_t witness = 0;
        const bool idem = is_idempotent(ps, &witness);
        add_check(report, "star-k2-idempotent", params, idem,
                  idem ? "" : "state " + state_label(witness, n_vtx));
        add_case(report, "star-k2-fixed-count", params,
                 static_cast<std::int64_t>(star2_fixed_point_count(n_arms)),
                 static_cast<std::int64_t>(fixed_points(ps).size()));
        // Fixed points are all-zeros plus the up-center states with a
        // supported arm; with the count above this pins the exact set.
        bool form_ok = true;
        std::string bad;
        for (const state_t fp : fixed_points(ps)) {
            const bool good =
                fp == 0 || (state_bit(fp, 0) == 1 &&
                            ones_count(fp & star_arm_mask(n_arms)) >= 1);
            if (!good) {
                form_ok = false;
                bad = "fixed point " + state_label(fp, n_vtx);
                break;
            }
        }
        add_check(report, "star-k2-fixed-form", params, form_ok, bad);
        add_case(report, "star-k2-component-count", params,
                 static_cast<std::int64_t>(star2_fixed_point_count(n_arms)),
                 static_cast<std::int64_t>(comps.size()));
        check_star_rules(report, sds, params);
    } else {
        add_case(report, "star-kbig-component-count", params, 1,
                 static_cast<std::int64_t>(comps.size()));
        add_check(report, "star-kbig-root-zero", params,
                  !comps.empty() && comps.front().cycle.size() == 1 &&
                      comps.front().cycle.front() == 0);
        add_check(report, "star-kbig-sole-fixed-point", params,
                  fixed_points_are(ps, {0}));
        add_check(report, "star-kbig-depth-bound", params,
                  max_transient_depth(ps) <= 2,
                  "max depth = " + std::to_string(max_transient_depth(ps)));
    }
}

// ---- circles and lines ------------------------------------------------------

void check_two_component_tree(VerificationReport& report,
                              const std::string& prefix, const PhaseSpace& ps,
                              state_t isolated, state_t root, int depth_bound,
                              const std::string& params) {
    const auto comps = components(ps);
    add_case(report, prefix + "-component-count", params, 2,
             static_cast<std::int64_t>(comps.size()));
    const ComponentReport* iso = component_rooted_at(comps, isolated);
    add_check(report, prefix + "-isolated", params,
              iso && iso->member_count == 1 &&
                  iso->shape == ComponentShape::IsolatedFixedPoint);
    const ComponentReport* tree = component_rooted_at(comps, root);
    add_check(report, prefix + "-root", params, tree != nullptr);
    add_check(report, prefix + "-fixed-points", params,
              fixed_points_are(ps, {std::min(isolated, root),
                                    std::max(isolated, root)}));
    add_case(report, prefix + "-depth-bound", params, 1,
             max_transient_depth(ps) <= depth_bound ? 1 : 0,
             "max depth = " + std::to_string(max_transient_depth(ps)));
}

void check_goe_direction(VerificationReport& report, const std::string& claim,
                         const PhaseSpace& ps, int n, int k,
                         const std::string& params) {
    bool ok = true;
    std::string bad;
    for (state_t s = 0; s < state_count(n); ++s) {
        if (circ_goe_predicate(n, k, s) && ps.in_degree[s] != 0) {
            ok = false;
            bad = "state " + state_label(s, n) + " has a preimage";
            break;
        }
    }
    add_check(report, claim, params, ok, bad);
}

}  // namespace

VerificationReport verify_complete(IntRange n_range, int random_orders,
                                   std::uint64_t seed) {
    VerificationReport report;
    report.suite = "complete";
    report.seed = seed;
    const auto t0 = Clock::now();
    std::mt19937_64 rng(seed);

    for (int n = std::max(1, n_range.lo); n <= n_range.hi; ++n) {
        const BaseGraph g = complete_graph(n);
        for (int k = 1; k <= n; ++k) {
            const auto orders = make_orders(n, random_orders, rng);
            std::vector<state_t> reference;
            Profile reference_profile;
            for (std::size_t oi = 0; oi < orders.size(); ++oi) {
                const ThresholdSds sds(g, k, orders[oi]);
                const PhaseSpace ps = build_phase_space(sds);
                const std::string params = describe("complete", n, k, orders[oi]);
                check_complete_instance(report, ps, n, k, params);
                if (oi == 0) {
                    reference = ps.successor;
                    reference_profile = profile_of(components(ps));
                } else {
                    // The map itself must match, not just aggregate shape.
                    std::string bad;
                    bool same = ps.successor == reference;
                    if (!same) {
                        for (std::uint64_t s = 0; s < ps.size(); ++s) {
                            if (ps.successor[s] != reference[s]) {
                                bad = "maps differ at state " +
                                      state_label(static_cast<state_t>(s), n);
                                break;
                            }
                        }
                    }
                    add_check(report, "kn-map-order-independent", params, same,
                              bad);
                    add_check(report, "kn-profile-order-independent", params,
                              profile_of(components(ps)) == reference_profile);
                }
            }
        }
    }
    report.wall_seconds = seconds_since(t0);
    return report;
}

VerificationReport verify_star(IntRange arm_range, int random_orders,
                               std::uint64_t seed) {
    VerificationReport report;
    report.suite = "star";
    report.seed = seed;
    const auto t0 = Clock::now();
    std::mt19937_64 rng(seed);

    for (int arms = std::max(1, arm_range.lo); arms <= arm_range.hi; ++arms) {
        const BaseGraph g = star_graph(arms);
        const int k_max = g.max_degree() + 1;
        for (int k = 1; k <= k_max; ++k) {
            for (const UpdateSequence& order :
                 make_orders(arms + 1, random_orders, rng)) {
                const ThresholdSds sds(g, k, order);
                const PhaseSpace ps = build_phase_space(sds);
                check_star_instance(report, sds, ps, arms, k,
                                    describe("star", arms, k, order));
            }
        }
    }
    report.wall_seconds = seconds_since(t0);
    return report;
}

VerificationReport verify_circle(IntRange n_range, int random_orders,
                                 std::uint64_t seed) {
    VerificationReport report;
    report.suite = "circ";
    report.seed = seed;
    const auto t0 = Clock::now();
    std::mt19937_64 rng(seed);

    for (int n = std::max(3, n_range.lo); n <= n_range.hi; ++n) {
        const BaseGraph g = circle_graph(n);
        const state_t ones = all_ones_state(n);
        for (int k = 1; k <= 3; ++k) {
            for (const UpdateSequence& order :
                 make_orders(n, random_orders, rng)) {
                const ThresholdSds sds(g, k, order);
                const PhaseSpace ps = build_phase_space(sds);
                const std::string params = describe("circ", n, k, order);
                if (k == 2) {
                    state_t witness = 0;
                    const bool idem = is_idempotent(ps, &witness);
                    add_check(report, "circ-k2-idempotent", params, idem,
                              idem ? "" : "state " + state_label(witness, n));
                    continue;
                }
                const std::string prefix =
                    k == 1 ? "circ-k1" : "circ-k3";
                const state_t isolated = k == 1 ? 0 : ones;
                const state_t root = k == 1 ? ones : 0;
                check_two_component_tree(report, prefix, ps, isolated, root,
                                         n / 2, params);
                check_goe_direction(report, prefix + "-goe-direction", ps, n,
                                    k, params);
            }
            if (k == 1 || k == 3) {
                // The constructed order must realize the extremal depth from
                // the seed state, for every rotation of it.
                std::int64_t measured = n / 2;
                std::string bad;
                for (int i = 0; i < n; ++i) {
                    const UpdateSequence order = extremal_order_circle(n, i);
                    const ThresholdSds sds(g, k, order);
                    const state_t seed_state =
                        k == 1 ? (state_t{1} << i)
                               : (ones & ~(state_t{1} << i));
                    const int depth = transient_length(sds, seed_state);
                    if (depth != n / 2) {
                        measured = depth;
                        bad = "i=" + std::to_string(i) + " order=" +
                              order.to_string();
                        break;
                    }
                }
                const std::string prefix = k == 1 ? "circ-k1" : "circ-k3";
                add_case(report, prefix + "-extremal-depth",
                         "family=circ n=" + std::to_string(n) +
                             " k=" + std::to_string(k), n / 2, measured, bad);
            }
        }
    }
    report.wall_seconds = seconds_since(t0);
    return report;
}

VerificationReport verify_line(IntRange n_range, int random_orders,
                               std::uint64_t seed) {
    VerificationReport report;
    report.suite = "line";
    report.seed = seed;
    const auto t0 = Clock::now();
    std::mt19937_64 rng(seed);

    for (int n = std::max(2, n_range.lo); n <= n_range.hi; ++n) {
        const BaseGraph g = line_graph(n);
        const state_t ones = all_ones_state(n);
        const int k_max = g.max_degree() + 1;
        for (int k = 1; k <= std::min(3, k_max); ++k) {
            for (const UpdateSequence& order :
                 make_orders(n, random_orders, rng)) {
                const ThresholdSds sds(g, k, order);
                const PhaseSpace ps = build_phase_space(sds);
                const std::string params = describe("line", n, k, order);
                if (k == 1) {
                    check_two_component_tree(report, "line-k1", ps, 0, ones,
                                             n - 1, params);
                } else if (k == 2) {
                    state_t witness = 0;
                    const bool idem = is_idempotent(ps, &witness);
                    add_check(report, "line-k2-idempotent", params, idem,
                              idem ? "" : "state " + state_label(witness, n));
                } else {
                    // Endpoints can never satisfy a 3-threshold, so all-ones
                    // is not fixed and everything drains to all-zeros.
                    const auto comps = components(ps);
                    add_case(report, "line-k3-component-count", params, 1,
                             static_cast<std::int64_t>(comps.size()));
                    add_check(report, "line-k3-root-zero", params,
                              !comps.empty() &&
                                  comps.front().cycle.size() == 1 &&
                                  comps.front().cycle.front() == 0);
                    add_check(report, "line-k3-sole-fixed-point", params,
                              fixed_points_are(ps, {0}));
                    add_check(
                        report, "line-k3-depth-bound", params,
                        max_transient_depth(ps) <= (n + 1) / 2,
                        "max depth = " + std::to_string(max_transient_depth(ps)));
                }
            }
            if (k == 1 || (k == 3 && n >= 3)) {
                const LineExtremal extremal = extremal_order_line(n, k);
                const ThresholdSds sds(g, k, extremal.order);
                const int expected = k == 1 ? n - 1 : (n + 1) / 2;
                add_case(report,
                         k == 1 ? "line-k1-extremal-depth"
                                : "line-k3-extremal-depth",
                         "family=line n=" + std::to_string(n) +
                             " k=" + std::to_string(k) +
                             " order=" + extremal.order.to_string(),
                         expected, transient_length(sds, extremal.start));
            }
        }
    }
    report.wall_seconds = seconds_since(t0);
    return report;
}

VerificationReport verify_fixed_points_only(IntRange size_range,
                                            int random_orders,
                                            std::uint64_t seed) {
    VerificationReport report;
    report.suite = "fixed-points";
    report.seed = seed;
    const auto t0 = Clock::now();
    std::mt19937_64 rng(seed);

    const Family families[] = {Family::Complete, Family::Star, Family::Circle,
                               Family::Line};
    for (const Family fam : families) {
        const int min_size = fam == Family::Circle ? 3
                             : fam == Family::Line ? 2
                                                   : 1;
        for (int n = std::max(min_size, size_range.lo); n <= size_range.hi;
             ++n) {
            const FamilyKind kind{fam, n};
            const BaseGraph g = kind.make_graph();
            const int n_vtx = kind.vertex_count();
            const state_t ones = all_ones_state(n_vtx);
            const int k_max = g.max_degree() + 1;

            for (int k = 1; k <= k_max; ++k) {
                for (const UpdateSequence& order :
                     make_orders(n_vtx, random_orders, rng)) {
                    const ThresholdSds sds(g, k, order);
                    const PhaseSpace ps = build_phase_space(sds);
                    std::size_t longest = 0;
                    for (const auto& cycle : periodic_cycles(ps)) {
                        longest = std::max(longest, cycle.size());
                    }
                    add_case(report, "fp-only-cycle-length",
                             describe(kind.name(), n, k, order), 1,
                             static_cast<std::int64_t>(longest));
                }
            }

            // Degenerate thresholds collapse in a single step.
            for (const UpdateSequence& order : make_orders(n_vtx, 1, rng)) {
                {
                    const ThresholdSds sds(g, 0, order);
                    const PhaseSpace ps = build_phase_space(sds);
                    bool ok = true;
                    state_t bad = 0;
                    for (std::uint64_t s = 0; s < ps.size(); ++s) {
                        if (ps.successor[s] != ones) {
                            ok = false;
                            bad = static_cast<state_t>(s);
                            break;
                        }
                    }
                    add_check(report, "k0-all-ones-in-one-step",
                              describe(kind.name(), n, 0, order), ok,
                              ok ? "" : "state " + state_label(bad, n_vtx));
                }
                {
                    const ThresholdSds sds(g, k_max + 1, order);
                    const PhaseSpace ps = build_phase_space(sds);
                    bool ok = true;
                    state_t bad = 0;
                    for (std::uint64_t s = 0; s < ps.size(); ++s) {
                        if (ps.successor[s] != 0) {
                            ok = false;
                            bad = static_cast<state_t>(s);
                            break;
                        }
                    }
                    add_check(report, "kbig-all-zeros-in-one-step",
                              describe(kind.name(), n, k_max + 1, order), ok,
                              ok ? "" : "state " + state_label(bad, n_vtx));
                }
            }
        }
    }
    report.wall_seconds = seconds_since(t0);
    return report;
}

ScanResult scan_orders(const FamilyKind& family, int k, int max_scan_vertices) {
    const int n_vtx = family.vertex_count();
    if (max_scan_vertices < 1) {
        throw std::invalid_argument("scan_orders: budget must be positive");
    }
    if (n_vtx > max_scan_vertices) {
        throw BudgetError("scan_orders: " + std::to_string(n_vtx) +
                          " vertices exceeds the scan budget of " +
                          std::to_string(max_scan_vertices));
    }
    const BaseGraph g = family.make_graph();
    std::vector<int> perm(static_cast<std::size_t>(n_vtx));
    std::iota(perm.begin(), perm.end(), 0);

    ScanResult result;
    result.max_depth = -1;
    do {
        const ThresholdSds sds(g, k, UpdateSequence(perm));
        const PhaseSpace ps = build_phase_space(sds);
        const int depth = max_transient_depth(ps);
        if (depth > result.max_depth) {
            result.max_depth = depth;
            result.witness_order = perm;
        }
        ++result.orders_scanned;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

namespace {

std::string order_vec_string(const std::vector<int>& order) {
    std::ostringstream out;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i) out << ',';
        out << order[i];
    }
    return out.str();
}

}  // namespace

VerificationReport verify_depth_table(IntRange n_range, int max_scan_vertices,
                                      int random_orders, std::uint64_t seed) {
    VerificationReport report;
    report.suite = "depth-table";
    report.seed = seed;
    const auto t0 = Clock::now();
    std::mt19937_64 rng(seed);

    const Family families[] = {Family::Complete, Family::Star, Family::Circle,
                               Family::Line};
    for (int n = std::max(3, n_range.lo); n <= n_range.hi; ++n) {
        for (const Family fam : families) {
            const FamilyKind kind{fam, n};
            const BaseGraph g = kind.make_graph();
            const int n_vtx = kind.vertex_count();

            for (int k = 1; k <= 4; ++k) {
                const std::string base = "family=" + kind.name() +
                                         " n=" + std::to_string(n) +
                                         " k=" + std::to_string(k);
                const std::optional<int> predicted =
                    predicted_max_depth(kind, k);
                if (!predicted) {
                    // Above the satisfiable range the system hits all-zeros
                    // in one step, for any order.
                    const ThresholdSds sds(g, k, UpdateSequence::identity(n_vtx));
                    const PhaseSpace ps = build_phase_space(sds);
                    bool collapsed = true;
                    for (std::uint64_t s = 0; s < ps.size(); ++s) {
                        if (ps.successor[s] != 0) {
                            collapsed = false;
                            break;
                        }
                    }
                    add_case(report, "depth-table-collapse",
                             base + " mode=collapse", 1,
                             collapsed ? max_transient_depth(ps) : -1);
                    continue;
                }

                if (n_vtx <= max_scan_vertices) {
                    const ScanResult scan =
                        scan_orders(kind, k, max_scan_vertices);
                    add_case(report, "depth-table-cell",
                             base + " mode=exhaustive", *predicted,
                             scan.max_depth,
                             "witness order " +
                                 order_vec_string(scan.witness_order));
                } else {
                    // Beyond the factorial budget: a lower bound from the
                    // identity, the constructed extremal orders, and random
                    // samples.
                    std::vector<UpdateSequence> orders =
                        make_orders(n_vtx, random_orders, rng);
                    {
                        std::vector<int> reversed(
                            static_cast<std::size_t>(n_vtx));
                        std::iota(reversed.begin(), reversed.end(), 0);
                        std::reverse(reversed.begin(), reversed.end());
                        orders.push_back(UpdateSequence(std::move(reversed)));
                    }
                    if (fam == Family::Circle && (k == 1 || k == 3)) {
                        orders.push_back(extremal_order_circle(n, 0));
                    }
                    if (fam == Family::Line && (k == 1 || k == 3)) {
                        orders.push_back(extremal_order_line(n, k).order);
                    }
                    int measured = 0;
                    std::vector<int> best_order;
                    for (const UpdateSequence& order : orders) {
                        const ThresholdSds sds(g, k, order);
                        const PhaseSpace ps = build_phase_space(sds);
                        const int depth = max_transient_depth(ps);
                        if (depth > measured) {
                            measured = depth;
                            best_order = order.order();
                        }
                    }
                    add_case(report, "depth-table-cell", base + " mode=sampled",
                             *predicted, measured,
                             "deepest sampled order " +
                                 order_vec_string(best_order));
                }
            }
        }
    }
    report.wall_seconds = seconds_since(t0);
    return report;
}

namespace {

std::map<std::string, std::string> parse_params(const std::string& params) {
    std::map<std::string, std::string> out;
    std::istringstream ss(params);
    std::string token;
    while (ss >> token) {
        const auto eq = token.find('=');
        if (eq != std::string::npos) {
            out[token.substr(0, eq)] = token.substr(eq + 1);
        }
    }
    return out;
}

}  // namespace

std::string render_depth_table(const VerificationReport& report) {
    struct Cell {
        std::int64_t predicted = 0;
        std::int64_t measured = 0;
        bool pass = false;
        bool collapse = false;
        bool sampled = false;
        bool present = false;
    };
    // (n, family-rank) -> cells for k = 1..4
    std::map<std::pair<int, int>, std::array<Cell, 5>> rows;
    const auto family_rank = [](const std::string& f) {
        if (f == "complete") return 0;
        if (f == "star") return 1;
        if (f == "circ") return 2;
        return 3;
    };
    const char* family_names[] = {"complete", "star", "circ", "line"};

    for (const VerificationCase& c : report.cases) {
        if (c.claim != "depth-table-cell" && c.claim != "depth-table-collapse") {
            continue;
        }
        const auto kv = parse_params(c.params);
        const int n = std::stoi(kv.at("n"));
        const int k = std::stoi(kv.at("k"));
        if (k < 1 || k > 4) continue;
        Cell cell;
        cell.predicted = c.predicted;
        cell.measured = c.measured;
        cell.pass = c.pass;
        cell.collapse = c.claim == "depth-table-collapse";
        cell.sampled = kv.count("mode") && kv.at("mode") == "sampled";
        cell.present = true;
        rows[{n, family_rank(kv.at("family"))}][static_cast<std::size_t>(k)] =
            cell;
    }

    std::ostringstream out;
    out << "maximal transient depth, measured/predicted"
        << " (c = one-step collapse, s = sampled, * = mismatch)\n";
    out << "  " << std::left << std::setw(4) << "n" << std::setw(10)
        << "family";
    for (int k = 1; k <= 4; ++k) {
        out << std::setw(8) << ("k=" + std::to_string(k));
    }
    out << '\n';
    for (const auto& [key, cells] : rows) {
        out << "  " << std::left << std::setw(4) << key.first << std::setw(10)
            << family_names[key.second];
        for (int k = 1; k <= 4; ++k) {
            const Cell& cell = cells[static_cast<std::size_t>(k)];
            std::ostringstream field;
            if (!cell.present) {
                field << "-";
            } else if (cell.collapse) {
                field << "c";
                if (!cell.pass) field << "*";
            } else {
                field << cell.measured << "/" << cell.predicted;
                if (cell.sampled) field << "s";
                if (!cell.pass) field << "*";
            }
            out << std::setw(8) << field.str();
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace sds
