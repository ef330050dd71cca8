#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sds/closed_form.hpp"

namespace sds {

// One predicted-vs-measured check. claim is a stable identifier; params pins
// the instance (family, size, threshold, order) so a failure can be replayed.
struct VerificationCase {
    std::string claim;
    std::string params;
    std::int64_t predicted = 0;
    std::int64_t measured = 0;
    bool pass = false;
    std::string counterexample;  // empty when pass
};

struct VerificationReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<VerificationCase> cases;
    double wall_seconds = 0.0;

    bool all_passed() const;
    std::size_t failure_count() const;
};

struct IntRange {
    int lo = 0;
    int hi = 0;  // inclusive
};

inline constexpr int kDefaultScanVertexBudget = 8;

// Each suite sweeps its family over the given size range and all meaningful
// thresholds, checking structure, counts, and closed forms under the identity
// order plus random_orders seeded random orders. Reports are deterministic
// for a given seed.
VerificationReport verify_complete(IntRange n_range, int random_orders,
                                   std::uint64_t seed);
VerificationReport verify_star(IntRange arm_range, int random_orders,
                               std::uint64_t seed);
VerificationReport verify_circle(IntRange n_range, int random_orders,
                                 std::uint64_t seed);
VerificationReport verify_line(IntRange n_range, int random_orders,
                               std::uint64_t seed);

// Cross-family: for 1 <= k <= max_degree + 1 every periodic orbit is a fixed
// point, k = 0 reaches all-ones in one step, k = max_degree + 2 reaches
// all-zeros in one step.
VerificationReport verify_fixed_points_only(IntRange size_range,
                                            int random_orders,
                                            std::uint64_t seed);

struct ScanResult {
    int max_depth = 0;
    std::vector<int> witness_order;  // an order attaining max_depth
    std::uint64_t orders_scanned = 0;
};

// Maximum transient depth over every update order, by exhaustive enumeration.
// Throws BudgetError when the family's vertex count exceeds max_scan_vertices.
ScanResult scan_orders(const FamilyKind& family, int k,
                       int max_scan_vertices = kDefaultScanVertexBudget);

// Measured-vs-predicted maximal transient depth for all four families at
// k = 1..4. Cells within the scan budget are exhaustive over orders; beyond
// it the measurement is a sampled lower bound (identity + constructed
// extremal + random orders), marked mode=sampled. Cells with k > max_degree+1
// instead check the one-step collapse to all-zeros.
VerificationReport verify_depth_table(IntRange n_range,
                                      int max_scan_vertices,
                                      int random_orders, std::uint64_t seed);

// Plain-text rendering of a verify_depth_table report, one row per (n, k).
std::string render_depth_table(const VerificationReport& report);

}  // namespace sds
