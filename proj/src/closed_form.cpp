#include "sds/closed_form.hpp"

#include <algorithm>
#include <stdexcept>

namespace sds {

int FamilyKind::vertex_count() const {
    return tag == Family::Star ? n + 1 : n;
}

BaseGraph FamilyKind::make_graph() const {
    switch (tag) {
        case Family::Complete: return complete_graph(n);
        case Family::Star: return star_graph(n);
        case Family::Circle: return circle_graph(n);
        case Family::Line: return line_graph(n);
    }
    throw std::invalid_argument("FamilyKind: unknown family tag");
}

std::string FamilyKind::name() const {
    switch (tag) {
        case Family::Complete: return "complete";
        case Family::Star: return "star";
        case Family::Circle: return "circ";
        case Family::Line: return "line";
    }
    return "unknown";
}

std::optional<Family> parse_family(const std::string& name) {
    if (name == "complete") return Family::Complete;
    if (name == "star") return Family::Star;
    if (name == "circ" || name == "circle") return Family::Circle;
    if (name == "line" || name == "path") return Family::Line;
    return std::nullopt;
}

std::uint64_t binomial(int n, int k) {
    if (n < 0 || n > 62) {
        throw std::invalid_argument("binomial: need 0 <= n <= 62");
    }
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<std::uint64_t>(n - k + i) /
                 static_cast<std::uint64_t>(i);
    }
    return result;
}

std::uint64_t kn_basin_zero_size(int n, int k) {
    if (n < 1 || n > kMaxVertices) {
        throw std::invalid_argument("kn_basin_zero_size: need 1 <= n <= 30");
    }
    if (k < 1 || k > n) {
        throw std::invalid_argument("kn_basin_zero_size: need 1 <= k <= n");
    }
    std::uint64_t total = 0;
    for (int i = 1; i < k; ++i) total += binomial(n, i);
    return total;
}

std::uint64_t kn_basin_one_size(int n, int k) {
    return (std::uint64_t{1} << n) - kn_basin_zero_size(n, k) - 2;
}

std::uint64_t star2_fixed_point_count(int n_arms) {
    if (n_arms < 1 || n_arms + 1 > kMaxVertices) {
        throw std::invalid_argument("star2_fixed_point_count: need 1 <= n_arms <= 29");
    }
    return std::uint64_t{1} << n_arms;
}

std::optional<int> predicted_max_depth(const FamilyKind& family, int k) {
    if (k < 1) return std::nullopt;
    const int max_deg_plus_one = family.make_graph().max_degree() + 1;
    if (k > max_deg_plus_one) return std::nullopt;

    switch (family.tag) {
        case Family::Complete:
            return 1;
        case Family::Star:
            // k = 1 reaches depth 2 only with two or more arms.
            if (k == 1) return family.n >= 2 ? 2 : 1;
            if (k == 2) return 1;
            if (k == 3) return 2;
            return 1;
        case Family::Circle:
            if (k == 1 || k == 3) return family.n / 2;
            return 1;  // k == 2
        case Family::Line:
            if (k == 1) return family.n - 1;
            if (k == 3) return (family.n + 1) / 2;
            return 1;  // k == 2
    }
    return std::nullopt;
}

UpdateSequence extremal_order_circle(int n, int i) {
    if (n < 3 || n > kMaxVertices) {
        throw std::invalid_argument("extremal_order_circle: need 3 <= n <= 30");
    }
    if (i < 0 || i >= n) {
        throw std::out_of_range("extremal_order_circle: vertex out of range");
    }
    // Start opposite i and spread outward, ending at i; each update then
    // extends the block of ones by one vertex.
    const int start = (i + n / 2) % n;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    const auto push = [&](int v) {
        v = ((v % n) + n) % n;
        if (!used[static_cast<std::size_t>(v)]) {
            used[static_cast<std::size_t>(v)] = 1;
            order.push_back(v);
        }
    };
    push(start);
    for (int d = 1; static_cast<int>(order.size()) < n; ++d) {
        push(start - d);
        push(start + d);
    }
    return UpdateSequence(std::move(order));
}

LineExtremal extremal_order_line(int n, int k) {
    if (n < 2 || n > kMaxVertices) {
        throw std::invalid_argument("extremal_order_line: need 2 <= n <= 30");
    }
    if (k == 1) {
        // Identity order: the lone one at the far end pulls every vertex up,
        // one per step.
        return {UpdateSequence::identity(n), state_t{1} << (n - 1)};
    }
    if (k == 3) {
        if (n < 3) {
            throw std::invalid_argument("extremal_order_line: k=3 needs n >= 3");
        }
        // Center-out order: zeros creep inward from the endpoints of the
        // all-ones state, one ring per step.
        const int center = n / 2;
        std::vector<int> order;
        order.reserve(static_cast<std::size_t>(n));
        order.push_back(center);
        for (int d = 1; static_cast<int>(order.size()) < n; ++d) {
            if (center - d >= 0) order.push_back(center - d);
            if (center + d < n) order.push_back(center + d);
        }
        return {UpdateSequence(std::move(order)), all_ones_state(n)};
    }
    throw std::invalid_argument("extremal_order_line: only k = 1 and k = 3");
}

bool circ_goe_predicate(int n, int k, state_t s) {
    if (n < 3 || n > kMaxVertices) {
        throw std::invalid_argument("circ_goe_predicate: need 3 <= n <= 30");
    }
    if (k != 1 && k != 3) {
        throw std::invalid_argument("circ_goe_predicate: only k = 1 and k = 3");
    }
    const state_t mask = all_ones_state(n);
    state_t t = s & mask;
    if (k == 3) t = ~t & mask;  // k = 3 behaves as k = 1 on complements
    if (t == 0) return false;
    const state_t rotated = ((t << 1) | (t >> (n - 1))) & mask;
    return (t & rotated) == 0;
}

}  // namespace sds
