#include "sds/base_graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sds/state.hpp"

namespace sds {

int BaseGraph::degree(int v) const {
    if (v < 0 || v >= n_vertices) {
        throw std::out_of_range("degree: vertex out of range");
    }
    return static_cast<int>(adjacency[static_cast<std::size_t>(v)].size());
}

int BaseGraph::max_degree() const {
    int best = 0;
    for (const auto& nbrs : adjacency) {
        best = std::max(best, static_cast<int>(nbrs.size()));
    }
    return best;
}

std::vector<int> BaseGraph::closed_neighborhood(int v) const {
    if (v < 0 || v >= n_vertices) {
        throw std::out_of_range("closed_neighborhood: vertex out of range");
    }
    std::vector<int> out = adjacency[static_cast<std::size_t>(v)];
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

std::vector<std::pair<int, int>> BaseGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_vertices; ++u) {
        for (int v : adjacency[static_cast<std::size_t>(u)]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

BaseGraph complete_graph(int n_vertices) {
    if (n_vertices < 1 || n_vertices > kMaxVertices) {
        throw std::invalid_argument("complete_graph: need 1 <= n <= 30");
    }
    BaseGraph g;
    g.n_vertices = n_vertices;
    g.adjacency.resize(static_cast<std::size_t>(n_vertices));
    for (int u = 0; u < n_vertices; ++u) {
        for (int v = 0; v < n_vertices; ++v) {
            if (v != u) g.adjacency[static_cast<std::size_t>(u)].push_back(v);
        }
    }
    return g;
}

BaseGraph star_graph(int n_arms) {
    if (n_arms < 1 || n_arms + 1 > kMaxVertices) {
        throw std::invalid_argument("star_graph: need 1 <= n_arms <= 29");
    }
    BaseGraph g;
    g.n_vertices = n_arms + 1;
    g.adjacency.resize(static_cast<std::size_t>(n_arms) + 1);
    for (int arm = 1; arm <= n_arms; ++arm) {
        g.adjacency[0].push_back(arm);
        g.adjacency[static_cast<std::size_t>(arm)].push_back(0);
    }
    return g;
}

BaseGraph circle_graph(int n_vertices) {
    // n = 2 would need a doubled edge 0-1; simple graphs start at the triangle.
    if (n_vertices < 3 || n_vertices > kMaxVertices) {
        throw std::invalid_argument("circle_graph: need 3 <= n <= 30");
    }
    BaseGraph g;
    g.n_vertices = n_vertices;
    g.adjacency.resize(static_cast<std::size_t>(n_vertices));
    for (int v = 0; v < n_vertices; ++v) {
        const int prev = (v + n_vertices - 1) % n_vertices;
        const int next = (v + 1) % n_vertices;
        auto& nbrs = g.adjacency[static_cast<std::size_t>(v)];
        nbrs.push_back(std::min(prev, next));
        if (next != prev) nbrs.push_back(std::max(prev, next));
    }
    return g;
}

BaseGraph line_graph(int n_vertices) {
    if (n_vertices < 2 || n_vertices > kMaxVertices) {
        throw std::invalid_argument("line_graph: need 2 <= n <= 30");
    }
    BaseGraph g;
    g.n_vertices = n_vertices;
    g.adjacency.resize(static_cast<std::size_t>(n_vertices));
    for (int v = 0; v + 1 < n_vertices; ++v) {
        g.adjacency[static_cast<std::size_t>(v)].push_back(v + 1);
        g.adjacency[static_cast<std::size_t>(v) + 1].push_back(v);
    }
    return g;
}

BaseGraph graph_from_edges(int n_vertices,
                           const std::vector<std::pair<int, int>>& edge_list) {
    if (n_vertices < 1 || n_vertices > kMaxVertices) {
        throw std::invalid_argument("graph_from_edges: need 1 <= n <= 30");
    }
    std::set<std::pair<int, int>> seen;
    BaseGraph g;
    g.n_vertices = n_vertices;
    g.adjacency.resize(static_cast<std::size_t>(n_vertices));
    for (const auto& [a, b] : edge_list) {
        if (a < 0 || a >= n_vertices || b < 0 || b >= n_vertices) {
            throw std::invalid_argument("graph_from_edges: endpoint out of range");
        }
        if (a == b) {
            throw std::invalid_argument("graph_from_edges: self-loop");
        }
        const auto key = std::minmax(a, b);
        if (!seen.insert(key).second) {
            throw std::invalid_argument("graph_from_edges: duplicate edge");
        }
        g.adjacency[static_cast<std::size_t>(a)].push_back(b);
        g.adjacency[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

namespace {

[[noreturn]] void edge_list_fail(int line_no, const std::string& what) {
    std::ostringstream msg;
    msg << "edge list line " << line_no << ": " << what;
    throw std::invalid_argument(msg.str());
}

// Strips comments and surrounding whitespace; empty result means skip.
std::string clean_line(const std::string& raw) {
    std::string s = raw.substr(0, raw.find('#'));
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

BaseGraph read_edge_list(std::istream& in) {
    std::string raw;
    int line_no = 0;
    int n_vertices = -1;

    while (n_vertices < 0) {
        if (!std::getline(in, raw)) {
            throw std::invalid_argument("edge list: missing vertex-count line");
        }
        ++line_no;
        const std::string line = clean_line(raw);
        if (line.empty()) continue;
        std::istringstream ss(line);
        int n = 0;
        char extra = 0;
        if (!(ss >> n) || (ss >> extra)) {
            edge_list_fail(line_no, "expected a single vertex count");
        }
        if (n < 1 || n > kMaxVertices) {
            edge_list_fail(line_no, "vertex count must be between 1 and 30");
        }
        n_vertices = n;
    }

    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = clean_line(raw);
        if (line.empty()) continue;
        std::istringstream ss(line);
        int u = 0;
        int v = 0;
        char extra = 0;
        if (!(ss >> u >> v) || (ss >> extra)) {
            edge_list_fail(line_no, "expected an edge as two vertex ids");
        }
        if (u < 0 || u >= n_vertices || v < 0 || v >= n_vertices) {
            edge_list_fail(line_no, "vertex id out of range");
        }
        if (u == v) {
            edge_list_fail(line_no, "self-loop not allowed");
        }
        if (!seen.insert(std::minmax(u, v)).second) {
            edge_list_fail(line_no, "duplicate edge");
        }
        edges.emplace_back(u, v);
    }
    return graph_from_edges(n_vertices, edges);
}

BaseGraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open edge list file: " + path);
    }
    return read_edge_list(in);
}

}  // namespace sds
