#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace sds {

// Simple undirected graph on vertices 0..n_vertices-1. Adjacency lists are
// strictly increasing and mirror-consistent; no self-loops or parallel edges.
struct BaseGraph {
    int n_vertices = 0;
    std::vector<std::vector<int>> adjacency;

    int degree(int v) const;
    int max_degree() const;

    // v together with its neighbors, sorted increasingly.
    std::vector<int> closed_neighborhood(int v) const;

    // All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;
};

BaseGraph complete_graph(int n_vertices);   // n >= 1
BaseGraph star_graph(int n_arms);           // n_arms >= 1; vertex 0 is the center
BaseGraph circle_graph(int n_vertices);     // n >= 3
BaseGraph line_graph(int n_vertices);       // n >= 2

// Builds from an explicit edge list. Throws std::invalid_argument on
// out-of-range endpoints, self-loops, or duplicate edges.
BaseGraph graph_from_edges(int n_vertices,
                           const std::vector<std::pair<int, int>>& edge_list);

// Text format: first line is the vertex count, each following non-empty line
// is one edge "u v" (0-based). '#' starts a comment. Diagnostics name the
// offending line number.
BaseGraph read_edge_list(std::istream& in);
BaseGraph read_edge_list_file(const std::string& path);

}  // namespace sds
