#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace chordalgen {

// Simple undirected graph in CSR form. Neighbor lists are sorted ascending,
// contain no self-loops and no duplicates; m counts undirected edges.
struct Graph {
    int n = 0;
    std::int64_t m = 0;
    std::vector<std::int64_t> offsets;  // size n + 1
    std::vector<int> neighbors;         // size 2 * m

    std::span<const int> adj(int v) const {
        return {neighbors.data() + offsets[v],
                static_cast<std::size_t>(offsets[v + 1] - offsets[v])};
    }

    int degree(int v) const { return static_cast<int>(offsets[v + 1] - offsets[v]); }

    bool has_edge(int u, int v) const;

    // Builds from an undirected edge list. Throws std::invalid_argument on
    // self-loops, duplicate edges, or endpoints out of range.
    static Graph from_edge_list(int n, const std::vector<std::array<int, 2>>& edges);

    // Builds from per-vertex neighbor lists (directed entries; u in adj[v]
    // must imply v in adj[u]). Convenience for tests.
    static Graph from_adjacency(const std::vector<std::vector<int>>& adjacency);

    std::vector<std::array<int, 2>> edge_list() const;

    bool operator==(const Graph& other) const = default;
};

// Checks all Graph invariants (sortedness, symmetry, loop/duplicate freedom,
// m consistency). Throws std::invalid_argument describing the first violation.
void validate_graph(const Graph& g);

}  // namespace chordalgen
