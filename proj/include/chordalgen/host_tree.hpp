#pragma once

#include <array>
#include <vector>

#include "chordalgen/rng.hpp"

namespace chordalgen {

// The host tree T on n nodes: adjacency lists plus the edge list.
// Immutable once built; safe to share across concurrent readers.
struct HostTree {
    int n = 0;
    std::vector<std::array<int, 2>> edges;    // exactly n - 1 entries
    std::vector<std::vector<int>> adjacency;  // symmetric

    int degree(int x) const { return static_cast<int>(adjacency[x].size()); }

    // Validates connectivity/acyclicity by BFS; throws std::invalid_argument.
    static HostTree from_edges(int n, std::vector<std::array<int, 2>> edges);
};

// BFS annotations of a host tree relative to a chosen root.
struct RootedTree {
    int n = 0;
    int root = 0;
    std::vector<int> parent;     // -1 for the root
    std::vector<int> level;      // BFS distance from the root
    std::vector<int> bfs_order;  // root first, level by level
    int max_level = 0;
};

// Incremental attachment process: node i >= 1 attaches to a uniformly chosen
// node among 0..i-1. O(n), deterministic given the rng state.
HostTree generate_random_tree(int n, Rng& rng);

RootedTree root_and_level(const HostTree& tree, int root);

}  // namespace chordalgen
