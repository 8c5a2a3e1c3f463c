#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "chordalgen/graph.hpp"
#include "chordalgen/host_tree.hpp"
#include "chordalgen/rng.hpp"
#include "chordalgen/subtree_methods.hpp"

namespace chordalgen {

// Per host node x, the list C_x of graph vertices whose subtrees contain x.
struct NodeCliqueLists {
    std::vector<std::vector<int>> at_node;  // each list ascending
    std::int64_t total_entries = 0;         // equals the total subtree size
};

// Maximal cliques of the output graph with a tree structure over them: for
// every vertex, the cliques containing it induce a connected subtree.
struct CliqueTree {
    std::vector<std::vector<int>> cliques;      // each sorted ascending
    std::vector<std::pair<int, int>> tree_edges;  // clique-index pairs

    std::int64_t total_clique_size() const {
        std::int64_t total = 0;
        for (const auto& c : cliques) total += static_cast<std::int64_t>(c.size());
        return total;
    }
};

NodeCliqueLists node_clique_lists(const SubtreeSet& subtrees, WorkCounter* work = nullptr);

// Starts from the host tree with node x labeled C_x and contracts an edge
// whenever one label contains the adjacent one, leaving exactly the maximal
// cliques. O(n + m + total subtree size).
CliqueTree build_clique_tree(const NodeCliqueLists& lists, const HostTree& host,
                             WorkCounter* work = nullptr);

// Adjacency lists from a clique tree in O(n + m): each edge is emitted at the
// shallowest clique containing both endpoints.
Graph build_graph(const CliqueTree& clique_tree, int n, WorkCounter* work = nullptr);

struct ChordalGenResult {
    HostTree host;
    SubtreeSet subtrees;
    CliqueTree clique_tree;
    Graph graph;
    std::uint64_t subtree_steps = 0;  // step 2 work
    std::uint64_t build_steps = 0;    // step 3 work
    bool connectivity_patched = false;
};

// The full pipeline: random host tree, chosen subtree method, clique tree,
// adjacency lists, and optionally the connectivity patch (with one rebuild).
ChordalGenResult chordal_gen(int n, const SubtreeParams& params, Rng& rng, bool connect = false);

}  // namespace chordalgen
