#pragma once

#include <cstdint>
#include <vector>

#include "chordalgen/graph.hpp"
#include "chordalgen/host_tree.hpp"
#include "chordalgen/subtree_methods.hpp"

namespace chordalgen::oracle {

// Exhaustive search for an induced chordless cycle of length >= 4.
// Deliberately naive; guarded to n <= 12.
bool brute_force_chordal(const Graph& graph);

// All maximal cliques by subset enumeration, sorted lexicographically.
// Guarded to n <= 16.
std::vector<std::vector<int>> brute_force_cliques(const Graph& graph);

// A family of path-host instances whose total subtree size grows like
// m * n^{1/4}: s copies of each early singleton plus p^3 copies of the long
// tail subpath. The intersection graph is a disjoint union of one K_{p^3}
// and p^2 copies of K_{p^2-p}.
struct LowerBoundInstance {
    int p = 0;
    HostTree host;           // a path on p^4 nodes
    SubtreeSet subtrees;
    std::int64_t expected_m = 0;           // p^6 - p^5
    std::int64_t expected_total_size = 0;  // p^7 - p^5 + p^4 - p^3
};

LowerBoundInstance lower_bound_instance(int p);

}  // namespace chordalgen::oracle
