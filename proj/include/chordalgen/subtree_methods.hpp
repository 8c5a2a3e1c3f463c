#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "chordalgen/graph.hpp"
#include "chordalgen/host_tree.hpp"
#include "chordalgen/rng.hpp"

namespace chordalgen {

// Counts elementary steps so tests can check the advertised time bounds.
struct WorkCounter {
    std::uint64_t steps = 0;
    void add(std::uint64_t k) { steps += k; }
};

// The n subtrees of a host tree, each a list of distinct host-node indices
// inducing a connected subgraph. Immutable once returned.
struct SubtreeSet {
    int host_n = 0;
    std::vector<std::vector<int>> subtrees;
    std::int64_t total_size = 0;  // sum of subtree sizes
};

struct GrowingParams {
    int k = 1;  // maximum subtree size, 1 <= k <= n
};

struct ConnectingParams {
    double lambda = 1.0;  // Poisson mean, 0 < lambda <= kMaxLambda
};

struct PrunedParams {
    double f = 0.0;  // edge deletion fraction in [0, 1)
    double s = 0.0;  // selection barrier in [0, 1]
};

using SubtreeParams = std::variant<GrowingParams, ConnectingParams, PrunedParams>;

// The product-of-uniforms Poisson sampler underflows near lambda ~ 700;
// parameters are capped well below that (the experiments use lambda <= 4.1).
inline constexpr double kMaxLambda = 500.0;

// Poisson(lambda) draw by the incremental product method, early-terminated
// at cap, then clamped to [1, cap]. Costs O(result).
int sample_poisson(double lambda, int cap, Rng& rng);

// Each subtree starts at a uniform node and grows k_i - 1 times by attaching
// a uniform outside neighbor of a uniform eligible boundary node, where
// k_i is uniform in [1, k]. O(|V(T_i)|) per subtree after O(n) setup.
SubtreeSet growing_subtree(const HostTree& host, const GrowingParams& params, Rng& rng,
                           WorkCounter* work = nullptr);

// Each subtree is the minimal subtree spanning k_i ~ Poisson(lambda) random
// distinct nodes (k_i clamped to [1, n]), built by the level-wise
// parent-joining loop. O(|V(T_i)|) per subtree.
SubtreeSet connecting_nodes(const RootedTree& rooted, const ConnectingParams& params, Rng& rng,
                            WorkCounter* work = nullptr);

// Each subtree is a uniformly chosen component of the host tree after
// deleting floor((n-1) * f) random edges, with the component size drawn
// uniformly from the largest ceil(q * (1 - s)) of the q distinct component
// sizes. O(n) per subtree, O(n^2) total.
SubtreeSet pruned_tree(const HostTree& host, const PrunedParams& params, Rng& rng,
                       WorkCounter* work = nullptr);

// If `graph` (the intersection graph of `subtrees`) is disconnected, replaces
// the last subtree with the minimal host subtree joining one node drawn from
// one subtree per component of graph - v_{n-1}, which makes the rebuilt
// intersection graph connected. Otherwise returns the set unchanged.
SubtreeSet ensure_connected(const HostTree& host, const SubtreeSet& subtrees, const Graph& graph,
                            Rng& rng, WorkCounter* work = nullptr);

namespace detail {

// Minimal subtree of the rooted host containing all of `nodes` (duplicates
// tolerated): the level-wise parent-joining loop shared by connecting_nodes
// and ensure_connected.
std::vector<int> minimal_connecting_subtree(const RootedTree& rooted, const std::vector<int>& nodes,
                                            WorkCounter* work = nullptr);

}  // namespace detail

}  // namespace chordalgen
