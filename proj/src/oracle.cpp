#include "chordalgen/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace chordalgen::oracle {

namespace {

std::vector<std::uint32_t> adjacency_masks(const Graph& graph) {
    std::vector<std::uint32_t> mask(static_cast<std::size_t>(graph.n), 0);
    for (int v = 0; v < graph.n; ++v)
        for (int w : graph.adj(v)) mask[v] |= (1u << w);
    return mask;
}

}  // namespace

bool brute_force_chordal(const Graph& graph) {
    if (graph.n > 12) throw std::invalid_argument("brute_force_chordal: limited to n <= 12");
    const int n = graph.n;
    const auto mask = adjacency_masks(graph);

    // A subset induces a chordless cycle iff every member has exactly two
    // neighbors inside and the subset is connected.
    const std::uint32_t all = (1u << n) - 1;
    for (std::uint32_t subset = 0; subset <= all; ++subset) {
        if (std::popcount(subset) < 4) continue;
        bool degrees_ok = true;
        for (std::uint32_t rest = subset; rest != 0; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            if (std::popcount(mask[v] & subset) != 2) {
                degrees_ok = false;
                break;
            }
        }
        if (!degrees_ok) continue;
        // Connectivity within the subset.
        std::uint32_t reached = subset & (~subset + 1);  // lowest member
        for (;;) {
            std::uint32_t grown = reached;
            for (std::uint32_t rest = reached; rest != 0; rest &= rest - 1)
                grown |= mask[std::countr_zero(rest)] & subset;
            if (grown == reached) break;
            reached = grown;
        }
        if (reached == subset) return false;  // found an induced cycle >= 4
    }
    return true;
}

std::vector<std::vector<int>> brute_force_cliques(const Graph& graph) {
    if (graph.n > 16) throw std::invalid_argument("brute_force_cliques: limited to n <= 16");
    const int n = graph.n;
    const auto mask = adjacency_masks(graph);

    std::vector<std::vector<int>> result;
    const std::uint32_t all = (1u << n) - 1;
    for (std::uint32_t subset = 1; subset <= all; ++subset) {
        bool clique = true;
        for (std::uint32_t rest = subset; rest != 0; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            if ((mask[v] & subset) != (subset & ~(1u << v))) {
                clique = false;
                break;
            }
        }
        if (!clique) continue;
        bool maximal = true;
        for (int w = 0; w < n; ++w) {
            if (subset & (1u << w)) continue;
            if ((mask[w] & subset) == subset) {
                maximal = false;
                break;
            }
        }
        if (!maximal) continue;
        std::vector<int> members;
        for (std::uint32_t rest = subset; rest != 0; rest &= rest - 1)
            members.push_back(std::countr_zero(rest));
        result.push_back(std::move(members));
    }
    std::sort(result.begin(), result.end());
    return result;
}

LowerBoundInstance lower_bound_instance(int p) {
    if (p < 2) throw std::invalid_argument("lower_bound_instance: p must be >= 2");
    const std::int64_t n64 = static_cast<std::int64_t>(p) * p * p * p;
    if (n64 > 100'000'000) throw std::invalid_argument("lower_bound_instance: p too large");
    const int n = static_cast<int>(n64);
    const int n_prime = p * p + 1;
    const int singleton_copies = p * p - p;       // s
    const int tail_copies = p * p * p;            // s_{n'}

    LowerBoundInstance instance;
    instance.p = p;
    std::vector<std::array<int, 2>> edges;
    edges.reserve(static_cast<std::size_t>(n) - 1);
    for (int x = 0; x + 1 < n; ++x) edges.push_back({x, x + 1});
    instance.host = HostTree::from_edges(n, std::move(edges));

    instance.subtrees.host_n = n;
    instance.subtrees.subtrees.reserve(static_cast<std::size_t>(n));
    for (int x = 0; x < n_prime - 1; ++x)
        for (int copy = 0; copy < singleton_copies; ++copy)
            instance.subtrees.subtrees.push_back({x});
    std::vector<int> tail;
    tail.reserve(static_cast<std::size_t>(n - n_prime + 1));
    for (int x = n_prime - 1; x < n; ++x) tail.push_back(x);
    for (int copy = 0; copy < tail_copies; ++copy) instance.subtrees.subtrees.push_back(tail);
    for (const auto& subtree : instance.subtrees.subtrees)
        instance.subtrees.total_size += static_cast<std::int64_t>(subtree.size());

    const std::int64_t p2 = static_cast<std::int64_t>(p) * p;
    const std::int64_t p3 = p2 * p;
    const std::int64_t p4 = p3 * p;
    const std::int64_t p5 = p4 * p;
    const std::int64_t p6 = p5 * p;
    const std::int64_t p7 = p6 * p;
    instance.expected_m = p6 - p5;
    instance.expected_total_size = p7 - p5 + p4 - p3;

    if (static_cast<int>(instance.subtrees.subtrees.size()) != n)
        throw std::logic_error("lower_bound_instance: subtree count mismatch");
    if (instance.subtrees.total_size != instance.expected_total_size)
        throw std::logic_error("lower_bound_instance: total size mismatch");
    return instance;
}

}  // namespace chordalgen::oracle
