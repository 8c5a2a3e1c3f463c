#include "chordalgen/subtree_methods.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace chordalgen {

namespace {

// Level-indexed frontier for the parent-joining loop. One instance is reused
// across all n subtrees of connecting_nodes; the arrays are reset in O(1) per
// subtree by clearing only the touched buckets.
struct JoinScratch {
    std::vector<std::vector<int>> buckets;  // one list per BFS level
    std::vector<char> in_frontier;

    JoinScratch(int n, int max_level)
        : buckets(static_cast<std::size_t>(max_level) + 1), in_frontier(static_cast<std::size_t>(n), 0) {}

    // Appends to `out` the extra nodes of the minimal subtree containing the
    // seeds already stored in `out` (duplicates among seeds are tolerated and
    // removed). `out` ends up holding the whole subtree's node set.
    void join(const RootedTree& rooted, std::vector<int>& out, WorkCounter* work) {
        std::uint64_t steps = 0;
        int frontier_size = 0;
        int top = 0;
        std::size_t write = 0;
        for (std::size_t read = 0; read < out.size(); ++read) {
            const int x = out[read];
            ++steps;
            if (in_frontier[x]) continue;  // duplicate seed
            in_frontier[x] = 1;
            buckets[rooted.level[x]].push_back(x);
            out[write++] = x;
            ++frontier_size;
            top = std::max(top, rooted.level[x]);
        }
        out.resize(write);

        int d = top;
        while (frontier_size > 1) {
            assert(d > 0);
            auto& bucket = buckets[d];
            for (int x : bucket) {
                ++steps;
                const int p = rooted.parent[x];
                if (!in_frontier[p]) {
                    in_frontier[p] = 1;
                    buckets[d - 1].push_back(p);
                    out.push_back(p);
                    ++frontier_size;
                }
            }
            for (int x : bucket) in_frontier[x] = 0;
            frontier_size -= static_cast<int>(bucket.size());
            bucket.clear();
            --d;
        }
        // The lone survivor always sits at the current level.
        assert(buckets[d].size() == 1);
        in_frontier[buckets[d].front()] = 0;
        buckets[d].clear();
        if (work) work->add(steps);
    }
};

}  // namespace

int sample_poisson(double lambda, int cap, Rng& rng) {
    if (!(lambda > 0.0) || lambda > kMaxLambda)
        throw std::invalid_argument("sample_poisson: lambda must be in (0, 500]");
    if (cap < 1) throw std::invalid_argument("sample_poisson: cap must be positive");
    const double threshold = std::exp(-lambda);
    double product = 1.0;
    int count = -1;
    do {
        ++count;
        if (count >= cap) return cap;  // early termination
        product *= rng.uniform_real();
    } while (product > threshold);
    return count < 1 ? 1 : count;
}

SubtreeSet growing_subtree(const HostTree& host, const GrowingParams& params, Rng& rng,
                           WorkCounter* work) {
    const int n = host.n;
    if (params.k < 1 || params.k > n)
        throw std::invalid_argument("growing_subtree: k must satisfy 1 <= k <= n");

    // Mutable copies of the adjacency arrays; the prefix [0, sep[x]) of each
    // holds neighbors already known to be inside the current subtree. The
    // permutations persist across subtrees, only sep is reset.
    std::vector<std::vector<int>> adj = host.adjacency;
    std::vector<int> sep(static_cast<std::size_t>(n), 0);
    std::vector<char> in_tree(static_cast<std::size_t>(n), 0);

    SubtreeSet set;
    set.host_n = n;
    set.subtrees.resize(static_cast<std::size_t>(n));
    std::uint64_t steps = 0;

    std::vector<int> nodes;  // current subtree; [0, active) can still grow
    for (int i = 0; i < n; ++i) {
        nodes.clear();
        int active = 0;
        const int start = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n)));
        const int target = rng.uniform_int(1, params.k);
        nodes.push_back(start);
        in_tree[start] = 1;
        if (n > 1) active = 1;  // a lone start node always has outside neighbors

        while (static_cast<int>(nodes.size()) < target) {
            // Uniform eligible boundary node; saturated picks retire and redraw.
            const int slot = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(active)));
            const int y = nodes[slot];
            auto& nbrs = adj[y];
            const int deg = static_cast<int>(nbrs.size());
            ++steps;
            if (sep[y] == deg) {
                std::swap(nodes[slot], nodes[active - 1]);
                --active;
                continue;
            }
            const int r = sep[y] + static_cast<int>(rng.uniform_below(
                                       static_cast<std::uint64_t>(deg - sep[y])));
            const int z = nbrs[r];
            std::swap(nbrs[r], nbrs[sep[y]]);
            ++sep[y];
            if (in_tree[z]) continue;  // discovered an inside neighbor, redraw

            in_tree[z] = 1;
            sep[z] = 0;
            nodes.push_back(z);
            if (host.degree(z) > 1) {
                std::swap(nodes.back(), nodes[active]);
                ++active;
            }
            // else: z is a leaf of T, its only neighbor is y, keep it retired
        }

        steps += nodes.size();
        for (int x : nodes) {
            sep[x] = 0;
            in_tree[x] = 0;
        }
        set.total_size += static_cast<std::int64_t>(nodes.size());
        set.subtrees[i] = nodes;
    }
    if (work) work->add(steps);
    return set;
}

SubtreeSet connecting_nodes(const RootedTree& rooted, const ConnectingParams& params, Rng& rng,
                            WorkCounter* work) {
    if (!(params.lambda > 0.0) || params.lambda > kMaxLambda)
        throw std::invalid_argument("connecting_nodes: lambda must be in (0, 500]");
    const int n = rooted.n;

    // Shared node array with a separation index gives k_i distinct uniform
    // nodes in O(k_i); the array stays permuted between subtrees.
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) pool[x] = x;

    JoinScratch scratch(n, rooted.max_level);
    SubtreeSet set;
    set.host_n = n;
    set.subtrees.resize(static_cast<std::size_t>(n));

    for (int i = 0; i < n; ++i) {
        const int k = sample_poisson(params.lambda, n, rng);
        if (work) work->add(static_cast<std::uint64_t>(k));
        auto& subtree = set.subtrees[i];
        subtree.reserve(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j) {
            const int r = j + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n - j)));
            std::swap(pool[j], pool[r]);
            subtree.push_back(pool[j]);
        }
        scratch.join(rooted, subtree, work);
        set.total_size += static_cast<std::int64_t>(subtree.size());
    }
    if (work) work->add(static_cast<std::uint64_t>(n));  // pool setup
    return set;
}

SubtreeSet pruned_tree(const HostTree& host, const PrunedParams& params, Rng& rng,
                       WorkCounter* work) {
    if (!(params.f >= 0.0) || params.f >= 1.0)
        throw std::invalid_argument("pruned_tree: f must be in [0, 1)");
    if (!(params.s >= 0.0) || params.s > 1.0)
        throw std::invalid_argument("pruned_tree: s must be in [0, 1]");
    const int n = host.n;
    const int edge_count = n - 1;
    const int deletions = static_cast<int>(std::floor(edge_count * params.f));

    // Adjacency with edge ids so deleted edges can be skipped in O(1).
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
    for (int e = 0; e < edge_count; ++e) {
        adj[host.edges[e][0]].push_back({host.edges[e][1], e});
        adj[host.edges[e][1]].push_back({host.edges[e][0], e});
    }

    std::vector<int> edge_perm(static_cast<std::size_t>(edge_count));
    for (int e = 0; e < edge_count; ++e) edge_perm[e] = e;
    std::vector<char> deleted(static_cast<std::size_t>(edge_count), 0);
    std::vector<int> comp_of(static_cast<std::size_t>(n));
    std::vector<int> comp_size;
    std::vector<std::vector<int>> by_size(static_cast<std::size_t>(n) + 1);
    std::vector<int> distinct_sizes;
    std::vector<int> queue;

    SubtreeSet set;
    set.host_n = n;
    set.subtrees.resize(static_cast<std::size_t>(n));
    std::uint64_t steps = 0;

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < deletions; ++j) {
            const int r = j + static_cast<int>(
                                  rng.uniform_below(static_cast<std::uint64_t>(edge_count - j)));
            std::swap(edge_perm[j], edge_perm[r]);
            deleted[edge_perm[j]] = 1;
        }

        // Components of the pruned forest.
        comp_size.clear();
        std::fill(comp_of.begin(), comp_of.end(), -1);
        for (int start = 0; start < n; ++start) {
            if (comp_of[start] >= 0) continue;
            const int c = static_cast<int>(comp_size.size());
            int size = 0;
            queue.assign(1, start);
            comp_of[start] = c;
            while (!queue.empty()) {
                const int x = queue.back();
                queue.pop_back();
                ++size;
                for (const auto& [y, e] : adj[x]) {
                    if (!deleted[e] && comp_of[y] < 0) {
                        comp_of[y] = c;
                        queue.push_back(y);
                    }
                }
            }
            comp_size.push_back(size);
        }

        for (int c = 0; c < static_cast<int>(comp_size.size()); ++c)
            by_size[comp_size[c]].push_back(c);
        distinct_sizes.clear();
        for (int size = 1; size <= n; ++size)
            if (!by_size[size].empty()) distinct_sizes.push_back(size);

        // Eligible band: the largest ceil(q * (1 - s)) distinct sizes, never
        // fewer than one (so s = 1 selects only maximum-size components).
        const int q = static_cast<int>(distinct_sizes.size());
        int eligible = static_cast<int>(std::ceil(q * (1.0 - params.s)));
        eligible = std::max(1, std::min(eligible, q));
        const int size_pick =
            distinct_sizes[q - 1 - static_cast<int>(rng.uniform_below(
                                       static_cast<std::uint64_t>(eligible)))];
        const auto& candidates = by_size[size_pick];
        const int comp_pick = candidates[static_cast<std::size_t>(
            rng.uniform_below(static_cast<std::uint64_t>(candidates.size())))];

        auto& subtree = set.subtrees[i];
        subtree.reserve(static_cast<std::size_t>(size_pick));
        for (int x = 0; x < n; ++x)
            if (comp_of[x] == comp_pick) subtree.push_back(x);
        set.total_size += static_cast<std::int64_t>(subtree.size());

        for (int size : distinct_sizes) by_size[size].clear();
        for (int j = 0; j < deletions; ++j) deleted[edge_perm[j]] = 0;
        steps += static_cast<std::uint64_t>(n);
    }
    if (work) work->add(steps);
    return set;
}

namespace detail {

std::vector<int> minimal_connecting_subtree(const RootedTree& rooted, const std::vector<int>& nodes,
                                            WorkCounter* work) {
    if (nodes.empty())
        throw std::invalid_argument("minimal_connecting_subtree: empty node set");
    JoinScratch scratch(rooted.n, rooted.max_level);
    std::vector<int> out = nodes;
    scratch.join(rooted, out, work);
    return out;
}

}  // namespace detail

SubtreeSet ensure_connected(const HostTree& host, const SubtreeSet& subtrees, const Graph& graph,
                            Rng& rng, WorkCounter* work) {
    const int n = graph.n;
    if (n != subtrees.host_n || n != static_cast<int>(subtrees.subtrees.size()))
        throw std::invalid_argument("ensure_connected: size mismatch");
    if (n <= 1) return subtrees;

    // Components of the graph as given; nothing to do when already connected.
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    std::vector<int> queue;
    int components = 0;
    for (int start = 0; start < n; ++start) {
        if (label[start] >= 0) continue;
        ++components;
        queue.assign(1, start);
        label[start] = start;
        while (!queue.empty()) {
            const int v = queue.back();
            queue.pop_back();
            for (int w : graph.adj(v))
                if (label[w] < 0) {
                    label[w] = start;
                    queue.push_back(w);
                }
        }
    }
    if (components == 1) return subtrees;

    // Components of G - v_{n-1}: the replacement subtree must link every one
    // of them, even those the old last subtree was holding together.
    const int last = n - 1;
    std::fill(label.begin(), label.end(), -1);
    std::vector<std::vector<int>> comp_members;
    for (int start = 0; start < last; ++start) {
        if (label[start] >= 0) continue;
        const int c = static_cast<int>(comp_members.size());
        comp_members.emplace_back();
        queue.assign(1, start);
        label[start] = c;
        while (!queue.empty()) {
            const int v = queue.back();
            queue.pop_back();
            comp_members[c].push_back(v);
            for (int w : graph.adj(v)) {
                if (w == last || label[w] >= 0) continue;
                label[w] = c;
                queue.push_back(w);
            }
        }
    }

    std::vector<int> join_nodes;
    join_nodes.reserve(comp_members.size());
    for (const auto& members : comp_members) {
        const int v = members[static_cast<std::size_t>(
            rng.uniform_below(static_cast<std::uint64_t>(members.size())))];
        join_nodes.push_back(subtrees.subtrees[v].front());
    }

    SubtreeSet patched = subtrees;
    patched.total_size -= static_cast<std::int64_t>(patched.subtrees[last].size());
    patched.subtrees[last] =
        detail::minimal_connecting_subtree(root_and_level(host, 0), join_nodes, work);
    patched.total_size += static_cast<std::int64_t>(patched.subtrees[last].size());
    return patched;
}

}  // namespace chordalgen
