#include "chordalgen/intersection.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace chordalgen {

NodeCliqueLists node_clique_lists(const SubtreeSet& subtrees, WorkCounter* work) {
    NodeCliqueLists lists;
    lists.at_node.assign(static_cast<std::size_t>(subtrees.host_n), {});
    for (int v = 0; v < static_cast<int>(subtrees.subtrees.size()); ++v)
        for (int x : subtrees.subtrees[v]) lists.at_node[x].push_back(v);
    lists.total_entries = subtrees.total_size;
    if (work) work->add(static_cast<std::uint64_t>(subtrees.total_size + subtrees.host_n));
    return lists;
}

namespace {

// Union-find over host nodes; each class is a contracted-together group.
struct ClassForest {
    std::vector<int> parent;
    std::vector<int> size;

    explicit ClassForest(int n) : parent(static_cast<std::size_t>(n)), size(static_cast<std::size_t>(n), 1) {
        for (int x = 0; x < n; ++x) parent[x] = x;
    }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    int unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
        return a;
    }
};

}  // namespace

CliqueTree build_clique_tree(const NodeCliqueLists& lists, const HostTree& host,
                             WorkCounter* work) {
    const int n = host.n;
    if (static_cast<int>(lists.at_node.size()) != n)
        throw std::invalid_argument("build_clique_tree: lists/host size mismatch");
    const RootedTree rooted = root_and_level(host, 0);
    std::uint64_t steps = 0;

    std::vector<std::vector<int>> children(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        if (rooted.parent[x] >= 0) children[rooted.parent[x]].push_back(x);

    ClassForest classes(n);
    // Per-class state, stored at the union-find root: the node whose original
    // list is the class label, and for strictly lifted classes the stamp
    // epoch marking the vertices that span the whole path from the label node
    // to the class top.
    std::vector<int> label_node(static_cast<std::size_t>(n));
    std::vector<char> lifted(static_cast<std::size_t>(n), 0);
    std::vector<std::uint64_t> spine_epoch(static_cast<std::size_t>(n), 0);
    for (int x = 0; x < n; ++x) label_node[x] = x;

    int vertex_count = 0;
    for (const auto& list : lists.at_node)
        for (int v : list) vertex_count = std::max(vertex_count, v + 1);
    std::vector<std::uint64_t> vertex_epoch(static_cast<std::size_t>(vertex_count), 0);
    std::vector<int> parent_stamp(static_cast<std::size_t>(vertex_count), -1);
    std::vector<int> child_stamp(static_cast<std::size_t>(vertex_count), -1);
    std::uint64_t epoch_counter = 0;

    CliqueTree result;
    std::vector<int> clique_of_class(static_cast<std::size_t>(n), -1);
    std::vector<std::pair<int, int>> pending;  // (clique index, host node above it)

    auto finalize = [&](int class_root, int label) {
        clique_of_class[class_root] = static_cast<int>(result.cliques.size());
        result.cliques.push_back(lists.at_node[label]);
        steps += lists.at_node[label].size() + 1;
    };

    // Process host nodes bottom-up, testing every child class against its
    // parent node's class. Merges are decided from the size of the label
    // intersection, computed by scanning the smaller label against stamps of
    // the other side.
    for (auto it = rooted.bfs_order.rbegin(); it != rooted.bfs_order.rend(); ++it) {
        const int q = *it;
        if (children[q].empty()) continue;
        bool q_stamped = false;

        for (const int t : children[q]) {
            const int child_class = classes.find(t);
            const int parent_class = classes.find(q);
            const int z1 = label_node[child_class];
            const int z2 = label_node[parent_class];
            const auto& child_label = lists.at_node[z1];
            const auto& parent_label = lists.at_node[z2];
            const std::int64_t s1 = static_cast<std::int64_t>(child_label.size());
            const std::int64_t s2 = static_cast<std::int64_t>(parent_label.size());

            auto in_parent = [&](int v) {
                if (lifted[parent_class]) return vertex_epoch[v] == spine_epoch[parent_class];
                return parent_stamp[v] == q;
            };
            auto in_child = [&](int v) {
                if (lifted[child_class]) return vertex_epoch[v] == spine_epoch[child_class];
                return child_stamp[v] == t;
            };
            auto stamp_parent = [&] {
                if (!lifted[parent_class] && !q_stamped) {
                    for (int v : lists.at_node[q]) parent_stamp[v] = q;
                    steps += lists.at_node[q].size();
                    q_stamped = true;
                }
            };
            auto stamp_child = [&] {
                if (!lifted[child_class]) {
                    for (int v : lists.at_node[t]) child_stamp[v] = t;
                    steps += lists.at_node[t].size();
                }
            };

            // A vertex lies in both labels iff its subtree spans the whole
            // host path between the label nodes, which passes through t and
            // q; the stamps capture exactly that.
            std::int64_t cross = 0;
            if (s1 <= s2) {
                stamp_parent();
                for (int v : child_label)
                    if (in_parent(v)) ++cross;
                steps += static_cast<std::uint64_t>(s1);
            } else {
                stamp_child();
                for (int v : parent_label)
                    if (in_child(v)) ++cross;
                steps += static_cast<std::uint64_t>(s2);
            }

            if (cross == s1 && s1 <= s2) {
                // Child label contained in (or equal to) the parent's: the
                // child class dies into the parent class.
                const int merged = classes.unite(child_class, parent_class);
                label_node[merged] = z2;
                lifted[merged] = lifted[parent_class];
                spine_epoch[merged] = spine_epoch[parent_class];
            } else if (cross == s2 && s2 < s1) {
                // Parent label strictly inside the child's: the child class
                // absorbs q and carries its label upward. Vertices spanning
                // the new spine are exactly those of C_q inside the child
                // label.
                stamp_child();
                const std::uint64_t epoch = ++epoch_counter;
                for (int v : lists.at_node[q]) {
                    if (in_child(v)) vertex_epoch[v] = epoch;
                }
                steps += lists.at_node[q].size();
                const int merged = classes.unite(child_class, parent_class);
                label_node[merged] = z1;
                lifted[merged] = 1;
                spine_epoch[merged] = epoch;
            } else {
                // Incomparable: the child class is a finished maximal clique.
                finalize(child_class, z1);
                pending.push_back({clique_of_class[child_class], q});
            }
        }
    }

    const int root_class = classes.find(rooted.root);
    finalize(root_class, label_node[root_class]);

    result.tree_edges.reserve(pending.size());
    for (const auto& [clique_idx, q] : pending) {
        const int other = clique_of_class[classes.find(q)];
        assert(other >= 0 && other != clique_idx);
        result.tree_edges.push_back({clique_idx, other});
    }
    assert(result.tree_edges.size() + 1 == result.cliques.size());
    if (work) work->add(steps + static_cast<std::uint64_t>(n));
    return result;
}

Graph build_graph(const CliqueTree& clique_tree, int n, WorkCounter* work) {
    const auto& cliques = clique_tree.cliques;
    const int k = static_cast<int>(cliques.size());
    std::uint64_t steps = 0;

    // BFS over the clique tree from clique 0.
    std::vector<std::vector<int>> tree_adj(static_cast<std::size_t>(k));
    for (const auto& [a, b] : clique_tree.tree_edges) {
        tree_adj[a].push_back(b);
        tree_adj[b].push_back(a);
    }
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(k));
    std::vector<char> visited(static_cast<std::size_t>(k), 0);
    if (k > 0) {
        order.push_back(0);
        visited[0] = 1;
        for (std::size_t head = 0; head < order.size(); ++head)
            for (int next : tree_adj[order[head]])
                if (!visited[next]) {
                    visited[next] = 1;
                    order.push_back(next);
                }
    }
    if (static_cast<int>(order.size()) != k)
        throw std::invalid_argument("build_graph: clique tree is disconnected");

    // Every vertex is new exactly once: at its shallowest clique.
    std::vector<int> home(static_cast<std::size_t>(n), -1);
    for (int idx : order) {
        for (int v : cliques[idx]) {
            ++steps;
            if (v < 0 || v >= n) throw std::invalid_argument("build_graph: vertex out of range");
            if (home[v] < 0) home[v] = idx;
        }
    }

    Graph g;
    g.n = n;
    g.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
    auto for_each_emission = [&](auto&& emit) {
        for (int idx : order) {
            const auto& clique = cliques[idx];
            for (std::size_t a = 0; a < clique.size(); ++a) {
                const int u = clique[a];
                if (home[u] != idx) continue;
                for (std::size_t b = 0; b < clique.size(); ++b) {
                    if (a == b) continue;
                    const int w = clique[b];
                    if (home[w] == idx && b > a) continue;  // both new: emit once
                    emit(u, w);
                }
            }
        }
    };
    for_each_emission([&](int u, int) { ++g.offsets[u + 1]; ++steps; });
    for (int v = 0; v < n; ++v) g.offsets[v + 1] += g.offsets[v];
    g.neighbors.resize(static_cast<std::size_t>(g.offsets[n]));
    std::vector<std::int64_t> fill(g.offsets.begin(), g.offsets.end() - 1);
    for_each_emission([&](int u, int w) { g.neighbors[static_cast<std::size_t>(fill[u]++)] = w; });
    for (int v = 0; v < n; ++v)
        std::sort(g.neighbors.begin() + g.offsets[v], g.neighbors.begin() + g.offsets[v + 1]);
    g.m = static_cast<std::int64_t>(g.neighbors.size()) / 2;
    if (work) work->add(steps);
    return g;
}

ChordalGenResult chordal_gen(int n, const SubtreeParams& params, Rng& rng, bool connect) {
    ChordalGenResult result;
    result.host = generate_random_tree(n, rng);

    WorkCounter subtree_work;
    WorkCounter build_work;
    auto generate = [&](const HostTree& host) {
        return std::visit(
            [&](const auto& p) -> SubtreeSet {
                using P = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<P, GrowingParams>)
                    return growing_subtree(host, p, rng, &subtree_work);
                else if constexpr (std::is_same_v<P, ConnectingParams>)
                    return connecting_nodes(root_and_level(host, 0), p, rng, &subtree_work);
                else
                    return pruned_tree(host, p, rng, &subtree_work);
            },
            params);
    };

    result.subtrees = generate(result.host);
    NodeCliqueLists lists = node_clique_lists(result.subtrees, &build_work);
    result.clique_tree = build_clique_tree(lists, result.host, &build_work);
    result.graph = build_graph(result.clique_tree, n, &build_work);

    if (connect) {
        // Quick reachability check; the patch plus one rebuild only runs when
        // the intersection graph came out disconnected.
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : result.graph.adj(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != n) {
            result.subtrees =
                ensure_connected(result.host, result.subtrees, result.graph, rng, &subtree_work);
            lists = node_clique_lists(result.subtrees, &build_work);
            result.clique_tree = build_clique_tree(lists, result.host, &build_work);
            result.graph = build_graph(result.clique_tree, n, &build_work);
            result.connectivity_patched = true;
        }
    }

    result.subtree_steps = subtree_work.steps;
    result.build_steps = build_work.steps;
    return result;
}

}  // namespace chordalgen
