#include "chordalgen/host_tree.hpp"

#include <stdexcept>
#include <string>

namespace chordalgen {

HostTree HostTree::from_edges(int n, std::vector<std::array<int, 2>> edges) {
    if (n < 1) throw std::invalid_argument("host tree: n must be positive");
    if (static_cast<int>(edges.size()) != n - 1)
        throw std::invalid_argument("host tree: expected " + std::to_string(n - 1) + " edges, got " +
                                    std::to_string(edges.size()));
    HostTree t;
    t.n = n;
    t.edges = std::move(edges);
    t.adjacency.assign(static_cast<std::size_t>(n), {});
    for (const auto& e : t.edges) {
        if (e[0] < 0 || e[0] >= n || e[1] < 0 || e[1] >= n || e[0] == e[1])
            throw std::invalid_argument("host tree: bad edge");
        t.adjacency[e[0]].push_back(e[1]);
        t.adjacency[e[1]].push_back(e[0]);
    }
    // n-1 edges + all nodes reachable from 0 == connected and acyclic.
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int y : t.adjacency[x]) {
            if (!seen[y]) {
                seen[y] = 1;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    if (reached != n) throw std::invalid_argument("host tree: not connected");
    return t;
}

HostTree generate_random_tree(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("generate_random_tree: n must be positive");
    std::vector<std::array<int, 2>> edges;
    edges.reserve(static_cast<std::size_t>(n) - 1);
    for (int i = 1; i < n; ++i) {
        const int target = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(i)));
        edges.push_back({target, i});
    }
    return HostTree::from_edges(n, std::move(edges));
}

RootedTree root_and_level(const HostTree& tree, int root) {
    if (root < 0 || root >= tree.n)
        throw std::invalid_argument("root_and_level: root out of range");
    RootedTree r;
    r.n = tree.n;
    r.root = root;
    r.parent.assign(static_cast<std::size_t>(tree.n), -1);
    r.level.assign(static_cast<std::size_t>(tree.n), -1);
    r.bfs_order.clear();
    r.bfs_order.reserve(static_cast<std::size_t>(tree.n));
    r.bfs_order.push_back(root);
    r.level[root] = 0;
    for (std::size_t head = 0; head < r.bfs_order.size(); ++head) {
        const int x = r.bfs_order[head];
        for (int y : tree.adjacency[x]) {
            if (r.level[y] < 0) {
                r.level[y] = r.level[x] + 1;
                r.parent[y] = x;
                r.bfs_order.push_back(y);
            }
        }
    }
    r.max_level = 0;
    for (int l : r.level) r.max_level = std::max(r.max_level, l);
    return r;
}

}  // namespace chordalgen
