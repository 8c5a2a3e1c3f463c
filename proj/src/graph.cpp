#include "chordalgen/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace chordalgen {

bool Graph::has_edge(int u, int v) const {
    auto nbrs = adj(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Graph Graph::from_edge_list(int n, const std::vector<std::array<int, 2>>& edges) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    Graph g;
    g.n = n;
    g.m = static_cast<std::int64_t>(edges.size());
    std::vector<std::int64_t> deg(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& e : edges) {
        if (e[0] < 0 || e[0] >= n || e[1] < 0 || e[1] >= n)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (e[0] == e[1])
            throw std::invalid_argument("graph: self-loop " + std::to_string(e[0]));
        ++deg[static_cast<std::size_t>(e[0]) + 1];
        ++deg[static_cast<std::size_t>(e[1]) + 1];
    }
    g.offsets.assign(deg.begin(), deg.end());
    for (int v = 0; v < n; ++v) g.offsets[v + 1] += g.offsets[v];
    g.neighbors.resize(static_cast<std::size_t>(2) * edges.size());
    std::vector<std::int64_t> fill(g.offsets.begin(), g.offsets.end() - 1);
    for (const auto& e : edges) {
        g.neighbors[static_cast<std::size_t>(fill[e[0]]++)] = e[1];
        g.neighbors[static_cast<std::size_t>(fill[e[1]]++)] = e[0];
    }
    for (int v = 0; v < n; ++v) {
        auto first = g.neighbors.begin() + g.offsets[v];
        auto last = g.neighbors.begin() + g.offsets[v + 1];
        std::sort(first, last);
        if (std::adjacent_find(first, last) != last)
            throw std::invalid_argument("graph: duplicate edge at vertex " + std::to_string(v));
    }
    return g;
}

Graph Graph::from_adjacency(const std::vector<std::vector<int>>& adjacency) {
    std::vector<std::array<int, 2>> edges;
    const int n = static_cast<int>(adjacency.size());
    for (int v = 0; v < n; ++v)
        for (int w : adjacency[v])
            if (v < w) edges.push_back({v, w});
    Graph g = from_edge_list(n, edges);
    validate_graph(g);
    // from_edge_list only saw the v < w entries; make sure the input really
    // was symmetric by checking the directed entry count.
    std::size_t directed = 0;
    for (const auto& list : adjacency) directed += list.size();
    if (directed != g.neighbors.size())
        throw std::invalid_argument("graph: asymmetric adjacency input");
    return g;
}

std::vector<std::array<int, 2>> Graph::edge_list() const {
    std::vector<std::array<int, 2>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int v = 0; v < n; ++v)
        for (int w : adj(v))
            if (v < w) edges.push_back({v, w});
    return edges;
}

void validate_graph(const Graph& g) {
    if (g.n < 0) throw std::invalid_argument("graph: negative vertex count");
    if (static_cast<int>(g.offsets.size()) != g.n + 1)
        throw std::invalid_argument("graph: offsets size mismatch");
    if (g.offsets.empty() || g.offsets[0] != 0 ||
        g.offsets[g.n] != static_cast<std::int64_t>(g.neighbors.size()))
        throw std::invalid_argument("graph: offsets inconsistent with neighbor array");
    if (static_cast<std::int64_t>(g.neighbors.size()) != 2 * g.m)
        throw std::invalid_argument("graph: m inconsistent with adjacency length");
    for (int v = 0; v < g.n; ++v) {
        if (g.offsets[v] > g.offsets[v + 1])
            throw std::invalid_argument("graph: decreasing offsets");
        auto nbrs = g.adj(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            const int w = nbrs[i];
            if (w < 0 || w >= g.n)
                throw std::invalid_argument("graph: neighbor out of range");
            if (w == v)
                throw std::invalid_argument("graph: self-loop at " + std::to_string(v));
            if (i > 0 && nbrs[i - 1] >= w)
                throw std::invalid_argument("graph: unsorted or duplicate neighbors at " +
                                            std::to_string(v));
            if (!g.has_edge(w, v))
                throw std::invalid_argument("graph: asymmetric edge " + std::to_string(v) + "-" +
                                            std::to_string(w));
        }
    }
}

}  // namespace chordalgen
