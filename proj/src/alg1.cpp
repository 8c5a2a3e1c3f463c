#include "chordalgen/alg1.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>

namespace chordalgen {

Graph generate_alg1(const Alg1Params& params, Rng& rng) {
    const int n = params.n;
    if (n < 1) throw std::invalid_argument("generate_alg1: n must be positive");
    if (!(params.ubc >= 0.0) || params.ubc > 1.0)
        throw std::invalid_argument("generate_alg1: ubc must be in [0, 1]");

    std::vector<std::vector<char>> adjacent(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) adjacent[v].assign(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> earlier(static_cast<std::size_t>(n));  // earlier neighbors
    std::deque<std::pair<int, int>> pending;                             // (earlier, later)

    // Adding (a, b) with a < b can break the clique property of vertices
    // whose earlier neighborhood gains a member, so completions cascade
    // through a work queue until every earlier neighborhood is a clique
    // again.
    auto add_edge = [&](int a, int b) {
        if (adjacent[a][b]) return;
        adjacent[a][b] = adjacent[b][a] = 1;
        pending.push_back({a, b});
    };
    auto settle = [&] {
        while (!pending.empty()) {
            const auto [a, b] = pending.front();
            pending.pop_front();
            for (int x : earlier[b])
                if (x != a) add_edge(std::min(x, a), std::max(x, a));
            earlier[b].push_back(a);
        }
    };

    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) pool[v] = v;

    for (int t = 1; t < n; ++t) {
        int seeds = static_cast<int>(std::floor(params.ubc * t));
        seeds = std::max(1, std::min(seeds, t));
        for (int j = 0; j < seeds; ++j) {
            const int r = j + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(t - j)));
            std::swap(pool[j], pool[r]);
            add_edge(pool[j], t);
        }
        settle();
    }

    std::vector<std::array<int, 2>> edges;
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w)
            if (adjacent[v][w]) edges.push_back({v, w});
    return Graph::from_edge_list(n, edges);
}

}  // namespace chordalgen
