#include "chordalgen/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace chordalgen {

EliminationOrder mcs_order(const Graph& graph) {
    const int n = graph.n;
    EliminationOrder result;
    result.order.assign(static_cast<std::size_t>(n), -1);
    result.position.assign(static_cast<std::size_t>(n), -1);

    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> buckets(static_cast<std::size_t>(n) + 1);
    auto& zero_bucket = buckets[0];
    zero_bucket.reserve(static_cast<std::size_t>(n));
    for (int v = n - 1; v >= 0; --v) zero_bucket.push_back(v);

    int max_weight = 0;
    for (int step = 0; step < n; ++step) {
        int v = -1;
        for (;;) {
            auto& bucket = buckets[max_weight];
            if (bucket.empty()) {
                --max_weight;
                continue;
            }
            const int candidate = bucket.back();
            bucket.pop_back();
            if (visited[candidate] || weight[candidate] != max_weight) continue;  // stale
            v = candidate;
            break;
        }
        visited[v] = 1;
        // First visited gets the last elimination position.
        result.order[n - 1 - step] = v;
        result.position[v] = n - 1 - step;
        for (int w : graph.adj(v)) {
            if (visited[w]) continue;
            ++weight[w];
            buckets[weight[w]].push_back(w);
        }
        ++max_weight;  // can rise by at most one per visit
    }
    return result;
}

bool is_valid_peo(const Graph& graph, const EliminationOrder& order) {
    const int n = graph.n;
    // follower[v]: lowest-positioned higher neighbor of v.
    std::vector<int> follower(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        int best = -1;
        for (int w : graph.adj(v)) {
            if (order.position[w] > order.position[v] &&
                (best < 0 || order.position[w] < order.position[best]))
                best = w;
        }
        follower[v] = best;
    }
    std::vector<std::vector<int>> assigned(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        if (follower[v] >= 0) assigned[follower[v]].push_back(v);

    // v's higher neighbors besides the follower must all be neighbors of the
    // follower; checking just this single representative suffices.
    std::vector<int> stamp(static_cast<std::size_t>(n), -1);
    for (int f = 0; f < n; ++f) {
        if (assigned[f].empty()) continue;
        for (int w : graph.adj(f)) stamp[w] = f;
        for (int v : assigned[f]) {
            for (int w : graph.adj(v)) {
                if (w == f || order.position[w] <= order.position[v]) continue;
                if (stamp[w] != f) return false;
            }
        }
    }
    return true;
}

bool is_chordal(const Graph& graph) { return is_valid_peo(graph, mcs_order(graph)); }

std::vector<std::vector<int>> maximal_cliques(const Graph& graph) {
    const int n = graph.n;
    const EliminationOrder order = mcs_order(graph);
    if (!is_valid_peo(graph, order))
        throw std::invalid_argument("maximal_cliques: graph is not chordal");

    std::vector<std::vector<int>> cliques;
    if (n == 0) return cliques;

    // In visit order (reverse elimination order), vertex u's visited
    // neighbors are exactly its higher-positioned neighbors, and a clique
    // ends whenever the visit weight fails to grow.
    auto higher_neighbors = [&](int u) {
        std::vector<int> result{u};
        for (int w : graph.adj(u))
            if (order.position[w] > order.position[u]) result.push_back(w);
        std::sort(result.begin(), result.end());
        return result;
    };
    int prev_weight = -1;
    int prev_vertex = -1;
    for (int i = 0; i < n; ++i) {
        const int u = order.order[n - 1 - i];
        int w_u = 0;
        for (int w : graph.adj(u))
            if (order.position[w] > order.position[u]) ++w_u;
        if (i > 0 && w_u <= prev_weight) cliques.push_back(higher_neighbors(prev_vertex));
        prev_weight = w_u;
        prev_vertex = u;
    }
    cliques.push_back(higher_neighbors(prev_vertex));
    return cliques;
}

Components connected_components(const Graph& graph) {
    Components comp;
    comp.labels.assign(static_cast<std::size_t>(graph.n), -1);
    std::vector<int> stack;
    for (int start = 0; start < graph.n; ++start) {
        if (comp.labels[start] >= 0) continue;
        const int c = comp.count++;
        stack.assign(1, start);
        comp.labels[start] = c;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : graph.adj(v))
                if (comp.labels[w] < 0) {
                    comp.labels[w] = c;
                    stack.push_back(w);
                }
        }
    }
    return comp;
}

RunReport run_report(const Graph& graph) {
    RunReport report;
    report.n = graph.n;
    report.m = static_cast<double>(graph.m);
    const double possible = static_cast<double>(graph.n) * (graph.n - 1) / 2.0;
    report.density = possible > 0.0 ? static_cast<double>(graph.m) / possible : 1.0;
    report.component_count = static_cast<double>(connected_components(graph).count);

    const auto cliques = maximal_cliques(graph);
    report.clique_count = static_cast<double>(cliques.size());
    if (cliques.empty()) return report;

    std::size_t max_size = 0;
    double sum = 0.0;
    report.clique_min = static_cast<double>(cliques.front().size());
    for (const auto& clique : cliques) {
        const double size = static_cast<double>(clique.size());
        report.clique_min = std::min(report.clique_min, size);
        report.clique_max = std::max(report.clique_max, size);
        sum += size;
        max_size = std::max(max_size, clique.size());
    }
    report.clique_mean = sum / static_cast<double>(cliques.size());
    double sq = 0.0;
    for (const auto& clique : cliques) {
        const double d = static_cast<double>(clique.size()) - report.clique_mean;
        sq += d * d;
    }
    report.clique_sd = std::sqrt(sq / static_cast<double>(cliques.size()));

    report.histogram.assign((max_size - 1) / kHistogramBinWidth + 1, 0.0);
    for (const auto& clique : cliques)
        report.histogram[(clique.size() - 1) / kHistogramBinWidth] += 1.0;
    return report;
}

RunReport aggregate_reports(const std::vector<RunReport>& reports) {
    if (reports.empty()) throw std::invalid_argument("aggregate_reports: empty list");
    RunReport mean;
    mean.n = reports.front().n;
    std::size_t bins = 0;
    for (const auto& r : reports) {
        if (r.n != mean.n) throw std::invalid_argument("aggregate_reports: mixed n");
        bins = std::max(bins, r.histogram.size());
    }
    mean.histogram.assign(bins, 0.0);
    const double count = static_cast<double>(reports.size());
    for (const auto& r : reports) {
        mean.m += r.m / count;
        mean.density += r.density / count;
        mean.component_count += r.component_count / count;
        mean.clique_count += r.clique_count / count;
        mean.clique_min += r.clique_min / count;
        mean.clique_max += r.clique_max / count;
        mean.clique_mean += r.clique_mean / count;
        mean.clique_sd += r.clique_sd / count;
        for (std::size_t b = 0; b < r.histogram.size(); ++b) mean.histogram[b] += r.histogram[b] / count;
    }
    return mean;
}

}  // namespace chordalgen
