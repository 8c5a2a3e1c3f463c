#pragma once

#include <vector>

#include "chordalgen/graph.hpp"

namespace chordalgen {

// Candidate perfect elimination order: order[i] is the vertex at position i,
// position[] its inverse. Valid iff every vertex's higher-positioned
// neighbors form a clique.
struct EliminationOrder {
    std::vector<int> order;
    std::vector<int> position;
};

// Maximum cardinality search, visit order reversed into an elimination
// order. O(n + m); on chordal inputs the result is a valid peo.
EliminationOrder mcs_order(const Graph& graph);

// The standard single-representative peo check in O(n + m).
bool is_valid_peo(const Graph& graph, const EliminationOrder& order);

bool is_chordal(const Graph& graph);

// All maximal cliques of a chordal graph via the MCS clique-boundary rule,
// in O(n + m). Throws std::invalid_argument on non-chordal input.
std::vector<std::vector<int>> maximal_cliques(const Graph& graph);

struct Components {
    int count = 0;
    std::vector<int> labels;
};

Components connected_components(const Graph& graph);

// One experiment row: density, components, and maximal-clique statistics
// (population standard deviation; histogram bins of width five starting at
// size 1, so bin j counts sizes in [5j+1, 5j+5]).
struct RunReport {
    int n = 0;
    double m = 0.0;
    double density = 0.0;
    double component_count = 0.0;
    double clique_count = 0.0;
    double clique_min = 0.0;
    double clique_max = 0.0;
    double clique_mean = 0.0;
    double clique_sd = 0.0;
    std::vector<double> histogram;
};

inline constexpr int kHistogramBinWidth = 5;

RunReport run_report(const Graph& graph);

// Field-wise arithmetic means (histogram bins too). All reports must share
// the same n; throws std::invalid_argument on an empty list or mixed n.
RunReport aggregate_reports(const std::vector<RunReport>& reports);

}  // namespace chordalgen
