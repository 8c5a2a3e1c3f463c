#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chordalgen/analysis.hpp"
#include "chordalgen/graph_io.hpp"

namespace chordalgen {

enum class Method { growing, connecting, pruned, alg1 };

Method parse_method(const std::string& name);
std::string method_name(Method method);

// One batch experiment: `runs` independent pipelines with per-run seeds
// base seed + run index, reported per run and as an aggregate.
struct ExperimentConfig {
    int n = 0;
    Method method = Method::growing;
    int k = 0;           // growing
    double lambda = 0.0;  // connecting
    double f = 0.0;       // pruned
    double s = 0.0;       // pruned
    double ubc = 0.0;     // alg1
    int runs = 10;
    std::uint64_t seed = 1;
    bool connect = false;

    std::string graph_out;   // optional; per-run suffix when runs > 1
    GraphFormat graph_format = GraphFormat::edgelist;
    std::string stats_out;   // optional; a ".raw" sibling gets full precision
    std::string hist_out;    // optional; averaged histogram as JSON
    std::string tree_out;    // optional; host tree edge list (debugging)

    void validate() const;  // throws std::invalid_argument
};

struct ExperimentResult {
    std::vector<RunReport> per_run;
    RunReport aggregate;
    std::vector<std::string> written_files;
};

ExperimentResult run_experiment(const ExperimentConfig& config);

// Stats CSV content: header, one row per run, then the aggregate row.
// Table columns use one decimal place (density three); the raw variant keeps
// full precision.
std::string stats_csv(const ExperimentConfig& config, const ExperimentResult& result, bool raw);

// Averaged histogram as a JSON array of {bin_start, bin_end, count}.
std::string histogram_json(const ExperimentConfig& config, const ExperimentResult& result);

}  // namespace chordalgen
