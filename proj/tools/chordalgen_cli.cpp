#include <cstdio>
#include <exception>
#include <string>

#include "CLI11.hpp"
#include "chordalgen/experiment.hpp"
#include "chordalgen/intersection.hpp"
#include "chordalgen/oracle.hpp"

namespace {

int run_generate(const chordalgen::ExperimentConfig& config) {
    const auto result = chordalgen::run_experiment(config);
    const auto& mean = result.aggregate;
    std::printf("n=%d method=%s runs=%d seed=%llu\n", config.n,
                chordalgen::method_name(config.method).c_str(), config.runs,
                static_cast<unsigned long long>(config.seed));
    std::printf("mean density=%.3f m=%.1f components=%.1f cliques=%.1f sizes "
                "min=%.1f max=%.1f mean=%.1f sd=%.1f\n",
                mean.density, mean.m, mean.component_count, mean.clique_count, mean.clique_min,
                mean.clique_max, mean.clique_mean, mean.clique_sd);
    for (const auto& path : result.written_files) std::printf("wrote %s\n", path.c_str());
    return 0;
}

int run_lower_bound(int p, const std::string& graph_out) {
    const auto instance = chordalgen::oracle::lower_bound_instance(p);
    const auto lists = chordalgen::node_clique_lists(instance.subtrees);
    const auto clique_tree = chordalgen::build_clique_tree(lists, instance.host);
    const auto graph = chordalgen::build_graph(clique_tree, instance.host.n);
    std::printf("p=%d n=%d m=%lld total_subtree_size=%lld ratio=%.3f\n", p, graph.n,
                static_cast<long long>(graph.m),
                static_cast<long long>(instance.subtrees.total_size),
                static_cast<double>(instance.subtrees.total_size) / static_cast<double>(graph.m));
    std::printf("expected m=%lld total=%lld\n", static_cast<long long>(instance.expected_m),
                static_cast<long long>(instance.expected_total_size));
    if (!graph_out.empty()) {
        chordalgen::emit_graph(graph, chordalgen::GraphFormat::edgelist, graph_out);
        std::printf("wrote %s\n", graph_out.c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Random chordal graph generator and analyzer"};
    app.require_subcommand(0, 1);

    chordalgen::ExperimentConfig config;
    std::string method = "growing";
    std::string format = "edgelist";

    app.add_option("--n", config.n, "number of vertices");
    app.add_option("--method", method, "growing | connecting | pruned | alg1")
        ->check(CLI::IsMember({"growing", "connecting", "pruned", "alg1"}));
    app.add_option("--k", config.k, "growing: maximum subtree size");
    app.add_option("--lambda", config.lambda, "connecting: Poisson mean");
    app.add_option("--f", config.f, "pruned: edge deletion fraction in [0,1)");
    app.add_option("--s", config.s, "pruned: selection barrier in [0,1]");
    app.add_option("--ubc", config.ubc, "alg1: upper bound coefficient in [0,1]");
    app.add_option("--runs", config.runs, "independent runs (default 10)");
    app.add_option("--seed", config.seed, "base seed; run i uses seed + i");
    app.add_flag("--connect", config.connect, "patch disconnected outputs");
    app.add_option("--graph-out", config.graph_out, "write the graph(s) here");
    app.add_option("--graph-format", format, "edgelist | dimacs")
        ->check(CLI::IsMember({"edgelist", "dimacs"}));
    app.add_option("--stats-out", config.stats_out, "write the stats CSV here");
    app.add_option("--hist-out", config.hist_out, "write the clique-size histogram JSON here");
    app.add_option("--tree-out", config.tree_out, "write the host tree(s) here (debugging)");

    // Debugging access to the lower-bound construction; not shown in help.
    auto* oracle_cmd = app.add_subcommand("lower-bound")->group("");
    int p = 2;
    std::string oracle_graph_out;
    oracle_cmd->add_option("--p", p, "construction parameter, >= 2");
    oracle_cmd->add_option("--graph-out", oracle_graph_out, "write the instance graph here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (oracle_cmd->parsed()) return run_lower_bound(p, oracle_graph_out);
        config.method = chordalgen::parse_method(method);
        config.graph_format = chordalgen::parse_graph_format(format);
        return run_generate(config);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
