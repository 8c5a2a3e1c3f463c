#include "chordalgen/experiment.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "chordalgen/alg1.hpp"
#include "chordalgen/intersection.hpp"
#include "json.hpp"

namespace chordalgen {

Method parse_method(const std::string& name) {
    if (name == "growing") return Method::growing;
    if (name == "connecting") return Method::connecting;
    if (name == "pruned") return Method::pruned;
    if (name == "alg1") return Method::alg1;
    throw std::invalid_argument("unknown method: " + name);
}

std::string method_name(Method method) {
    switch (method) {
        case Method::growing: return "growing";
        case Method::connecting: return "connecting";
        case Method::pruned: return "pruned";
        case Method::alg1: return "alg1";
    }
    return "?";
}

void ExperimentConfig::validate() const {
    if (n < 1) throw std::invalid_argument("config: n must be positive");
    if (runs < 1) throw std::invalid_argument("config: runs must be >= 1");
    switch (method) {
        case Method::growing:
            if (k < 1 || k > n) throw std::invalid_argument("config: k must satisfy 1 <= k <= n");
            break;
        case Method::connecting:
            if (!(lambda > 0.0) || lambda > kMaxLambda)
                throw std::invalid_argument("config: lambda must be in (0, 500]");
            break;
        case Method::pruned:
            if (!(f >= 0.0) || f >= 1.0) throw std::invalid_argument("config: f must be in [0, 1)");
            if (!(s >= 0.0) || s > 1.0) throw std::invalid_argument("config: s must be in [0, 1]");
            break;
        case Method::alg1:
            if (!(ubc >= 0.0) || ubc > 1.0)
                throw std::invalid_argument("config: ubc must be in [0, 1]");
            break;
    }
}

namespace {

std::string with_suffix(const std::string& path, const std::string& suffix) {
    const auto slash = path.find_last_of('/');
    const auto dot = path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return path + suffix;
    return path.substr(0, dot) + suffix + path.substr(dot);
}

void write_file(const std::string& path, const std::string& content,
                std::vector<std::string>& written) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
    written.push_back(path);
}

std::string param_columns(const ExperimentConfig& config) {
    switch (config.method) {
        case Method::growing: return "k";
        case Method::connecting: return "lambda";
        case Method::pruned: return "f,s";
        case Method::alg1: return "ubc";
    }
    return "";
}

std::string param_values(const ExperimentConfig& config) {
    char buf[96];
    switch (config.method) {
        case Method::growing:
            std::snprintf(buf, sizeof buf, "%d", config.k);
            break;
        case Method::connecting:
            std::snprintf(buf, sizeof buf, "%g", config.lambda);
            break;
        case Method::pruned:
            std::snprintf(buf, sizeof buf, "%g,%g", config.f, config.s);
            break;
        case Method::alg1:
            std::snprintf(buf, sizeof buf, "%g", config.ubc);
            break;
    }
    return buf;
}

void append_report_row(std::string& out, const ExperimentConfig& config, const RunReport& report,
                       bool raw) {
    char buf[512];
    const char* fmt = raw ? "%d,%s,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n"
                          : "%d,%s,%.3f,%.1f,%.1f,%.1f,%.1f,%.1f,%.1f,%.1f\n";
    std::snprintf(buf, sizeof buf, fmt, report.n, param_values(config).c_str(), report.density,
                  report.m, report.component_count, report.clique_count, report.clique_min,
                  report.clique_max, report.clique_mean, report.clique_sd);
    out += buf;
}

}  // namespace

std::string stats_csv(const ExperimentConfig& config, const ExperimentResult& result, bool raw) {
    std::string out = "n," + param_columns(config) +
                      ",density,m,components,clique_count,clique_min,clique_max,clique_mean,"
                      "clique_sd\n";
    for (const auto& report : result.per_run) append_report_row(out, config, report, raw);
    append_report_row(out, config, result.aggregate, raw);
    return out;
}

std::string histogram_json(const ExperimentConfig& config, const ExperimentResult& result) {
    nlohmann::ordered_json doc;
    doc["n"] = config.n;
    doc["method"] = method_name(config.method);
    doc["runs"] = config.runs;
    doc["seed"] = config.seed;
    nlohmann::ordered_json bins = nlohmann::ordered_json::array();
    const auto& histogram = result.aggregate.histogram;
    for (std::size_t b = 0; b < histogram.size(); ++b) {
        nlohmann::ordered_json bin;
        bin["bin_start"] = static_cast<int>(b) * kHistogramBinWidth + 1;
        bin["bin_end"] = static_cast<int>(b + 1) * kHistogramBinWidth;
        bin["count"] = histogram[b];
        bins.push_back(bin);
    }
    doc["bins"] = bins;
    return doc.dump(2) + "\n";
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    config.validate();
    ExperimentResult result;
    result.per_run.reserve(static_cast<std::size_t>(config.runs));

    for (int run = 0; run < config.runs; ++run) {
        Rng rng(config.seed + static_cast<std::uint64_t>(run));
        Graph graph;
        HostTree host;
        if (config.method == Method::alg1) {
            graph = generate_alg1({config.n, config.ubc}, rng);
        } else {
            SubtreeParams params;
            if (config.method == Method::growing)
                params = GrowingParams{config.k};
            else if (config.method == Method::connecting)
                params = ConnectingParams{config.lambda};
            else
                params = PrunedParams{config.f, config.s};
            ChordalGenResult gen = chordal_gen(config.n, params, rng, config.connect);
            graph = std::move(gen.graph);
            host = std::move(gen.host);
        }

        result.per_run.push_back(run_report(graph));

        const std::string suffix = config.runs > 1 ? ".run" + std::to_string(run) : "";
        if (!config.graph_out.empty()) {
            const std::string path = with_suffix(config.graph_out, suffix);
            emit_graph(graph, config.graph_format, path);
            result.written_files.push_back(path);
        }
        if (!config.tree_out.empty() && config.method != Method::alg1) {
            const std::string path = with_suffix(config.tree_out, suffix);
            emit_graph(tree_as_graph(host), config.graph_format, path);
            result.written_files.push_back(path);
        }
    }

    result.aggregate = aggregate_reports(result.per_run);

    if (!config.stats_out.empty()) {
        write_file(config.stats_out, stats_csv(config, result, false), result.written_files);
        write_file(with_suffix(config.stats_out, ".raw"), stats_csv(config, result, true),
                   result.written_files);
    }
    if (!config.hist_out.empty())
        write_file(config.hist_out, histogram_json(config, result), result.written_files);
    return result;
}

}  // namespace chordalgen
