#include "chordalgen/graph_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace chordalgen {

namespace {

[[noreturn]] void parse_fail(const std::string& name, int line, const std::string& message) {
    throw std::runtime_error(name + ":" + std::to_string(line) + ": " + message);
}

}  // namespace

GraphFormat parse_graph_format(const std::string& name) {
    if (name == "edgelist") return GraphFormat::edgelist;
    if (name == "dimacs") return GraphFormat::dimacs;
    throw std::invalid_argument("unknown graph format: " + name);
}

std::string format_graph(const Graph& graph, GraphFormat format) {
    std::string out;
    char buf[64];
    if (format == GraphFormat::edgelist)
        std::snprintf(buf, sizeof buf, "%d %lld\n", graph.n, static_cast<long long>(graph.m));
    else
        std::snprintf(buf, sizeof buf, "p edge %d %lld\n", graph.n, static_cast<long long>(graph.m));
    out += buf;
    const char* prefix = format == GraphFormat::dimacs ? "e " : "";
    for (int v = 0; v < graph.n; ++v) {
        for (int w : graph.adj(v)) {
            if (w <= v) continue;
            std::snprintf(buf, sizeof buf, "%s%d %d\n", prefix, v + 1, w + 1);
            out += buf;
        }
    }
    return out;
}

void emit_graph(const Graph& graph, GraphFormat format, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << format_graph(graph, format);
    if (!out) throw std::runtime_error("write failed: " + path);
}

Graph parse_graph_text(const std::string& text, GraphFormat format, const std::string& name) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    long long n = -1, m = -1;

    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty()) continue;
            if (format == GraphFormat::dimacs && line[0] == 'c') continue;  // comment
            return true;
        }
        return false;
    };

    if (!next_line()) parse_fail(name, line_no, "missing header line");
    {
        std::istringstream header(line);
        std::string trailing;
        if (format == GraphFormat::edgelist) {
            if (!(header >> n >> m) || (header >> trailing))
                parse_fail(name, line_no, "expected header 'n m'");
        } else {
            std::string p, kind;
            if (!(header >> p >> kind >> n >> m) || p != "p" || kind != "edge" ||
                (header >> trailing))
                parse_fail(name, line_no, "expected header 'p edge n m'");
        }
        if (n < 0 || m < 0 || n > 100'000'000)
            parse_fail(name, line_no, "invalid n or m in header");
    }

    std::vector<std::array<int, 2>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(static_cast<std::size_t>(m) * 2);
    for (long long i = 0; i < m; ++i) {
        if (!next_line()) parse_fail(name, line_no, "unexpected end of file: expected " +
                                                        std::to_string(m) + " edges");
        std::istringstream edge_line(line);
        long long u = 0, v = 0;
        std::string trailing;
        if (format == GraphFormat::dimacs) {
            std::string e;
            if (!(edge_line >> e) || e != "e") parse_fail(name, line_no, "expected 'e u v'");
        }
        if (!(edge_line >> u >> v) || (edge_line >> trailing))
            parse_fail(name, line_no, "expected an edge 'u v'");
        if (u < 1 || u > n || v < 1 || v > n)
            parse_fail(name, line_no, "endpoint out of range");
        if (u == v) parse_fail(name, line_no, "self-loop");
        const std::uint64_t key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) |
                                  static_cast<std::uint64_t>(std::max(u, v));
        if (!seen.insert(key).second) parse_fail(name, line_no, "duplicate edge");
        edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1)});
    }
    if (next_line()) parse_fail(name, line_no, "trailing content after " + std::to_string(m) + " edges");

    Graph g = Graph::from_edge_list(static_cast<int>(n), edges);
    validate_graph(g);
    return g;
}

Graph parse_graph(const std::string& path, GraphFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph_text(buffer.str(), format, path);
}

Graph tree_as_graph(const HostTree& tree) {
    std::vector<std::array<int, 2>> edges = tree.edges;
    return Graph::from_edge_list(tree.n, edges);
}

}  // namespace chordalgen
