#pragma once

#include <string>

#include "chordalgen/graph.hpp"
#include "chordalgen/host_tree.hpp"

namespace chordalgen {

enum class GraphFormat { edgelist, dimacs };

// Parses "edgelist" / "dimacs"; throws std::invalid_argument otherwise.
GraphFormat parse_graph_format(const std::string& name);

// Edge list: first line "n m", then one "u v" line per edge, 1-indexed,
// u < v, sorted. DIMACS: "p edge n m" header, then "e u v" lines.
std::string format_graph(const Graph& graph, GraphFormat format);
void emit_graph(const Graph& graph, GraphFormat format, const std::string& path);

// Strict parser: rejects self-loops, duplicate edges, out-of-range endpoints,
// and header/edge-count mismatches, reporting the offending line number.
Graph parse_graph(const std::string& path, GraphFormat format);
Graph parse_graph_text(const std::string& text, GraphFormat format,
                       const std::string& name = "<string>");

// A host tree dumped as a graph, for debugging output.
Graph tree_as_graph(const HostTree& tree);

}  // namespace chordalgen
