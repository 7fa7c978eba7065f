#pragma once

#include <string>
#include <string_view>

#include "koszul_lab/graph.hpp"

namespace koszul {

/// Largest vertex count accepted by the single-byte graph6 header.
inline constexpr int kGraph6MaxOrder = 62;

/// Decode one graph6 line. A trailing newline and an optional ">>graph6<<"
/// prefix are accepted. Throws ParseError (with byte offset) on malformed
/// input and UnsupportedSizeError on the multi-byte header (n >= 63).
Graph parse_graph6(std::string_view text);

/// Encode as graph6 without a trailing newline. Throws UnsupportedSizeError
/// when n > 62.
std::string to_graph6(const Graph& g);

/// One "i j" pair per line, 1-based; blank lines and '#' comments skipped.
/// The vertex count is the largest label seen.
Graph parse_edge_list(std::string_view text);

/// {"n": int, "edges": [[i, j], ...]}
Graph parse_graph_json(std::string_view text);
std::string graph_to_json(const Graph& g);

enum class GraphFormat { Graph6, EdgeList, Json };

/// Leading '{' is JSON, a first line with two integers is an edge list,
/// anything else must be graph6.
GraphFormat detect_graph_format(std::string_view text);

Graph parse_graph(std::string_view text);
Graph parse_graph(std::string_view text, GraphFormat format);

}  // namespace koszul
