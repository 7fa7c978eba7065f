#pragma once

#include <vector>

#include "koszul_lab/graph.hpp"

namespace koszul {

/// Largest order accepted by canonical_form (brute force over n! labelings).
inline constexpr int kCanonicalMaxOrder = 9;

/// Largest order accepted by connected_graphs.
inline constexpr int kEnumerationMaxOrder = 7;

/// The relabeling of g whose graph6 encoding is lexicographically smallest.
/// Throws UnsupportedSizeError when n > 9.
Graph canonical_form(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

/// One canonical representative per isomorphism class of connected graphs
/// on exactly n vertices, sorted by graph6 encoding. Throws
/// UnsupportedSizeError when n > 7.
std::vector<Graph> connected_graphs(int n);

}  // namespace koszul
