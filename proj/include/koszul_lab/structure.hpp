#pragma once

#include <optional>
#include <span>
#include <vector>

#include "koszul_lab/cycles.hpp"
#include "koszul_lab/graph.hpp"

namespace koszul {

/// A maximal 2-connected subgraph, or a bridge edge. Labels are those of the
/// parent graph.
struct Block {
  std::vector<Vertex> vertices;  // sorted
  std::vector<Edge> edges;       // sorted

  /// The block as a graph on 1..|vertices|, order-preserving.
  Graph local_graph() const;

  friend bool operator==(const Block&, const Block&) = default;
};

struct BlockDecomposition {
  std::vector<Block> blocks;         // sorted by smallest vertex, then vertex list
  std::vector<Vertex> cut_vertices;  // sorted
};

/// Block / cut-vertex decomposition of a connected graph. A single vertex
/// has no blocks. Throws DisconnectedGraphError.
BlockDecomposition blocks(const Graph& g);

/// Same decomposition for an arbitrary graph: blocks of every component,
/// isolated vertices contribute nothing.
BlockDecomposition blocks_of_components(const Graph& g);

struct Bipartition {
  std::vector<Vertex> first;   // contains the smallest vertex of each component
  std::vector<Vertex> second;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// Either a bipartition or an odd cycle refuting bipartiteness.
struct BipartitionResult {
  std::optional<Bipartition> parts;
  std::optional<Cycle> odd_cycle;

  explicit operator bool() const noexcept { return parts.has_value(); }
};

/// Two-coloring of a connected graph; vertex 1 lands in `first`.
/// Throws DisconnectedGraphError.
BipartitionResult bipartition(const Graph& g);

/// Two-coloring of g with vertex `removed` deleted (labels kept). Each
/// component's smallest vertex lands in `first`. No connectivity required.
BipartitionResult bipartition_excluding(const Graph& g, Vertex removed);

/// Connected, bipartite with |E| = |V1| * |V2|. A single vertex and a single
/// edge qualify. Throws DisconnectedGraphError.
bool is_complete_bipartite(const Graph& g);

bool is_complete_graph(const Graph& g);

/// Some four vertices pairwise adjacent.
bool contains_k4(const Graph& g);

/// Vertices v such that g - v is bipartite.
std::vector<Vertex> almost_bipartite_witnesses(const Graph& g);

/// The bipartite graph on n+1 vertices with edges
///   E(g - v) + {{i, v} : i in V1} + {{i, n+1} : i in V2, {i, v} in E(g)}.
/// Throws DisconnectedGraphError, or std::invalid_argument if (part1, part2)
/// is not a bipartition of g - v.
Graph split_construction(const Graph& g, Vertex v, std::span<const Vertex> part1, std::span<const Vertex> part2);

}  // namespace koszul
