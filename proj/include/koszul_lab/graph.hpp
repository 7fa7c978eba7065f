#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace koszul {

/// Vertices are labeled 1..n.
using Vertex = int;

/// Undirected edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph on vertices 1..n.
///
/// Edges are normalized to u < v and kept in lexicographic order, so two
/// graphs compare equal iff they have the same vertex count and edge set.
/// The edge order is also the generator order of the edge ring.
class Graph {
 public:
  /// Throws std::invalid_argument on n < 1, loops, repeated edges or
  /// endpoints outside 1..n.
  Graph(int n, std::vector<Edge> edges);

  explicit Graph(int n) : Graph(n, {}) {}

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool has_edge(Vertex a, Vertex b) const noexcept;

  /// Sorted neighbor list of v.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(static_cast<std::size_t>(v)); }

  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  /// Index of edge {a, b} in edges(), or npos.
  std::size_t edge_index(Vertex a, Vertex b) const noexcept;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  friend bool operator==(const Graph& lhs, const Graph& rhs) noexcept {
    return lhs.n_ == rhs.n_ && lhs.edges_ == rhs.edges_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;  // slot 0 unused
  std::vector<std::uint8_t> matrix_;            // (n+1) x (n+1)
};

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
/// Parts {1..a} and {a+1..a+b}.
Graph complete_bipartite_graph(int a, int b);

/// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// Throws DisconnectedGraphError naming the first two components.
void require_connected(const Graph& g);

/// Subgraph induced on `subset`, relabeled 1..|subset| preserving order.
/// Throws std::invalid_argument on an empty or out-of-range subset.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset);

/// Relabel vertex v as perm[v - 1].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace koszul
