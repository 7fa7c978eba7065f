#include "koszul_lab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

#include "koszul_lab/errors.hpp"

namespace koszul {

namespace {

std::string join(const std::vector<int>& values) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
  out << '}';
  return out.str();
}

}  // namespace

DisconnectedGraphError::DisconnectedGraphError(std::vector<int> first, std::vector<int> second)
    : std::runtime_error("graph is disconnected: components " + join(first) + " and " + join(second)),
      first_(std::move(first)),
      second_(std::move(second)) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw std::invalid_argument("graph needs at least one vertex");
  for (auto& e : edges_) {
    if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 1 || e.v > n_) {
      throw std::invalid_argument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  "} outside 1.." + std::to_string(n_));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw std::invalid_argument("repeated edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
  }
  const auto side = static_cast<std::size_t>(n_) + 1;
  adjacency_.assign(side, {});
  matrix_.assign(side * side, 0);
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
    matrix_[e.u * side + e.v] = matrix_[e.v * side + e.u] = 1;
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const noexcept {
  if (a < 1 || b < 1 || a > n_ || b > n_) return false;
  const auto side = static_cast<std::size_t>(n_) + 1;
  return matrix_[static_cast<std::size_t>(a) * side + static_cast<std::size_t>(b)] != 0;
}

std::size_t Graph::edge_index(Vertex a, Vertex b) const noexcept {
  if (a > b) std::swap(a, b);
  const Edge key{a, b};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return npos;
  return static_cast<std::size_t>(it - edges_.begin());
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({1, n});
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph complete_bipartite_graph(int a, int b) {
  std::vector<Edge> edges;
  for (int i = 1; i <= a; ++i)
    for (int j = a + 1; j <= a + b; ++j) edges.push_back({i, j});
  return Graph(a + b, std::move(edges));
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<int> label(static_cast<std::size_t>(n) + 1, -1);
  std::vector<std::vector<Vertex>> components;
  std::vector<Vertex> stack;
  for (Vertex s = 1; s <= n; ++s) {
    if (label[s] >= 0) continue;
    const int id = static_cast<int>(components.size());
    components.emplace_back();
    label[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      components.back().push_back(x);
      for (Vertex y : g.neighbors(x)) {
        if (label[y] < 0) {
          label[y] = id;
          stack.push_back(y);
        }
      }
    }
    std::sort(components.back().begin(), components.back().end());
  }
  return components;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

void require_connected(const Graph& g) {
  auto components = connected_components(g);
  if (components.size() > 1) throw DisconnectedGraphError(components[0], components[1]);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
  if (subset.empty()) throw std::invalid_argument("induced subgraph needs a nonempty vertex set");
  std::vector<Vertex> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("repeated vertex in induced subgraph set");
  if (sorted.front() < 1 || sorted.back() > g.order())
    throw std::invalid_argument("induced subgraph vertex out of range");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      if (g.has_edge(sorted[i], sorted[j]))
        edges.push_back({static_cast<Vertex>(i + 1), static_cast<Vertex>(j + 1)});
  return Graph(static_cast<int>(sorted.size()), std::move(edges));
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != static_cast<std::size_t>(g.order()))
    throw std::invalid_argument("relabel: permutation size mismatch");
  std::vector<Vertex> check(perm.begin(), perm.end());
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i)
    if (check[i] != static_cast<Vertex>(i + 1)) throw std::invalid_argument("relabel: not a permutation");
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const auto& e : g.edges()) edges.push_back({perm[e.u - 1], perm[e.v - 1]});
  return Graph(g.order(), std::move(edges));
}

}  // namespace koszul
