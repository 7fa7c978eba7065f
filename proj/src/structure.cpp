#include "koszul_lab/structure.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "koszul_lab/errors.hpp"

namespace koszul {

Graph Block::local_graph() const {
  std::vector<Edge> local;
  local.reserve(edges.size());
  auto index = [&](Vertex x) {
    return static_cast<Vertex>(std::lower_bound(vertices.begin(), vertices.end(), x) - vertices.begin() + 1);
  };
  for (const auto& e : edges) local.push_back({index(e.u), index(e.v)});
  return Graph(static_cast<int>(vertices.size()), std::move(local));
}

namespace {

// Hopcroft-Tarjan biconnected components with an explicit edge stack.
class BlockFinder {
 public:
  explicit BlockFinder(const Graph& g)
      : g_(g),
        disc_(static_cast<std::size_t>(g.order()) + 1, 0),
        low_(static_cast<std::size_t>(g.order()) + 1, 0) {}

  BlockDecomposition run() {
    for (Vertex root = 1; root <= g_.order(); ++root) {
      if (disc_[root] != 0) continue;
      disc_[root] = low_[root] = ++time_;
      for (Vertex child : g_.neighbors(root)) {
        if (disc_[child] != 0) continue;
        edge_stack_.push_back({root, child});
        visit(child, root);
        pop_block(root, child);
      }
    }
    BlockDecomposition out;
    out.blocks = std::move(blocks_);
    for (auto& b : out.blocks) {
      std::sort(b.vertices.begin(), b.vertices.end());
      b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
      std::sort(b.edges.begin(), b.edges.end());
    }
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const Block& a, const Block& b) { return a.vertices < b.vertices; });
    return out;
  }

 private:
  void visit(Vertex v, Vertex parent) {
    disc_[v] = low_[v] = ++time_;
    for (Vertex w : g_.neighbors(v)) {
      if (w == parent) continue;
      if (disc_[w] == 0) {
        edge_stack_.push_back({v, w});
        visit(w, v);
        low_[v] = std::min(low_[v], low_[w]);
        if (low_[w] >= disc_[v]) pop_block(v, w);
      } else if (disc_[w] < disc_[v]) {
        edge_stack_.push_back({v, w});
        low_[v] = std::min(low_[v], disc_[w]);
      }
    }
  }

  void pop_block(Vertex v, Vertex w) {
    Block block;
    while (true) {
      Edge e = edge_stack_.back();
      edge_stack_.pop_back();
      block.vertices.push_back(e.u);
      block.vertices.push_back(e.v);
      block.edges.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
      if (e.u == v && e.v == w) break;
    }
    blocks_.push_back(std::move(block));
  }

  const Graph& g_;
  std::vector<int> disc_;
  std::vector<int> low_;
  std::vector<Edge> edge_stack_;  // oriented (from, to), not normalized
  std::vector<Block> blocks_;
  int time_ = 0;
};

}  // namespace

BlockDecomposition blocks(const Graph& g) {
  require_connected(g);
  return blocks_of_components(g);
}

BlockDecomposition blocks_of_components(const Graph& g) {
  BlockDecomposition out = BlockFinder(g).run();
  // Cut vertices are exactly the vertices lying in more than one block.
  std::vector<int> membership(static_cast<std::size_t>(g.order()) + 1, 0);
  for (const auto& b : out.blocks)
    for (Vertex v : b.vertices) ++membership[v];
  for (Vertex v = 1; v <= g.order(); ++v)
    if (membership[v] > 1) out.cut_vertices.push_back(v);
  return out;
}

namespace {

BipartitionResult two_color(const Graph& g, Vertex removed) {
  const auto size = static_cast<std::size_t>(g.order()) + 1;
  std::vector<int> color(size, -1);
  std::vector<Vertex> parent(size, 0);
  std::vector<int> depth(size, 0);
  for (Vertex s = 1; s <= g.order(); ++s) {
    if (s == removed || color[s] >= 0) continue;
    color[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : g.neighbors(x)) {
        if (y == removed) continue;
        if (color[y] < 0) {
          color[y] = 1 - color[x];
          parent[y] = x;
          depth[y] = depth[x] + 1;
          queue.push_back(y);
        } else if (color[y] == color[x]) {
          // Same depth parity: tree paths to the common ancestor close an odd cycle.
          std::vector<Vertex> up_x{x};
          std::vector<Vertex> up_y{y};
          Vertex a = x;
          Vertex b = y;
          while (depth[a] > depth[b]) up_x.push_back(a = parent[a]);
          while (depth[b] > depth[a]) up_y.push_back(b = parent[b]);
          while (a != b) {
            up_x.push_back(a = parent[a]);
            up_y.push_back(b = parent[b]);
          }
          up_y.pop_back();
          std::vector<Vertex> cycle(up_x.begin(), up_x.end());
          cycle.insert(cycle.end(), up_y.rbegin(), up_y.rend());
          return {std::nullopt, canonical_cycle(std::move(cycle))};
        }
      }
    }
  }
  Bipartition parts;
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (v == removed) continue;
    (color[v] == 0 ? parts.first : parts.second).push_back(v);
  }
  return {std::move(parts), std::nullopt};
}

}  // namespace

BipartitionResult bipartition(const Graph& g) {
  require_connected(g);
  return two_color(g, 0);
}

BipartitionResult bipartition_excluding(const Graph& g, Vertex removed) { return two_color(g, removed); }

bool is_complete_bipartite(const Graph& g) {
  require_connected(g);
  if (g.order() == 1) return true;
  auto result = two_color(g, 0);
  if (!result) return false;
  return g.size() == result.parts->first.size() * result.parts->second.size();
}

bool is_complete_graph(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  return g.size() == n * (n - 1) / 2;
}

bool contains_k4(const Graph& g) {
  for (const auto& e : g.edges()) {
    std::vector<Vertex> common;
    for (Vertex w : g.neighbors(e.u))
      if (w > e.v && g.has_edge(w, e.v)) common.push_back(w);
    for (std::size_t i = 0; i < common.size(); ++i)
      for (std::size_t j = i + 1; j < common.size(); ++j)
        if (g.has_edge(common[i], common[j])) return true;
  }
  return false;
}

std::vector<Vertex> almost_bipartite_witnesses(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= g.order(); ++v)
    if (two_color(g, v)) out.push_back(v);
  return out;
}

Graph split_construction(const Graph& g, Vertex v, std::span<const Vertex> part1, std::span<const Vertex> part2) {
  require_connected(g);
  const int n = g.order();
  if (v < 1 || v > n) throw std::invalid_argument("split: vertex out of range");
  std::vector<int> side(static_cast<std::size_t>(n) + 1, -1);
  auto assign = [&](std::span<const Vertex> part, int s) {
    for (Vertex x : part) {
      if (x < 1 || x > n || x == v || side[x] != -1)
        throw std::invalid_argument("split: parts must partition the vertices other than v");
      side[x] = s;
    }
  };
  assign(part1, 0);
  assign(part2, 1);
  for (Vertex x = 1; x <= n; ++x)
    if (x != v && side[x] == -1) throw std::invalid_argument("split: vertex " + std::to_string(x) + " in neither part");

  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (e.u == v || e.v == v) {
      const Vertex other = e.u == v ? e.v : e.u;
      edges.push_back(side[other] == 0 ? Edge{other, v} : Edge{other, n + 1});
    } else {
      if (side[e.u] == side[e.v])
        throw std::invalid_argument("split: edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                    "} does not cross the bipartition");
      edges.push_back(e);
    }
  }
  return Graph(n + 1, std::move(edges));
}

}  // namespace koszul
