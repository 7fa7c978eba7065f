#include "koszul_lab/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "koszul_lab/errors.hpp"
#include "koszul_lab/graph_io.hpp"

namespace koszul {

namespace {

// Upper-triangle adjacency bits in graph6 order, most significant first, for
// the labeling where new vertex i is old vertex order[i]. Comparing codes as
// integers compares graph6 strings of equal length.
struct CodeSearch {
  const Graph& g;
  int n;
  std::vector<Vertex> order;
  std::vector<Vertex> best;
  std::uint64_t best_code = ~std::uint64_t{0};

  void consider() {
    std::uint64_t code = 0;
    int remaining = n * (n - 1) / 2;
    bool decided = best_code == ~std::uint64_t{0};
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) {
        --remaining;
        const std::uint64_t bit = g.has_edge(order[i], order[j]) ? 1 : 0;
        code = (code << 1) | bit;
        if (!decided) {
          const std::uint64_t best_bit = (best_code >> remaining) & 1;
          if (bit > best_bit) return;
          if (bit < best_bit) decided = true;
        }
      }
    }
    if (code < best_code) {
      best_code = code;
      best = order;
    }
  }
};

}  // namespace

Graph canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > kCanonicalMaxOrder) {
    throw UnsupportedSizeError("canonical_form: n = " + std::to_string(n) + " exceeds the n <= 9 cap");
  }
  CodeSearch search{g, n, std::vector<Vertex>(static_cast<std::size_t>(n)), {}};
  std::iota(search.order.begin(), search.order.end(), 1);
  search.best = search.order;
  do {
    search.consider();
  } while (std::next_permutation(search.order.begin(), search.order.end()));

  // best[i] is the old label of new vertex i + 1.
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(search.best[i] - 1)] = i + 1;
  return relabel(g, perm);
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<Graph> connected_graphs(int n) {
  if (n < 1) return {};
  if (n > kEnumerationMaxOrder) {
    throw UnsupportedSizeError("connected_graphs: n = " + std::to_string(n) + " exceeds the n <= 7 cap");
  }
  if (n == 1) return {Graph(1)};

  // Every connected graph has a vertex whose deletion leaves it connected,
  // so extending each smaller class by one vertex reaches every class.
  std::map<std::string, Graph> found;
  for (const Graph& base : connected_graphs(n - 1)) {
    const int m = base.order();
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
      std::vector<Edge> edges = base.edges();
      for (int i = 0; i < m; ++i)
        if (mask & (std::uint32_t{1} << i)) edges.push_back({i + 1, n});
      Graph canonical = canonical_form(Graph(n, std::move(edges)));
      found.try_emplace(to_graph6(canonical), std::move(canonical));
    }
  }
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& [code, graph] : found) out.push_back(std::move(graph));
  return out;
}

}  // namespace koszul
