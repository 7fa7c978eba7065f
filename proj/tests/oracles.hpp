#pragma once

// Brute-force reference implementations used only by tests. They follow the
// definitions directly and share no code paths with the library algorithms
// they check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "koszul_lab/graph.hpp"

namespace oracle {

using koszul::Edge;
using koszul::Graph;
using Vec = std::vector<int>;

/// graph6 by spelling out the bit string as characters.
inline std::string graph6(int n, const std::set<std::pair<int, int>>& edges) {
  std::string bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits += edges.count({i + 1, j + 1}) ? '1' : '0';
  while (bits.size() % 6 != 0) bits += '0';
  std::string out(1, static_cast<char>(63 + n));
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int value = 0;
    for (std::size_t b = 0; b < 6; ++b) value = value * 2 + (bits[k + b] - '0');
    out += static_cast<char>(63 + value);
  }
  return out;
}

inline std::set<std::pair<int, int>> edge_set(const Graph& g) {
  std::set<std::pair<int, int>> out;
  for (const auto& e : g.edges()) out.insert({e.u, e.v});
  return out;
}

/// Cycles counted as vertex sets of closed sequences: every ordered
/// sequence of distinct vertices that closes up, divided by 2q.
inline std::map<std::size_t, std::size_t> cycle_counts(const Graph& g, std::size_t max_len) {
  std::map<std::size_t, std::size_t> sequences;
  std::vector<int> path;
  std::vector<char> used(static_cast<std::size_t>(g.order()) + 1, 0);
  auto rec = [&](auto&& self) -> void {
    if (path.size() >= 3 && g.has_edge(path.back(), path.front())) ++sequences[path.size()];
    if (path.size() == max_len) return;
    for (int v = 1; v <= g.order(); ++v) {
      if (used[v] || !g.has_edge(path.back(), v)) continue;
      used[v] = 1;
      path.push_back(v);
      self(self);
      path.pop_back();
      used[v] = 0;
    }
  };
  for (int s = 1; s <= g.order(); ++s) {
    path = {s};
    used[s] = 1;
    rec(rec);
    used[s] = 0;
  }
  for (auto& [len, count] : sequences) count /= 2 * len;
  return sequences;
}

/// Bipartite by trying every 2-coloring.
inline bool bipartite_brute(int n, const std::vector<std::pair<int, int>>& edges) {
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (auto [a, b] : edges)
      if (((mask >> (a - 1)) & 1) == ((mask >> (b - 1)) & 1)) ok = false;
    if (ok) return true;
  }
  return false;
}

/// Connected by repeated edge relaxation.
inline bool connected_brute(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> comp(static_cast<std::size_t>(n) + 1);
  std::iota(comp.begin(), comp.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, b] : edges) {
      const int m = std::min(comp[a], comp[b]);
      if (comp[a] != m || comp[b] != m) {
        comp[a] = comp[b] = m;
        changed = true;
      }
    }
  }
  for (int v = 1; v <= n; ++v)
    if (comp[v] != 1) return false;
  return true;
}

/// Isomorphism-class count of connected graphs on n vertices, keyed by the
/// smallest sorted relabeled edge list.
inline std::size_t connected_class_count(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) slots.push_back({i, j});
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::set<std::vector<std::pair<int, int>>> classes;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (mask & (1u << k)) edges.push_back(slots[k]);
    if (n > 1 && !connected_brute(n, edges)) continue;
    std::vector<std::pair<int, int>> best;
    bool first = true;
    for (const auto& q : perms) {
      std::vector<std::pair<int, int>> image;
      for (auto [a, b] : edges) image.push_back({std::min(q[a - 1], q[b - 1]), std::max(q[a - 1], q[b - 1])});
      std::sort(image.begin(), image.end());
      if (first || image < best) best = image;
      first = false;
    }
    classes.insert(best);
  }
  return classes.size();
}

/// Distinct sums of d generators chosen with repetition (odometer over
/// nondecreasing index tuples).
inline std::set<Vec> sums_of_degree(const std::vector<Vec>& gens, int d) {
  const std::size_t dim = gens.front().size();
  std::set<Vec> out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  while (true) {
    Vec s(dim, 0);
    for (std::size_t i : idx)
      for (std::size_t k = 0; k < dim; ++k) s[k] += gens[i][k];
    out.insert(s);
    int pos = d - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == gens.size() - 1) --pos;
    if (pos < 0) break;
    const std::size_t next = idx[static_cast<std::size_t>(pos)] + 1;
    for (auto k = static_cast<std::size_t>(pos); k < idx.size(); ++k) idx[k] = next;
    if (d == 0) break;
  }
  return out;
}

inline Vec minus(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

/// Semigroup elements of degree <= D as explicit sets.
struct Semigroup {
  std::vector<Vec> gens;
  std::vector<std::set<Vec>> layers;

  Semigroup(std::vector<Vec> generators, int max_degree) : gens(std::move(generators)) {
    layers.push_back({Vec(gens.front().size(), 0)});
    for (int d = 1; d <= max_degree; ++d) layers.push_back(sums_of_degree(gens, d));
  }

  bool in(const Vec& v, int d) const {
    if (d < 0 || d >= static_cast<int>(layers.size())) return false;
    return layers[static_cast<std::size_t>(d)].count(v) > 0;
  }
};

/// Minimal generators of (u) cap (v) with u, v of degree du, dv, by definition.
inline std::vector<std::pair<Vec, int>> intersection_min_gens(const Semigroup& s, const Vec& u, int du, const Vec& v,
                                                              int dv) {
  auto in_ideal = [&](const Vec& x, int d) { return s.in(minus(x, u), d - du) && s.in(minus(x, v), d - dv); };
  std::vector<std::pair<Vec, int>> out;
  for (int d = 0; d < static_cast<int>(s.layers.size()); ++d) {
    for (const auto& x : s.layers[static_cast<std::size_t>(d)]) {
      if (!in_ideal(x, d)) continue;
      bool minimal = true;
      for (const auto& g : s.gens)
        if (s.in(minus(x, g), d - 1) && in_ideal(minus(x, g), d - 1)) minimal = false;
      if (minimal) out.push_back({x, d});
    }
  }
  return out;
}

/// Y-monomials of degree d over t variables as sorted index lists.
inline std::vector<std::vector<std::size_t>> multisets(std::size_t t, int d) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(cur.size()) == d) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < t; ++i) {
      cur.push_back(i);
      self(self, i);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (coin(rng)) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

inline Graph random_connected_graph(std::mt19937& rng, int n, double p) {
  while (true) {
    Graph g = random_graph(rng, n, p);
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : g.edges()) pairs.push_back({e.u, e.v});
    if (n == 1 || connected_brute(n, pairs)) return g;
  }
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace oracle
