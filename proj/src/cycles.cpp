#include "koszul_lab/cycles.hpp"

#include <algorithm>

namespace koszul {

Cycle canonical_cycle(std::vector<Vertex> vertices) {
  if (vertices.size() < 3) return Cycle{std::move(vertices)};
  auto smallest = std::min_element(vertices.begin(), vertices.end());
  std::rotate(vertices.begin(), smallest, vertices.end());
  if (vertices[1] > vertices.back()) std::reverse(vertices.begin() + 1, vertices.end());
  return Cycle{std::move(vertices)};
}

bool is_cycle_of(const Graph& g, const Cycle& c) {
  const auto& v = c.vertices;
  if (v.size() < 3) return false;
  std::vector<Vertex> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!g.has_edge(v[i], v[(i + 1) % v.size()])) return false;
  return true;
}

namespace {

struct CycleSearch {
  const Graph& g;
  std::size_t max_len;
  const std::function<bool(const Cycle&)>& visit;
  std::vector<Vertex> path;
  std::vector<char> on_path;

  // Extends the current path from its last vertex; start = path.front() is
  // the smallest vertex of every cycle found from here.
  bool extend() {
    const Vertex start = path.front();
    const Vertex tail = path.back();
    for (Vertex next : g.neighbors(tail)) {
      if (next == start) {
        if (path.size() >= 3 && path[1] < path.back()) {
          if (!visit(Cycle{path})) return false;
        }
        continue;
      }
      if (next < start || on_path[next] || path.size() >= max_len) continue;
      path.push_back(next);
      on_path[next] = 1;
      const bool keep_going = extend();
      on_path[next] = 0;
      path.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }
};

}  // namespace

bool for_each_cycle(const Graph& g, std::size_t max_len, const std::function<bool(const Cycle&)>& visit) {
  if (max_len < 3) return true;
  CycleSearch search{g, max_len, visit, {}, std::vector<char>(static_cast<std::size_t>(g.order()) + 1, 0)};
  for (Vertex s = 1; s <= g.order(); ++s) {
    search.path.assign(1, s);
    search.on_path[s] = 1;
    const bool keep_going = search.extend();
    search.on_path[s] = 0;
    if (!keep_going) return false;
  }
  return true;
}

std::vector<Cycle> enumerate_cycles(const Graph& g, std::size_t max_len) {
  std::vector<Cycle> cycles;
  for_each_cycle(g, max_len, [&](const Cycle& c) {
    cycles.push_back(c);
    return true;
  });
  std::sort(cycles.begin(), cycles.end(), [](const Cycle& a, const Cycle& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.vertices < b.vertices;
  });
  return cycles;
}

namespace {

// Missing even-chords of one even cycle, in position order.
void missing_chords(const Graph& g, const Cycle& c, std::vector<MissingEvenChord>& out, bool first_only) {
  const auto& v = c.vertices;
  const std::size_t q = v.size();
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = i + 3; j < q; j += 2) {
      if (i == 0 && j == q - 1) continue;  // cycle edge
      if (!g.has_edge(v[i], v[j])) {
        out.push_back({c, Edge{std::min(v[i], v[j]), std::max(v[i], v[j])}});
        if (first_only) return;
      }
    }
  }
}

std::size_t shared_vertices(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

template <typename Sink>
void scan_odd_pairs(const Graph& g, std::size_t max_len, Sink&& sink) {
  const auto cycles = enumerate_cycles(g, max_len);
  std::vector<const Cycle*> odd;
  std::vector<std::vector<Vertex>> sorted;
  for (const auto& c : cycles) {
    if (c.is_even()) continue;
    odd.push_back(&c);
    sorted.push_back(c.vertices);
    std::sort(sorted.back().begin(), sorted.back().end());
  }
  for (std::size_t a = 0; a < odd.size(); ++a)
    for (std::size_t b = a + 1; b < odd.size(); ++b)
      if (shared_vertices(sorted[a], sorted[b]) <= 1)
        if (!sink(OddCyclePair{*odd[a], *odd[b]})) return;
}

}  // namespace

std::vector<MissingEvenChord> even_chord_violations(const Graph& g, std::size_t max_len) {
  std::vector<MissingEvenChord> out;
  for (const auto& c : enumerate_cycles(g, max_len))
    if (c.is_even()) missing_chords(g, c, out, false);
  return out;
}

std::optional<MissingEvenChord> first_even_chord_violation(const Graph& g, std::size_t max_len) {
  std::vector<MissingEvenChord> out;
  for_each_cycle(g, max_len, [&](const Cycle& c) {
    if (c.is_even() && c.length() >= 6) missing_chords(g, c, out, true);
    return out.empty();
  });
  if (out.empty()) return std::nullopt;
  return out.front();
}

std::vector<OddCyclePair> odd_cycle_intersection_violations(const Graph& g, std::size_t max_len) {
  std::vector<OddCyclePair> out;
  scan_odd_pairs(g, max_len, [&](OddCyclePair pair) {
    out.push_back(std::move(pair));
    return true;
  });
  return out;
}

std::optional<OddCyclePair> first_odd_cycle_intersection_violation(const Graph& g, std::size_t max_len) {
  std::optional<OddCyclePair> found;
  scan_odd_pairs(g, max_len, [&](OddCyclePair pair) {
    found = std::move(pair);
    return false;
  });
  return found;
}

}  // namespace koszul
