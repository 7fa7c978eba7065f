#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "koszul_lab/graph.hpp"

namespace koszul {

/// Closed vertex sequence (v1, ..., vq), q >= 3, consecutive vertices
/// adjacent and vq adjacent to v1.
struct Cycle {
  std::vector<Vertex> vertices;

  std::size_t length() const noexcept { return vertices.size(); }
  bool is_even() const noexcept { return vertices.size() % 2 == 0; }

  friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

/// Rotate so the smallest vertex is first and reflect so the second vertex
/// is the smaller of its two cycle neighbors.
Cycle canonical_cycle(std::vector<Vertex> vertices);

/// True iff the vertex sequence is a cycle of g.
bool is_cycle_of(const Graph& g, const Cycle& c);

/// Visit every cycle of length <= max_len once, in canonical orientation.
/// The visitor returns false to stop early. Returns false iff stopped.
bool for_each_cycle(const Graph& g, std::size_t max_len, const std::function<bool(const Cycle&)>& visit);

/// Every cycle of length <= max_len, canonical, sorted by (length, vertices).
std::vector<Cycle> enumerate_cycles(const Graph& g, std::size_t max_len);

struct MissingEvenChord {
  Cycle cycle;
  Edge chord;
};

/// Even cycles of length <= max_len together with each even-chord position
/// {v_i, v_j} (j - i odd, not a cycle edge) that is not an edge of g.
std::vector<MissingEvenChord> even_chord_violations(const Graph& g, std::size_t max_len);

struct OddCyclePair {
  Cycle first;
  Cycle second;
};

/// Unordered pairs of odd cycles (length <= max_len) sharing at most one vertex.
std::vector<OddCyclePair> odd_cycle_intersection_violations(const Graph& g, std::size_t max_len);

/// Early-exit variants used by the classifier's diagnostics.
std::optional<MissingEvenChord> first_even_chord_violation(const Graph& g, std::size_t max_len);
std::optional<OddCyclePair> first_odd_cycle_intersection_violation(const Graph& g, std::size_t max_len);

}  // namespace koszul
