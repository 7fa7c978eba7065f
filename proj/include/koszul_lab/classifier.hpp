#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "koszul_lab/cycles.hpp"
#include "koszul_lab/graph.hpp"
#include "koszul_lab/structure.hpp"

namespace koszul {

/// Largest order for the exhaustive cycle-based necessary-condition checks.
inline constexpr int kCycleCheckMaxOrder = 10;

enum class ClassificationCase {
  AllBlocksCompleteBipartite,
  OneBlockK4,
  OneBlockAlmostBipartiteSplitOk,
  Rejected,
};

enum class RejectionReason {
  TwoBadBlocks,
  BadBlockNotK4NotAlmostBipartite,
  SplitHasNonCbBlock,
};

/// Necessary conditions for a strongly Koszul edge ring.
enum class NecessaryCondition {
  MissingEvenChord,                   // every even cycle has all even-chords
  OddCyclesShareAtMostOneVertex,      // two odd cycles share >= 2 vertices
  SeveralNonCompleteBipartiteBlocks,  // at most one block is not complete bipartite
  BlockStrictlyContainsK4,            // a block containing K4 is K4
  NotAlmostBipartiteWithoutK4,        // not almost bipartite implies a K4 subgraph
};

std::string_view to_string(ClassificationCase c);
std::string_view to_string(RejectionReason r);
std::string_view to_string(NecessaryCondition c);

struct ConditionViolation {
  NecessaryCondition condition;
  std::optional<MissingEvenChord> missing_chord;
  std::optional<OddCyclePair> odd_cycles;
  std::vector<std::size_t> blocks;  // indices into the block decomposition
};

/// One attempt of the split test on the non-complete-bipartite block. All
/// labels (v, parts, split graph) are local to the block: local vertex i is
/// block.vertices[i - 1].
struct SplitAttempt {
  Vertex v = 0;
  Bipartition parts;
  Graph split{1};
  BlockDecomposition split_blocks;
  std::vector<bool> split_block_complete_bipartite;
  bool passed = false;
};

struct ClassificationWitness {
  BlockDecomposition decomposition;
  std::vector<bool> block_complete_bipartite;
  std::optional<std::size_t> bad_block;  // the unique non-complete-bipartite block
  std::vector<SplitAttempt> split_attempts;
  /// Some witness vertex passed the split test while another failed.
  bool witness_choice_disagreement = false;
  /// First violated necessary condition (rejections with n <= 10 only).
  std::optional<ConditionViolation> necessary_condition;
};

struct ClassificationReport {
  bool strongly_koszul = false;
  bool trivial = false;
  ClassificationCase verdict_case = ClassificationCase::Rejected;
  std::optional<RejectionReason> rejection_reason;
  ClassificationWitness witness;
};

/// Decide strong Koszulness of the edge ring from the block structure.
/// Throws DisconnectedGraphError.
ClassificationReport classify(const Graph& g);

/// Accepted with a case other than OneBlockK4. Throws DisconnectedGraphError.
bool classify_trivial(const Graph& g);

/// Every violation of the five necessary conditions, with witnesses.
/// Throws DisconnectedGraphError, or UnsupportedSizeError when n > 10.
std::vector<ConditionViolation> check_necessary_conditions(const Graph& g);

/// The first violation in the order: several bad blocks, block strictly
/// containing K4, missing even-chord, odd cycles sharing <= 1 vertex, not
/// almost bipartite without K4. Stops at the first hit.
std::optional<ConditionViolation> first_necessary_violation(const Graph& g);

}  // namespace koszul
