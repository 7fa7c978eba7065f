#include "koszul_lab/classifier.hpp"

#include <string>

#include "koszul_lab/errors.hpp"

namespace koszul {

std::string_view to_string(ClassificationCase c) {
  switch (c) {
    case ClassificationCase::AllBlocksCompleteBipartite:
      return "ALL_BLOCKS_COMPLETE_BIPARTITE";
    case ClassificationCase::OneBlockK4:
      return "ONE_BLOCK_K4";
    case ClassificationCase::OneBlockAlmostBipartiteSplitOk:
      return "ONE_BLOCK_ALMOST_BIPARTITE_SPLIT_OK";
    case ClassificationCase::Rejected:
      return "REJECTED";
  }
  return "?";
}

std::string_view to_string(RejectionReason r) {
  switch (r) {
    case RejectionReason::TwoBadBlocks:
      return "TWO_BAD_BLOCKS";
    case RejectionReason::BadBlockNotK4NotAlmostBipartite:
      return "BAD_BLOCK_NOT_K4_NOT_ALMOST_BIPARTITE";
    case RejectionReason::SplitHasNonCbBlock:
      return "SPLIT_HAS_NON_CB_BLOCK";
  }
  return "?";
}

std::string_view to_string(NecessaryCondition c) {
  switch (c) {
    case NecessaryCondition::MissingEvenChord:
      return "missing_even_chord";
    case NecessaryCondition::OddCyclesShareAtMostOneVertex:
      return "odd_cycles_share_at_most_one_vertex";
    case NecessaryCondition::SeveralNonCompleteBipartiteBlocks:
      return "several_non_complete_bipartite_blocks";
    case NecessaryCondition::BlockStrictlyContainsK4:
      return "block_strictly_contains_k4";
    case NecessaryCondition::NotAlmostBipartiteWithoutK4:
      return "not_almost_bipartite_without_k4";
  }
  return "?";
}

namespace {

std::vector<bool> complete_bipartite_flags(const BlockDecomposition& d) {
  std::vector<bool> flags;
  flags.reserve(d.blocks.size());
  for (const auto& b : d.blocks) flags.push_back(is_complete_bipartite(b.local_graph()));
  return flags;
}

std::vector<std::size_t> bad_blocks(const std::vector<bool>& flags) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < flags.size(); ++i)
    if (!flags[i]) out.push_back(i);
  return out;
}

SplitAttempt try_split(const Graph& block, Vertex v) {
  SplitAttempt attempt;
  attempt.v = v;
  attempt.parts = *bipartition_excluding(block, v).parts;
  attempt.split = split_construction(block, v, attempt.parts.first, attempt.parts.second);
  attempt.split_blocks = blocks_of_components(attempt.split);
  attempt.split_block_complete_bipartite = complete_bipartite_flags(attempt.split_blocks);
  attempt.passed = bad_blocks(attempt.split_block_complete_bipartite).empty();
  return attempt;
}

std::optional<ConditionViolation> several_bad_blocks(const std::vector<bool>& flags) {
  auto bad = bad_blocks(flags);
  if (bad.size() < 2) return std::nullopt;
  return ConditionViolation{NecessaryCondition::SeveralNonCompleteBipartiteBlocks, {}, {}, std::move(bad)};
}

std::optional<ConditionViolation> k4_in_larger_block(const BlockDecomposition& d) {
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    const auto& b = d.blocks[i];
    if (b.vertices.size() > 4 && contains_k4(b.local_graph()))
      return ConditionViolation{NecessaryCondition::BlockStrictlyContainsK4, {}, {}, {i}};
  }
  return std::nullopt;
}

std::optional<ConditionViolation> not_almost_bipartite_without_k4(const Graph& g) {
  if (!almost_bipartite_witnesses(g).empty() || contains_k4(g)) return std::nullopt;
  return ConditionViolation{NecessaryCondition::NotAlmostBipartiteWithoutK4, {}, {}, {}};
}

void require_cycle_cap(const Graph& g) {
  if (g.order() > kCycleCheckMaxOrder) {
    throw UnsupportedSizeError("necessary-condition checks enumerate cycles; n = " + std::to_string(g.order()) +
                               " exceeds the n <= 10 cap");
  }
}

}  // namespace

ClassificationReport classify(const Graph& g) {
  ClassificationReport report;
  auto& w = report.witness;
  w.decomposition = blocks(g);
  w.block_complete_bipartite = complete_bipartite_flags(w.decomposition);
  const auto bad = bad_blocks(w.block_complete_bipartite);

  auto accept = [&](ClassificationCase c) {
    report.strongly_koszul = true;
    report.trivial = c != ClassificationCase::OneBlockK4;
    report.verdict_case = c;
    return report;
  };
  auto reject = [&](RejectionReason reason) {
    report.rejection_reason = reason;
    if (g.order() <= kCycleCheckMaxOrder) w.necessary_condition = first_necessary_violation(g);
    return report;
  };

  if (bad.empty()) return accept(ClassificationCase::AllBlocksCompleteBipartite);
  if (bad.size() >= 2) return reject(RejectionReason::TwoBadBlocks);

  w.bad_block = bad.front();
  const Graph block = w.decomposition.blocks[bad.front()].local_graph();
  if (block.order() == 4 && is_complete_graph(block)) return accept(ClassificationCase::OneBlockK4);

  const auto witnesses = almost_bipartite_witnesses(block);
  if (witnesses.empty()) return reject(RejectionReason::BadBlockNotK4NotAlmostBipartite);

  bool any_passed = false;
  bool any_failed = false;
  for (Vertex v : witnesses) {
    w.split_attempts.push_back(try_split(block, v));
    (w.split_attempts.back().passed ? any_passed : any_failed) = true;
  }
  w.witness_choice_disagreement = any_passed && any_failed;
  if (any_passed) return accept(ClassificationCase::OneBlockAlmostBipartiteSplitOk);
  return reject(RejectionReason::SplitHasNonCbBlock);
}

bool classify_trivial(const Graph& g) {
  const auto report = classify(g);
  return report.strongly_koszul && report.verdict_case != ClassificationCase::OneBlockK4;
}

std::vector<ConditionViolation> check_necessary_conditions(const Graph& g) {
  require_cycle_cap(g);
  const auto decomposition = blocks(g);
  const auto flags = complete_bipartite_flags(decomposition);
  const auto max_len = static_cast<std::size_t>(g.order());

  std::vector<ConditionViolation> out;
  for (auto& m : even_chord_violations(g, max_len))
    out.push_back({NecessaryCondition::MissingEvenChord, std::move(m), {}, {}});
  for (auto& p : odd_cycle_intersection_violations(g, max_len))
    out.push_back({NecessaryCondition::OddCyclesShareAtMostOneVertex, {}, std::move(p), {}});
  if (auto v = several_bad_blocks(flags)) out.push_back(std::move(*v));
  for (std::size_t i = 0; i < decomposition.blocks.size(); ++i) {
    const auto& b = decomposition.blocks[i];
    if (b.vertices.size() > 4 && contains_k4(b.local_graph()))
      out.push_back({NecessaryCondition::BlockStrictlyContainsK4, {}, {}, {i}});
  }
  if (auto v = not_almost_bipartite_without_k4(g)) out.push_back(std::move(*v));
  return out;
}

std::optional<ConditionViolation> first_necessary_violation(const Graph& g) {
  require_cycle_cap(g);
  const auto decomposition = blocks(g);
  const auto max_len = static_cast<std::size_t>(g.order());

  if (auto v = several_bad_blocks(complete_bipartite_flags(decomposition))) return v;
  if (auto v = k4_in_larger_block(decomposition)) return v;
  if (auto m = first_even_chord_violation(g, max_len))
    return ConditionViolation{NecessaryCondition::MissingEvenChord, std::move(*m), {}, {}};
  if (auto p = first_odd_cycle_intersection_violation(g, max_len))
    return ConditionViolation{NecessaryCondition::OddCyclesShareAtMostOneVertex, {}, std::move(*p), {}};
  return not_almost_bipartite_without_k4(g);
}

}  // namespace koszul
