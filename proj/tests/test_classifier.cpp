#include <doctest.h>

#include <random>

#include "koszul_lab/canonical.hpp"
#include "koszul_lab/classifier.hpp"
#include "koszul_lab/corpus.hpp"
#include "koszul_lab/errors.hpp"
#include "koszul_lab/graph.hpp"
#include "koszul_lab/structure.hpp"
#include "oracles.hpp"

using namespace koszul;

namespace {

Graph bowtie() { return Graph(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}); }

Graph k4_plus_ear() {
  return Graph(5, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {1, 5}, {2, 5}});
}

bool has_condition(const std::vector<ConditionViolation>& vs, NecessaryCondition c) {
  for (const auto& v : vs)
    if (v.condition == c) return true;
  return false;
}

}  // namespace

TEST_CASE("classification of documented graphs") {
  const auto k4 = classify(complete_graph(4));
  CHECK(k4.strongly_koszul);
  CHECK(k4.verdict_case == ClassificationCase::OneBlockK4);
  CHECK_FALSE(k4.trivial);

  const auto k23 = classify(complete_bipartite_graph(2, 3));
  CHECK(k23.strongly_koszul);
  CHECK(k23.trivial);
  CHECK(k23.verdict_case == ClassificationCase::AllBlocksCompleteBipartite);

  const auto c6 = classify(cycle_graph(6));
  CHECK_FALSE(c6.strongly_koszul);
  CHECK_FALSE(c6.trivial);

  const auto bt = classify(bowtie());
  CHECK_FALSE(bt.strongly_koszul);
  CHECK(bt.rejection_reason == RejectionReason::TwoBadBlocks);

  const auto c5 = classify(cycle_graph(5));
  CHECK(c5.strongly_koszul);
  CHECK(c5.trivial);
  CHECK(c5.verdict_case == ClassificationCase::OneBlockAlmostBipartiteSplitOk);

  CHECK_FALSE(classify(complete_graph(5)).strongly_koszul);
  CHECK(classify(complete_graph(5)).rejection_reason == RejectionReason::BadBlockNotK4NotAlmostBipartite);
}

TEST_CASE("degenerate graphs are complete bipartite") {
  for (const Graph& g : {Graph(1), Graph(2, {{1, 2}})}) {
    const auto r = classify(g);
    CHECK(r.strongly_koszul);
    CHECK(r.trivial);
    CHECK(r.verdict_case == ClassificationCase::AllBlocksCompleteBipartite);
  }
  CHECK_THROWS_AS(classify(Graph(2)), DisconnectedGraphError);
}

TEST_CASE("triviality") {
  CHECK_FALSE(classify_trivial(complete_graph(4)));
  CHECK(classify_trivial(cycle_graph(5)));
  CHECK(classify_trivial(Graph(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}})));
  CHECK_FALSE(classify_trivial(cycle_graph(6)));
}

TEST_CASE("split witness trail") {
  const auto r = classify(cycle_graph(5));
  REQUIRE(r.witness.bad_block == 0u);
  REQUIRE(r.witness.split_attempts.size() == 5);
  for (const auto& a : r.witness.split_attempts) {
    CHECK(a.passed);
    CHECK(a.split.order() == 6);
    CHECK(a.split.size() == 5);
  }
  CHECK_FALSE(r.witness.witness_choice_disagreement);

  CHECK(classify(cycle_graph(7)).strongly_koszul);
}

TEST_CASE("necessary conditions of documented graphs") {
  const auto c6 = check_necessary_conditions(cycle_graph(6));
  REQUIRE(c6.size() == 3);
  for (const auto& v : c6) CHECK(v.condition == NecessaryCondition::MissingEvenChord);

  const auto ear = check_necessary_conditions(k4_plus_ear());
  CHECK(has_condition(ear, NecessaryCondition::BlockStrictlyContainsK4));

  CHECK(check_necessary_conditions(complete_bipartite_graph(3, 3)).empty());

  const auto bt = check_necessary_conditions(bowtie());
  CHECK(has_condition(bt, NecessaryCondition::SeveralNonCompleteBipartiteBlocks));
  CHECK(has_condition(bt, NecessaryCondition::OddCyclesShareAtMostOneVertex));

  CHECK(has_condition(check_necessary_conditions(complete_graph(5)), NecessaryCondition::BlockStrictlyContainsK4));
  CHECK_THROWS_AS(check_necessary_conditions(path_graph(11)), UnsupportedSizeError);
}

TEST_CASE("rejections carry the first violation in diagnostic order") {
  const auto bt = classify(bowtie());
  REQUIRE(bt.witness.necessary_condition);
  CHECK(bt.witness.necessary_condition->condition == NecessaryCondition::SeveralNonCompleteBipartiteBlocks);

  const auto ear = classify(k4_plus_ear());
  CHECK_FALSE(ear.strongly_koszul);
  REQUIRE(ear.witness.necessary_condition);
  CHECK(ear.witness.necessary_condition->condition == NecessaryCondition::BlockStrictlyContainsK4);

  const auto c6 = classify(cycle_graph(6));
  REQUIRE(c6.witness.necessary_condition);
  CHECK(c6.witness.necessary_condition->condition == NecessaryCondition::MissingEvenChord);
  REQUIRE(c6.witness.necessary_condition->missing_chord);
  CHECK(c6.witness.necessary_condition->missing_chord->chord == Edge{1, 4});

  CHECK_FALSE(classify(complete_graph(4)).witness.necessary_condition);
}

TEST_CASE("report invariants and filter soundness over the n <= 6 corpus") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : connected_graphs(n)) {
      const auto r = classify(g);
      if (!r.strongly_koszul) CHECK_FALSE(r.trivial);
      if (r.verdict_case == ClassificationCase::OneBlockK4) CHECK_FALSE(r.trivial);
      CHECK(r.strongly_koszul == (r.verdict_case != ClassificationCase::Rejected));
      CHECK(r.strongly_koszul != r.rejection_reason.has_value());
      if (r.strongly_koszul) {
        CHECK(check_necessary_conditions(g).empty());
      } else {
        CHECK(r.witness.necessary_condition.has_value());
      }
      CHECK_FALSE(r.witness.witness_choice_disagreement);
    }
  }
}

TEST_CASE("classification is invariant under relabeling") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const Graph g = oracle::random_connected_graph(rng, n, 0.4);
    const Graph h = relabel(g, oracle::random_permutation(rng, n));
    const auto a = classify(g);
    const auto b = classify(h);
    CHECK(a.strongly_koszul == b.strongly_koszul);
    CHECK(a.trivial == b.trivial);
    CHECK(a.verdict_case == b.verdict_case);
    CHECK(a.rejection_reason == b.rejection_reason);
  }
}

TEST_CASE("hereditary closure on connected induced subgraphs for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& g : connected_graphs(n)) {
      if (!classify(g).strongly_koszul) continue;
      for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<Vertex> w;
        for (int v = 1; v <= n; ++v)
          if (mask & (1u << (v - 1))) w.push_back(v);
        const Graph h = induced_subgraph(g, w);
        if (!is_connected(h)) continue;
        CHECK(classify(h).strongly_koszul);
      }
    }
  }
}

TEST_CASE("bipartite specialization for n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : connected_graphs(n)) {
      if (!bipartition(g)) continue;
      bool all_cb = true;
      for (const auto& b : blocks(g).blocks) all_cb = all_cb && is_complete_bipartite(b.local_graph());
      CHECK(classify(g).strongly_koszul == all_cb);
    }
  }
}

TEST_CASE("classifier agrees with the pairwise oracle for n <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : connected_graphs(n)) CHECK(classify(g).strongly_koszul == edge_ring_oracle(g, 4).passed);
}

TEST_CASE("triangles joined by a two-edge path need degree 5 in the oracle") {
  const Graph g(7, {{1, 6}, {1, 7}, {2, 5}, {2, 7}, {5, 7}, {3, 4}, {3, 6}, {4, 6}});
  const auto r = classify(g);
  CHECK_FALSE(r.strongly_koszul);
  CHECK(r.rejection_reason == RejectionReason::TwoBadBlocks);
  CHECK(edge_ring_oracle(g, 4).passed);
  const auto v5 = edge_ring_oracle(g, 5);
  CHECK_FALSE(v5.passed);
  REQUIRE(v5.failure);
  CHECK(v5.failure->witness.degree == 5);
}
