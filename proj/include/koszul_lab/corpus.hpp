#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "koszul_lab/classifier.hpp"
#include "koszul_lab/graph.hpp"
#include "koszul_lab/semigroup.hpp"

namespace koszul {

/// Pairwise oracle on the edge ring of g. An edgeless graph (the ring is the
/// field) passes trivially.
PairwiseVerdict edge_ring_oracle(const Graph& g, int degree_bound);

/// Worker count: the explicit value if nonzero, else KOSZUL_LAB_JOBS, else
/// hardware concurrency.
unsigned resolve_jobs(unsigned requested);

struct CorpusOptions {
  int max_n = 6;
  int degree_bound = 4;
  unsigned jobs = 0;
  std::size_t gb_attempts = 1000;
  std::uint64_t gb_seed = 0;
};

enum class GbStatus { Found, NotFound, NotQuadraticallyGenerated, Skipped };

struct CorpusRecord {
  std::string graph6;
  int n = 0;
  std::size_t edges = 0;
  bool strongly_koszul = false;
  bool trivial = false;
  ClassificationCase verdict_case = ClassificationCase::Rejected;
  bool oracle_passed = false;
  bool agree = false;
  bool quadratically_generated = false;
  GbStatus gb = GbStatus::Skipped;  // searched for accepted graphs only
  std::vector<NecessaryCondition> violated_conditions;  // distinct, in enum order
  bool witness_choice_disagreement = false;
};

struct CorpusReport {
  std::vector<CorpusRecord> records;  // by n, then graph6
  std::size_t agreements = 0;
  std::size_t strongly_koszul = 0;
  std::vector<std::string> disagreements;
  /// Accepted graphs with a necessary-condition violation or without a found
  /// quadratic Groebner basis.
  std::vector<std::string> anomalies;
};

/// Throws UnsupportedSizeError when max_n > 7.
CorpusReport run_corpus(const CorpusOptions& options);

CorpusRecord corpus_record(const Graph& g, const CorpusOptions& options);

std::string_view to_string(GbStatus s);

/// One JSON object per record, then a final {"summary": ...} line.
void write_corpus_jsonl(std::ostream& out, const CorpusReport& report, const CorpusOptions& options);

}  // namespace koszul
