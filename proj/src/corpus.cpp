#include "koszul_lab/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <json.hpp>
#include <set>
#include <thread>

#include "koszul_lab/canonical.hpp"
#include "koszul_lab/errors.hpp"
#include "koszul_lab/graph_io.hpp"
#include "koszul_lab/toric.hpp"

namespace koszul {

PairwiseVerdict edge_ring_oracle(const Graph& g, int degree_bound) {
  if (g.size() == 0) {
    if (degree_bound < 2) throw std::invalid_argument("pairwise oracle needs a degree bound >= 2");
    return PairwiseVerdict{true, degree_bound, std::nullopt};
  }
  return strongly_koszul_pairwise(edge_ring_basis(g), degree_bound);
}

unsigned resolve_jobs(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("KOSZUL_LAB_JOBS")) {
    const long value = std::strtol(env, nullptr, 10);
    if (value > 0) return static_cast<unsigned>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string_view to_string(GbStatus s) {
  switch (s) {
    case GbStatus::Found:
      return "found";
    case GbStatus::NotFound:
      return "not_found";
    case GbStatus::NotQuadraticallyGenerated:
      return "not_quadratically_generated";
    case GbStatus::Skipped:
      return "skipped";
  }
  return "?";
}

CorpusRecord corpus_record(const Graph& g, const CorpusOptions& options) {
  CorpusRecord r;
  r.graph6 = to_graph6(g);
  r.n = g.order();
  r.edges = g.size();

  const auto report = classify(g);
  r.strongly_koszul = report.strongly_koszul;
  r.trivial = report.trivial;
  r.verdict_case = report.verdict_case;
  r.witness_choice_disagreement = report.witness.witness_choice_disagreement;

  r.oracle_passed = edge_ring_oracle(g, options.degree_bound).passed;
  r.agree = r.oracle_passed == r.strongly_koszul;

  std::set<NecessaryCondition> kinds;
  for (const auto& v : check_necessary_conditions(g)) kinds.insert(v.condition);
  r.violated_conditions.assign(kinds.begin(), kinds.end());

  if (g.size() == 0) {
    r.quadratically_generated = true;
    r.gb = r.strongly_koszul ? GbStatus::Found : GbStatus::Skipped;
    return r;
  }
  const auto basis = edge_ring_basis(g);
  const int bound = std::max(options.degree_bound, 3);
  if (r.strongly_koszul) {
    const auto search = quadratic_gb_search(basis, options.gb_attempts, options.gb_seed, bound);
    r.quadratically_generated = search.quadratically_generated;
    if (!search.quadratically_generated) {
      r.gb = GbStatus::NotQuadraticallyGenerated;
    } else {
      r.gb = search.found ? GbStatus::Found : GbStatus::NotFound;
    }
  } else {
    r.quadratically_generated = is_quadratically_generated(basis, bound);
  }
  return r;
}

CorpusReport run_corpus(const CorpusOptions& options) {
  if (options.max_n > kEnumerationMaxOrder) {
    throw UnsupportedSizeError("corpus: max n = " + std::to_string(options.max_n) + " exceeds the n <= 7 cap");
  }
  std::vector<Graph> graphs;
  for (int n = 1; n <= options.max_n; ++n) {
    auto level = connected_graphs(n);
    graphs.insert(graphs.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
  }

  CorpusReport report;
  report.records.resize(graphs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) report.records[i] = corpus_record(graphs[i], options);
  };
  const unsigned jobs = std::min<unsigned>(resolve_jobs(options.jobs), static_cast<unsigned>(graphs.size()));
  std::vector<std::jthread> pool;
  for (unsigned k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  pool.clear();

  for (const auto& r : report.records) {
    if (r.agree) {
      ++report.agreements;
    } else {
      report.disagreements.push_back(r.graph6);
    }
    if (r.strongly_koszul) {
      ++report.strongly_koszul;
      if (!r.violated_conditions.empty() || r.gb != GbStatus::Found) report.anomalies.push_back(r.graph6);
    }
  }
  return report;
}

void write_corpus_jsonl(std::ostream& out, const CorpusReport& report, const CorpusOptions& options) {
  using nlohmann::json;
  for (const auto& r : report.records) {
    json conditions = json::array();
    for (auto c : r.violated_conditions) conditions.push_back(std::string(to_string(c)));
    json line{{"graph6", r.graph6},
              {"n", r.n},
              {"edges", r.edges},
              {"classifier",
               {{"strongly_koszul", r.strongly_koszul},
                {"trivial", r.trivial},
                {"case", std::string(to_string(r.verdict_case))}}},
              {"oracle", {{"verdict", r.oracle_passed ? "pass" : "fail"}, {"degree_bound", options.degree_bound}}},
              {"agree", r.agree},
              {"quadratically_generated", r.quadratically_generated},
              {"quadratic_gb", std::string(to_string(r.gb))},
              {"violated_conditions", conditions},
              {"witness_choice_disagreement", r.witness_choice_disagreement}};
    out << line.dump() << '\n';
  }
  json summary{{"total", report.records.size()},
               {"agree", report.agreements},
               {"strongly_koszul", report.strongly_koszul},
               {"disagreements", report.disagreements},
               {"anomalies", report.anomalies},
               {"max_n", options.max_n},
               {"degree_bound", options.degree_bound}};
  out << json{{"summary", summary}}.dump() << '\n';
}

}  // namespace koszul
