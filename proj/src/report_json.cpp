#include "koszul_lab/report_json.hpp"

namespace koszul {

using nlohmann::json;

namespace {

json one_based(std::span<const std::size_t> indices) {
  json out = json::array();
  for (std::size_t i : indices) out.push_back(i + 1);
  return out;
}

json to_json(const Block& b) {
  json edges = json::array();
  for (const auto& e : b.edges) edges.push_back({e.u, e.v});
  return {{"vertices", b.vertices}, {"edges", edges}};
}

json to_json(const BlockDecomposition& d) {
  json blocks = json::array();
  for (const auto& b : d.blocks) blocks.push_back(to_json(b));
  return {{"blocks", blocks}, {"cut_vertices", d.cut_vertices}};
}

json to_json(const Bipartition& p) { return {{"V1", p.first}, {"V2", p.second}}; }

}  // namespace

json to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.order()}, {"edges", edges}};
}

json to_json(const Cycle& c) { return c.vertices; }

json to_json(const ConditionViolation& v, const BlockDecomposition& d) {
  json out{{"condition", std::string(to_string(v.condition))}};
  if (v.missing_chord) {
    out["cycle"] = to_json(v.missing_chord->cycle);
    out["missing_chord"] = {v.missing_chord->chord.u, v.missing_chord->chord.v};
  }
  if (v.odd_cycles) out["odd_cycles"] = {to_json(v.odd_cycles->first), to_json(v.odd_cycles->second)};
  if (!v.blocks.empty()) {
    json blocks = json::array();
    for (std::size_t i : v.blocks) blocks.push_back(d.blocks.at(i).vertices);
    out["blocks"] = blocks;
  }
  return out;
}

json to_json(const ClassificationReport& r) {
  const auto& w = r.witness;
  json witness = to_json(w.decomposition);
  witness["block_complete_bipartite"] = w.block_complete_bipartite;
  witness["bad_block"] = w.bad_block ? json(w.decomposition.blocks[*w.bad_block].vertices) : json(nullptr);
  json attempts = json::array();
  for (const auto& a : w.split_attempts) {
    json split_blocks = json::array();
    for (const auto& b : a.split_blocks.blocks) split_blocks.push_back(b.vertices);
    attempts.push_back({{"v", a.v},
                        {"bipartition", to_json(a.parts)},
                        {"split", to_json(a.split)},
                        {"split_blocks", split_blocks},
                        {"split_block_complete_bipartite", a.split_block_complete_bipartite},
                        {"passed", a.passed}});
  }
  witness["split_labels"] = "local to bad_block: vertex i is bad_block[i-1]";
  witness["split_attempts"] = attempts;
  witness["witness_choice_disagreement"] = w.witness_choice_disagreement;
  witness["necessary_condition"] =
      w.necessary_condition ? to_json(*w.necessary_condition, w.decomposition) : json(nullptr);

  return {{"strongly_koszul", r.strongly_koszul},
          {"trivial", r.trivial},
          {"case", std::string(to_string(r.verdict_case))},
          {"rejection_reason", r.rejection_reason ? json(std::string(to_string(*r.rejection_reason))) : json(nullptr)},
          {"witness", witness}};
}

json to_json(const MonoidBasis& b) { return {{"dim", b.dimension()}, {"generators", b.generators()}}; }

json to_json(const MonoidIdealWitness& w) {
  return {{"ideal_generators", w.ideal_generators},
          {"element", w.element},
          {"degree", w.degree},
          {"quotient", w.quotient},
          {"quotient_in_monoid", w.quotient_in_monoid}};
}

json to_json(const PairwiseVerdict& v) {
  json out{{"verdict", v.passed ? "pass" : "fail"}, {"degree_bound", v.degree_bound}};
  if (v.failure) {
    json witness = to_json(v.failure->witness);
    witness["pair"] = {v.failure->first + 1, v.failure->second + 1};
    out["witness"] = witness;
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json to_json(const ColonVerdict& v) {
  json out{{"verdict", v.passed ? "pass" : "fail"}, {"degree_bound", v.degree_bound}};
  if (v.failure) {
    out["witness"] = {{"subsequence", one_based(v.failure->subsequence)},
                      {"position", v.failure->position + 1},
                      {"element", v.failure->element},
                      {"degree", v.failure->degree}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json to_json(const YMonomial& m) { return one_based(m.indices()); }

json to_json(const Binomial& f) { return {{"lhs", to_json(f.lhs)}, {"rhs", to_json(f.rhs)}}; }

json to_json(std::span<const Binomial> fs) {
  json out = json::array();
  for (const auto& f : fs) out.push_back(to_json(f));
  return out;
}

json to_json(const GbSearchOutcome& outcome) {
  json out{{"quadratically_generated", outcome.quadratically_generated},
           {"attempts_tried", outcome.attempts_tried},
           {"found", outcome.found.has_value()}};
  if (outcome.found) {
    int top = 0;
    for (const auto& f : outcome.found->basis) top = std::max(top, f.degree());
    out["attempt"] = outcome.found->attempt;
    out["order"] = {{"kind", "grevlex"}, {"rank", one_based(outcome.found->order.rank())}};
    out["basis"] = to_json(std::span<const Binomial>(outcome.found->basis));
    out["counts_by_degree"] = generator_degree_counts(outcome.found->basis, top);
  }
  return out;
}

}  // namespace koszul
