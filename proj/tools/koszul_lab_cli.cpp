#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "koszul_lab/classifier.hpp"
#include "koszul_lab/corpus.hpp"
#include "koszul_lab/errors.hpp"
#include "koszul_lab/graph.hpp"
#include "koszul_lab/graph_io.hpp"
#include "koszul_lab/report_json.hpp"
#include "koszul_lab/semigroup.hpp"
#include "koszul_lab/toric.hpp"

namespace {

using nlohmann::json;
using namespace koszul;

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2, kDisconnected = 3, kTooLarge = 4 };

constexpr int kAlgebraMaxOrder = 10;
constexpr int kVeroneseMaxN = 7;
constexpr int kMaxDegreeBound = 6;
constexpr std::size_t kColonMaxGenerators = 12;

struct InputOptions {
  std::string input = "-";
  std::string format = "auto";
};

void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("input", in.input, "graph6 string, edge list or JSON; a file path; '-' for stdin");
  cmd->add_option("--format", in.format, "input format")
      ->check(CLI::IsMember({"auto", "graph6", "edgelist", "json"}));
}

std::string read_text(const std::string& input) {
  if (input == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::error_code ec;
  if (std::filesystem::is_regular_file(input, ec)) {
    std::ifstream file(input, std::ios::binary);
    if (!file) throw ParseError("cannot read " + input);
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
  }
  return input;
}

Graph load_graph(const InputOptions& in) {
  const auto text = read_text(in.input);
  if (in.format == "graph6") return parse_graph(text, GraphFormat::Graph6);
  if (in.format == "edgelist") return parse_graph(text, GraphFormat::EdgeList);
  if (in.format == "json") return parse_graph(text, GraphFormat::Json);
  return parse_graph(text);
}

void require_order_at_most(const Graph& g, int cap, const char* what) {
  if (g.order() > cap)
    throw UnsupportedSizeError(std::string(what) + ": n = " + std::to_string(g.order()) + " exceeds the n <= " +
                               std::to_string(cap) + " cap");
}

void require_degree_bound(int d, int lowest) {
  if (d < lowest) throw std::invalid_argument("--degree-bound must be at least " + std::to_string(lowest));
  if (d > kMaxDegreeBound)
    throw UnsupportedSizeError("--degree-bound " + std::to_string(d) + " exceeds the cap " +
                               std::to_string(kMaxDegreeBound));
}

json graph_header(const Graph& g) {
  json out{{"n", g.order()}, {"edges", g.size()}};
  if (g.order() <= kGraph6MaxOrder) out["graph6"] = to_graph6(g);
  return out;
}

void emit(const json& j, bool compact) { std::cout << (compact ? j.dump() : j.dump(2)) << '\n'; }

json cmd_classify(const Graph& g) {
  json out = graph_header(g);
  out.update(to_json(classify(g)));
  return out;
}

json cmd_oracle(const Graph& g, int degree_bound, bool colon) {
  require_connected(g);
  require_order_at_most(g, kAlgebraMaxOrder, "oracle");
  require_degree_bound(degree_bound, 2);
  json out = graph_header(g);
  out["oracle"] = to_json(edge_ring_oracle(g, degree_bound));
  if (colon) {
    if (g.size() > kColonMaxGenerators)
      throw UnsupportedSizeError("colon check: more than " + std::to_string(kColonMaxGenerators) + " edges");
    out["colon"] = g.size() == 0 ? json{{"verdict", "pass"}, {"degree_bound", degree_bound}, {"witness", nullptr}}
                                 : to_json(colon_check_all_subsequences(edge_ring_basis(g), degree_bound));
  }
  return out;
}

json cmd_toric(const Graph& g, int degree_bound) {
  require_connected(g);
  require_order_at_most(g, kAlgebraMaxOrder, "toric");
  require_degree_bound(degree_bound, 3);
  json out = graph_header(g);
  out["degree_bound"] = degree_bound;
  if (g.size() == 0) {
    out["generators"] = json::array();
    out["counts_by_degree"] = std::vector<std::size_t>(static_cast<std::size_t>(degree_bound) + 1, 0);
    out["quadratic"] = true;
    return out;
  }
  const auto b = edge_ring_basis(g);
  const auto gens = minimal_generators(b, degree_bound);
  const auto counts = generator_degree_counts(gens, degree_bound);
  bool quadratic = true;
  for (std::size_t d = 3; d < counts.size(); ++d) quadratic = quadratic && counts[d] == 0;
  out["basis"] = to_json(b);
  out["generators"] = to_json(std::span<const Binomial>(gens));
  out["counts_by_degree"] = counts;
  out["quadratic"] = quadratic;
  return out;
}

json cmd_groebner(const Graph& g, std::size_t attempts, std::uint64_t seed, int degree_bound) {
  require_connected(g);
  require_order_at_most(g, kAlgebraMaxOrder, "groebner");
  require_degree_bound(degree_bound, 3);
  json out = graph_header(g);
  if (g.size() == 0) {
    out["quadratically_generated"] = true;
    out["attempts_tried"] = 0;
    out["found"] = true;
    out["basis"] = json::array();
    return out;
  }
  const auto b = edge_ring_basis(g);
  const auto outcome = quadratic_gb_search(b, attempts, seed, degree_bound);
  out.update(to_json(outcome));
  if (outcome.found) out["s_pairs_reduce_to_zero"] = s_pairs_reduce_to_zero(b, outcome.found->basis);
  return out;
}

json cmd_veronese(int n, int d, int degree_bound) {
  if (n > kVeroneseMaxN)
    throw UnsupportedSizeError("veronese: n = " + std::to_string(n) + " exceeds the n <= " +
                               std::to_string(kVeroneseMaxN) + " cap");
  require_degree_bound(degree_bound, 2);
  const auto b = veronese_basis(n, d);
  const auto verdict = strongly_koszul_pairwise(b, degree_bound);
  const bool expected = (n == 4 && d == 2) || n == d + 1;
  return {{"n", n},
          {"d", d},
          {"generators", b.size()},
          {"oracle", to_json(verdict)},
          {"expected_strongly_koszul", expected},
          {"matches_classification", verdict.passed == expected}};
}

int cmd_corpus(const CorpusOptions& options, const std::string& out_path) {
  require_degree_bound(options.degree_bound, 2);
  const auto report = run_corpus(options);
  if (out_path.empty() || out_path == "-") {
    write_corpus_jsonl(std::cout, report, options);
  } else {
    std::ofstream file(out_path);
    if (!file) throw std::runtime_error("cannot write " + out_path);
    write_corpus_jsonl(file, report, options);
    std::cerr << "wrote " << report.records.size() << " records to " << out_path << "; " << report.agreements
              << " agree, " << report.disagreements.size() << " disagree\n";
  }
  return report.disagreements.empty() ? kOk : kFailed;
}

void print_error(const char* kind, const std::string& message, json extra = json::object()) {
  extra["error"] = kind;
  extra["message"] = message;
  std::cerr << extra.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strongly Koszul edge rings: classifier and algebraic cross-checks"};
  app.require_subcommand(1);
  app.fallthrough();
  bool compact = false;
  app.add_flag("--compact", compact, "single-line JSON output");

  InputOptions in;
  int degree_bound = 4;
  bool colon = false;
  std::size_t attempts = 1000;
  std::uint64_t seed = 0;
  int vn = 0;
  int vd = 0;
  CorpusOptions corpus;
  std::string out_path;

  auto* classify_cmd = app.add_subcommand("classify", "decide strong Koszulness from the block structure");
  add_input(classify_cmd, in);

  auto* oracle_cmd = app.add_subcommand("oracle", "pairwise intersection oracle on the edge ring");
  add_input(oracle_cmd, in);
  oracle_cmd->add_option("--degree-bound,-D", degree_bound, "largest degree examined")->capture_default_str();
  oracle_cmd->add_flag("--colon", colon, "also run the exhaustive colon-ideal check");

  auto* toric_cmd = app.add_subcommand("toric", "minimal binomial generators of the toric ideal");
  add_input(toric_cmd, in);
  toric_cmd->add_option("--degree-bound,-D", degree_bound, "largest degree examined")->capture_default_str();

  auto* gb_cmd = app.add_subcommand("groebner", "search for a quadratic Groebner basis");
  add_input(gb_cmd, in);
  gb_cmd->add_option("--attempts", attempts, "term orders to try")->capture_default_str();
  gb_cmd->add_option("--seed", seed, "seed for random variable rankings")->capture_default_str();
  gb_cmd->add_option("--degree-bound,-D", degree_bound, "degree bound for the generator computation")
      ->capture_default_str();

  auto* ver_cmd = app.add_subcommand("veronese", "oracle on the squarefree Veronese subring R_{n,d}");
  ver_cmd->add_option("n", vn, "number of variables")->required();
  ver_cmd->add_option("d", vd, "degree of the monomials")->required();
  ver_cmd->add_option("--degree-bound,-D", degree_bound, "largest degree examined")->capture_default_str();

  auto* corpus_cmd = app.add_subcommand("corpus", "cross-check every connected graph up to isomorphism");
  corpus_cmd->add_option("--max-n", corpus.max_n, "largest vertex count")->capture_default_str();
  corpus_cmd->add_option("--degree-bound,-D", corpus.degree_bound, "oracle degree bound")->capture_default_str();
  corpus_cmd->add_option("--jobs,-j", corpus.jobs, "worker threads (0: KOSZUL_LAB_JOBS or all cores)");
  corpus_cmd->add_option("--gb-attempts", corpus.gb_attempts, "term orders per Groebner search")->capture_default_str();
  corpus_cmd->add_option("--seed", corpus.gb_seed, "seed for the Groebner search")->capture_default_str();
  corpus_cmd->add_option("--out,-o", out_path, "JSON-lines output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*classify_cmd) emit(cmd_classify(load_graph(in)), compact);
    if (*oracle_cmd) emit(cmd_oracle(load_graph(in), degree_bound, colon), compact);
    if (*toric_cmd) emit(cmd_toric(load_graph(in), degree_bound), compact);
    if (*gb_cmd) emit(cmd_groebner(load_graph(in), attempts, seed, degree_bound), compact);
    if (*ver_cmd) emit(cmd_veronese(vn, vd, degree_bound), compact);
    if (*corpus_cmd) return cmd_corpus(corpus, out_path);
  } catch (const ParseError& e) {
    json extra = json::object();
    if (e.offset() != ParseError::npos) extra["offset"] = e.offset();
    print_error("parse", e.what(), extra);
    return kUsage;
  } catch (const DisconnectedGraphError& e) {
    print_error("disconnected", e.what(),
                {{"components", {e.first_component(), e.second_component()}}});
    return kDisconnected;
  } catch (const UnsupportedSizeError& e) {
    print_error("unsupported_size", e.what());
    return kTooLarge;
  } catch (const std::invalid_argument& e) {
    print_error("invalid_argument", e.what());
    return kUsage;
  } catch (const std::exception& e) {
    print_error("internal", e.what());
    return kFailed;
  }
  return kOk;
}
