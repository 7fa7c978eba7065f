#include "koszul_lab/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <json.hpp>
#include <string>
#include <vector>

#include "koszul_lab/errors.hpp"

namespace koszul {

namespace {

constexpr int kBias = 63;
constexpr int kMaxPrintable = 126;
constexpr std::string_view kGraph6Prefix = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t body_bytes(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kGraph6Prefix)) {
    text.remove_prefix(kGraph6Prefix.size());
    base = kGraph6Prefix.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: missing header byte", base);

  for (std::size_t i = 0; i < text.size(); ++i) {
    const int c = static_cast<unsigned char>(text[i]);
    if (c < kBias || c > kMaxPrintable) {
      throw ParseError("graph6: byte " + std::to_string(c) + " out of range 63..126 at offset " +
                           std::to_string(base + i),
                       base + i);
    }
  }
  const int header = static_cast<unsigned char>(text[0]);
  if (header == kMaxPrintable) {
    throw UnsupportedSizeError("graph6: multi-byte header (n >= 63) is not supported; cap is n <= 62");
  }
  const int n = header - kBias;
  if (n == 0) throw ParseError("graph6: zero-vertex graph is not representable", base);

  const std::size_t expected = body_bytes(n);
  const std::size_t have = text.size() - 1;
  if (have < expected) {
    throw ParseError("graph6: truncated bit field, expected " + std::to_string(expected) + " body bytes, got " +
                         std::to_string(have),
                     base + text.size());
  }
  if (have > expected) {
    throw ParseError("graph6: trailing bytes after bit field at offset " + std::to_string(base + 1 + expected),
                     base + 1 + expected);
  }

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int value = static_cast<unsigned char>(text[1 + bit / 6]) - kBias;
      if (value & (1 << (5 - bit % 6))) edges.push_back({i + 1, j + 1});
    }
  }
  for (; bit % 6 != 0; ++bit) {
    const int value = static_cast<unsigned char>(text[1 + bit / 6]) - kBias;
    if (value & (1 << (5 - bit % 6))) {
      throw ParseError("graph6: nonzero padding bit at offset " + std::to_string(base + 1 + bit / 6),
                       base + 1 + bit / 6);
    }
  }
  return Graph(n, std::move(edges));
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) {
    throw UnsupportedSizeError("graph6: n = " + std::to_string(n) + " exceeds the n <= 62 cap");
  }
  std::string out(1 + body_bytes(n), static_cast<char>(kBias));
  out[0] = static_cast<char>(n + kBias);
  std::size_t bit = 0;
  for (int j = 2; j <= n; ++j) {
    for (int i = 1; i < j; ++i, ++bit) {
      if (g.has_edge(i, j)) out[1 + bit / 6] = static_cast<char>(out[1 + bit / 6] + (1 << (5 - bit % 6)));
    }
  }
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  int n = 0;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    int values[2] = {0, 0};
    int count = 0;
    std::size_t pos = 0;
    while (pos < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[pos])) || line[pos] == ',') {
        ++pos;
        continue;
      }
      int value = 0;
      auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
      if (ec != std::errc() || count == 2) {
        throw ParseError("edge list: expected two integers per line", line_start + pos);
      }
      values[count++] = value;
      pos = static_cast<std::size_t>(ptr - line.data());
    }
    if (count == 1) throw ParseError("edge list: line has a single integer", line_start);
    if (count == 2) {
      if (values[0] < 1 || values[1] < 1) throw ParseError("edge list: vertices are 1-based", line_start);
      if (values[0] == values[1]) throw ParseError("edge list: loop at vertex " + std::to_string(values[0]), line_start);
      edges.push_back({values[0], values[1]});
      n = std::max({n, values[0], values[1]});
    }
    line_start = line_end + 1;
  }
  if (edges.empty()) throw ParseError("edge list: no edges");
  try {
    return Graph(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

Graph parse_graph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("json: ") + e.what(), e.byte);
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
    throw ParseError("json: expected object with integer field \"n\"");
  const int n = doc["n"].get<int>();
  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw ParseError("json: \"edges\" must be an array");
    for (const auto& pair : doc["edges"]) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer())
        throw ParseError("json: each edge must be a pair of integers");
      edges.push_back({pair[0].get<int>(), pair[1].get<int>()});
    }
  }
  try {
    return Graph(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("json: ") + e.what());
  }
}

std::string graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return nlohmann::json{{"n", g.order()}, {"edges", edges}}.dump();
}

GraphFormat detect_graph_format(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty input");
  if (text.front() == '{') return GraphFormat::Json;
  if (text.front() == '#') return GraphFormat::EdgeList;  // '#' is outside the graph6 alphabet
  std::string_view first = text.substr(0, text.find('\n'));
  int integers = 0;
  bool digits_only = true;
  bool in_number = false;
  for (char c : first) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!in_number) ++integers;
      in_number = true;
    } else {
      in_number = false;
      if (!std::isspace(static_cast<unsigned char>(c)) && c != ',') digits_only = false;
    }
  }
  if (digits_only && integers == 2) return GraphFormat::EdgeList;
  return GraphFormat::Graph6;
}

Graph parse_graph(std::string_view text) { return parse_graph(text, detect_graph_format(text)); }

Graph parse_graph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::Json:
      return parse_graph_json(text);
    case GraphFormat::EdgeList:
      return parse_edge_list(text);
    case GraphFormat::Graph6:
      break;
  }
  return parse_graph6(trim(text));
}

}  // namespace koszul
