#include "rotposet/text_format.hpp"

#include <sstream>
#include <vector>

#include "rotposet/errors.hpp"

namespace rotposet {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

// Non-empty lines with comments stripped.
std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  for (std::size_t number = 1; std::getline(in, raw); ++number) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back({number, raw});
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& why) {
  throw ParseError("line " + std::to_string(line) + ": " + why);
}

std::size_t read_header(const std::vector<Line>& lines, const std::string& keyword) {
  if (lines.empty()) throw ParseError("empty input, expected '" + keyword + " <n>'");
  std::istringstream in(lines.front().text);
  std::string word;
  long long n = -1;
  std::string extra;
  if (!(in >> word >> n) || word != keyword || n < 0 || (in >> extra)) {
    fail(lines.front().number, "expected '" + keyword + " <n>'");
  }
  return static_cast<std::size_t>(n);
}

// Reads "<x> <sep> <y>" with non-negative integer labels.
std::pair<std::size_t, std::size_t> read_pair(const Line& line, const std::string& sep) {
  std::istringstream in(line.text);
  long long x = -1, y = -1;
  std::string mid, extra;
  if (!(in >> x >> mid >> y) || mid != sep || x < 0 || y < 0 || (in >> extra)) {
    fail(line.number, "expected '<x> " + sep + " <y>'");
  }
  return {static_cast<std::size_t>(x), static_cast<std::size_t>(y)};
}

}  // namespace

Poset parse_poset(std::istream& in) {
  const auto lines = content_lines(in);
  const std::size_t n = read_header(lines, "poset");
  std::vector<Relation> pairs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [x, y] = read_pair(lines[i], "<");
    if (x >= n || y >= n) fail(lines[i].number, "label out of range for poset " + std::to_string(n));
    pairs.emplace_back(x, y);
  }
  return Poset::from_pairs(n, pairs);
}

Poset parse_poset(const std::string& text) {
  std::istringstream in(text);
  return parse_poset(in);
}

std::string format_poset(const Poset& p) {
  std::string out = "poset " + std::to_string(p.size()) + "\n";
  for (auto [x, y] : p.relations()) out += std::to_string(x) + " < " + std::to_string(y) + "\n";
  return out;
}

Graph parse_graph(std::istream& in) {
  const auto lines = content_lines(in);
  const std::size_t n = read_header(lines, "graph");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [u, v] = read_pair(lines[i], "--");
    if (u >= n || v >= n) fail(lines[i].number, "vertex out of range for graph " + std::to_string(n));
    if (u == v) fail(lines[i].number, "self-loop");
    edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

std::string format_graph(const Graph& g) {
  std::string out = "graph " + std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " -- " + std::to_string(v) + "\n";
  return out;
}

}  // namespace rotposet
