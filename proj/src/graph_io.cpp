#include "schrom/graph_io.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

namespace schrom {

ParseError::ParseError(std::size_t line, const std::string& message)
    : InputError(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string t; in >> t;) out.push_back(std::move(t));
  return out;
}

std::optional<std::size_t> to_count(const std::string& text) {
  std::size_t value = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

}  // namespace

SignedGraph parse_graph(std::string_view text) {
  std::optional<std::size_t> vertex_count;
  std::vector<SignedEdge> edges;
  std::istringstream in{std::string(text)};
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    const std::vector<std::string> parts = tokens(line.substr(0, line.find('#')));
    if (parts.empty()) continue;
    if (parts[0] == "vertices") {
      if (vertex_count) throw ParseError(line_no, "duplicate vertices line");
      if (parts.size() != 2) throw ParseError(line_no, "expected 'vertices N'");
      vertex_count = to_count(parts[1]);
      if (!vertex_count) throw ParseError(line_no, "bad vertex count '" + parts[1] + "'");
    } else if (parts[0] == "edge") {
      if (!vertex_count) throw ParseError(line_no, "edge before the vertices line");
      if (parts.size() != 4) throw ParseError(line_no, "expected 'edge U V S'");
      const auto u = to_count(parts[1]);
      const auto v = to_count(parts[2]);
      if (!u || !v) throw ParseError(line_no, "bad endpoint");
      if (*u >= *vertex_count || *v >= *vertex_count) {
        throw RangeError(line_no, "endpoint out of range for " + std::to_string(*vertex_count) +
                                      " vertices");
      }
      if (parts[3] != "+" && parts[3] != "-") throw ParseError(line_no, "sign must be + or -");
      edges.push_back({static_cast<VertexId>(*u), static_cast<VertexId>(*v),
                       parts[3] == "+" ? Sign::kPositive : Sign::kNegative});
    } else {
      throw ParseError(line_no, "unknown directive '" + parts[0] + "'");
    }
  }
  if (!vertex_count) throw ParseError(0, "missing vertices line");
  return SignedGraph(*vertex_count, std::move(edges));
}

std::string print_graph(const SignedGraph& g) {
  std::string out = "vertices " + std::to_string(g.vertex_count()) + "\n";
  for (const SignedEdge& e : g.edges()) {
    out += "edge " + std::to_string(e.tail) + " " + std::to_string(e.head) + " " + to_char(e.sign) + "\n";
  }
  return out;
}

}  // namespace schrom
