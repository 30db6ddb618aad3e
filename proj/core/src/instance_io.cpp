#include "rescut/instance_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "rescut/errors.hpp"
#include "rescut/text.hpp"

namespace rescut {
namespace {

// Strips a trailing '\r' so DOS-formatted corpora parse too.
bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t i = line.find_first_not_of(" \t");
    if (i == std::string::npos) continue;  // blank
    if (line[i] == '#') continue;          // comment
    return true;
  }
  return false;
}

}  // namespace

WeightedGraph read_instance(std::istream& in, const std::string& source_name) {
  std::string line;
  std::size_t line_no = 0;

  if (!next_content_line(in, line, line_no))
    throw ParseError(source_name, line_no, "missing 'n m' header");
  auto header = text::split_ws(line);
  std::uint64_t n = 0, m = 0;
  if (header.size() != 2 || !text::parse_u64(header[0], n) || !text::parse_u64(header[1], m))
    throw ParseError(source_name, line_no, "header must be two integers 'n m'");
  if (n == 0) throw ParseError(source_name, line_no, "node count must be positive");

  std::vector<Edge> raw;
  raw.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    if (!next_content_line(in, line, line_no))
      throw ParseError(source_name, line_no,
                       "expected " + std::to_string(m) + " edge lines, got " + std::to_string(i));
    auto tok = text::split_ws(line);
    std::uint64_t u = 0, v = 0;
    double w = 0.0;
    if (tok.size() != 3 || !text::parse_u64(tok[0], u) || !text::parse_u64(tok[1], v) ||
        !text::parse_double(tok[2], w))
      throw ParseError(source_name, line_no, "edge line must be 'u v w'");
    if (u < 1 || u > n || v < 1 || v > n)
      throw ParseError(source_name, line_no, "endpoint out of range [1, " + std::to_string(n) + "]");
    raw.push_back(Edge{static_cast<NodeId>(u - 1), static_cast<NodeId>(v - 1), w});
  }
  if (next_content_line(in, line, line_no))
    throw ParseError(source_name, line_no,
                     "trailing data after the declared " + std::to_string(m) + " edge lines");

  return WeightedGraph::from_raw_edges(static_cast<std::size_t>(n), std::move(raw));
}

WeightedGraph load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return read_instance(in, path);
}

void write_instance(std::ostream& out, const WeightedGraph& g) {
  out << g.node_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges())
    out << e.u + 1 << ' ' << e.v + 1 << ' ' << text::format_double(e.w) << '\n';
}

void save_instance(const std::string& path, const WeightedGraph& g) {
  std::ofstream out(path);
  if (!out) throw ParseError(path, 0, "cannot open file for writing");
  write_instance(out, g);
  out.flush();
  if (!out) throw ParseError(path, 0, "write failed");
}

}  // namespace rescut
