#ifndef CIST_IO_EDGE_LIST_HPP
#define CIST_IO_EDGE_LIST_HPP

// Edge-list text format:
//
//   dim N
//   u v
//   u v
//   ...
//
// Blank lines and lines starting with '#' are skipped anywhere. Labels are
// decimal. Every pair must be a hypercube edge of Q_N and appear once.

#include <bit>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cist/errors.hpp"
#include "cist/hypercube.hpp"
#include "cist/tree.hpp"

namespace cist::io {

struct EdgeListDocument {
  int dim = 0;
  std::vector<LabelPair> edges;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const auto start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

inline std::uint64_t parse_number(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(line_no, "non-numeric token '" + std::string(token) + "'");
  return value;
}

} // namespace detail

inline EdgeListDocument parse_edge_list(std::string_view text) {
  EdgeListDocument doc;
  bool have_header = false;
  std::uint64_t vertex_count = 0;
  std::set<Edge> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto tokens = detail::split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (!have_header) {
      if (tokens.size() != 2 || tokens[0] != "dim") throw ParseError(line_no, "missing 'dim N' header");
      const auto dim = detail::parse_number(tokens[1], line_no);
      if (dim < 1 || dim > kMaxDim) throw ParseError(line_no, "dimension " + std::to_string(dim) + " out of range");
      doc.dim = static_cast<int>(dim);
      vertex_count = std::uint64_t{1} << dim;
      have_header = true;
      continue;
    }

    if (tokens.size() != 2) throw ParseError(line_no, "expected 'u v'");
    const auto u = detail::parse_number(tokens[0], line_no);
    const auto v = detail::parse_number(tokens[1], line_no);
    if (u >= vertex_count || v >= vertex_count)
      throw ParseError(line_no, "label out of range for dim " + std::to_string(doc.dim));
    if (std::popcount(u ^ v) != 1)
      throw ParseError(line_no, "not a hypercube edge: " + std::to_string(u) + " " + std::to_string(v));
    if (!seen.emplace(static_cast<Vertex>(u), static_cast<Vertex>(v)).second)
      throw ParseError(line_no, "duplicate edge: " + std::to_string(u) + " " + std::to_string(v));
    doc.edges.emplace_back(u, v);
  }
  if (!have_header) throw ParseError(0, "missing 'dim N' header");
  return doc;
}

/// Canonical rendering: min label first, lines ascending.
inline std::string render_edge_list(const SpanningTree& tree) {
  std::ostringstream out;
  out << "dim " << tree.dim() << '\n';
  for (const auto& e : tree.edges()) out << e.lo << ' ' << e.hi << '\n';
  return out.str();
}

inline SpanningTree tree_from_edge_list(std::string_view text) {
  const auto doc = parse_edge_list(text);
  return SpanningTree::build(doc.dim, doc.edges);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace cist::io

#endif // CIST_IO_EDGE_LIST_HPP
