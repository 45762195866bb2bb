#ifndef CIST_IO_DOT_HPP
#define CIST_IO_DOT_HPP

#include <array>
#include <sstream>
#include <string>

#include "cist/family.hpp"

namespace cist::io {

/// Graphviz rendering of a family: one undirected graph, every tree edge
/// tagged with `tree=<i>` (1-based) and colored by tree. Nodes ascending,
/// then edges by tree and ascending label.
inline std::string render_dot(const CistFamily& f) {
  static constexpr std::array<const char*, 8> palette{"red", "blue", "darkgreen", "orange",
                                                      "purple", "brown", "magenta", "cyan"};
  std::ostringstream out;
  out << "graph cist_q" << f.dim() << " {\n";
  out << "  node [shape=circle];\n";
  for (Vertex v = 0; v < f.tree(0).vertex_count(); ++v) out << "  \"" << v << "\";\n";
  for (std::size_t i = 0; i < f.size(); ++i) {
    const char* color = palette[i % palette.size()];
    for (const auto& e : f.tree(i).edges())
      out << "  \"" << e.lo << "\" -- \"" << e.hi << "\" [tree=" << (i + 1) << ", color=" << color << "];\n";
  }
  out << "}\n";
  return out.str();
}

} // namespace cist::io

#endif // CIST_IO_DOT_HPP
