#ifndef CIST_TREE_HPP
#define CIST_TREE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cist/errors.hpp"
#include "cist/hypercube.hpp"

namespace cist {

/// Unvalidated endpoint pair as it comes from a file or a literal.
using LabelPair = std::pair<std::uint64_t, std::uint64_t>;

struct TreeDefect {
  enum class Kind { wrong_count, label_out_of_range, not_hypercube_edge, duplicate_edge, disconnected };

  Kind kind;
  LabelPair edge{};        // offending edge, when there is one
  std::uint64_t value = 0; // edge count for wrong_count, unreachable vertex for disconnected

  std::string message() const {
    const auto pair = "<" + std::to_string(edge.first) + ", " + std::to_string(edge.second) + ">";
    switch (kind) {
    case Kind::wrong_count: return "wrong edge count " + std::to_string(value);
    case Kind::label_out_of_range: return "label out of range in " + pair;
    case Kind::not_hypercube_edge: return "not a hypercube edge " + pair;
    case Kind::duplicate_edge: return "duplicate edge " + pair;
    case Kind::disconnected: return "disconnected: vertex " + std::to_string(value) + " unreachable from 0";
    }
    return "unknown defect";
  }
};

class InvalidTree : public DomainError {
public:
  explicit InvalidTree(std::vector<TreeDefect> defects)
      : DomainError(describe(defects)), defects_(std::move(defects)) {}

  const std::vector<TreeDefect>& defects() const noexcept { return defects_; }

private:
  static std::string describe(const std::vector<TreeDefect>& defects) {
    std::string s = "invalid spanning tree:";
    for (const auto& d : defects) s += " [" + d.message() + "]";
    return s;
  }

  std::vector<TreeDefect> defects_;
};

struct TreeBuild;

/// A spanning tree of Q_dim. Immutable once built.
///
/// Tree adjacency is kept as one bitmask per vertex (bit i set when the edge
/// flipping coordinate i belongs to the tree). The tree is rooted at vertex 0
/// for path queries, and the endpoints of one longest path are cached from a
/// double BFS sweep, which makes eccentricity and center O(depth).
class SpanningTree {
public:
  static constexpr std::uint8_t kNoParent = 0xFF;

  static TreeBuild from_edges(int dim, std::span<const LabelPair> edges);

  /// from_edges, throwing InvalidTree on any defect.
  static SpanningTree build(int dim, std::span<const LabelPair> edges);

  /// Builds from per-vertex neighbor masks; throws InvalidTree unless the
  /// masks describe a symmetric, connected spanning tree.
  static SpanningTree from_neighbor_masks(int dim, std::vector<std::uint32_t> masks);

  int dim() const { return dim_; }
  std::uint64_t vertex_count() const { return masks_.size(); }
  std::uint64_t edge_count() const { return masks_.size() - 1; }

  std::uint32_t neighbor_mask(Vertex v) const { return masks_[checked(v)]; }
  std::span<const std::uint32_t> neighbor_masks() const { return masks_; }

  int degree(Vertex v) const { return std::popcount(masks_[checked(v)]); }
  bool is_internal(Vertex v) const { return degree(v) >= 2; }

  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (auto m = masks_[checked(v)]; m != 0; m &= m - 1) out.push_back(v ^ (Vertex{1} << std::countr_zero(m)));
    return out;
  }

  bool has_edge(Vertex u, Vertex v) const {
    checked(u);
    checked(v);
    const auto x = u ^ v;
    return std::popcount(x) == 1 && (masks_[u] & x) != 0;
  }

  /// All edges, normalized and ascending.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (Vertex v = 0; v < masks_.size(); ++v)
      for (auto m = masks_[v]; m != 0; m &= m - 1) {
        const Vertex w = v ^ (Vertex{1} << std::countr_zero(m));
        if (v < w) out.emplace_back(v, w);
      }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Parent under the root-0 orientation; nullopt for the root.
  std::optional<Vertex> parent(Vertex v) const {
    const auto b = parent_bit_[checked(v)];
    if (b == kNoParent) return std::nullopt;
    return v ^ (Vertex{1} << b);
  }

  std::uint32_t depth(Vertex v) const { return depth_[checked(v)]; }

  /// Deepest common ancestor of u and v under the root-0 orientation.
  Vertex meet(Vertex u, Vertex v) const {
    checked(u);
    checked(v);
    while (depth_[u] > depth_[v]) u = up(u);
    while (depth_[v] > depth_[u]) v = up(v);
    while (u != v) {
      u = up(u);
      v = up(v);
    }
    return u;
  }

  std::uint32_t distance(Vertex u, Vertex v) const {
    const auto m = meet(u, v);
    return depth_[u] + depth_[v] - 2 * depth_[m];
  }

  /// The unique u..v path, both endpoints included.
  std::vector<Vertex> path(Vertex u, Vertex v) const {
    checked(u);
    checked(v);
    std::vector<Vertex> head{u};
    std::vector<Vertex> tail{v};
    while (depth_[u] > depth_[v]) head.push_back(u = up(u));
    while (depth_[v] > depth_[u]) tail.push_back(v = up(v));
    while (u != v) {
      head.push_back(u = up(u));
      tail.push_back(v = up(v));
    }
    tail.pop_back(); // meet vertex already in head
    head.insert(head.end(), tail.rbegin(), tail.rend());
    return head;
  }

  /// BFS distances from `source` to every vertex.
  std::vector<std::uint32_t> distances_from(Vertex source) const {
    checked(source);
    std::vector<std::uint32_t> dist(masks_.size(), kUnseen);
    std::vector<Vertex> queue;
    queue.reserve(masks_.size());
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (auto m = masks_[v]; m != 0; m &= m - 1) {
        const Vertex w = v ^ (Vertex{1} << std::countr_zero(m));
        if (dist[w] == kUnseen) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
    return dist;
  }

  std::uint32_t diameter() const { return diameter_; }

  /// Endpoints of the longest path found by the double sweep.
  std::pair<Vertex, Vertex> diametral_pair() const { return {sweep_a_, sweep_b_}; }

  std::uint32_t eccentricity(Vertex v) const {
    return std::max(distance(sweep_a_, v), distance(sweep_b_, v));
  }

  /// Vertices of minimum eccentricity, ascending: the middle one or two
  /// vertices of any longest path.
  std::vector<Vertex> center() const {
    const auto p = path(sweep_a_, sweep_b_);
    const std::size_t d = p.size() - 1;
    std::vector<Vertex> c{p[d / 2]};
    if (d % 2 == 1) c.push_back(p[d / 2 + 1]);
    std::sort(c.begin(), c.end());
    return c;
  }

  std::vector<Vertex> internal_vertices() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < masks_.size(); ++v)
      if (std::popcount(masks_[v]) >= 2) out.push_back(v);
    return out;
  }

  std::vector<Vertex> leaves() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < masks_.size(); ++v)
      if (std::popcount(masks_[v]) == 1) out.push_back(v);
    return out;
  }

  friend bool operator==(const SpanningTree& a, const SpanningTree& b) {
    return a.dim_ == b.dim_ && a.masks_ == b.masks_;
  }

private:
  static constexpr std::uint32_t kUnseen = 0xFFFFFFFFu;

  SpanningTree() = default;

  Vertex checked(Vertex v) const {
    if (v >= masks_.size())
      throw DomainError("label " + std::to_string(v) + " out of range for Q_" + std::to_string(dim_));
    return v;
  }

  Vertex up(Vertex v) const { return v ^ (Vertex{1} << parent_bit_[v]); }

  // Roots at 0 and runs the second sweep. Returns the first unreachable
  // vertex, if any.
  std::optional<Vertex> index();

  int dim_ = 0;
  std::vector<std::uint32_t> masks_;
  std::vector<std::uint8_t> parent_bit_;
  std::vector<std::uint32_t> depth_;
  Vertex sweep_a_ = 0;
  Vertex sweep_b_ = 0;
  std::uint32_t diameter_ = 0;
};

/// Outcome of `SpanningTree::from_edges`: a tree, or every defect found.
struct TreeBuild {
  std::optional<SpanningTree> tree;
  std::vector<TreeDefect> defects;

  bool ok() const { return tree.has_value(); }
  bool has(TreeDefect::Kind k) const {
    return std::any_of(defects.begin(), defects.end(), [k](const TreeDefect& d) { return d.kind == k; });
  }
};

inline SpanningTree SpanningTree::build(int dim, std::span<const LabelPair> edges) {
  auto result = from_edges(dim, edges);
  if (!result.ok()) throw InvalidTree(std::move(result.defects));
  return std::move(*result.tree);
}

inline std::optional<Vertex> SpanningTree::index() {
  const auto n = masks_.size();
  parent_bit_.assign(n, kNoParent);
  depth_.assign(n, kUnseen);
  std::vector<Vertex> queue;
  queue.reserve(n);
  depth_[0] = 0;
  queue.push_back(0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (auto m = masks_[v]; m != 0; m &= m - 1) {
      const int b = std::countr_zero(m);
      const Vertex w = v ^ (Vertex{1} << b);
      if (depth_[w] == kUnseen) {
        depth_[w] = depth_[v] + 1;
        parent_bit_[w] = static_cast<std::uint8_t>(b);
        queue.push_back(w);
      }
    }
  }
  if (queue.size() != n)
    for (Vertex v = 0; v < n; ++v)
      if (depth_[v] == kUnseen) return v;

  // Double sweep: farthest from the root, then farthest from that. Ties go
  // to the smallest label.
  sweep_a_ = static_cast<Vertex>(std::max_element(depth_.begin(), depth_.end()) - depth_.begin());
  const auto from_a = distances_from(sweep_a_);
  sweep_b_ = static_cast<Vertex>(std::max_element(from_a.begin(), from_a.end()) - from_a.begin());
  diameter_ = from_a[sweep_b_];
  return std::nullopt;
}

inline TreeBuild SpanningTree::from_edges(int dim, std::span<const LabelPair> edges) {
  const Hypercube cube(dim);
  TreeBuild result;
  const auto n = cube.vertex_count();
  if (edges.size() != n - 1)
    result.defects.push_back({TreeDefect::Kind::wrong_count, {}, edges.size()});

  SpanningTree t;
  t.dim_ = dim;
  t.masks_.assign(n, 0);
  for (const auto& e : edges) {
    if (!cube.contains(e.first) || !cube.contains(e.second)) {
      result.defects.push_back({TreeDefect::Kind::label_out_of_range, e});
      continue;
    }
    const auto u = static_cast<Vertex>(e.first);
    const auto v = static_cast<Vertex>(e.second);
    if (std::popcount(u ^ v) != 1) {
      result.defects.push_back({TreeDefect::Kind::not_hypercube_edge, e});
      continue;
    }
    if (t.masks_[u] & (u ^ v)) {
      result.defects.push_back({TreeDefect::Kind::duplicate_edge, e});
      continue;
    }
    t.masks_[u] |= u ^ v;
    t.masks_[v] |= u ^ v;
  }
  if (auto lost = t.index())
    result.defects.push_back({TreeDefect::Kind::disconnected, {}, *lost});
  if (result.defects.empty()) result.tree = std::move(t);
  return result;
}

inline SpanningTree SpanningTree::from_neighbor_masks(int dim, std::vector<std::uint32_t> masks) {
  const Hypercube cube(dim);
  if (masks.size() != cube.vertex_count())
    throw DomainError("mask array size does not match Q_" + std::to_string(dim));
  std::vector<TreeDefect> defects;
  std::uint64_t degree_sum = 0;
  const std::uint32_t allowed = dim == 32 ? ~0u : (std::uint32_t{1} << dim) - 1;
  for (Vertex v = 0; v < masks.size(); ++v) {
    degree_sum += std::popcount(masks[v]);
    for (auto m = masks[v]; m != 0; m &= m - 1) {
      const auto bit = std::uint32_t{1} << std::countr_zero(m);
      if ((bit & allowed) == 0) {
        defects.push_back({TreeDefect::Kind::label_out_of_range, {v, std::uint64_t{v} ^ bit}});
      } else if ((masks[v ^ bit] & bit) == 0) {
        defects.push_back({TreeDefect::Kind::not_hypercube_edge, {v, v ^ bit}});
      }
    }
  }
  if (degree_sum != 2 * (masks.size() - 1))
    defects.push_back({TreeDefect::Kind::wrong_count, {}, degree_sum / 2});
  if (!defects.empty()) throw InvalidTree(std::move(defects));

  SpanningTree t;
  t.dim_ = dim;
  t.masks_ = std::move(masks);
  if (auto lost = t.index()) throw InvalidTree({{TreeDefect::Kind::disconnected, {}, *lost}});
  return t;
}

} // namespace cist

#endif // CIST_TREE_HPP
