#ifndef CIST_FAMILY_HPP
#define CIST_FAMILY_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "cist/errors.hpp"
#include "cist/hypercube.hpp"
#include "cist/tree.hpp"

namespace cist {

struct Violation {
  enum class Kind { shared_edge, shared_internal_vertex, shared_path_vertex, shared_path_edge, not_spanning };

  Kind kind;
  std::size_t first_tree = 0;  // 0-based
  std::size_t second_tree = 0; // 0-based, the offending tree for not_spanning
  std::optional<Edge> edge = {};
  std::optional<Vertex> vertex = {};
  std::optional<std::pair<Vertex, Vertex>> pair = {}; // endpoints, for the path kinds

  std::string describe() const;

  friend bool operator==(const Violation&, const Violation&) = default;
};

inline const char* to_string(Violation::Kind kind) {
  switch (kind) {
  case Violation::Kind::shared_edge: return "shared-edge";
  case Violation::Kind::shared_internal_vertex: return "shared-internal-vertex";
  case Violation::Kind::shared_path_vertex: return "shared-path-vertex";
  case Violation::Kind::shared_path_edge: return "shared-path-edge";
  case Violation::Kind::not_spanning: return "not-spanning";
  }
  return "unknown";
}

inline std::string Violation::describe() const {
  std::string s = std::string("kind=") + to_string(kind) + " trees=" + std::to_string(first_tree + 1) + "," +
                  std::to_string(second_tree + 1);
  if (pair) s += " pair=" + std::to_string(pair->first) + "," + std::to_string(pair->second);
  if (edge) s += " edge=" + to_string(*edge);
  if (vertex) s += " vertex=" + std::to_string(*vertex);
  return s;
}

/// Accepted when `violation` is empty.
struct Verdict {
  std::optional<Violation> violation;

  bool accepted() const { return !violation.has_value(); }
};

/// k spanning trees of one hypercube plus what is known about them.
class CistFamily {
public:
  enum class Status { unchecked, accepted, rejected };

  explicit CistFamily(std::vector<SpanningTree> trees, std::vector<std::vector<Vertex>> join_history = {})
      : trees_(std::move(trees)), joins_(std::move(join_history)) {
    if (trees_.empty()) throw DomainError("a family needs at least one tree");
    if (joins_.empty()) joins_.resize(trees_.size());
    if (joins_.size() != trees_.size()) throw DomainError("join history size does not match tree count");
  }

  int dim() const { return trees_.front().dim(); }
  std::size_t size() const { return trees_.size(); }
  const SpanningTree& tree(std::size_t i) const { return trees_.at(i); }
  std::span<const SpanningTree> trees() const { return trees_; }

  /// Join vertices (copy-0 side) used by each lift step, oldest first.
  const std::vector<Vertex>& join_history(std::size_t i) const { return joins_.at(i); }
  const std::vector<std::vector<Vertex>>& join_histories() const { return joins_; }

  Status status() const { return status_; }
  const std::optional<Violation>& witness() const { return witness_; }

  /// Runs the edge-disjoint / single-internal criterion and records the result.
  const Verdict& certify();

private:
  std::vector<SpanningTree> trees_;
  std::vector<std::vector<Vertex>> joins_;
  Status status_ = Status::unchecked;
  std::optional<Violation> witness_;
  Verdict verdict_;
};

namespace detail {

inline std::optional<Violation> dimension_mismatch(const CistFamily& f) {
  for (std::size_t i = 1; i < f.size(); ++i)
    if (f.tree(i).dim() != f.dim()) return Violation{Violation::Kind::not_spanning, 0, i};
  return std::nullopt;
}

inline void require_pairs(const CistFamily& f) {
  if (f.size() < 2) throw DomainError("verification needs at least two trees");
}

} // namespace detail

/// Edge-disjoint spanning trees with every vertex internal in at most one
/// tree. Linear in the total number of edges.
///
/// Scan order: dimension agreement, then trees in index order with edges
/// ascending (shared edges), then vertices ascending (shared internal vertices).
inline Verdict verify_criterion(const CistFamily& f) {
  detail::require_pairs(f);
  if (auto v = detail::dimension_mismatch(f)) return {v};

  // used[lo] has bit b set once edge <lo, lo ^ 2^b> has been claimed.
  std::vector<std::uint32_t> used(f.tree(0).vertex_count(), 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (const auto& e : f.tree(i).edges()) {
      const std::uint32_t bit = std::uint32_t{1} << e.bit();
      if (used[e.lo] & bit) {
        std::size_t j = 0;
        while (!f.tree(j).has_edge(e.lo, e.hi)) ++j;
        return {Violation{Violation::Kind::shared_edge, j, i, e}};
      }
      used[e.lo] |= bit;
    }
  }

  const auto n = static_cast<Vertex>(f.tree(0).vertex_count());
  for (Vertex v = 0; v < n; ++v) {
    std::optional<std::size_t> owner;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (!f.tree(i).is_internal(v)) continue;
      if (owner) return {Violation{Violation::Kind::shared_internal_vertex, *owner, i, std::nullopt, v}};
      owner = i;
    }
  }
  return {};
}

inline constexpr int kDefinitionMaxDim = 10;

/// The definition itself: for every vertex pair and every two trees, the
/// connecting paths meet only at the endpoints and share no edge.
/// Θ(4^dim · k) path extractions, hence refused above dim 10.
///
/// Scan order: pairs (x, y) with x < y ascending, then trees in index order,
/// then position along the later tree's path. Work is split over x across
/// `threads` workers (0 = hardware concurrency); the reported witness is the
/// first in scan order regardless of scheduling.
inline Verdict verify_definition(const CistFamily& f, unsigned threads = 0) {
  detail::require_pairs(f);
  if (auto v = detail::dimension_mismatch(f)) return {v};
  if (f.dim() > kDefinitionMaxDim)
    throw CostGuard("exhaustive definition check refused for dim " + std::to_string(f.dim()) + " > " +
                    std::to_string(kDefinitionMaxDim));

  const auto n = static_cast<Vertex>(f.tree(0).vertex_count());
  const auto k = f.size();

  // Checks one pair; `stamp`/`owner` are per-worker scratch indexed by vertex.
  auto check_pair = [&](Vertex x, Vertex y, std::uint64_t pair_id, std::vector<std::uint64_t>& stamp,
                        std::vector<std::uint8_t>& owner) -> std::optional<Violation> {
    std::optional<std::size_t> direct; // a tree whose x..y path is the single edge
    for (std::size_t i = 0; i < k; ++i) {
      const auto p = f.tree(i).path(x, y);
      for (std::size_t pos = 1; pos + 1 < p.size(); ++pos) {
        const Vertex w = p[pos];
        if (stamp[w] == pair_id)
          return Violation{Violation::Kind::shared_path_vertex, owner[w], i, std::nullopt, w, std::pair{x, y}};
        stamp[w] = pair_id;
        owner[w] = static_cast<std::uint8_t>(i);
      }
      // With disjoint interiors the only edge two paths can share is <x, y> itself.
      if (p.size() == 2) {
        if (direct)
          return Violation{Violation::Kind::shared_path_edge, *direct, i, Edge(x, y), std::nullopt, std::pair{x, y}};
        direct = i;
      }
    }
    return std::nullopt;
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, n);

  std::atomic<Vertex> next_x{0};
  std::atomic<Vertex> stop_after{n}; // no need to look at x beyond a known violation
  std::mutex found_mutex;
  std::optional<Violation> best;

  auto worker = [&] {
    std::vector<std::uint64_t> stamp(n, 0);
    std::vector<std::uint8_t> owner(n, 0);
    std::uint64_t pair_id = 0;
    for (Vertex x = next_x++; x < n && x <= stop_after.load(); x = next_x++) {
      for (Vertex y = x + 1; y < n; ++y) {
        if (auto v = check_pair(x, y, ++pair_id, stamp, owner)) {
          std::lock_guard lock(found_mutex);
          if (!best || v->pair < best->pair) best = v;
          Vertex cur = stop_after.load();
          while (x < cur && !stop_after.compare_exchange_weak(cur, x)) {}
          break;
        }
      }
    }
  };

  if (k > 255) throw DomainError("too many trees for the definition check");
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return {best};
}

/// Re-runs the test a witness claims to have failed.
inline bool recheck(const CistFamily& f, const Violation& v) {
  if (v.first_tree >= f.size() || v.second_tree >= f.size()) return false;
  const auto& a = f.tree(v.first_tree);
  const auto& b = f.tree(v.second_tree);
  auto interior = [](const std::vector<Vertex>& p, Vertex w) { return std::find(p.begin() + 1, p.end() - 1, w) != p.end() - 1; };
  auto on_path = [](const std::vector<Vertex>& p, const Edge& e) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (Edge(p[i], p[i + 1]) == e) return true;
    return false;
  };
  switch (v.kind) {
  case Violation::Kind::not_spanning: return a.dim() != b.dim();
  case Violation::Kind::shared_edge:
    return v.edge && v.first_tree != v.second_tree && a.has_edge(v.edge->lo, v.edge->hi) && b.has_edge(v.edge->lo, v.edge->hi);
  case Violation::Kind::shared_internal_vertex:
    return v.vertex && v.first_tree != v.second_tree && a.is_internal(*v.vertex) && b.is_internal(*v.vertex);
  case Violation::Kind::shared_path_vertex: {
    if (!v.vertex || !v.pair) return false;
    const auto pa = a.path(v.pair->first, v.pair->second);
    const auto pb = b.path(v.pair->first, v.pair->second);
    return interior(pa, *v.vertex) && interior(pb, *v.vertex);
  }
  case Violation::Kind::shared_path_edge: {
    if (!v.edge || !v.pair) return false;
    return on_path(a.path(v.pair->first, v.pair->second), *v.edge) && on_path(b.path(v.pair->first, v.pair->second), *v.edge);
  }
  }
  return false;
}

inline const Verdict& CistFamily::certify() {
  verdict_ = verify_criterion(*this);
  status_ = verdict_.accepted() ? Status::accepted : Status::rejected;
  witness_ = verdict_.violation;
  return verdict_;
}

struct TreeStats {
  std::uint32_t diameter = 0;
  std::size_t internal_count = 0;
  std::vector<Vertex> center;
};

inline std::vector<TreeStats> family_stats(const CistFamily& f) {
  std::vector<TreeStats> out;
  for (const auto& t : f.trees()) out.push_back({t.diameter(), t.internal_vertices().size(), t.center()});
  return out;
}

} // namespace cist

#endif // CIST_FAMILY_HPP
