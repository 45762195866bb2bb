#ifndef CIST_HYPERCUBE_HPP
#define CIST_HYPERCUBE_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cist/errors.hpp"

namespace cist {

/// Hypercube vertex label. Bit i is coordinate i; the highest bit of the
/// ambient dimension selects the copy in the two-copy decomposition.
using Vertex = std::uint32_t;

inline constexpr int kMaxDim = 28;

/// Undirected edge, always stored with `lo < hi`.
struct Edge {
  Vertex lo = 0;
  Vertex hi = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : lo(a < b ? a : b), hi(a < b ? b : a) {}

  /// Index of the coordinate this edge flips (only meaningful for hypercube edges).
  constexpr int bit() const { return std::countr_zero(lo ^ hi); }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::string to_string(const Edge& e) {
  return std::to_string(e.lo) + "-" + std::to_string(e.hi);
}

enum class Side { X, Y };

/// X holds labels with an even number of ones, Y the odd ones.
constexpr Side partition_side(Vertex v) { return std::popcount(v) % 2 == 0 ? Side::X : Side::Y; }

constexpr bool is_power_of_two(std::uint64_t n) { return n > 0 && (n & (n - 1)) == 0; }

/// Implicit Q_n. Nothing is materialized; adjacency is a bit flip.
class Hypercube {
public:
  explicit Hypercube(int dim) : dim_(dim) {
    if (dim < 1 || dim > kMaxDim)
      throw DomainError("hypercube dimension " + std::to_string(dim) + " outside [1, " +
                        std::to_string(kMaxDim) + "]");
  }

  int dim() const { return dim_; }
  std::uint64_t vertex_count() const { return std::uint64_t{1} << dim_; }
  std::uint64_t edge_count() const { return std::uint64_t(dim_) << (dim_ - 1); }

  bool contains(std::uint64_t v) const { return v < vertex_count(); }

  void require(std::uint64_t v) const {
    if (!contains(v))
      throw DomainError("label " + std::to_string(v) + " out of range for Q_" + std::to_string(dim_));
  }

  /// Neighbors in coordinate order: v^1, v^2, v^4, ...
  std::vector<Vertex> neighbors(Vertex v) const {
    require(v);
    std::vector<Vertex> out;
    out.reserve(dim_);
    for (int i = 0; i < dim_; ++i) out.push_back(v ^ (Vertex{1} << i));
    return out;
  }

  bool is_edge(Vertex u, Vertex v) const {
    require(u);
    require(v);
    return std::popcount(u ^ v) == 1;
  }

  struct Split {
    Vertex copy0_begin, copy0_end; // [begin, end)
    Vertex copy1_begin, copy1_end;
    std::vector<Edge> crossing;
  };

  /// The two Q_{n-1} copies (by the high bit) and the 2^(n-1) edges between them.
  Split split() const {
    if (dim_ < 2) throw DomainError("split needs dim >= 2");
    const Vertex half = Vertex{1} << (dim_ - 1);
    Split s{0, half, half, Vertex(2 * std::uint64_t{half}), {}};
    s.crossing.reserve(half);
    for (Vertex u = 0; u < half; ++u) s.crossing.emplace_back(u, u + half);
    return s;
  }

private:
  int dim_;
};

} // namespace cist

#endif // CIST_HYPERCUBE_HPP
