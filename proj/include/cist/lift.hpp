#ifndef CIST_LIFT_HPP
#define CIST_LIFT_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cist/errors.hpp"
#include "cist/family.hpp"
#include "cist/hypercube.hpp"
#include "cist/tree.hpp"

namespace cist {

/// Where each tree's two mirrored copies get joined.
struct LiftPlan {
  int from_dim = 0;
  std::vector<Vertex> join; // copy-0 endpoint per tree

  Edge join_edge(std::size_t i) const { return Edge(join.at(i), join.at(i) + (Vertex{1} << from_dim)); }
};

/// Join vertex of each tree: the smallest-label center vertex. A center
/// vertex of a tree with diameter >= 2 always has degree >= 2.
inline LiftPlan plan_lift(const CistFamily& f) {
  LiftPlan plan{f.dim(), {}};
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& t = f.tree(i);
    if (t.diameter() < 2)
      throw DomainError("tree " + std::to_string(i + 1) + " has diameter " + std::to_string(t.diameter()) +
                        " and no internal center vertex");
    const Vertex u = t.center().front();
    if (!t.is_internal(u)) throw std::logic_error("center vertex " + std::to_string(u) + " is a leaf");
    plan.join.push_back(u);
  }
  return plan;
}

/// Two copies of `t`, the second shifted by 2^dim, plus the edge <u, u + 2^dim>.
inline SpanningTree lift_tree(const SpanningTree& t, Vertex join) {
  const int n = t.dim();
  if (n + 1 > kMaxDim) throw DomainError("lift would exceed the dimension cap " + std::to_string(kMaxDim));
  const auto half = t.vertex_count();
  const auto src = t.neighbor_masks();
  std::vector<std::uint32_t> masks(2 * half);
  std::copy(src.begin(), src.end(), masks.begin());
  std::copy(src.begin(), src.end(), masks.begin() + static_cast<std::ptrdiff_t>(half));
  const std::uint32_t high = std::uint32_t{1} << n;
  masks[join] |= high;
  masks[join + half] |= high;
  return SpanningTree::from_neighbor_masks(n + 1, std::move(masks));
}

/// k CISTs of Q_n to k CISTs of Q_{n+1}. Refuses families that have not
/// been certified.
inline CistFamily lift_once(const CistFamily& f) {
  if (f.status() != CistFamily::Status::accepted) throw Refusal("lift needs a verified family");
  if (f.dim() + 1 > kMaxDim) throw DomainError("lift would exceed the dimension cap " + std::to_string(kMaxDim));

  const auto plan = plan_lift(f);
  std::vector<SpanningTree> trees;
  auto history = f.join_histories();
  for (std::size_t i = 0; i < f.size(); ++i) {
    trees.push_back(lift_tree(f.tree(i), plan.join[i]));
    history[i].push_back(plan.join[i]);
  }
  CistFamily lifted(std::move(trees), std::move(history));
  if (!lifted.certify().accepted())
    throw std::logic_error("lifted family rejected: " + lifted.witness()->describe());
  return lifted;
}

inline CistFamily lift_to(const CistFamily& f, int target) {
  if (target > kMaxDim) throw DomainError("target dimension " + std::to_string(target) + " exceeds cap " + std::to_string(kMaxDim));
  if (target < f.dim()) throw DomainError("target dimension " + std::to_string(target) + " below family dimension");
  if (f.status() != CistFamily::Status::accepted) throw Refusal("lift needs a verified family");
  CistFamily out = f;
  while (out.dim() < target) out = lift_once(out);
  return out;
}

/// Diameter bounds for the three-tree family grown from Q_7, in tree order:
/// 2n+1, 2n+4, 2n+3.
inline std::array<std::uint32_t, 3> diameter_bounds(int n) {
  const auto m = static_cast<std::uint32_t>(n);
  return {2 * m + 1, 2 * m + 4, 2 * m + 3};
}

} // namespace cist

#endif // CIST_LIFT_HPP
