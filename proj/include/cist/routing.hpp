#ifndef CIST_ROUTING_HPP
#define CIST_ROUTING_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cist/errors.hpp"
#include "cist/family.hpp"

namespace cist {

// Multipath routing over a verified family: tree i carries route i. Routes
// for the same endpoints share nothing but the endpoints, so k - 1 vertex
// faults can never block all of them.

class FaultSet {
public:
  FaultSet() = default;
  FaultSet(std::initializer_list<Vertex> faulty) : faulty_(faulty) {}
  template <class It>
  FaultSet(It first, It last) : faulty_(first, last) {}

  void add(Vertex v) { faulty_.insert(v); }
  bool contains(Vertex v) const { return faulty_.contains(v); }
  std::size_t size() const { return faulty_.size(); }
  const std::set<Vertex>& vertices() const { return faulty_; }

private:
  std::set<Vertex> faulty_;
};

namespace detail {

inline void require_accepted(const CistFamily& f) {
  if (f.status() != CistFamily::Status::accepted) throw Refusal("routing needs a verified family");
}

} // namespace detail

/// One x..y path per tree, in tree order.
inline std::vector<std::vector<Vertex>> disjoint_routes(const CistFamily& f, Vertex x, Vertex y) {
  detail::require_accepted(f);
  if (x == y) throw DomainError("degenerate route: source equals destination");
  std::vector<std::vector<Vertex>> routes;
  for (const auto& t : f.trees()) routes.push_back(t.path(x, y));
  return routes;
}

struct RouteOutcome {
  std::optional<std::size_t> tree; // 0-based index of the tree used
  std::vector<Vertex> path;
  std::vector<std::optional<Vertex>> blocked_by; // first faulty interior vertex per tree tried

  bool reachable() const { return tree.has_value(); }
};

/// First tree (in index order) whose x..y path has no faulty interior vertex.
inline RouteOutcome fault_route(const CistFamily& f, Vertex x, Vertex y, const FaultSet& faults) {
  detail::require_accepted(f);
  const Hypercube cube(f.dim());
  cube.require(x);
  cube.require(y);
  for (const Vertex v : faults.vertices()) cube.require(v);
  if (faults.contains(x) || faults.contains(y)) throw DomainError("route endpoint is faulty");

  RouteOutcome out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto p = f.tree(i).path(x, y);
    std::optional<Vertex> blocker;
    for (std::size_t pos = 1; pos + 1 < p.size() && !blocker; ++pos)
      if (faults.contains(p[pos])) blocker = p[pos];
    out.blocked_by.push_back(blocker);
    if (!blocker) {
      out.tree = i;
      out.path = std::move(p);
      return out;
    }
  }
  return out;
}

} // namespace cist

#endif // CIST_ROUTING_HPP
