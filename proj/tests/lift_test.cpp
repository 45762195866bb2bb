#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "cist/lift.hpp"
#include "cist/q7.hpp"
#include "oracles.hpp"

namespace cist {
namespace {

TEST(LiftOnce, Q7ToQ8) {
  const auto f8 = lift_once(q7_family());
  EXPECT_EQ(f8.dim(), 8);
  EXPECT_EQ(f8.status(), CistFamily::Status::accepted);
  EXPECT_EQ(f8.tree(0).diameter(), 17u);
  EXPECT_LE(f8.tree(1).diameter(), 20u);
  EXPECT_LE(f8.tree(2).diameter(), 19u);
  for (const auto& t : f8.trees()) EXPECT_EQ(t.edge_count(), 255u);
}

TEST(LiftOnce, JoinAtSmallestCenterVertex) {
  // center(T_1) = {17, 21} by all-pairs BFS; the smallest label is 17.
  const auto ref = oracle::all_pairs(load_q7().trees[0]);
  ASSERT_EQ(ref.center, (std::vector<Vertex>{17, 21}));

  const auto plan = plan_lift(q7_family());
  EXPECT_EQ(plan.join[0], 17u);
  EXPECT_EQ(plan.join_edge(0), Edge(17, 145));

  const auto f8 = lift_once(q7_family());
  EXPECT_TRUE(f8.tree(0).has_edge(17, 145));
  EXPECT_EQ(f8.join_history(0), std::vector<Vertex>{17});
}

TEST(LiftOnce, RefusesUnverifiedFamily) {
  const CistFamily raw(load_q7().trees);
  EXPECT_THROW(lift_once(raw), Refusal);
  CistFamily bad({load_q7().trees[0], load_q7().trees[0]});
  bad.certify();
  EXPECT_THROW(lift_once(bad), Refusal);
}

TEST(LiftOnce, DiameterOneHasNoInternalCenter) {
  const auto edge = SpanningTree::build(1, std::vector<LabelPair>{{0, 1}});
  EXPECT_THROW(plan_lift(CistFamily({edge})), DomainError);
}

TEST(LiftTo, IdentityAtSameDimension) {
  const auto f = q7_family();
  const auto g = lift_to(f, 7);
  ASSERT_EQ(g.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(g.tree(i), f.tree(i));
}

TEST(LiftTo, Q12Bounds) {
  const auto f = lift_to(q7_family(), 12);
  EXPECT_LE(f.tree(0).diameter(), 25u);
  EXPECT_LE(f.tree(1).diameter(), 28u);
  EXPECT_LE(f.tree(2).diameter(), 27u);
  EXPECT_EQ(f.join_history(0).size(), 5u);
}

TEST(LiftTo, Q9FirstTreeDiameter) {
  // d <- 2*ceil(d/2) + 1 from 15: 17, then 19.
  std::uint32_t d = 15;
  for (int step = 0; step < 2; ++step) d = 2 * ((d + 1) / 2) + 1;
  ASSERT_EQ(d, 19u);
  const auto f = lift_to(q7_family(), 9);
  EXPECT_EQ(f.tree(0).diameter(), d);
  EXPECT_EQ(oracle::all_pairs(f.tree(0)).diameter, 19);
}

TEST(LiftTo, Errors) {
  const auto f = q7_family();
  EXPECT_THROW(lift_to(f, 29), DomainError);
  EXPECT_THROW(lift_to(f, 6), DomainError);
}

TEST(LiftProperties, CertifiedAndWithinBoundsThroughQ14) {
  auto f = q7_family();
  for (int n = 8; n <= 14; ++n) {
    f = lift_once(f);
    ASSERT_TRUE(verify_criterion(f).accepted()) << "n " << n;
    const auto bounds = diameter_bounds(n);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_LE(f.tree(i).diameter(), bounds[i]) << "n " << n << " tree " << i;
  }
}

TEST(LiftProperties, MirroringAndSingleCrossingEdge) {
  const auto f7 = q7_family();
  const auto f8 = lift_once(f7);
  const Vertex half = 128;
  for (std::size_t i = 0; i < 3; ++i) {
    for (const auto& e : f7.tree(i).edges()) {
      EXPECT_TRUE(f8.tree(i).has_edge(e.lo, e.hi));
      EXPECT_TRUE(f8.tree(i).has_edge(e.lo + half, e.hi + half));
    }
    const auto edges = f8.tree(i).edges();
    const auto crossing = std::count_if(edges.begin(), edges.end(), [&](const Edge& e) { return e.lo < half && e.hi >= half; });
    EXPECT_EQ(crossing, 1);
    EXPECT_EQ(f8.tree(i).internal_vertices().size(), 2 * f7.tree(i).internal_vertices().size());
  }
}

TEST(LiftProperties, DiameterRecurrenceOnRandomTrees) {
  std::mt19937_64 rng(17);
  for (int dim = 2; dim <= 8; ++dim)
    for (int rep = 0; rep < 10; ++rep) {
      const auto t = SpanningTree::build(dim, oracle::random_spanning_tree(dim, rng));
      if (t.diameter() < 2) continue;
      const auto lifted = lift_tree(t, t.center().front());
      const auto d = t.diameter();
      ASSERT_EQ(lifted.diameter(), 2 * ((d + 1) / 2) + 1);
      ASSERT_EQ(static_cast<std::uint32_t>(oracle::all_pairs(lifted).diameter), lifted.diameter());
    }
}

} // namespace
} // namespace cist
