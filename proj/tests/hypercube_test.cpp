#include <algorithm>
#include <bit>
#include <set>

#include <gtest/gtest.h>

#include "cist/hypercube.hpp"

namespace cist {
namespace {

std::set<Vertex> as_set(const std::vector<Vertex>& v) { return {v.begin(), v.end()}; }

TEST(Hypercube, NeighborsAreBitFlips) {
  const Hypercube q3(3);
  EXPECT_EQ(as_set(q3.neighbors(0)), (std::set<Vertex>{1, 2, 4}));
  EXPECT_EQ(as_set(q3.neighbors(5)), (std::set<Vertex>{4, 7, 1}));
  const auto n21 = Hypercube(7).neighbors(21);
  EXPECT_NE(std::find(n21.begin(), n21.end(), 85u), n21.end());
}

TEST(Hypercube, IsEdge) {
  EXPECT_TRUE(Hypercube(7).is_edge(0, 2));
  EXPECT_FALSE(Hypercube(3).is_edge(0, 3));
  EXPECT_TRUE(Hypercube(7).is_edge(35, 99));
  EXPECT_FALSE(Hypercube(3).is_edge(6, 6));
}

TEST(Hypercube, OutOfRangeLabelsAreDomainErrors) {
  EXPECT_THROW(Hypercube(3).neighbors(8), DomainError);
  EXPECT_THROW(Hypercube(3).is_edge(0, 8), DomainError);
}

TEST(Hypercube, DimensionCap) {
  EXPECT_THROW(Hypercube(0), DomainError);
  EXPECT_THROW(Hypercube(29), DomainError);
  EXPECT_NO_THROW(Hypercube(28));
  EXPECT_EQ(Hypercube(28).vertex_count(), 1u << 28);
}

TEST(Hypercube, PartitionSide) {
  EXPECT_EQ(partition_side(0), Side::X);
  EXPECT_EQ(partition_side(7), Side::Y);
  // 21 = 0010101, three ones, counted bit by bit.
  int ones = 0;
  for (Vertex v = 21; v; v >>= 1) ones += v & 1;
  EXPECT_EQ(ones, 3);
  EXPECT_EQ(partition_side(21), Side::Y);
}

TEST(Hypercube, Split) {
  const auto s2 = Hypercube(2).split();
  EXPECT_EQ(s2.copy0_begin, 0u);
  EXPECT_EQ(s2.copy0_end, 2u);
  EXPECT_EQ(s2.copy1_begin, 2u);
  EXPECT_EQ(s2.copy1_end, 4u);
  EXPECT_EQ(s2.crossing, (std::vector<Edge>{{0, 2}, {1, 3}}));
  EXPECT_EQ(Hypercube(3).split().crossing.size(), 4u);
  const auto c8 = Hypercube(8).split().crossing;
  EXPECT_NE(std::find(c8.begin(), c8.end(), Edge(21, 149)), c8.end());
  EXPECT_THROW(Hypercube(1).split(), DomainError);
}

TEST(Hypercube, RegularSymmetricAndCounts) {
  for (int dim = 1; dim <= 10; ++dim) {
    const Hypercube q(dim);
    std::uint64_t degree_sum = 0;
    std::uint64_t x_count = 0;
    for (Vertex v = 0; v < q.vertex_count(); ++v) {
      const auto nv = q.neighbors(v);
      ASSERT_EQ(nv.size(), static_cast<std::size_t>(dim));
      degree_sum += nv.size();
      for (const Vertex u : nv) {
        const auto nu = q.neighbors(u);
        ASSERT_NE(std::find(nu.begin(), nu.end(), v), nu.end());
        ASSERT_NE(partition_side(u), partition_side(v));
      }
      x_count += partition_side(v) == Side::X;
    }
    EXPECT_EQ(degree_sum / 2, q.edge_count());
    EXPECT_EQ(x_count, q.vertex_count() / 2);
  }
}

TEST(Hypercube, SplitThenMergeGivesFullEdgeSet) {
  for (int dim = 2; dim <= 6; ++dim) {
    const Hypercube q(dim);
    const Hypercube sub(dim - 1);
    const auto s = q.split();
    std::set<Edge> merged(s.crossing.begin(), s.crossing.end());
    for (Vertex v = 0; v < sub.vertex_count(); ++v)
      for (const Vertex w : sub.neighbors(v)) {
        merged.emplace(v, w);
        merged.emplace(v + s.copy1_begin, w + s.copy1_begin);
      }
    std::set<Edge> full;
    for (Vertex v = 0; v < q.vertex_count(); ++v)
      for (const Vertex w : q.neighbors(v)) full.emplace(v, w);
    EXPECT_EQ(merged, full) << "dim " << dim;
  }
}

} // namespace
} // namespace cist
