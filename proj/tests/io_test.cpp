#include <random>
#include <set>
#include <string>

#include <gtest/gtest.h>

#include "cist/io/dot.hpp"
#include "cist/io/edge_list.hpp"
#include "cist/io/family_json.hpp"
#include "cist/lift.hpp"
#include "cist/q7.hpp"
#include "oracles.hpp"

namespace cist::io {
namespace {

TEST(EdgeList, ParsesSmallestDocument) {
  const auto doc = parse_edge_list("dim 1\n0 1\n");
  EXPECT_EQ(doc.dim, 1);
  EXPECT_EQ(doc.edges, (std::vector<LabelPair>{{0, 1}}));
}

TEST(EdgeList, ParsesQ7Resource) {
  EXPECT_EQ(parse_edge_list(resources::q7_t1_edges).edges.size(), 127u);
}

TEST(EdgeList, CommentsAndBlankLines) {
  const auto doc = parse_edge_list("# header comment\n\ndim 2\n0 1\n\n# x\n1 3\r\n0 2\n");
  EXPECT_EQ(doc.edges.size(), 3u);
}

void expect_error_on_line(std::string_view text, std::size_t line, const std::string& fragment) {
  try {
    parse_edge_list(text);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line);
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

TEST(EdgeList, Errors) {
  expect_error_on_line("dim 2\n0 3\n", 2, "not a hypercube edge");
  expect_error_on_line("0 1\n", 1, "missing 'dim N' header");
  expect_error_on_line("", 0, "missing 'dim N' header");
  expect_error_on_line("dim 2\n0 x\n", 2, "non-numeric");
  expect_error_on_line("dim 2\n0 1\n1 0\n", 3, "duplicate edge");
  expect_error_on_line("dim 2\n0 4\n", 2, "out of range");
  expect_error_on_line("dim 2\n0 1 2\n", 2, "expected 'u v'");
  expect_error_on_line("dim 40\n", 1, "out of range");
}

TEST(EdgeList, RenderIsCanonical) {
  const auto t = SpanningTree::build(2, std::vector<LabelPair>{{3, 1}, {2, 0}, {1, 0}});
  EXPECT_EQ(render_edge_list(t), "dim 2\n0 1\n0 2\n1 3\n");
}

TEST(EdgeList, RoundTripOnQ7AndLifts) {
  auto f = q7_family();
  for (int n = 7; n <= 12; ++n) {
    if (n > 7) f = lift_once(f);
    for (const auto& t : f.trees()) ASSERT_EQ(tree_from_edge_list(render_edge_list(t)), t);
  }
}

TEST(EdgeList, RoundTripOnRandomTrees) {
  std::mt19937_64 rng(8);
  for (int dim = 1; dim <= 9; ++dim) {
    const auto t = SpanningTree::build(dim, oracle::random_spanning_tree(dim, rng));
    ASSERT_EQ(tree_from_edge_list(render_edge_list(t)), t);
  }
}

TEST(Dot, Q7HasTaggedEdges) {
  const auto dot = render_dot(q7_family());
  EXPECT_NE(dot.find("\"0\" -- \"2\" [tree=1"), std::string::npos);
  EXPECT_EQ(dot, render_dot(q7_family()));
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = s.find(needle); at != std::string::npos; at = s.find(needle, at + 1)) ++n;
  return n;
}

TEST(Dot, SingleEdgeFamily) {
  const auto dot = render_dot(CistFamily({SpanningTree::build(1, std::vector<LabelPair>{{0, 1}})}));
  EXPECT_EQ(count(dot, " -- "), 1u);
  EXPECT_EQ(count(dot, ";\n") - count(dot, " -- ") - 1, 2u); // node lines, minus the node default line
}

TEST(Dot, LiftedQ8Counts) {
  const auto dot = render_dot(lift_once(q7_family()));
  EXPECT_EQ(count(dot, " -- "), 3u * 255u);
  std::set<std::string> names;
  for (Vertex v = 0; v < 256; ++v)
    if (dot.find("  \"" + std::to_string(v) + "\";\n") != std::string::npos) names.insert(std::to_string(v));
  EXPECT_EQ(names.size(), 256u);
}

TEST(FamilyJson, RoundTripQ7) {
  const auto f = q7_family();
  const auto parsed = parse_family_json(render_family_json(f));
  EXPECT_TRUE(parsed.warnings.empty());
  ASSERT_EQ(parsed.family.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(parsed.family.tree(i).edges(), f.tree(i).edges());
  EXPECT_EQ(parsed.family.status(), CistFamily::Status::accepted);
}

TEST(FamilyJson, RoundTripLiftsUpToQ12) {
  auto f = q7_family();
  for (int n = 8; n <= 12; ++n) {
    f = lift_once(f);
    const auto parsed = parse_family_json(render_family_json(f));
    EXPECT_TRUE(parsed.warnings.empty());
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_EQ(parsed.family.tree(i), f.tree(i));
      EXPECT_EQ(parsed.family.join_history(i), f.join_history(i));
    }
  }
}

TEST(FamilyJson, JoinHistoryAfterTwoLifts) {
  const auto f9 = lift_to(q7_family(), 9);
  const auto doc = family_to_json(f9);
  for (const auto& tree : doc["trees"]) EXPECT_EQ(tree["join_history"].size(), 2u);
}

TEST(FamilyJson, StaleMetadataWarns) {
  auto doc = family_to_json(q7_family());
  doc["trees"][0]["diameter"] = 14;
  const auto parsed = parse_family_json(doc.dump());
  ASSERT_EQ(parsed.warnings.size(), 1u);
  EXPECT_NE(parsed.warnings[0].find("/trees/0/diameter: stored 14 but recomputed 15"), std::string::npos);
}

TEST(FamilyJson, WrongVerifiedFlagWarns) {
  auto doc = family_to_json(q7_family());
  doc["verified"] = false;
  const auto parsed = parse_family_json(doc.dump());
  ASSERT_EQ(parsed.warnings.size(), 1u);
  EXPECT_EQ(parsed.family.status(), CistFamily::Status::accepted);
}

TEST(FamilyJson, StructuralErrorsCarryPaths) {
  auto expect_path = [](const std::string& text, const std::string& path) {
    try {
      parse_family_json(text);
      FAIL() << "expected an error for " << text;
    } catch (const FamilyFormatError& e) {
      EXPECT_EQ(e.path(), path) << e.what();
    }
  };
  expect_path("[1, 2]", "");
  expect_path("{\"trees\": []}", "/dim");
  expect_path("{\"dim\": 1}", "/trees");
  expect_path("{\"dim\": 1, \"trees\": [{\"edges\": [[0]]}]}", "/trees/0/edges/0");
  expect_path("{\"dim\": 1, \"trees\": [{\"edges\": [[0, -1]]}]}", "/trees/0/edges/0/1");
  expect_path("{\"dim\": 2, \"trees\": [{\"edges\": [[0, 3]]}]}", "/trees/0");
  expect_path("{\"dim\": 1, \"trees\": [{\"edges\": [[0, 1]]}], \"format\": \"other\"}", "/format");
  expect_path("{\"dim\": 1, \"trees\": [{\"edges\": [[0, 1]]}], \"version\": 2}", "/version");
  expect_path("{not json", "");
}

} // namespace
} // namespace cist::io
