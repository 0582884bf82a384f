#include <gtest/gtest.h>

#include "property_suites.hpp"

namespace sperf {
namespace {

TEST(Properties, CutsetRestriction) {
  const auto r = testing::cutset_restriction_suite(2024, 200, 9);
  EXPECT_EQ(r.cases, 200);
  EXPECT_EQ(r.violations, 0);
  EXPECT_GE(r.nonvacuous, 50);
}

TEST(Properties, SimplicialExtension) {
  const auto r = testing::simplicial_extension_suite(2025, 200, 9);
  EXPECT_EQ(r.cases, 200);
  EXPECT_EQ(r.violations, 0);
}

// Without the hypothesis the restriction can fail: here B has a vertex
// complete to K.
TEST(Properties, RestrictionCanFailWithoutHypothesis) {
  // K = {0, 1}, A = {2} adjacent to 0 only, B = {3} complete to K.
  const Graph g = build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 3}});
  const CutsetWitness w{VertexSet{0, 1}, VertexSet{2}, VertexSet{3}};
  EXPECT_FALSE(restricts_to_side(g, w));
  // {2, 3} is strong in G, but in H = G[{0, 1, 2}] the clique {0, 1} is
  // maximal and missed by {2}.
  EXPECT_TRUE(oracle::is_strong_stable_set(g, 0b1100));
  const Graph h = induced_subgraph(g, VertexSet{0, 1, 2});
  EXPECT_FALSE(oracle::is_strong_stable_set(h, 0b100));
}

}  // namespace
}  // namespace sperf
