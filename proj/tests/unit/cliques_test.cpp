#include <gtest/gtest.h>

#include <random>

#include "sperf/cliques.hpp"
#include "sperf/enumerate.hpp"
#include "sperf/error.hpp"
#include "sperf/families.hpp"
#include "sperf/oracle.hpp"
#include "test_graphs.hpp"

namespace sperf {
namespace {

TEST(MaximalCliques, Examples) {
  EXPECT_EQ(maximal_cliques(make_cycle(4)),
            (CliqueList{VertexSet{0, 1}, VertexSet{1, 2}, VertexSet{0, 3}, VertexSet{2, 3}}));
  EXPECT_EQ(maximal_cliques(make_complete(4)), (CliqueList{VertexSet::prefix(4)}));
  const Graph larva = make_family(smallest_spec(Family::Larva));
  EXPECT_EQ(maximal_cliques(larva),
            (CliqueList{VertexSet{1, 2}, VertexSet{0, 3}, VertexSet{2, 3}, VertexSet{0, 1, 4}}));
  EXPECT_TRUE(maximal_cliques(make_empty(0)).empty());
  EXPECT_EQ(maximal_cliques(make_empty(2)), (CliqueList{VertexSet{0}, VertexSet{1}}));
}

TEST(MaximalCliques, AgreeWithOracleUpToOrderSeven) {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& g : enumerate_nonisomorphic(n)) {
      std::vector<std::uint64_t> mine;
      for (VertexSet c : maximal_cliques(g)) mine.push_back(c.mask());
      auto ref = oracle::maximal_cliques(g);
      std::sort(ref.begin(), ref.end());
      EXPECT_EQ(mine, ref);
    }
  }
}

TEST(FindSss, Examples) {
  EXPECT_EQ(find_sss(make_cycle(4)), (VertexSet{0, 2}));
  EXPECT_FALSE(find_sss(make_cycle(5)));
  const auto larva = make_family_instance(smallest_spec(Family::Larva));
  EXPECT_FALSE(find_sss(larva.graph, {VertexSet::single(larva.marks.at("head")), {}}));
  EXPECT_EQ(find_sss(make_empty(0)), VertexSet{});
  EXPECT_EQ(find_sss(make_complete(1)), VertexSet{0});
  EXPECT_FALSE(has_sss(testing::prism()));
  EXPECT_TRUE(has_sss(make_cycle(6)));
}

TEST(FindSss, RejectsMalformedQueries) {
  const Graph p = make_path(3);
  EXPECT_THROW(find_sss(p, {VertexSet{0}, VertexSet{0}}), Error);
  EXPECT_THROW(find_sss(p, {VertexSet{0, 1}, {}}), Error);
  EXPECT_THROW(find_sss(p, {VertexSet{5}, {}}), Error);
}

void expect_matches_oracle(const Graph& g) {
  const auto s = find_sss(g);
  ASSERT_EQ(s.has_value(), oracle::has_strong_stable_set(g));
  if (s) EXPECT_TRUE(oracle::is_strong_stable_set(g, s->mask()));
}

TEST(FindSss, AgreesWithOracleOnAllSmallGraphs) {
  for (int n = 0; n <= 7; ++n)
    for (const auto& g : enumerate_nonisomorphic(n)) expect_matches_oracle(g);
}

TEST(FindSss, AgreesWithOracleOnRandomGraphs) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) expect_matches_oracle(testing::random_graph(rng, 6, 12));
}

TEST(FindSss, AgreesWithOracleOnFamilyInstances) {
  for (Family f : all_families())
    for (const auto& spec : specs_up_to_order(f, 12)) expect_matches_oracle(make_family(spec));
}

TEST(FindSss, ConstrainedQueriesRespectConstraints) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 200; ++i) {
    const Graph g = testing::random_graph(rng, 3, 10);
    const int v = std::uniform_int_distribution<int>(0, g.order() - 1)(rng);
    const auto all = oracle::all_strong_stable_sets(g);
    const bool some_with = std::any_of(all.begin(), all.end(), [&](auto s) { return (s >> v) & 1; });
    const bool some_without = std::any_of(all.begin(), all.end(), [&](auto s) { return !((s >> v) & 1); });
    const auto with = find_sss(g, {VertexSet::single(v), {}});
    const auto without = find_sss(g, {{}, VertexSet::single(v)});
    EXPECT_EQ(with.has_value(), some_with);
    EXPECT_EQ(without.has_value(), some_without);
    if (with) EXPECT_TRUE(with->contains(v));
    if (without) EXPECT_FALSE(without->contains(v));
  }
}

TEST(FindSss, BudgetIsEnforced) {
  BudgetMeter meter(Budget{2, std::chrono::minutes(1)});
  try {
    find_sss(make_cycle(21), {}, &meter);
    FAIL() << "expected budget error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BudgetExceeded);
  }
}

TEST(EvenHoleEdges, EverySssHitsEachEdgeOnce) {
  for (int k : {4, 6, 8}) {
    const Graph c = make_cycle(k);
    const auto all = oracle::all_strong_stable_sets(c);
    EXPECT_EQ(all.size(), 2U);  // the two alternating sets
    for (auto s : all) {
      for (int i = 0; i < k; ++i) {
        const int hits = ((s >> i) & 1) + ((s >> ((i + 1) % k)) & 1);
        EXPECT_EQ(hits, 1);
      }
    }
  }
}

TEST(VertexStatus, Heads) {
  const auto larva = make_family_instance(smallest_spec(Family::Larva));
  auto st = vertex_status(larva.graph, larva.marks.at("head"));
  EXPECT_EQ(st.membership, Membership::Unwanted);
  EXPECT_TRUE(st.undesirable);
  EXPECT_FALSE(st.desirable);

  const auto bfly = make_family_instance(smallest_spec(Family::Butterfly));
  st = vertex_status(bfly.graph, bfly.marks.at("head"));
  EXPECT_EQ(st.membership, Membership::Wanted);
  EXPECT_TRUE(st.desirable);
  EXPECT_FALSE(st.undesirable);

  st = vertex_status(make_complete(3), 1);
  EXPECT_EQ(st.membership, Membership::Free);
  EXPECT_FALSE(st.desirable || st.undesirable);
}

TEST(VertexStatus, PathVertices) {
  // P3 has the strong stable sets {1} and {0, 2}, so every vertex is free.
  const Graph p = make_path(3);
  for (int v = 0; v < 3; ++v) EXPECT_EQ(vertex_status(p, v).membership, Membership::Free);
  // An isolated vertex lies in every strong stable set.
  const auto iso = vertex_status(disjoint_union(make_path(2), make_empty(1)), 2);
  EXPECT_EQ(iso.membership, Membership::Wanted);
}

TEST(VertexStatus, NeedsAStrongStableSet) {
  try {
    vertex_status(make_cycle(5), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NoSssInGraph);
  }
}

TEST(VertexStatus, AgreesWithOracleDefinition) {
  std::mt19937_64 rng(33);
  int checked = 0;
  for (int i = 0; i < 300 && checked < 120; ++i) {
    const Graph g = testing::random_graph(rng, 3, 8);
    if (!oracle::has_strong_stable_set(g)) continue;
    ++checked;
    const int v = std::uniform_int_distribution<int>(0, g.order() - 1)(rng);
    auto forced = [](const Graph& h, int x) {
      const auto all = oracle::all_strong_stable_sets(h);
      const bool in = std::all_of(all.begin(), all.end(), [&](auto s) { return (s >> x) & 1; });
      const bool out = std::none_of(all.begin(), all.end(), [&](auto s) { return (s >> x) & 1; });
      return std::pair{in, out};
    };
    const auto [wanted, unwanted] = forced(g, v);
    bool never = true;
    for (int u = 0; u < g.order(); ++u) {
      if (u == v) continue;
      const auto [a, b] = forced(remove_vertex(g, u), u < v ? v - 1 : v);
      never = never && !a && !b;
    }
    const VertexStatus st = vertex_status(g, v);
    EXPECT_EQ(st.membership == Membership::Wanted, wanted);
    EXPECT_EQ(st.membership == Membership::Unwanted, unwanted);
    EXPECT_EQ(st.desirable, wanted && never);
    EXPECT_EQ(st.undesirable, unwanted && never);
  }
  EXPECT_GE(checked, 100);
}

}  // namespace
}  // namespace sperf
