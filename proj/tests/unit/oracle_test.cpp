#include <gtest/gtest.h>

#include "sperf/error.hpp"
#include "sperf/families.hpp"
#include "sperf/oracle.hpp"
#include "test_graphs.hpp"

namespace sperf {
namespace {

using oracle::Subset;

TEST(Oracle, StrongStableSetsOfSmallGraphs) {
  EXPECT_EQ(oracle::all_strong_stable_sets(make_cycle(4)), (std::vector<Subset>{0b0101, 0b1010}));
  EXPECT_TRUE(oracle::all_strong_stable_sets(make_cycle(5)).empty());
  EXPECT_EQ(oracle::all_strong_stable_sets(make_complete(1)), (std::vector<Subset>{0b1}));
  EXPECT_EQ(oracle::all_strong_stable_sets(make_empty(0)), (std::vector<Subset>{0}));
}

TEST(Oracle, StrongPerfection) {
  EXPECT_TRUE(oracle::is_strongly_perfect(make_cycle(6)));
  EXPECT_FALSE(oracle::is_strongly_perfect(make_cycle(5)));
  EXPECT_FALSE(oracle::is_strongly_perfect(testing::prism()));
  EXPECT_TRUE(oracle::is_strongly_perfect(make_empty(0)));
  EXPECT_TRUE(oracle::is_strongly_perfect(make_complete(4)));
}

TEST(Oracle, OrderLimits) {
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InvalidQuery;
  };
  EXPECT_EQ(code([] { oracle::all_strong_stable_sets(make_empty(15)); }), Errc::OrderTooLarge);
  EXPECT_EQ(code([] { oracle::is_strongly_perfect(make_empty(11)); }), Errc::OrderTooLarge);
  EXPECT_NO_THROW(oracle::all_strong_stable_sets(make_empty(14)));
  EXPECT_NO_THROW(oracle::is_strongly_perfect(make_path(10)));
}

TEST(Oracle, MaximalCliquesOfLarva) {
  // Minted with networkx: {0,1,4}, {0,3}, {1,2}, {2,3} with head 4.
  const Graph larva = make_family(smallest_spec(Family::Larva));
  auto cl = oracle::maximal_cliques(larva);
  std::sort(cl.begin(), cl.end());
  EXPECT_EQ(cl, (std::vector<Subset>{0b00110, 0b01001, 0b01100, 0b10011}));
}

TEST(Oracle, MinimalNonStrongPerfection) {
  EXPECT_TRUE(oracle::is_minimal_non_strongly_perfect(make_cycle(5)));
  EXPECT_TRUE(oracle::is_minimal_non_strongly_perfect(make_cycle(7)));
  EXPECT_TRUE(oracle::is_minimal_non_strongly_perfect(testing::prism()));
  EXPECT_FALSE(oracle::is_minimal_non_strongly_perfect(make_cycle(6)));
}

}  // namespace
}  // namespace sperf
