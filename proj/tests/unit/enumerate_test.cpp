#include <gtest/gtest.h>

#include <set>

#include "sperf/canonical.hpp"
#include "sperf/enumerate.hpp"
#include "sperf/error.hpp"
#include "sperf/oracle.hpp"

namespace sperf {
namespace {

// Counts for orders 0..7 minted from the networkx graph atlas; order 8 is the
// standard count of simple graphs on eight vertices.
TEST(Enumerate, ClassCountsByOrder) {
  const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 0; n < static_cast<int>(expected.size()); ++n) {
    EXPECT_EQ(enumerate_nonisomorphic(n).size(), expected[n]) << "order " << n;
  }
}

TEST(Enumerate, OrderEightCount) { EXPECT_EQ(enumerate_nonisomorphic(8).size(), 12346U); }

TEST(Enumerate, MatchesEdgeSubsetOracle) {
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(static_cast<long>(enumerate_nonisomorphic(n).size()),
              oracle::count_classes_by_edge_subsets(n));
  }
}

TEST(Enumerate, RepresentativesAreCanonicalDistinctAndSorted) {
  const auto gs = enumerate_nonisomorphic(6);
  std::vector<CanonicalKey> keys;
  for (const auto& g : gs) {
    const CanonicalKey k = canonical_key(g);
    EXPECT_EQ(canonical_form(g).graph, g);
    keys.push_back(k);
  }
  EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
  EXPECT_EQ(std::set<CanonicalKey>(keys.begin(), keys.end()).size(), keys.size());
}

TEST(Enumerate, RejectsLargeOrders) {
  try {
    enumerate_nonisomorphic(9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::OrderTooLargeForEnumeration);
  }
}

}  // namespace
}  // namespace sperf
