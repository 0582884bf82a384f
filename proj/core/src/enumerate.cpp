#include "sperf/enumerate.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "sperf/canonical.hpp"
#include "sperf/error.hpp"

namespace sperf {

// Classes of order n are grown from classes of order n-1 by adding one vertex
// with every possible neighbourhood, then deduplicated by canonical key. Every
// graph on n vertices arises this way from its own one-vertex deletion.
std::vector<Graph> enumerate_nonisomorphic(int order) {
  if (order < 0 || order > kMaxEnumerationOrder) {
    throw Error(Errc::OrderTooLargeForEnumeration,
                "built-in enumeration supports orders 0..8, got " +
                    std::to_string(order) + "; supply a graph6 stream instead");
  }
  std::vector<CanonicalForm> level{canonical_form(Graph{})};
  for (int n = 1; n <= order; ++n) {
    std::unordered_set<CanonicalKey> seen;
    std::vector<CanonicalForm> next;
    for (const CanonicalForm& base : level) {
      const std::uint64_t limit = std::uint64_t{1} << (n - 1);
      for (std::uint64_t nb = 0; nb < limit; ++nb) {
        GraphBuilder b(base.graph);
        const int v = b.add_vertex();
        for (int w : VertexSet(nb)) b.add_edge(v, w);
        CanonicalForm cf = canonical_form(b.build());
        if (seen.insert(cf.key).second) next.push_back(std::move(cf));
      }
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end(),
            [](const CanonicalForm& a, const CanonicalForm& b) { return a.key < b.key; });
  std::vector<Graph> out;
  out.reserve(level.size());
  for (auto& cf : level) out.push_back(std::move(cf.graph));
  return out;
}

}  // namespace sperf
