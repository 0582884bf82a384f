#pragma once

#include <random>

#include "sperf/detect.hpp"
#include "sperf/oracle.hpp"
#include "test_graphs.hpp"

namespace sperf::testing {

struct SuiteResult {
  int cases = 0;
  int violations = 0;
  int nonvacuous = 0;  // cases where the hypothesis graph had an SSS to test
};

// Two random graphs glued along a clique, so clique cutsets are common.
inline Graph glued_graph(std::mt19937_64& rng, int max_order) {
  std::uniform_int_distribution<int> kd(0, 3);
  const int k = kd(rng);
  std::uniform_int_distribution<int> side(1, std::max(1, (max_order - k) / 2));
  const int a = side(rng), b = std::min(side(rng), max_order - k - a);
  const int n = k + a + std::max(1, b);
  std::bernoulli_distribution coin(0.5);
  GraphBuilder g(n);
  // Vertices 0..k-1 form K, then come A and B; A and B stay anticomplete.
  auto part = [&](int v) { return v < k ? 0 : v < k + a ? 1 : 2; };
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const int pu = part(u), pv = part(v);
      if (pu == 0 && pv == 0) {
        g.add_edge(u, v);
      } else if (!(pu == 1 && pv == 2) && coin(rng)) {
        g.add_edge(u, v);
      }
    }
  return relabel(g.build(), perm_of(rng, n));
}

// Strong stable sets restrict to the side G[A ∪ K] of a clique cutset that
// meets the restriction hypothesis.
inline SuiteResult cutset_restriction_suite(std::uint64_t seed, int cases, int max_order) {
  std::mt19937_64 rng(seed);
  SuiteResult r;
  while (r.cases < cases) {
    const Graph g = glued_graph(rng, max_order);
    const auto splits = all_cutset_splits(g);
    std::vector<CutsetWitness> usable;
    for (const auto& w : splits)
      if (restricts_to_side(g, w)) usable.push_back(w);
    if (usable.empty()) continue;
    const auto& w = usable[std::uniform_int_distribution<std::size_t>(0, usable.size() - 1)(rng)];
    ++r.cases;
    const VertexSet side = w.A | w.K;
    const Graph h = induced_subgraph(g, side);
    const auto all = oracle::all_strong_stable_sets(g);
    if (!all.empty()) ++r.nonvacuous;
    for (auto s : all) {
      // Relabel S ∩ V(H) into H's ascending labels.
      oracle::Subset sub = 0;
      int i = 0;
      for (int v : side) {
        if ((s >> v) & 1U) sub |= oracle::Subset{1} << i;
        ++i;
      }
      if (!oracle::is_strong_stable_set(h, sub)) ++r.violations;
    }
  }
  return r;
}

// With v simplicial and S strong in G - v, S or S ∪ {v} is strong in G.
inline SuiteResult simplicial_extension_suite(std::uint64_t seed, int cases, int max_order) {
  std::mt19937_64 rng(seed);
  SuiteResult r;
  while (r.cases < cases) {
    const Graph g = random_graph(rng, 2, max_order);
    const VertexSet simp = simplicial_vertices(g);
    if (simp.empty()) continue;
    const auto pick = simp.to_vector();
    const int v = pick[std::uniform_int_distribution<std::size_t>(0, pick.size() - 1)(rng)];
    const Graph h = remove_vertex(g, v);
    const auto all = oracle::all_strong_stable_sets(h);
    if (all.empty()) continue;
    ++r.cases;
    ++r.nonvacuous;
    for (auto s : all) {
      // Shift labels of G - v back into G.
      const oracle::Subset low = s & ((oracle::Subset{1} << v) - 1);
      const oracle::Subset lifted = low | ((s & ~low) << 1);
      const bool ok = oracle::is_strong_stable_set(g, lifted) ||
                      oracle::is_strong_stable_set(g, lifted | (oracle::Subset{1} << v));
      if (!ok) ++r.violations;
    }
  }
  return r;
}

}  // namespace sperf::testing
