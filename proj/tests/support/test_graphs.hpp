#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "sperf/graph.hpp"

namespace sperf::testing {

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return b.build();
}

// Order drawn uniformly from [lo, hi], density from [0.2, 0.7].
inline Graph random_graph(std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> order(lo, hi);
  std::uniform_real_distribution<double> density(0.2, 0.7);
  const int n = order(rng);
  return random_graph(rng, n, density(rng));
}

inline Graph prism() {
  return build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

inline Graph star(int leaves) {
  GraphBuilder b(leaves + 1);
  for (int i = 1; i <= leaves; ++i) b.add_edge(0, i);
  return b.build();
}

inline std::vector<int> perm_of(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace sperf::testing
