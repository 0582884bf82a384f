#include "sperf/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "sperf/error.hpp"

namespace sperf::oracle {

namespace {

bool has(Subset s, int v) { return (s >> v) & 1U; }

int popcount(Subset s) { return std::popcount(s); }

Subset full(int n) { return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1; }

void require_order(const Graph& g, int limit) {
  if (g.order() > limit) {
    throw Error(Errc::OrderTooLarge, "oracle limited to order " + std::to_string(limit));
  }
}

// Induced subgraph built by hand from pairwise adjacency queries.
Graph restrict_to(const Graph& g, Subset s) {
  std::vector<int> keep;
  for (int v = 0; v < g.order(); ++v)
    if (has(s, v)) keep.push_back(v);
  GraphBuilder b(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j])) b.add_edge(static_cast<int>(i), static_cast<int>(j));
  return b.build();
}

bool connected(const Graph& g, Subset s) {
  if (s == 0) return true;
  int start = std::countr_zero(s);
  Subset seen = Subset{1} << start;
  std::vector<int> stack{start};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < g.order(); ++w) {
      if (has(s, w) && !has(seen, w) && g.adjacent(v, w)) {
        seen |= Subset{1} << w;
        stack.push_back(w);
      }
    }
  }
  return seen == s;
}

}  // namespace

bool is_clique(const Graph& g, Subset s) {
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (has(s, u) && has(s, v) && !g.adjacent(u, v)) return false;
  return true;
}

bool is_stable(const Graph& g, Subset s) {
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (has(s, u) && has(s, v) && g.adjacent(u, v)) return false;
  return true;
}

std::vector<Subset> maximal_cliques(const Graph& g) {
  require_order(g, kMaxSssOrder);
  const int n = g.order();
  std::vector<Subset> cliques;
  for (Subset s = 1; s <= full(n) && n > 0; ++s) {
    if (is_clique(g, s)) cliques.push_back(s);
    if (s == full(n)) break;
  }
  std::set<Subset> clique_set(cliques.begin(), cliques.end());
  std::vector<Subset> out;
  for (Subset c : cliques) {
    bool contained = false;
    for (int v = 0; v < n && !contained; ++v) {
      if (!has(c, v) && clique_set.count(c | (Subset{1} << v))) contained = true;
    }
    if (!contained) out.push_back(c);
  }
  return out;
}

bool is_strong_stable_set(const Graph& g, Subset s) {
  if (!is_stable(g, s)) return false;
  for (Subset c : maximal_cliques(g))
    if ((c & s) == 0) return false;
  return true;
}

std::vector<Subset> all_strong_stable_sets(const Graph& g) {
  require_order(g, kMaxSssOrder);
  const int n = g.order();
  const auto cliques = maximal_cliques(g);
  std::vector<Subset> out;
  for (Subset s = 0;; ++s) {
    if (is_stable(g, s) &&
        std::all_of(cliques.begin(), cliques.end(), [&](Subset c) { return (c & s) != 0; }))
      out.push_back(s);
    if (s == full(n)) break;
  }
  return out;
}

bool has_strong_stable_set(const Graph& g) { return !all_strong_stable_sets(g).empty(); }

bool is_strongly_perfect(const Graph& g) {
  require_order(g, kMaxSpOrder);
  const int n = g.order();
  for (Subset s = 0;; ++s) {
    if (!has_strong_stable_set(restrict_to(g, s))) return false;
    if (s == full(n)) break;
  }
  return true;
}

bool is_minimal_non_strongly_perfect(const Graph& g) {
  require_order(g, kMaxSpOrder);
  if (is_strongly_perfect(g)) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (!is_strongly_perfect(restrict_to(g, full(g.order()) & ~(Subset{1} << v)))) return false;
  }
  return true;
}

Subset simplicial_vertices(const Graph& g) {
  Subset out = 0;
  for (int v = 0; v < g.order(); ++v) {
    bool ok = true;
    for (int a = 0; a < g.order() && ok; ++a)
      for (int b = a + 1; b < g.order() && ok; ++b)
        if (g.adjacent(v, a) && g.adjacent(v, b) && !g.adjacent(a, b)) ok = false;
    if (ok) out |= Subset{1} << v;
  }
  return out;
}

bool has_clique_cutset(const Graph& g) {
  require_order(g, kMaxSssOrder);
  const int n = g.order();
  for (Subset k = 0;; ++k) {
    if (is_clique(g, k)) {
      Subset rest = full(n) & ~k;
      if (rest != 0 && !connected(g, rest)) return true;
    }
    if (k == full(n)) break;
  }
  return false;
}

bool induces_cycle(const Graph& g, Subset s) {
  if (popcount(s) < 3) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (!has(s, v)) continue;
    int deg = 0;
    for (int w = 0; w < g.order(); ++w)
      if (has(s, w) && g.adjacent(v, w)) ++deg;
    if (deg != 2) return false;
  }
  return connected(g, s);
}

std::optional<Subset> find_induced_cycle(const Graph& g, int min_len, bool odd_only) {
  require_order(g, kMaxSssOrder);
  const int n = g.order();
  for (int size = min_len; size <= n; ++size) {
    if (odd_only && size % 2 == 0) continue;
    for (Subset s = 0;; ++s) {
      if (popcount(s) == size && induces_cycle(g, s)) return s;
      if (s == full(n)) break;
    }
  }
  return std::nullopt;
}

std::optional<Subset> find_odd_hole(const Graph& g) { return find_induced_cycle(g, 5, true); }

std::optional<Subset> find_long_antihole(const Graph& g) {
  GraphBuilder b(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return find_induced_cycle(b.build(), 6, false);
}

std::optional<Subset> find_claw(const Graph& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          if (a == b || a == c || a == d) continue;
          if (g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(a, d) && !g.adjacent(b, c) &&
              !g.adjacent(b, d) && !g.adjacent(c, d))
            return (Subset{1} << a) | (Subset{1} << b) | (Subset{1} << c) | (Subset{1} << d);
        }
  return std::nullopt;
}

bool has_induced_embedding(const Graph& pattern, const Graph& host) {
  const int p = pattern.order();
  const int h = host.order();
  if (p > h) return false;
  // Choose an ordered p-subset of host vertices via full permutations of the
  // host; only the first p positions matter.
  std::vector<int> perm(h);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::vector<int>> tried;
  do {
    std::vector<int> prefix(perm.begin(), perm.begin() + p);
    if (!tried.insert(prefix).second) continue;
    bool ok = true;
    for (int i = 0; i < p && ok; ++i)
      for (int j = i + 1; j < p && ok; ++j)
        if (pattern.adjacent(i, j) != host.adjacent(prefix[i], prefix[j])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::string brute_force_certificate(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string bits;
    bits.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
    // perm[i] = original vertex placed at position i
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(perm[i], perm[j]) ? '1' : '0');
    if (best.empty() || bits < best) best = bits;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(n) + ":" + best;
}

long count_classes_by_edge_subsets(int n) {
  if (n > 6) throw Error(Errc::OrderTooLarge, "edge-subset oracle limited to order 6");
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  std::set<std::string> classes;
  const Subset limit = Subset{1} << pairs.size();
  for (Subset e = 0; e < limit; ++e) {
    GraphBuilder b(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (has(e, static_cast<int>(i))) b.add_edge(pairs[i].first, pairs[i].second);
    classes.insert(brute_force_certificate(b.build()));
  }
  return static_cast<long>(classes.size());
}

}  // namespace sperf::oracle
