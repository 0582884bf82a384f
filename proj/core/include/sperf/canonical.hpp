#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "sperf/graph.hpp"

namespace sperf {

// Isomorphism-exact fingerprint: graph6 of the canonically relabeled graph for
// orders up to 62, raw canonical adjacency rows beyond that.
struct CanonicalKey {
  std::string bytes;

  auto operator<=>(const CanonicalKey&) const = default;
  bool operator==(const CanonicalKey&) const = default;
};

struct CanonicalForm {
  Graph graph;                 // relabeled graph
  std::vector<int> labeling;  // labeling[v] = canonical position of vertex v
  CanonicalKey key;
};

// Individualization-refinement search for the relabeling whose adjacency rows
// are lexicographically least among those consistent with the equitable
// partition tree. Automorphisms discovered at leaves prune sibling branches.
CanonicalForm canonical_form(const Graph& g);
CanonicalKey canonical_key(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace sperf

template <>
struct std::hash<sperf::CanonicalKey> {
  std::size_t operator()(const sperf::CanonicalKey& k) const noexcept {
    return std::hash<std::string>{}(k.bytes);
  }
};
