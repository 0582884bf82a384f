#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sperf/graph.hpp"

// Deliberately naive reference implementations. Nothing here calls into the
// optimized engines: every routine walks raw subsets and queries adjacency
// pair by pair, so agreement with the engines is evidence rather than
// tautology.
namespace sperf::oracle {

inline constexpr int kMaxSssOrder = 14;
inline constexpr int kMaxSpOrder = 10;

using Subset = std::uint64_t;

bool is_clique(const Graph& g, Subset s);
bool is_stable(const Graph& g, Subset s);

// Maximal cliques by filtering all clique subsets for containment in a
// clique one vertex larger. Ascending by mask.
std::vector<Subset> maximal_cliques(const Graph& g);

bool is_strong_stable_set(const Graph& g, Subset s);
// Every strong stable set, ascending by mask. Throws OrderTooLarge above 14.
std::vector<Subset> all_strong_stable_sets(const Graph& g);
bool has_strong_stable_set(const Graph& g);

// Every one of the 2^n induced subgraphs has a strong stable set.
bool is_strongly_perfect(const Graph& g);
bool is_minimal_non_strongly_perfect(const Graph& g);

Subset simplicial_vertices(const Graph& g);
// Some clique K (possibly empty) whose removal leaves >= 2 components.
bool has_clique_cutset(const Graph& g);

// Subset of the given size inducing a cycle.
bool induces_cycle(const Graph& g, Subset s);
std::optional<Subset> find_induced_cycle(const Graph& g, int min_len, bool odd_only);
std::optional<Subset> find_odd_hole(const Graph& g);
std::optional<Subset> find_long_antihole(const Graph& g);
std::optional<Subset> find_claw(const Graph& g);

// Tries every injection pattern -> host.
bool has_induced_embedding(const Graph& pattern, const Graph& host);

// Lexicographically least upper-triangle bit string over all n! relabelings.
std::string brute_force_certificate(const Graph& g);
// Number of isomorphism classes on n vertices via every edge subset and
// brute-force certificates (n <= 6).
long count_classes_by_edge_subsets(int n);

}  // namespace sperf::oracle
