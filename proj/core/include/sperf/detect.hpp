#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sperf/families.hpp"
#include "sperf/graph.hpp"

namespace sperf {

// Vertices whose neighborhood is a clique (isolated vertices included).
VertexSet simplicial_vertices(const Graph& g);
VertexSet simplicial_vertices(const Graph& g, VertexSet within);

// A clique K with V(G) = A ∪ B ∪ K, A and B nonempty and anticomplete.
struct CutsetWitness {
  VertexSet K;
  VertexSet A;
  VertexSet B;
  bool operator==(const CutsetWitness&) const = default;
};

// Smallest clique cutset (by size, then mask), with A the component of
// G - K holding the least vertex. The empty clique counts when G is
// disconnected.
std::optional<CutsetWitness> find_clique_cutset(const Graph& g);

// Every (K, A, B) triple where A is a single component of G - K.
std::vector<CutsetWitness> all_cutset_splits(const Graph& g);

// True when (K, A, B) meets the hypothesis under which strong stable sets of
// G restrict to strong stable sets of G[A ∪ K]: either K = {k} with k having
// a neighbor in A, or no vertex of B is complete to K.
bool restricts_to_side(const Graph& g, const CutsetWitness& w);

// Induced cycle of odd length at least 5.
std::optional<VertexSet> find_odd_hole(const Graph& g);
// Induced cycle of length at least min_length, either parity.
std::optional<VertexSet> find_hole(const Graph& g, int min_length = 4);
// Complement of an induced cycle of length at least 6.
std::optional<VertexSet> find_long_antihole(const Graph& g);
// Four vertices inducing K_{1,3}.
std::optional<VertexSet> find_claw(const Graph& g);

struct EmbeddingWitness {
  std::vector<int> map;  // pattern vertex -> host vertex
};

std::optional<EmbeddingWitness> find_induced_embedding(const Graph& pattern, const Graph& host);

enum class ForbiddenKind { OddHole, LongAntihole, FamilyMember };

struct ForbiddenTag {
  ForbiddenKind kind;
  std::optional<FamilySpec> spec;  // set for FamilyMember
  VertexSet witness;               // host vertices carrying the structure

  std::string label() const;
};

// Checks odd holes, antiholes of length >= 6, then Graphs I to VI (VI only
// when include_graph_vi), stopping at the first hit.
std::optional<ForbiddenTag> contains_forbidden(const Graph& g, bool include_graph_vi = true);

}  // namespace sperf
