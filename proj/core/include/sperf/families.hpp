#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sperf/graph.hpp"

namespace sperf {

enum class Family {
  EvenHole,
  Larva,
  Pupa,
  Butterfly,
  GraphI,
  GraphII,
  GraphIII,
  GraphIV,
  GraphV,
  GraphVI,
  A1,
  A2,
  A3,
  A4,
  A5,
  A6,
  Fig5PP,
  Fig5BB,
  Fig5PB,
  Fig6G1,
  Fig6G2,
  Fig6G3,
  Fig8V1,
  Fig8V2,
  MutatedPupa,
  MutatedButterfly,
};

std::span<const Family> all_families();
std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

enum class Parity { Any, Even, Odd };

struct ParamRule {
  std::string name;
  Parity parity;
  int minimum;
  std::string meaning;
};

std::span<const ParamRule> family_rules(Family f);

struct FamilySpec {
  Family family = Family::EvenHole;
  std::map<std::string, int> params;  // missing entries take the rule minimum

  int param(std::string_view name) const;
  bool operator==(const FamilySpec&) const = default;
};

// Smallest legal parameters for the family.
FamilySpec smallest_spec(Family f);
// "k=6,m=4,t=2" -> FamilySpec. Unknown names raise BadParameter.
FamilySpec parse_family_spec(std::string_view family, std::string_view params);
std::string format_params(const FamilySpec& spec);

// Throws ParityViolation or SizeViolation naming the broken rule.
void validate(const FamilySpec& spec);

struct FamilyInstance {
  Graph graph;
  // Named vertices, e.g. "head", "head1", "head2".
  std::map<std::string, int> marks;
  // Named vertex sequences in construction order, e.g. "c" for a hole c1..ck,
  // "p" for a subdivision path, "a" for a butterfly path a1..ak.
  std::map<std::string, std::vector<int>> sequences;
};

FamilyInstance make_family_instance(const FamilySpec& spec);
Graph make_family(const FamilySpec& spec);

// Every instance of the family with at most max_order vertices, hole lengths
// and path lengths ranging over all legal values. Parameters that only
// rename the same graph are left to the caller to deduplicate.
std::vector<FamilySpec> specs_up_to_order(Family f, int max_order);
int family_order(const FamilySpec& spec);

// A larva inside a host graph. hole[0] and hole[1] are the side vertices
// c1 and c2; the hole is listed in cyclic order.
struct LarvaOccurrence {
  int head = -1;
  std::vector<int> hole;
};

bool is_larva_occurrence(const Graph& g, const LarvaOccurrence& occ);

enum class SideEdge { First, Second };  // head-c1 or head-c2

struct Evolution {
  LarvaOccurrence occurrence;
  SideEdge side = SideEdge::First;
  int subdivisions = 2;
};

// Replaces the chosen side edge by a path through `subdivisions` new vertices
// (even, at least 2) and makes the opposite side vertex complete to them.
Graph evolve(const Graph& g, const LarvaOccurrence& occ, SideEdge side, int subdivisions);

// Applies several evolutions, each validated against g. Evolutions naming
// the same side edge share one subdivision path, and every opposite side
// vertex is made complete to it.
Graph emanate(const Graph& g, std::span<const Evolution> evolutions);

// Mutation chain starting at c1 (hole[0]) with partner c2 (hole[1]). Each
// step names the target by its 1-based position in occ.hole; the current
// mutator gains chords to every cycle vertex from the second one past its
// partner through the target, and the target becomes the next mutator with
// the old mutator as partner.
Graph mutate(const Graph& g, const LarvaOccurrence& occ, std::span<const int> steps);

// Disjoint union of g1 and g2 plus a path of path_len edges from v1 to the
// copy of v2. New internal vertices are appended after the union.
Graph join_heads(const Graph& g1, int v1, const Graph& g2, int v2, int path_len);

// Chord tables for the mutated fixtures, written as symbolic endpoints such
// as "c4" or "c{k-1}" against the instance's sequences.
struct ChordFixture {
  Family family;
  std::string_view provenance;
  std::vector<std::pair<std::string_view, std::string_view>> chords;
};

const ChordFixture* chord_fixture(Family f);
int resolve_symbol(const FamilyInstance& inst, std::string_view symbol);

}  // namespace sperf
