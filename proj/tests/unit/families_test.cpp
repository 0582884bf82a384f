#include <gtest/gtest.h>

#include "sperf/canonical.hpp"
#include "sperf/error.hpp"
#include "sperf/families.hpp"

namespace sperf {
namespace {

struct Expected {
  const char* name;
  int order;
  int edges;
};

// Counts at the smallest legal parameters, tallied by hand from the
// constructions (holes, paths, and the completions to each path).
const Expected kSmallest[] = {
    {"evenhole", 4, 4},  {"larva", 5, 6},     {"pupa", 7, 10},    {"butterfly", 7, 9},
    {"graph1", 6, 9},    {"graph2", 10, 13},  {"graph3", 8, 12},  {"graph4", 9, 12},
    {"graph5", 10, 14},  {"graph6", 10, 14},  {"a1", 4, 4},       {"a2", 8, 11},
    {"a3", 8, 9},        {"a4", 7, 8},        {"a5", 10, 12},     {"a6", 10, 14},
    {"fig5pp", 14, 21},  {"fig5bb", 14, 19},  {"fig5pb", 15, 21}, {"fig6g1", 10, 18},
    {"fig6g2", 14, 22},  {"fig6g3", 14, 22},  {"fig8v1", 15, 24}, {"fig8v2", 15, 24},
    {"mutpupa", 13, 22}, {"mutbutterfly", 13, 21},
};

TEST(Families, SmallestInstanceSizes) {
  ASSERT_EQ(std::size(kSmallest), all_families().size());
  for (const auto& e : kSmallest) {
    const auto f = family_from_name(e.name);
    ASSERT_TRUE(f) << e.name;
    const Graph g = make_family(smallest_spec(*f));
    EXPECT_EQ(g.order(), e.order) << e.name;
    EXPECT_EQ(g.edge_count(), e.edges) << e.name;
    EXPECT_EQ(family_order(smallest_spec(*f)), e.order) << e.name;
  }
}

TEST(Families, NamesRoundTrip) {
  for (Family f : all_families()) EXPECT_EQ(family_from_name(family_name(f)), f);
  EXPECT_EQ(family_from_name("FIG5PP"), Family::Fig5PP);
  EXPECT_FALSE(family_from_name("graph7"));
}

Errc error_of(const char* fam, const char* params) {
  try {
    make_family(parse_family_spec(fam, params));
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InvalidQuery;
}

TEST(Families, ParameterValidation) {
  EXPECT_EQ(error_of("pupa", "k=4,t=3"), Errc::ParityViolation);
  EXPECT_EQ(error_of("larva", "k=5"), Errc::ParityViolation);
  EXPECT_EQ(error_of("graph2", "r=2"), Errc::ParityViolation);
  EXPECT_EQ(error_of("fig5pb", "r=1"), Errc::ParityViolation);
  EXPECT_EQ(error_of("larva", "k=2"), Errc::SizeViolation);
  EXPECT_EQ(error_of("fig8v1", "k=4"), Errc::SizeViolation);
  EXPECT_EQ(error_of("mutpupa", "k=8"), Errc::SizeViolation);
  EXPECT_EQ(error_of("larva", "q=4"), Errc::BadParameter);
  EXPECT_EQ(error_of("larva", "k=four"), Errc::BadParameter);
  EXPECT_EQ(error_of("larva", "k"), Errc::BadParameter);
  EXPECT_EQ(error_of("nosuch", "k=4"), Errc::UnknownFamily);
  EXPECT_EQ(error_of("evenhole", "k=66"), Errc::OrderTooLarge);
}

TEST(Families, ParityMessageNamesRule) {
  try {
    make_family(parse_family_spec("pupa", "k=4,t=3"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("t must be even"), std::string::npos) << e.what();
  }
}

TEST(Families, ParsingAndFormatting) {
  EXPECT_EQ(format_params(parse_family_spec("graph5", "k=6,m=4")), "k=6,m=4,r=1,s=1");
  EXPECT_EQ(parse_family_spec("graph5", "k=6,,m=4").param("k"), 6);
  EXPECT_THROW(parse_family_spec("graph5", "k=6,k"), Error);
}

TEST(Families, SpecsUpToOrder) {
  const auto specs = specs_up_to_order(Family::GraphI, 8);
  // (1,1,1) on 6 vertices and the three single-path bumps to length 3.
  EXPECT_EQ(specs.size(), 4U);
  for (const auto& s : specs) EXPECT_LE(family_order(s), 8);
  EXPECT_TRUE(specs_up_to_order(Family::GraphII, 9).empty());
  for (Family f : all_families()) {
    for (const auto& s : specs_up_to_order(f, 16)) {
      EXPECT_EQ(make_family(s).order(), family_order(s)) << family_name(f) << format_params(s);
    }
  }
}

TEST(Families, MarksAndSequences) {
  const auto pupa = make_family_instance(parse_family_spec("pupa", "k=6,t=4"));
  const int v = pupa.marks.at("head");
  const auto& c = pupa.sequences.at("c");
  const auto& p = pupa.sequences.at("p");
  ASSERT_EQ(c.size(), 6U);
  ASSERT_EQ(p.size(), 4U);
  EXPECT_TRUE(pupa.graph.adjacent(v, p.front()));
  EXPECT_TRUE(pupa.graph.adjacent(p.back(), c[0]));
  for (int x : p) EXPECT_TRUE(pupa.graph.adjacent(c[1], x));
  EXPECT_TRUE(pupa.graph.adjacent(c[1], v));
  EXPECT_FALSE(pupa.graph.adjacent(v, c[0]));
  EXPECT_TRUE(is_larva_occurrence(pupa.graph, {p.back(), c}));
  EXPECT_FALSE(is_larva_occurrence(pupa.graph, {v, c}));
}

TEST(Families, ResolveSymbols) {
  const auto inst = make_family_instance(parse_family_spec("larva", "k=8"));
  const auto& c = inst.sequences.at("c");
  EXPECT_EQ(resolve_symbol(inst, "c1"), c[0]);
  EXPECT_EQ(resolve_symbol(inst, "c{k}"), c[7]);
  EXPECT_EQ(resolve_symbol(inst, "c{k-2}"), c[5]);
  EXPECT_THROW(resolve_symbol(inst, "c9"), Error);
  EXPECT_THROW(resolve_symbol(inst, "z1"), Error);
  EXPECT_THROW(resolve_symbol(inst, "c{k+1}"), Error);
}

// Operators ---------------------------------------------------------------

std::vector<int> from_second(const std::vector<int>& hole) {
  // Re-reads a hole d1..dm as d2, d1, dm, ..., d3.
  std::vector<int> o{hole[1], hole[0]};
  for (int i = static_cast<int>(hole.size()) - 1; i >= 2; --i) o.push_back(hole[i]);
  return o;
}

TEST(Evolution, LarvaBecomesPupa) {
  for (int k : {4, 6}) {
    for (int t : {2, 4}) {
      const auto larva = make_family_instance(parse_family_spec("larva", ("k=" + std::to_string(k)).c_str()));
      const Graph g = evolve(larva.graph, {larva.marks.at("head"), larva.sequences.at("c")},
                             SideEdge::First, t);
      const std::string params = "k=" + std::to_string(k) + ",t=" + std::to_string(t);
      EXPECT_TRUE(isomorphic(g, make_family(parse_family_spec("pupa", params)))) << params;
    }
  }
}

TEST(Evolution, RejectsOddSubdivisionAndBadOccurrence) {
  const auto larva = make_family_instance(smallest_spec(Family::Larva));
  const LarvaOccurrence occ{larva.marks.at("head"), larva.sequences.at("c")};
  try {
    evolve(larva.graph, occ, SideEdge::First, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::OddSubdivisionCount);
  }
  try {
    evolve(larva.graph, {0, {1, 2, 3, 4}}, SideEdge::First, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidOccurrence);
  }
}

TEST(Emanation, ReproducesDerivedGraphs) {
  {
    const auto g = make_family_instance(smallest_spec(Family::GraphIII));
    const auto& c = g.sequences.at("c");
    const auto& d = g.sequences.at("d");
    const std::vector<Evolution> ev{{{d[0], c}, SideEdge::First}, {{c[0], d}, SideEdge::First}};
    EXPECT_TRUE(isomorphic(emanate(g.graph, ev), make_family(smallest_spec(Family::Fig6G1))));
  }
  for (auto [src, dst] : {std::pair{Family::GraphII, Family::Fig5PP},
                          std::pair{Family::GraphV, Family::Fig6G2}}) {
    const auto g = make_family_instance(smallest_spec(src));
    const std::vector<Evolution> ev{
        {{g.marks.at("head1"), g.sequences.at("c")}, SideEdge::First},
        {{g.marks.at("head2"), from_second(g.sequences.at("d"))}, SideEdge::First}};
    EXPECT_TRUE(isomorphic(emanate(g.graph, ev), make_family(smallest_spec(dst))))
        << family_name(dst);
  }
  {
    const auto g = make_family_instance(smallest_spec(Family::GraphVI));
    const auto& c = g.sequences.at("c");
    const auto& d = g.sequences.at("d");
    const std::vector<Evolution> ev{{{d[0], c}, SideEdge::First},
                                    {{c[1], from_second(d)}, SideEdge::First}};
    EXPECT_TRUE(isomorphic(emanate(g.graph, ev), make_family(smallest_spec(Family::Fig6G3))));
  }
}

TEST(Emanation, SharedEdgeNeedsMatchingSubdivision) {
  const auto g = make_family_instance(smallest_spec(Family::GraphIII));
  const auto& c = g.sequences.at("c");
  const auto& d = g.sequences.at("d");
  const std::vector<Evolution> ev{{{d[0], c}, SideEdge::First, 2},
                                  {{c[0], d}, SideEdge::First, 4}};
  EXPECT_THROW(emanate(g.graph, ev), Error);
}

TEST(Mutation, ReproducesMutatedPupa) {
  const auto pupa = make_family_instance(parse_family_spec("pupa", "k=10"));
  const std::vector<int> steps{4, 9, 6};
  const Graph g = mutate(pupa.graph, {pupa.sequences.at("p").back(), pupa.sequences.at("c")}, steps);
  EXPECT_TRUE(isomorphic(g, make_family(smallest_spec(Family::MutatedPupa))));
}

TEST(Mutation, ReproducesMutatedButterfly) {
  const auto b = make_family_instance(parse_family_spec("butterfly", "a=6,c=4"));
  const auto& a = b.sequences.at("a");
  const auto& p2 = b.sequences.at("b");
  const auto& p3 = b.sequences.at("c");
  const int v = b.marks.at("head");
  // Hole a_k, v, a1, ..., a_{k-1}: a_j sits at position j + 2.
  std::vector<int> left{a.back(), v};
  left.insert(left.end(), a.begin(), a.end() - 1);
  const int k = static_cast<int>(a.size());
  const std::vector<int> left_steps{2 + 2, (k - 2) + 2};
  Graph g = mutate(b.graph, {p2[1], left}, left_steps);
  // Hole c1, v, c_m, ..., c2: c_{m-1} sits at position 4.
  std::vector<int> right{p3.front(), v};
  right.insert(right.end(), p3.rbegin(), p3.rend() - 1);
  const std::vector<int> right_steps{4};
  g = mutate(g, {p2[p2.size() - 2], right}, right_steps);
  EXPECT_TRUE(isomorphic(g, make_family(smallest_spec(Family::MutatedButterfly))));
}

TEST(Mutation, RejectsIllegalSteps) {
  const auto larva = make_family_instance(parse_family_spec("larva", "k=8"));
  const LarvaOccurrence occ{larva.marks.at("head"), larva.sequences.at("c")};
  auto code = [&](std::vector<int> steps) {
    try {
      mutate(larva.graph, occ, steps);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InvalidQuery;
  };
  EXPECT_EQ(code({5}), Errc::OddChordCount);     // chords to c3, c4, c5
  EXPECT_EQ(code({2}), Errc::ChainViolation);    // the partner itself
  EXPECT_EQ(code({4, 3}), Errc::ChainViolation); // c3 left the cycle
  EXPECT_EQ(code({8}), Errc::ChainViolation);    // nothing left of the hole
  EXPECT_EQ(code({4, 8}), Errc::OddChordCount);  // c8 is next to c1 now
  EXPECT_EQ(code({4, 7}), Errc::InvalidQuery);   // legal: c1 -> c4 -> c7
}

TEST(ChordFixtures, ListedForMutatedAndChordedFamilies) {
  for (Family f : {Family::MutatedPupa, Family::MutatedButterfly, Family::Fig8V1, Family::Fig8V2}) {
    const ChordFixture* fx = chord_fixture(f);
    ASSERT_NE(fx, nullptr);
    EXPECT_EQ(fx->chords.size(), 6U);
    const auto inst = make_family_instance(smallest_spec(f));
    for (auto [x, y] : fx->chords) {
      EXPECT_TRUE(inst.graph.adjacent(resolve_symbol(inst, x), resolve_symbol(inst, y)));
    }
  }
  EXPECT_EQ(chord_fixture(Family::Larva), nullptr);
}

TEST(JoinHeads, ConnectsWithPath) {
  const auto l = make_family_instance(smallest_spec(Family::Larva));
  const Graph g = join_heads(l.graph, l.marks.at("head"), l.graph, l.marks.at("head"), 1);
  EXPECT_TRUE(isomorphic(g, make_family(smallest_spec(Family::GraphII))));
  const auto p = make_family_instance(smallest_spec(Family::Pupa));
  const Graph pp = join_heads(p.graph, p.marks.at("head"), p.graph, p.marks.at("head"), 1);
  EXPECT_TRUE(isomorphic(pp, make_family(smallest_spec(Family::Fig5PP))));
}

}  // namespace
}  // namespace sperf
