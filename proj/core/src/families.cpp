#include "sperf/families.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <set>
#include <string>

#include "sperf/error.hpp"

namespace sperf {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  std::vector<ParamRule> rules;
};

const std::vector<FamilyInfo>& registry() {
  static const std::vector<FamilyInfo> info = [] {
    const ParamRule hole_k{"k", Parity::Even, 4, "even hole length"};
    const ParamRule hole_m{"m", Parity::Even, 4, "even hole length"};
    const ParamRule hole_n{"n", Parity::Even, 4, "even hole length"};
    const ParamRule sub_t{"t", Parity::Even, 2, "subdivision count (odd path of length t+1)"};
    const ParamRule sub_l{"l", Parity::Even, 2, "subdivision count (odd path of length l+1)"};
    const ParamRule odd_r{"r", Parity::Odd, 1, "odd path length between heads"};
    const ParamRule even_r{"r", Parity::Even, 2, "even path length between heads"};
    auto bfly = [](std::string p1, std::string p2, std::string p3) {
      return std::vector<ParamRule>{
          {std::move(p1), Parity::Even, 2, "even path P1 length"},
          {std::move(p2), Parity::Odd, 1, "odd path P2 length"},
          {std::move(p3), Parity::Even, 2, "even path P3 length"}};
    };
    auto cat = [](std::vector<ParamRule> a, const std::vector<ParamRule>& b) {
      a.insert(a.end(), b.begin(), b.end());
      return a;
    };
    const ParamRule hole6_k{"k", Parity::Even, 6, "even hole length"};
    const ParamRule hole6_m{"m", Parity::Even, 6, "even hole length"};
    const ParamRule hole6_n{"n", Parity::Even, 6, "even hole length"};

    return std::vector<FamilyInfo>{
        {Family::EvenHole, "evenhole", {hole_k}},
        {Family::Larva, "larva", {hole_k}},
        {Family::Pupa, "pupa", {hole_k, sub_t}},
        {Family::Butterfly, "butterfly", bfly("a", "b", "c")},
        {Family::GraphI,
         "graph1",
         {{"a", Parity::Odd, 1, "odd path length"},
          {"b", Parity::Odd, 1, "odd path length"},
          {"c", Parity::Odd, 1, "odd path length"}}},
        {Family::GraphII, "graph2", {hole_k, hole_m, odd_r}},
        {Family::GraphIII, "graph3", {hole_k, hole_m}},
        {Family::GraphIV, "graph4", {hole_k, hole_m, hole_n}},
        {Family::GraphV,
         "graph5",
         {hole_k, hole_m, odd_r, {"s", Parity::Odd, 1, "odd path P2 length (1 in the refined form)"}}},
        {Family::GraphVI, "graph6", {hole_k, hole_m, hole_n}},
        {Family::A1, "a1", {hole_k}},
        {Family::A2, "a2", {hole_k, hole_m}},
        {Family::A3, "a3", {hole_k, hole_m}},
        {Family::A4, "a4", {hole_k, hole_m}},
        {Family::A5, "a5", {hole_k, hole_m, hole_n}},
        {Family::A6, "a6", {hole_k, hole_m, sub_t}},
        {Family::Fig5PP, "fig5pp", {hole_k, hole_m, sub_t, sub_l, odd_r}},
        {Family::Fig5BB, "fig5bb", cat(cat(bfly("a", "b", "c"), bfly("x", "y", "z")), {odd_r})},
        {Family::Fig5PB, "fig5pb", cat(cat({hole_k, sub_t}, bfly("a", "b", "c")), {even_r})},
        {Family::Fig6G1, "fig6g1", {hole_k, hole_m, sub_t}},
        {Family::Fig6G2, "fig6g2", {hole_k, hole_m, sub_t, sub_l, odd_r}},
        {Family::Fig6G3, "fig6g3", {hole_k, hole_m, hole_n, sub_t, sub_l}},
        {Family::Fig8V1, "fig8v1", {hole6_k, hole6_m, hole6_n}},
        {Family::Fig8V2, "fig8v2", {hole6_k, hole6_m, hole6_n}},
        {Family::MutatedPupa, "mutpupa", {{"k", Parity::Even, 10, "even hole length"}, sub_t}},
        {Family::MutatedButterfly,
         "mutbutterfly",
         {{"a", Parity::Even, 6, "even path P1 length"},
          {"b", Parity::Odd, 1, "odd path P2 length"},
          {"c", Parity::Even, 4, "even path P3 length"}}},
    };
  }();
  return info;
}

const FamilyInfo& info_of(Family f) {
  for (const auto& i : registry())
    if (i.family == f) return i;
  throw Error(Errc::UnknownFamily, "unregistered family");
}

// Builder helpers ----------------------------------------------------------

std::vector<int> new_vertices(GraphBuilder& b, int count) {
  std::vector<int> out;
  for (int i = 0; i < count; ++i) out.push_back(b.add_vertex());
  return out;
}

void close_cycle(GraphBuilder& b, const std::vector<int>& cyc) {
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    const int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
    if (!b.adjacent(u, v)) b.add_edge(u, v);
  }
}

void chain(GraphBuilder& b, const std::vector<int>& path) {
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!b.adjacent(path[i], path[i + 1])) b.add_edge(path[i], path[i + 1]);
  }
}

// Hole through the given existing vertices followed by new ones.
std::vector<int> hole_through(GraphBuilder& b, std::vector<int> start, int length) {
  auto fresh = new_vertices(b, length - static_cast<int>(start.size()));
  start.insert(start.end(), fresh.begin(), fresh.end());
  close_cycle(b, start);
  return start;
}

std::vector<int> concat(std::initializer_list<std::vector<int>> parts) {
  std::vector<int> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Pupa pieces on an existing hole: path head - p1 - ... - pt - side, with
// `apex` made complete to the head and the p's.
void attach_pupa(GraphBuilder& b, int head, const std::vector<int>& p, int side, int apex) {
  chain(b, concat({{head}, p, {side}}));
  b.add_edge(apex, head);
  for (int x : p) b.add_edge(apex, x);
}

struct ButterflyParts {
  std::vector<int> a, b, c;  // P1, P2, P3 with a.back()==b.front(), b.back()==c.front()
};

ButterflyParts add_butterfly_paths(GraphBuilder& g, int p1, int p2, int p3) {
  ButterflyParts parts;
  parts.a = new_vertices(g, p1 + 1);
  chain(g, parts.a);
  parts.b = concat({{parts.a.back()}, new_vertices(g, p2)});
  chain(g, parts.b);
  parts.c = concat({{parts.b.back()}, new_vertices(g, p3)});
  chain(g, parts.c);
  return parts;
}

void attach_butterfly_head(GraphBuilder& g, const ButterflyParts& parts, int head) {
  g.add_edge(head, parts.a.front());
  g.add_edge(head, parts.c.back());
  for (int x : parts.b) g.add_edge(head, x);
}

void add_seq(FamilyInstance& inst, const std::string& prefix, const ButterflyParts& parts) {
  inst.sequences[prefix + "a"] = parts.a;
  inst.sequences[prefix + "b"] = parts.b;
  inst.sequences[prefix + "c"] = parts.c;
}

// Two even holes C, D plus the per-family central edges.
struct TwoHoles {
  std::vector<int> c, d;
};

TwoHoles two_holes(GraphBuilder& b, int k, int m) {
  TwoHoles h;
  h.c = hole_through(b, {}, k);
  h.d = hole_through(b, {}, m);
  return h;
}

void apply_chords(GraphBuilder& b, const FamilyInstance& inst, const ChordFixture& fx) {
  for (auto [x, y] : fx.chords) b.add_edge(resolve_symbol(inst, x), resolve_symbol(inst, y));
}

FamilyInstance build(const FamilySpec& spec);

FamilyInstance build_graph_iv(int k, int m, int n) {
  GraphBuilder b;
  FamilyInstance inst;
  auto c = hole_through(b, {}, k);
  const int x = c[0], y = c[1];
  const int z = b.add_vertex();
  auto d = hole_through(b, {y, z}, m);
  auto e = hole_through(b, {z, x}, n);
  inst.sequences = {{"c", c}, {"d", d}, {"e", e}};
  inst.marks = {{"x", x}, {"y", y}, {"z", z}};
  inst.graph = b.build();
  return inst;
}

FamilyInstance build(const FamilySpec& spec) {
  GraphBuilder b;
  FamilyInstance inst;
  auto P = [&](std::string_view n) { return spec.param(n); };
  switch (spec.family) {
    case Family::EvenHole:
    case Family::A1: {
      inst.sequences["c"] = hole_through(b, {}, P("k"));
      break;
    }
    case Family::Larva: {
      auto c = hole_through(b, {}, P("k"));
      const int v = b.add_vertex();
      b.add_edge(v, c[0]);
      b.add_edge(v, c[1]);
      inst.sequences["c"] = c;
      inst.marks["head"] = v;
      break;
    }
    case Family::Pupa:
    case Family::MutatedPupa: {
      auto c = hole_through(b, {}, P("k"));
      auto p = new_vertices(b, P("t"));
      const int v = b.add_vertex();
      attach_pupa(b, v, p, c[0], c[1]);
      inst.sequences = {{"c", c}, {"p", p}};
      inst.marks["head"] = v;
      if (spec.family == Family::MutatedPupa) {
        apply_chords(b, inst, *chord_fixture(spec.family));
      }
      break;
    }
    case Family::Butterfly:
    case Family::MutatedButterfly: {
      auto parts = add_butterfly_paths(b, P("a"), P("b"), P("c"));
      const int v = b.add_vertex();
      attach_butterfly_head(b, parts, v);
      add_seq(inst, "", parts);
      inst.marks["head"] = v;
      if (spec.family == Family::MutatedButterfly) {
        apply_chords(b, inst, *chord_fixture(spec.family));
      }
      break;
    }
    case Family::GraphI: {
      auto x = new_vertices(b, 3);
      auto y = new_vertices(b, 3);
      close_cycle(b, x);
      close_cycle(b, y);
      const std::array<int, 3> len{P("a"), P("b"), P("c")};
      for (int i = 0; i < 3; ++i) {
        inst.sequences[std::string(1, static_cast<char>('p' + i))] = b.add_path(x[i], y[i], len[i]);
      }
      inst.sequences["x"] = x;
      inst.sequences["y"] = y;
      break;
    }
    case Family::GraphII: {
      auto [c, d] = two_holes(b, P("k"), P("m"));
      auto r = new_vertices(b, P("r") - 1);
      const int v1 = b.add_vertex(), v2 = b.add_vertex();
      b.add_edge(v1, c[0]);
      b.add_edge(v1, c[1]);
      b.add_edge(v2, d[0]);
      b.add_edge(v2, d[1]);
      chain(b, concat({{v1}, r, {v2}}));
      inst.sequences = {{"c", c}, {"d", d}, {"r", r}};
      inst.marks = {{"head1", v1}, {"head2", v2}};
      break;
    }
    case Family::GraphIII: {
      auto [c, d] = two_holes(b, P("k"), P("m"));
      for (int cv : {c[0], c[1]})
        for (int dv : {d[0], d[1]}) b.add_edge(cv, dv);
      inst.sequences = {{"c", c}, {"d", d}};
      break;
    }
    case Family::GraphIV:
    case Family::Fig8V1:
    case Family::Fig8V2: {
      inst = build_graph_iv(P("k"), P("m"), P("n"));
      if (spec.family != Family::GraphIV) {
        GraphBuilder g(inst.graph);
        apply_chords(g, inst, *chord_fixture(spec.family));
        inst.graph = g.build();
      }
      return inst;
    }
    case Family::GraphV: {
      // Larvas (C, u1) and (D, v1) with heads joined by P1, and the side
      // vertices c2, d1 joined by P2.
      auto [c, d] = two_holes(b, P("k"), P("m"));
      auto p1 = new_vertices(b, P("r") - 1);
      auto p2 = new_vertices(b, P("s") - 1);
      const int u1 = b.add_vertex(), v1 = b.add_vertex();
      b.add_edge(u1, c[0]);
      b.add_edge(u1, c[1]);
      b.add_edge(v1, d[0]);
      b.add_edge(v1, d[1]);
      chain(b, concat({{u1}, p1, {v1}}));
      chain(b, concat({{c[1]}, p2, {d[0]}}));
      inst.sequences = {{"c", c}, {"d", d}, {"r", p1}, {"s", p2}};
      inst.marks = {{"head1", u1}, {"head2", v1}};
      break;
    }
    case Family::GraphVI:
    case Family::A5:
    case Family::Fig6G3: {
      auto [c, d] = two_holes(b, P("k"), P("m"));
      auto e = hole_through(b, {c[1], d[0]}, P("n"));
      inst.sequences = {{"c", c}, {"d", d}, {"e", e}};
      if (spec.family == Family::GraphVI) {
        b.add_edge(c[0], d[0]);
        b.add_edge(c[1], d[1]);
      } else if (spec.family == Family::Fig6G3) {
        // c1 - P - d1 with c2 complete to P; c2 - Q - d2 with d1 complete to Q.
        auto p = new_vertices(b, P("t"));
        auto q = new_vertices(b, P("l"));
        chain(b, concat({{c[0]}, p, {d[0]}}));
        chain(b, concat({{c[1]}, q, {d[1]}}));
        for (int x : p) b.add_edge(c[1], x);
        for (int x : q) b.add_edge(d[0], x);
        inst.sequences["p"] = p;
        inst.sequences["q"] = q;
      }
      break;
    }
    case Family::A2: {
      auto [c, d] = two_holes(b, P("k"), P("m"));
      b.add_edge(c[0], d[1]);
      b.add_edge(c[1], d[0]);
      b.add_edge(c[1], d[1]);
      inst.sequences = {{"c", c}, {"d", d}};
      break;
    }
    case Family::A3: {
      auto [c, d] = two_holes(b, P("k"), P("m"));
      b.add_edge(c[1], d[0]);
      inst.sequences = {{"c", c}, {"d", d}};
      break;
    }
    case Family::A4: {
      // Holes sharing the single vertex c2 = d2.
      auto c = hole_through(b, {}, P("k"));
      const int d1 = b.add_vertex();
      auto d = hole_through(b, {d1, c[1]}, P("m"));
      inst.sequences = {{"c", c}, {"d", d}};
      break;
    }
    case Family::A6: {
      auto [c, d] = two_holes(b, P("k"), P("m"));
      b.add_edge(c[1], d[0]);
      auto p = new_vertices(b, P("t"));
      chain(b, concat({{c[0]}, p, {d[0]}}));
      for (int x : p) b.add_edge(c[1], x);
      inst.sequences = {{"c", c}, {"d", d}, {"p", p}};
      break;
    }
    case Family::Fig5PP:
    case Family::Fig6G2: {
      auto [c, d] = two_holes(b, P("k"), P("m"));
      auto p = new_vertices(b, P("t"));
      auto q = new_vertices(b, P("l"));
      auto r = new_vertices(b, P("r") - 1);
      const int v1 = b.add_vertex(), v2 = b.add_vertex();
      attach_pupa(b, v1, p, c[0], c[1]);
      // Second pupa: path v2 - q_l - ... - q1 - d2, d1 complete to it.
      std::vector<int> q_from_head(q.rbegin(), q.rend());
      attach_pupa(b, v2, q_from_head, d[1], d[0]);
      chain(b, concat({{v1}, r, {v2}}));
      if (spec.family == Family::Fig6G2) b.add_edge(c[1], d[0]);
      inst.sequences = {{"c", c}, {"d", d}, {"p", p}, {"q", q}, {"r", r}};
      inst.marks = {{"head1", v1}, {"head2", v2}};
      break;
    }
    case Family::Fig5BB: {
      auto left = add_butterfly_paths(b, P("a"), P("b"), P("c"));
      auto right = add_butterfly_paths(b, P("x"), P("y"), P("z"));
      auto r = new_vertices(b, P("r") - 1);
      const int v1 = b.add_vertex(), v2 = b.add_vertex();
      attach_butterfly_head(b, left, v1);
      attach_butterfly_head(b, right, v2);
      chain(b, concat({{v1}, r, {v2}}));
      add_seq(inst, "1", left);
      add_seq(inst, "2", right);
      inst.sequences["r"] = r;
      inst.marks = {{"head1", v1}, {"head2", v2}};
      break;
    }
    case Family::Fig5PB: {
      auto c = hole_through(b, {}, P("k"));
      auto p = new_vertices(b, P("t"));
      auto parts = add_butterfly_paths(b, P("a"), P("b"), P("c"));
      auto r = new_vertices(b, P("r") - 1);
      const int v1 = b.add_vertex(), v2 = b.add_vertex();
      attach_pupa(b, v1, p, c[0], c[1]);
      attach_butterfly_head(b, parts, v2);
      chain(b, concat({{v1}, r, {v2}}));
      inst.sequences = {{"c", c}, {"p", p}, {"r", r}};
      add_seq(inst, "2", parts);
      inst.marks = {{"head1", v1}, {"head2", v2}};
      break;
    }
    case Family::Fig6G1: {
      // Graph III with the edge c1d1 evolved from both sides: c1 - P - d1,
      // c2 and d2 complete to P.
      auto [c, d] = two_holes(b, P("k"), P("m"));
      b.add_edge(c[0], d[1]);
      b.add_edge(c[1], d[0]);
      b.add_edge(c[1], d[1]);
      auto p = new_vertices(b, P("t"));
      chain(b, concat({{c[0]}, p, {d[0]}}));
      for (int x : p) {
        b.add_edge(c[1], x);
        b.add_edge(d[1], x);
      }
      inst.sequences = {{"c", c}, {"d", d}, {"p", p}};
      break;
    }
  }
  inst.graph = b.build();
  return inst;
}

bool parity_ok(Parity p, int v) {
  switch (p) {
    case Parity::Any: return true;
    case Parity::Even: return v % 2 == 0;
    case Parity::Odd: return v % 2 != 0;
  }
  return true;
}

}  // namespace

std::span<const Family> all_families() {
  static const std::vector<Family> fams = [] {
    std::vector<Family> out;
    for (const auto& i : registry()) out.push_back(i.family);
    return out;
  }();
  return fams;
}

std::string_view family_name(Family f) { return info_of(f).name; }

std::optional<Family> family_from_name(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  for (const auto& i : registry())
    if (i.name == lower) return i.family;
  return std::nullopt;
}

std::span<const ParamRule> family_rules(Family f) { return info_of(f).rules; }

int FamilySpec::param(std::string_view name) const {
  if (auto it = params.find(std::string(name)); it != params.end()) return it->second;
  for (const auto& r : family_rules(family))
    if (r.name == name) return r.minimum;
  throw Error(Errc::BadParameter, "family " + std::string(family_name(family)) +
                                      " has no parameter " + std::string(name));
}

FamilySpec smallest_spec(Family f) {
  FamilySpec s{f, {}};
  for (const auto& r : family_rules(f)) s.params[r.name] = r.minimum;
  return s;
}

FamilySpec parse_family_spec(std::string_view family, std::string_view params) {
  auto fam = family_from_name(family);
  if (!fam) throw Error(Errc::UnknownFamily, "unknown family '" + std::string(family) + "'");
  FamilySpec spec = smallest_spec(*fam);
  while (!params.empty()) {
    auto comma = params.find(',');
    std::string_view item = params.substr(0, comma);
    params = comma == std::string_view::npos ? std::string_view{} : params.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw Error(Errc::BadParameter, "parameter '" + std::string(item) + "' is not name=value");
    }
    std::string key(item.substr(0, eq));
    std::string_view val = item.substr(eq + 1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), value);
    if (ec != std::errc{} || ptr != val.data() + val.size()) {
      throw Error(Errc::BadParameter, "parameter " + key + " has non-integer value '" +
                                          std::string(val) + "'");
    }
    if (!spec.params.count(key)) {
      throw Error(Errc::BadParameter, "family " + std::string(family_name(*fam)) +
                                          " has no parameter " + key);
    }
    spec.params[key] = value;
  }
  return spec;
}

std::string format_params(const FamilySpec& spec) {
  std::string out;
  for (const auto& r : family_rules(spec.family)) {
    if (!out.empty()) out += ',';
    out += r.name + "=" + std::to_string(spec.param(r.name));
  }
  return out;
}

int family_order(const FamilySpec& s) {
  auto P = [&](std::string_view n) { return s.param(n); };
  switch (s.family) {
    case Family::EvenHole:
    case Family::A1: return P("k");
    case Family::Larva: return P("k") + 1;
    case Family::Pupa:
    case Family::MutatedPupa: return P("k") + P("t") + 1;
    case Family::Butterfly:
    case Family::MutatedButterfly: return P("a") + P("b") + P("c") + 2;
    case Family::GraphI: return P("a") + P("b") + P("c") + 3;
    case Family::GraphII: return P("k") + P("m") + P("r") + 1;
    case Family::GraphIII:
    case Family::A2:
    case Family::A3: return P("k") + P("m");
    case Family::GraphIV:
    case Family::Fig8V1:
    case Family::Fig8V2: return P("k") + P("m") + P("n") - 3;
    case Family::GraphV: return P("k") + P("m") + P("r") + P("s");
    case Family::GraphVI:
    case Family::A5: return P("k") + P("m") + P("n") - 2;
    case Family::A4: return P("k") + P("m") - 1;
    case Family::A6:
    case Family::Fig6G1: return P("k") + P("m") + P("t");
    case Family::Fig5PP:
    case Family::Fig6G2: return P("k") + P("m") + P("t") + P("l") + P("r") + 1;
    case Family::Fig5BB:
      return P("a") + P("b") + P("c") + P("x") + P("y") + P("z") + 4 + P("r") - 1;
    case Family::Fig5PB: return P("k") + P("t") + 1 + P("a") + P("b") + P("c") + 2 + P("r") - 1;
    case Family::Fig6G3: return P("k") + P("m") + P("n") - 2 + P("t") + P("l");
  }
  return 0;
}

void validate(const FamilySpec& spec) {
  const auto name = std::string(family_name(spec.family));
  for (const auto& [key, _] : spec.params) {
    bool known = false;
    for (const auto& r : family_rules(spec.family)) known = known || r.name == key;
    if (!known) throw Error(Errc::BadParameter, name + " has no parameter " + key);
  }
  for (const auto& r : family_rules(spec.family)) {
    const int v = spec.param(r.name);
    if (!parity_ok(r.parity, v)) {
      throw Error(Errc::ParityViolation,
                  name + ": " + r.name + "=" + std::to_string(v) + " violates parity rule: " +
                      r.name + " must be " + (r.parity == Parity::Even ? "even" : "odd") +
                      " (" + r.meaning + ")");
    }
    if (v < r.minimum) {
      throw Error(Errc::SizeViolation, name + ": " + r.name + "=" + std::to_string(v) +
                                           " below minimum " + std::to_string(r.minimum) +
                                           " (" + r.meaning + ")");
    }
  }
  if (family_order(spec) > kMaxOrder) {
    throw Error(Errc::OrderTooLarge, name + " instance would have " +
                                         std::to_string(family_order(spec)) + " vertices");
  }
}

FamilyInstance make_family_instance(const FamilySpec& spec) {
  validate(spec);
  return build(spec);
}

Graph make_family(const FamilySpec& spec) { return make_family_instance(spec).graph; }

std::vector<FamilySpec> specs_up_to_order(Family f, int max_order) {
  std::vector<FamilySpec> out;
  const auto rules = family_rules(f);
  FamilySpec spec = smallest_spec(f);
  if (family_order(spec) > max_order) return out;
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == rules.size()) {
      out.push_back(spec);
      return;
    }
    const auto& r = rules[i];
    const int step = r.parity == Parity::Any ? 1 : 2;
    for (int v = r.minimum;; v += step) {
      spec.params[r.name] = v;
      if (family_order(spec) > max_order) break;
      self(self, i + 1);
    }
    spec.params[r.name] = r.minimum;
  };
  recurse(recurse, 0);
  return out;
}

// Occurrences and operators -------------------------------------------------

bool is_larva_occurrence(const Graph& g, const LarvaOccurrence& occ) {
  const int k = static_cast<int>(occ.hole.size());
  if (k < 4 || k % 2 != 0) return false;
  auto in_range = [&](int v) { return v >= 0 && v < g.order(); };
  if (!in_range(occ.head)) return false;
  VertexSet hole;
  for (int v : occ.hole) {
    if (!in_range(v) || hole.contains(v) || v == occ.head) return false;
    hole.insert(v);
  }
  for (int i = 0; i < k; ++i) {
    const int v = occ.hole[i];
    const VertexSet expect{occ.hole[(i + 1) % k], occ.hole[(i + k - 1) % k]};
    if ((g.neighbors(v) & hole) != expect) return false;
  }
  return (g.neighbors(occ.head) & hole) == VertexSet{occ.hole[0], occ.hole[1]};
}

Graph evolve(const Graph& g, const LarvaOccurrence& occ, SideEdge side, int subdivisions) {
  const Evolution e{occ, side, subdivisions};
  return emanate(g, std::span<const Evolution>(&e, 1));
}

Graph emanate(const Graph& g, std::span<const Evolution> evolutions) {
  struct Plan {
    int from, to, subdivisions;
    VertexSet apexes;
  };
  std::vector<Plan> plans;
  for (const auto& e : evolutions) {
    if (!is_larva_occurrence(g, e.occurrence)) {
      throw Error(Errc::InvalidOccurrence, "listed vertices do not induce a larva");
    }
    if (e.subdivisions < 2 || e.subdivisions % 2 != 0) {
      throw Error(Errc::OddSubdivisionCount,
                  "evolution needs an even number (>= 2) of subdivisions, got " +
                      std::to_string(e.subdivisions));
    }
    const auto& h = e.occurrence.hole;
    const int side = e.side == SideEdge::First ? h[0] : h[1];
    const int apex = e.side == SideEdge::First ? h[1] : h[0];
    auto same = std::find_if(plans.begin(), plans.end(), [&](const Plan& p) {
      return (p.from == e.occurrence.head && p.to == side) ||
             (p.to == e.occurrence.head && p.from == side);
    });
    if (same != plans.end()) {
      if (same->subdivisions != e.subdivisions) {
        throw Error(Errc::InvalidOccurrence,
                    "evolutions of one side edge disagree on the subdivision count");
      }
      same->apexes.insert(apex);
    } else {
      plans.push_back({e.occurrence.head, side, e.subdivisions, VertexSet::single(apex)});
    }
  }
  GraphBuilder b(g);
  for (const auto& p : plans) {
    b.remove_edge(p.from, p.to);
    auto fresh = b.add_path(p.from, p.to, p.subdivisions + 1);
    for (int a : p.apexes) b.make_complete(a, fresh);
  }
  return b.build();
}

Graph mutate(const Graph& g, const LarvaOccurrence& occ, std::span<const int> steps) {
  if (!is_larva_occurrence(g, occ)) {
    throw Error(Errc::InvalidOccurrence, "listed vertices do not induce a larva");
  }
  GraphBuilder b(g);
  // Current cycle as seen from the mutator: cycle[0] = mutator,
  // cycle[1] = partner, then onward around the cycle.
  std::vector<int> cycle = occ.hole;
  for (int target_pos : steps) {
    if (target_pos < 1 || target_pos > static_cast<int>(occ.hole.size())) {
      throw Error(Errc::ChainViolation, "target c" + std::to_string(target_pos) +
                                            " is not on the hole");
    }
    const int target = occ.hole[target_pos - 1];
    auto it = std::find(cycle.begin(), cycle.end(), target);
    if (it == cycle.end()) {
      throw Error(Errc::ChainViolation, "target c" + std::to_string(target_pos) +
                                            " is not on the current even cycle");
    }
    const int j = static_cast<int>(it - cycle.begin());
    const int chords = j - 1;
    if (chords < 1) {
      throw Error(Errc::ChainViolation, "target c" + std::to_string(target_pos) +
                                            " is the mutator or its partner");
    }
    if (chords % 2 != 0) {
      throw Error(Errc::OddChordCount, "mutation towards c" + std::to_string(target_pos) +
                                           " adds " + std::to_string(chords) + " chords");
    }
    const int remaining = static_cast<int>(cycle.size()) - j + 1;
    if (remaining < 4) {
      throw Error(Errc::ChainViolation, "mutation towards c" + std::to_string(target_pos) +
                                            " leaves no hole");
    }
    for (int i = 2; i <= j; ++i) b.add_edge(cycle[0], cycle[i]);
    // New cycle: mutator, target, ..., back to mutator. Seen from the
    // target, its partner is the old mutator.
    std::vector<int> next;
    next.push_back(target);
    next.push_back(cycle[0]);
    for (int i = static_cast<int>(cycle.size()) - 1; i > j; --i) next.push_back(cycle[i]);
    cycle = std::move(next);
  }
  return b.build();
}

Graph join_heads(const Graph& g1, int v1, const Graph& g2, int v2, int path_len) {
  if (v1 < 0 || v1 >= g1.order() || v2 < 0 || v2 >= g2.order()) {
    throw Error(Errc::BadVertex, "join_heads vertex out of range");
  }
  GraphBuilder b(disjoint_union(g1, g2));
  b.add_path(v1, v2 + g1.order(), path_len);
  return b.build();
}

const ChordFixture* chord_fixture(Family f) {
  static const std::vector<ChordFixture> fixtures{
      // Pupa with c1 -> c4, then c4 -> c{k-1}, then c{k-1} -> c6.
      {Family::MutatedPupa,
       "pupa hole mutated c1 -> c4 -> c{k-1} -> c6",
       {{"c1", "c3"}, {"c1", "c4"}, {"c4", "c{k-1}"}, {"c4", "c{k}"}, {"c{k-1}", "c5"},
        {"c{k-1}", "c6"}}},
      // Butterfly with a_k -> a2 -> a{k-2} on the P1 side, c1 -> c{m-1} on P3.
      {Family::MutatedButterfly,
       "butterfly: a{k} -> a2 -> a{k-2} on P1, c1 -> c{m-1} on P3",
       {{"a{k}", "a1"}, {"a{k}", "a2"}, {"a2", "a{k-1}"}, {"a2", "a{k-2}"}, {"c1", "c{m}"},
        {"c1", "c{m-1}"}}},
      {Family::Fig8V1,
       "graph4 with even holes, two chords per hole from c2, d2, e2",
       {{"c2", "c{k}"}, {"c2", "c{k-1}"}, {"d2", "d{m}"}, {"d2", "d{m-1}"}, {"e2", "e{n}"},
        {"e2", "e{n-1}"}}},
      {Family::Fig8V2,
       "graph4 with even holes, two chords per hole from c2, d1, e2",
       {{"c2", "c{k}"}, {"c2", "c{k-1}"}, {"d1", "d3"}, {"d1", "d4"}, {"e2", "e{n}"},
        {"e2", "e{n-1}"}}},
  };
  for (const auto& fx : fixtures)
    if (fx.family == f) return &fx;
  return nullptr;
}

int resolve_symbol(const FamilyInstance& inst, std::string_view symbol) {
  auto fail = [&] {
    return Error(Errc::BadParameter, "cannot resolve vertex symbol '" + std::string(symbol) + "'");
  };
  std::size_t split = 0;
  while (split < symbol.size() && std::isalpha(static_cast<unsigned char>(symbol[split])) &&
         symbol[split] != '{')
    ++split;
  if (split == 0) throw fail();
  // A leading digit prefix ("1a") is not supported by this parser; prefixes
  // are letters only.
  auto seq_it = inst.sequences.find(std::string(symbol.substr(0, split)));
  if (seq_it == inst.sequences.end()) throw fail();
  const auto& seq = seq_it->second;
  std::string_view idx = symbol.substr(split);
  int pos = 0;
  if (!idx.empty() && idx.front() == '{') {
    if (idx.back() != '}' || idx.size() < 3) throw fail();
    std::string_view body = idx.substr(2, idx.size() - 3);  // skip "{x"
    int offset = 0;
    if (!body.empty()) {
      if (body.front() != '-') throw fail();
      body.remove_prefix(1);
      auto [p, ec] = std::from_chars(body.data(), body.data() + body.size(), offset);
      if (ec != std::errc{} || p != body.data() + body.size()) throw fail();
    }
    pos = static_cast<int>(seq.size()) - offset;
  } else {
    auto [p, ec] = std::from_chars(idx.data(), idx.data() + idx.size(), pos);
    if (ec != std::errc{} || p != idx.data() + idx.size()) throw fail();
  }
  if (pos < 1 || pos > static_cast<int>(seq.size())) throw fail();
  return seq[pos - 1];
}

}  // namespace sperf
