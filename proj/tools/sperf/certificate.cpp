#include "certificate.hpp"

#include <algorithm>

#include "sperf/canonical.hpp"
#include "sperf/error.hpp"
#include "sperf/graph6.hpp"
#include "sperf/oracle.hpp"

namespace sperf::cli {

json vertex_list(VertexSet s) { return json(s.to_vector()); }

VertexSet vertex_set_from(const json& j) {
  VertexSet s;
  for (const auto& v : j) {
    const int x = v.get<int>();
    if (x < 0 || x >= kMaxOrder) throw Error(Errc::BadVertex, "witness vertex out of range");
    s.insert(x);
  }
  return s;
}

json provenance_json(const Provenance& p) {
  json j = json::object();
  if (p.family) {
    j["family"] = family_name(p.family->family);
    json params = json::object();
    for (const auto& r : family_rules(p.family->family)) params[r.name] = p.family->param(r.name);
    j["params"] = params;
  }
  if (p.stream_index) j["record"] = *p.stream_index;
  if (p.file) j["file"] = *p.file;
  return j;
}

json budget_json(const Budget& b, std::uint64_t nodes_used) {
  return {{"max_nodes", b.max_nodes},
          {"max_time_ms", b.max_time.count()},
          {"nodes_used", nodes_used}};
}

json certificate_header(const std::string& kind, const Graph& g, const Provenance& p) {
  return {{"schema", kSchemaVersion},
          {"tool", "sperf"},
          {"version", kToolVersion},
          {"command", "check"},
          {"kind", kind},
          {"input", {{"graph6", write_graph6(g)}, {"order", g.order()},
                     {"provenance", provenance_json(p)}}}};
}

namespace {

constexpr int kOracleLimit = oracle::kMaxSssOrder;

bool sss_exists(const Graph& g) {
  return g.order() <= kOracleLimit ? oracle::has_strong_stable_set(g) : has_sss(g);
}

bool definitionally_sss(const Graph& g, VertexSet s) {
  if (!s.is_subset_of(g.vertices())) return false;
  return g.order() <= kOracleLimit ? oracle::is_strong_stable_set(g, s.mask())
                                   : is_strong_stable_set(g, s);
}

// A claimed counterexample must be simplicial-free and lack an SSS.
void check_counterexample(const Graph& g, VertexSet s, const std::string& where,
                          Revalidation& r) {
  if (!s.is_subset_of(g.vertices())) {
    r.fail(where + ": counterexample names vertices outside the graph");
    return;
  }
  const Graph h = induced_subgraph(g, s);
  if (oracle::simplicial_vertices(h) != 0) r.fail(where + ": counterexample has a simplicial vertex");
  if (sss_exists(h)) r.fail(where + ": counterexample has a strong stable set");
}

void check_sp_claim(const Graph& g, VertexSet within, bool claimed, const json& cex,
                    const std::string& where, Revalidation& r) {
  if (!claimed) {
    if (cex.is_null()) {
      r.fail(where + ": negative verdict without counterexample");
      return;
    }
    const VertexSet s = vertex_set_from(cex);
    if (!s.is_subset_of(within)) r.fail(where + ": counterexample leaves the subgraph");
    check_counterexample(g, s, where, r);
    return;
  }
  const Graph h = induced_subgraph(g, within);
  const bool actual = h.order() <= 10 ? oracle::is_strongly_perfect(h)
                                      : is_strongly_perfect(h, SpOptions{.memoize = false}).is_sp;
  if (!actual) r.fail(where + ": graph is not strongly perfect");
}

void revalidate_sss(const Graph& g, const json& doc, Revalidation& r) {
  const bool claimed = doc.at("verdict").at("has_sss").get<bool>();
  if (claimed) {
    if (!definitionally_sss(g, vertex_set_from(doc.at("witnesses").at("sss")))) {
      r.fail("sss witness is not a strong stable set");
    }
  } else if (sss_exists(g)) {
    r.fail("graph has a strong stable set");
  }
}

void revalidate_mnsp(const Graph& g, const json& doc, Revalidation& r) {
  const auto& v = doc.at("verdict");
  const auto& w = doc.at("witnesses");
  const bool no_sss = v.at("no_sss").get<bool>();
  if (no_sss) {
    if (sss_exists(g)) r.fail("graph has a strong stable set");
  } else if (!definitionally_sss(g, vertex_set_from(w.at("sss")))) {
    r.fail("sss witness is not a strong stable set");
  }
  bool all_sp = true;
  std::vector<bool> seen(g.order(), false);
  for (const auto& d : w.at("deletions")) {
    const int x = d.at("vertex").get<int>();
    if (x < 0 || x >= g.order() || seen[x]) {
      r.fail("bad deletion vertex");
      continue;
    }
    seen[x] = true;
    const bool sp = d.at("is_sp").get<bool>();
    all_sp = all_sp && sp;
    check_sp_claim(g, g.vertices().without(x), sp, d.value("counterexample", json()),
                   "deletion of " + std::to_string(x), r);
  }
  if (std::count(seen.begin(), seen.end(), true) != g.order()) r.fail("missing deletions");
  if (v.at("is_mnsp").get<bool>() != (no_sss && all_sp)) r.fail("is_mnsp inconsistent");
}

void revalidate_status(const Graph& g, const json& doc, Revalidation& r) {
  const auto& v = doc.at("verdict");
  const auto& w = doc.at("witnesses");
  const int x = v.at("vertex").get<int>();
  if (x < 0 || x >= g.order()) {
    r.fail("status vertex out of range");
    return;
  }
  const std::string m = v.at("membership").get<std::string>();
  const json& avoid = w.at("sss_without_vertex");
  const json& with = w.at("sss_with_vertex");
  if (!avoid.is_null()) {
    const VertexSet s = vertex_set_from(avoid);
    if (!definitionally_sss(g, s) || s.contains(x)) r.fail("sss_without_vertex is invalid");
  }
  if (!with.is_null()) {
    const VertexSet s = vertex_set_from(with);
    if (!definitionally_sss(g, s) || !s.contains(x)) r.fail("sss_with_vertex is invalid");
  }
  const bool wanted = m == "wanted", unwanted = m == "unwanted";
  if (wanted != avoid.is_null() || unwanted != with.is_null()) {
    r.fail("membership disagrees with witnesses");
  }
  const VertexStatus st = vertex_status(g, x);
  if (membership_name(st.membership) != m || st.desirable != v.at("desirable").get<bool>() ||
      st.undesirable != v.at("undesirable").get<bool>()) {
    r.fail("recomputed status differs");
  }
}

void revalidate_basis(const Graph& g, const json& doc, Revalidation& r) {
  const auto& members = doc.at("witnesses").at("members");
  std::vector<std::string> keys;
  bool all_sp = true;
  for (const auto& m : members) {
    const VertexSet s = vertex_set_from(m.at("vertices"));
    if (!s.is_subset_of(g.vertices()) || s == g.vertices()) {
      r.fail("basis member is not a proper subgraph");
      continue;
    }
    const Graph h = induced_subgraph(g, s);
    if (oracle::simplicial_vertices(h) != 0) r.fail("basis member has a simplicial vertex");
    if (canonical_key(h).bytes != m.at("graph6").get<std::string>()) {
      r.fail("basis member key mismatch");
    }
    keys.push_back(m.at("graph6").get<std::string>());
    const bool sp = m.at("is_sp").get<bool>();
    all_sp = all_sp && sp;
    check_sp_claim(g, s, sp, m.value("counterexample", json()), "basis member", r);
  }
  std::sort(keys.begin(), keys.end());
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
    r.fail("basis members repeat an isomorphism class");
  }
  if (keys.size() != basis(g).members.size()) r.fail("basis is incomplete");
  if (doc.at("verdict").at("strong").get<bool>() != all_sp) r.fail("strong flag inconsistent");
}

void revalidate_detect(const Graph& g, const json& doc, Revalidation& r) {
  const auto& v = doc.at("verdict");
  if (v.at("forbidden_free").get<bool>()) {
    if (contains_forbidden(g, v.at("include_graph_vi").get<bool>())) {
      r.fail("graph contains a forbidden structure");
    }
    return;
  }
  const auto& w = doc.at("witnesses");
  const VertexSet s = vertex_set_from(w.at("structure"));
  if (!s.is_subset_of(g.vertices())) {
    r.fail("structure leaves the graph");
    return;
  }
  const std::string kind = w.at("kind").get<std::string>();
  const Graph h = induced_subgraph(g, s);
  if (kind == "odd-hole") {
    if (s.size() < 5 || s.size() % 2 == 0 || !oracle::induces_cycle(g, s.mask())) {
      r.fail("structure is not an odd hole");
    }
  } else if (kind == "antihole") {
    if (s.size() < 6 || !oracle::induces_cycle(complement(h), h.vertices().mask())) {
      r.fail("structure is not a long antihole");
    }
  } else if (kind == "family") {
    const auto& f = w.at("family");
    std::string params;
    for (const auto& [name, val] : f.at("params").items()) {
      params += (params.empty() ? "" : ",") + name + "=" + std::to_string(val.get<int>());
    }
    const Graph pattern = make_family(parse_family_spec(f.at("name").get<std::string>(), params));
    if (!isomorphic(pattern, h)) r.fail("structure is not isomorphic to the named family member");
  } else {
    r.fail("unknown structure kind " + kind);
  }
}

}  // namespace

Revalidation revalidate(const json& doc) {
  Revalidation r;
  try {
    if (doc.at("schema").get<int>() != kSchemaVersion) {
      r.fail("unsupported schema version");
      return r;
    }
    const Graph g = parse_graph6(doc.at("input").at("graph6").get<std::string>());
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind == "sss") {
      revalidate_sss(g, doc, r);
    } else if (kind == "sp") {
      check_sp_claim(g, g.vertices(), doc.at("verdict").at("is_sp").get<bool>(),
                     doc.at("witnesses").value("counterexample", json()), "graph", r);
    } else if (kind == "mnsp") {
      revalidate_mnsp(g, doc, r);
    } else if (kind == "status") {
      revalidate_status(g, doc, r);
    } else if (kind == "basis") {
      revalidate_basis(g, doc, r);
    } else if (kind == "detect") {
      revalidate_detect(g, doc, r);
    } else {
      r.fail("unknown certificate kind " + kind);
    }
  } catch (const json::exception& e) {
    r.fail(std::string("malformed certificate: ") + e.what());
  } catch (const Error& e) {
    r.fail(std::string("malformed certificate: ") + e.what());
  }
  return r;
}

}  // namespace sperf::cli
