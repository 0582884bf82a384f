#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "certificate.hpp"
#include "sperf/enumerate.hpp"
#include "sperf/error.hpp"
#include "sperf/graph6.hpp"

namespace sperf::cli {

namespace {

struct GraphInput {
  std::string g6;
  std::string file;
  std::string family;
  std::string params;
};

struct Loaded {
  Graph graph;
  Provenance provenance;
  std::optional<FamilyInstance> instance;
};

Loaded load(const GraphInput& in) {
  const int given = !in.g6.empty() + !in.file.empty() + !in.family.empty();
  if (given != 1) {
    throw Error(Errc::InvalidQuery, "give exactly one of --g6, --input, --family");
  }
  Loaded l;
  if (!in.family.empty()) {
    const FamilySpec spec = parse_family_spec(in.family, in.params);
    l.instance = make_family_instance(spec);
    l.graph = l.instance->graph;
    l.provenance.family = spec;
  } else if (!in.g6.empty()) {
    l.graph = parse_graph6(in.g6);
  } else {
    std::ifstream f(in.file);
    if (!f) throw Error(Errc::StreamParseError, "cannot open " + in.file);
    auto graphs = read_graph6_stream(f);
    if (graphs.size() != 1) {
      throw Error(Errc::StreamParseError,
                  in.file + " holds " + std::to_string(graphs.size()) + " records, expected 1");
    }
    l.graph = graphs.front();
    l.provenance.file = in.file;
    l.provenance.stream_index = 1;
  }
  return l;
}

int resolve_vertex(const Loaded& l, const std::string& spec) {
  if (spec == "head" || spec == "head1" || spec == "head2") {
    if (!l.instance) throw Error(Errc::BadVertex, "--vertex head needs a --family input");
    auto& marks = l.instance->marks;
    auto it = marks.find(spec == "head" && !marks.count("head") ? "head1" : spec);
    if (it == marks.end()) throw Error(Errc::BadVertex, "family instance has no " + spec);
    return it->second;
  }
  int v = -1;
  try {
    std::size_t used = 0;
    v = std::stoi(spec, &used);
    if (used != spec.size()) v = -1;
  } catch (const std::exception&) {
    v = -1;
  }
  if (v < 0 || v >= l.graph.order()) throw Error(Errc::BadVertex, "bad --vertex " + spec);
  return v;
}

json sp_verdict_json(const SpVerdict& v) {
  json j{{"is_sp", v.is_sp}};
  if (v.counterexample) j["counterexample"] = vertex_list(*v.counterexample);
  return j;
}

std::unique_ptr<SpCache> open_cache(const std::string& flag) {
  std::string path = flag;
  if (path.empty()) {
    if (const char* env = std::getenv("SPERF_CACHE")) path = env;
  }
  if (path.empty()) return nullptr;
  return std::make_unique<SpCache>(path);
}

struct CheckFlags {
  std::string kind;
  GraphInput input;
  std::string vertex = "head";
  std::uint64_t max_nodes = Budget{}.max_nodes;
  long long max_time_ms = Budget{}.max_time.count();
  bool no_memo = false;
  bool prune = false;
  std::string cache;
  bool revalidate = false;
  bool include_graph_vi = true;
};

int run_check(const CheckFlags& f, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  const Loaded l = load(f.input);
  const Graph& g = l.graph;
  auto cache = open_cache(f.cache);
  SpOptions opt;
  opt.budget = Budget{f.max_nodes, std::chrono::milliseconds(f.max_time_ms)};
  opt.memoize = !f.no_memo;
  opt.prune_cutsets = f.prune;
  opt.cache = cache.get();
  SpStats stats;
  BudgetMeter meter(opt.budget);

  json doc = certificate_header(f.kind, g, l.provenance);
  json verdict, witnesses = json::object();
  bool holds = false;

  if (f.kind == "sss") {
    auto s = find_sss(g, {}, &meter);
    holds = s.has_value();
    verdict = {{"has_sss", holds}};
    if (s) witnesses["sss"] = vertex_list(*s);
    stats.search_nodes = meter.nodes();
  } else if (f.kind == "sp") {
    const SpVerdict v = is_strongly_perfect(g, opt, &stats);
    holds = v.is_sp;
    verdict = {{"is_sp", v.is_sp}};
    if (v.counterexample) witnesses["counterexample"] = vertex_list(*v.counterexample);
  } else if (f.kind == "mnsp") {
    const MnspCertificate c = is_mnsp(g, opt, &stats);
    holds = c.is_mnsp;
    verdict = {{"is_mnsp", c.is_mnsp}, {"no_sss", c.no_sss_witnessed}};
    if (!c.no_sss_witnessed) witnesses["sss"] = vertex_list(*find_sss(g, {}, &meter));
    json dels = json::array();
    for (const auto& [v, d] : c.deletions) {
      json e = sp_verdict_json(d);
      e["vertex"] = v;
      dels.push_back(e);
    }
    witnesses["deletions"] = dels;
    verdict["mnsp_has_no_simplicial"] = !c.is_mnsp || simplicial_vertices(g).empty();
  } else if (f.kind == "status") {
    const int v = resolve_vertex(l, f.vertex);
    const VertexStatus st = vertex_status(g, v, &meter);
    holds = st.desirable || st.undesirable;
    verdict = {{"vertex", v},
               {"membership", membership_name(st.membership)},
               {"desirable", st.desirable},
               {"undesirable", st.undesirable}};
    auto without = find_sss(g, {{}, VertexSet::single(v)}, &meter);
    auto with = find_sss(g, {VertexSet::single(v), {}}, &meter);
    witnesses["sss_without_vertex"] = without ? vertex_list(*without) : json();
    witnesses["sss_with_vertex"] = with ? vertex_list(*with) : json();
    stats.search_nodes = meter.nodes();
  } else if (f.kind == "basis") {
    const BasisInventory inv = basis(g);
    json members = json::array();
    bool strong = true;
    for (const auto& m : inv.members) {
      const SpVerdict v = is_strongly_perfect(g, m.representative, opt, &stats);
      strong = strong && v.is_sp;
      json e = sp_verdict_json(v);
      e["graph6"] = m.key.bytes;
      e["order"] = m.representative.size();
      e["vertices"] = vertex_list(m.representative);
      members.push_back(e);
    }
    holds = strong;
    verdict = {{"strong", strong}, {"members", inv.members.size()}};
    witnesses["members"] = members;
  } else if (f.kind == "detect") {
    const auto tag = contains_forbidden(g, f.include_graph_vi);
    holds = !tag.has_value();
    verdict = {{"forbidden_free", holds}, {"include_graph_vi", f.include_graph_vi}};
    if (tag) {
      verdict["tag"] = tag->label();
      witnesses["structure"] = vertex_list(tag->witness);
      switch (tag->kind) {
        case ForbiddenKind::OddHole: witnesses["kind"] = "odd-hole"; break;
        case ForbiddenKind::LongAntihole: witnesses["kind"] = "antihole"; break;
        case ForbiddenKind::FamilyMember:
          witnesses["kind"] = "family";
          witnesses["family"] = {{"name", family_name(tag->spec->family)},
                                 {"params", provenance_json({tag->spec, {}, {}})["params"]}};
          break;
      }
    }
  } else {
    err << "sperf: unknown check kind '" << f.kind << "'\n";
    return kUsage;
  }

  doc["verdict"] = verdict;
  doc["witnesses"] = witnesses;
  doc["budget"] = budget_json(opt.budget, stats.search_nodes);
  doc["wall_time_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
  out << doc.dump(2) << '\n';
  if (f.revalidate) {
    const Revalidation r = revalidate(doc);
    for (const auto& p : r.problems) err << "revalidation: " << p << '\n';
    err << "revalidation: " << (r.valid ? "ok" : "FAILED") << '\n';
    if (!r.valid) return kUsage;
  }
  return holds ? kHolds : kFails;
}

int run_gen(const GraphInput& in, const std::string& format, std::ostream& out) {
  const Loaded l = load(in);
  if (format == "g6") {
    out << write_graph6(l.graph) << '\n';
  } else if (format == "dot") {
    out << write_dot(l.graph);
  } else {
    json adj = json::array();
    for (int v = 0; v < l.graph.order(); ++v) adj.push_back(vertex_list(l.graph.neighbors(v)));
    json doc{{"order", l.graph.order()},
             {"edges", l.graph.edge_count()},
             {"graph6", write_graph6(l.graph)},
             {"adjacency", adj},
             {"provenance", provenance_json(l.provenance)}};
    if (l.instance) {
      doc["marks"] = l.instance->marks;
      doc["sequences"] = l.instance->sequences;
    }
    out << doc.dump(2) << '\n';
  }
  return kHolds;
}

int run_scan(int max_n, const std::string& input, int jobs, bool include_vi, std::ostream& out,
             std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<Graph> graphs;
  json source;
  if (!input.empty()) {
    std::ifstream f(input);
    if (!f) throw Error(Errc::StreamParseError, "cannot open " + input);
    graphs = read_graph6_stream(f);
    source = {{"input", input}};
  } else {
    for (int n = 0; n <= max_n; ++n) {
      auto level = enumerate_nonisomorphic(n);
      graphs.insert(graphs.end(), level.begin(), level.end());
    }
    source = {{"max_n", max_n}};
  }
  ScanOptions opt;
  opt.include_graph_vi = include_vi;
  opt.jobs = jobs;
  const std::size_t total = graphs.size();
  opt.progress = [&err, total](std::size_t done) {
    if (done % 1000 == 0 || done == total) err << "scan: " << done << "/" << total << '\n';
  };
  const ScanReport r = scan_conjecture(graphs, opt);
  json doc{{"schema", kSchemaVersion},
           {"tool", "sperf"},
           {"version", kToolVersion},
           {"command", "scan"},
           {"source", source},
           {"include_graph_vi", r.include_graph_vi},
           {"total", r.total},
           {"forbidden", r.forbidden},
           {"checked", r.checked},
           {"violations", r.violations},
           {"wall_time_ms", std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - t0)
                                .count()}};
  out << doc.dump(2) << '\n';
  return r.violations.empty() ? kHolds : kFails;
}

int run_revalidate(const std::string& file, std::ostream& out) {
  std::ifstream f(file);
  if (!f) throw Error(Errc::StreamParseError, "cannot open " + file);
  json doc;
  try {
    doc = json::parse(f);
  } catch (const json::parse_error& e) {
    throw Error(Errc::StreamParseError, std::string("certificate is not JSON: ") + e.what());
  }
  const Revalidation r = revalidate(doc);
  out << json{{"valid", r.valid}, {"problems", r.problems}}.dump(2) << '\n';
  return r.valid ? kHolds : kFails;
}

void add_input_flags(CLI::App* app, GraphInput& in) {
  app->add_option("--g6", in.g6, "graph6 record");
  app->add_option("--input", in.file, "file holding one graph6 record");
  app->add_option("--family", in.family, "family name (see gen --list)");
  app->add_option("--params", in.params, "family parameters, e.g. k=6,t=2");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Strong perfection certifier", "sperf"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  GraphInput gen_in;
  std::string format = "g6";
  bool list = false;
  auto* gen = app.add_subcommand("gen", "generate a family instance");
  add_input_flags(gen, gen_in);
  gen->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"g6", "dot", "json"}));
  gen->add_flag("--list", list, "list families and their parameters");

  CheckFlags cf;
  auto* check = app.add_subcommand("check", "certify a property of one graph");
  check->add_option("kind", cf.kind, "sss, sp, mnsp, status, basis or detect")
      ->required()
      ->check(CLI::IsMember({"sss", "sp", "mnsp", "status", "basis", "detect"}));
  add_input_flags(check, cf.input);
  check->add_option("--vertex", cf.vertex, "vertex for status: index or head/head1/head2");
  check->add_option("--max-nodes", cf.max_nodes, "search node budget");
  check->add_option("--max-time-ms", cf.max_time_ms, "wall time budget in milliseconds");
  check->add_flag("--no-memo", cf.no_memo, "disable the verdict memo");
  check->add_flag("--prune-cutsets", cf.prune, "enable clique cutset pruning");
  check->add_option("--cache", cf.cache, "persistent verdict cache (default $SPERF_CACHE)");
  check->add_flag("--revalidate", cf.revalidate, "re-check the emitted certificate");
  check->add_flag("!--no-graph-vi", cf.include_graph_vi, "detect: leave Graph VI out");

  int max_n = 6, jobs = 1;
  std::string scan_input;
  bool scan_vi = true;
  auto* scan = app.add_subcommand("scan", "scan graphs for conjecture counterexamples");
  scan->add_option("--max-n", max_n, "enumerate all graphs up to this order")
      ->check(CLI::Range(0, kMaxEnumerationOrder));
  scan->add_option("--input", scan_input, "graph6 stream instead of enumeration");
  scan->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  scan->add_flag("!--no-graph-vi", scan_vi, "leave Graph VI out of the forbidden list");

  std::string cert_file;
  auto* reval = app.add_subcommand("revalidate", "re-check a certificate file");
  reval->add_option("file", cert_file, "certificate JSON")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kHolds;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kHolds;
  } catch (const CLI::ParseError& e) {
    err << "sperf: " << e.what() << '\n';
    return kUsage;
  }
  for (auto* sub : {gen, check, scan, reval}) {
    if (sub->parsed() && sub->get_help_ptr() && sub->get_help_ptr()->count() > 0) {
      out << sub->help();
      return kHolds;
    }
  }

  try {
    if (gen->parsed()) {
      if (list) {
        for (Family f : all_families()) {
          out << family_name(f);
          for (const auto& r : family_rules(f)) {
            out << ' ' << r.name << (r.parity == Parity::Even ? ":even" : r.parity == Parity::Odd ? ":odd" : "")
                << ">=" << r.minimum;
          }
          out << '\n';
        }
        return kHolds;
      }
      return run_gen(gen_in, format, out);
    }
    if (check->parsed()) return run_check(cf, out, err);
    if (scan->parsed()) return run_scan(max_n, scan_input, jobs, scan_vi, out, err);
    return run_revalidate(cert_file, out);
  } catch (const Error& e) {
    err << "sperf: " << e.what() << '\n';
    return e.code() == Errc::BudgetExceeded ? kBudget : kUsage;
  }
}

}  // namespace sperf::cli
