#include "sperf/detect.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "sperf/error.hpp"

namespace sperf {

VertexSet simplicial_vertices(const Graph& g, VertexSet within) {
  VertexSet out;
  for (int v : within) {
    if (g.is_clique(g.neighbors(v) & within)) out.insert(v);
  }
  return out;
}

VertexSet simplicial_vertices(const Graph& g) { return simplicial_vertices(g, g.vertices()); }

namespace {

// All cliques, including the empty one, in no particular order.
void collect_cliques(const Graph& g, VertexSet current, VertexSet candidates,
                     std::vector<VertexSet>& out) {
  out.push_back(current);
  for (int v : candidates) {
    candidates.erase(v);
    collect_cliques(g, current.with(v), candidates & g.neighbors(v), out);
  }
}

std::vector<VertexSet> cliques_by_size(const Graph& g) {
  std::vector<VertexSet> all;
  collect_cliques(g, {}, g.vertices(), all);
  std::sort(all.begin(), all.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a.mask() < b.mask();
  });
  return all;
}

}  // namespace

std::optional<CutsetWitness> find_clique_cutset(const Graph& g) {
  for (VertexSet k : cliques_by_size(g)) {
    auto comps = components(g, g.vertices() - k);
    if (comps.size() >= 2) {
      return CutsetWitness{k, comps.front(), g.vertices() - k - comps.front()};
    }
  }
  return std::nullopt;
}

std::vector<CutsetWitness> all_cutset_splits(const Graph& g) {
  std::vector<CutsetWitness> out;
  for (VertexSet k : cliques_by_size(g)) {
    auto comps = components(g, g.vertices() - k);
    if (comps.size() < 2) continue;
    for (VertexSet a : comps) out.push_back({k, a, g.vertices() - k - a});
  }
  return out;
}

bool restricts_to_side(const Graph& g, const CutsetWitness& w) {
  if (w.K.size() == 1 && g.neighbors(w.K.first()).intersects(w.A)) return true;
  for (int b : w.B) {
    if (w.K.is_subset_of(g.neighbors(b))) return false;
  }
  return true;
}

namespace {

// DFS over induced paths starting at their least vertex s. A path is
// extended by a neighbor of its last vertex that sees no interior vertex;
// a neighbor of s closes a hole.
class HoleSearch {
 public:
  HoleSearch(const Graph& g, int min_length, bool odd_only)
      : g_(g), min_length_(min_length), odd_only_(odd_only) {}

  std::optional<VertexSet> run() {
    for (int s = 0; s < g_.order(); ++s) {
      start_ = s;
      allowed_ = VertexSet(g_.vertices().mask() & ~((std::uint64_t{2} << s) - 1));
      for (int p1 : g_.neighbors(s) & allowed_) {
        // Orient the cycle: its second vertex is smaller than its last.
        if (extend(VertexSet{s, p1}, VertexSet{}, p1, 2, p1)) return found_;
      }
    }
    return std::nullopt;
  }

 private:
  // interior_nbhd: union of neighborhoods of the path minus its two ends.
  bool extend(VertexSet path, VertexSet interior_nbhd, int last, int size, int second) {
    const VertexSet ext = (g_.neighbors(last) & allowed_) - path - interior_nbhd;
    for (int x : ext) {
      if (g_.adjacent(x, start_)) {
        if (size < 3 || x < second) continue;
        const int len = size + 1;
        if (len >= min_length_ && (!odd_only_ || len % 2 == 1)) {
          found_ = path.with(x);
          return true;
        }
        continue;
      }
      if (extend(path.with(x), interior_nbhd | g_.neighbors(last), x, size + 1, second)) {
        return true;
      }
    }
    return false;
  }

  const Graph& g_;
  int min_length_;
  bool odd_only_;
  int start_ = 0;
  VertexSet allowed_;
  VertexSet found_;
};

}  // namespace

std::optional<VertexSet> find_hole(const Graph& g, int min_length) {
  return HoleSearch(g, std::max(min_length, 4), false).run();
}

std::optional<VertexSet> find_odd_hole(const Graph& g) { return HoleSearch(g, 5, true).run(); }

std::optional<VertexSet> find_long_antihole(const Graph& g) {
  if (g.order() < 6) return std::nullopt;
  return HoleSearch(complement(g), 6, false).run();
}

std::optional<VertexSet> find_claw(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    const auto nb = g.neighbors(v).to_vector();
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        for (std::size_t k = j + 1; k < nb.size(); ++k) {
          if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k])) {
            return VertexSet{v, nb[i], nb[j], nb[k]};
          }
        }
      }
  }
  return std::nullopt;
}

namespace {

class Matcher {
 public:
  Matcher(const Graph& p, const Graph& h) : p_(p), h_(h), map_(p.order(), -1) {
    // Visit pattern vertices so that each one after the first of its
    // component has an already-placed neighbor.
    VertexSet seen;
    for (int root = 0; root < p.order(); ++root) {
      if (seen.contains(root)) continue;
      std::vector<int> queue{root};
      seen.insert(root);
      for (std::size_t i = 0; i < queue.size(); ++i) {
        order_.push_back(queue[i]);
        for (int w : p.neighbors(queue[i]) - seen) {
          seen.insert(w);
          queue.push_back(w);
        }
      }
    }
  }

  bool run() { return place(0, VertexSet{}); }
  std::vector<int> result() const { return map_; }

 private:
  bool place(std::size_t i, VertexSet used) {
    if (i == order_.size()) return true;
    const int pv = order_[i];
    VertexSet cand = h_.vertices() - used;
    for (std::size_t j = 0; j < i; ++j) {
      const int q = order_[j];
      const VertexSet hn = h_.neighbors(map_[q]);
      cand = p_.adjacent(pv, q) ? (cand & hn) : (cand - hn);
    }
    for (int hv : cand) {
      if (h_.degree(hv) < p_.degree(pv)) continue;
      map_[pv] = hv;
      if (place(i + 1, used.with(hv))) return true;
    }
    map_[pv] = -1;
    return false;
  }

  const Graph& p_;
  const Graph& h_;
  std::vector<int> order_;
  std::vector<int> map_;
};

const std::vector<Family>& forbidden_families() {
  static const std::vector<Family> f{Family::GraphI, Family::GraphII, Family::GraphIII,
                                     Family::GraphIV, Family::GraphV, Family::GraphVI};
  return f;
}

struct CachedInstance {
  FamilySpec spec;
  Graph graph;
};

// Instances of f on exactly `order` vertices, built once per process.
const std::vector<CachedInstance>& instances_of_order(Family f, int order) {
  static std::mutex mu;
  static std::map<std::pair<Family, int>, std::vector<CachedInstance>> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(f, order);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<CachedInstance> list;
  for (const auto& spec : specs_up_to_order(f, order)) {
    if (family_order(spec) == order) list.push_back({spec, make_family(spec)});
  }
  return cache.emplace(key, std::move(list)).first->second;
}

}  // namespace

std::optional<EmbeddingWitness> find_induced_embedding(const Graph& pattern, const Graph& host) {
  if (pattern.order() > host.order()) return std::nullopt;
  if (pattern.edge_count() > host.edge_count()) return std::nullopt;
  Matcher m(pattern, host);
  if (!m.run()) return std::nullopt;
  return EmbeddingWitness{m.result()};
}

std::string ForbiddenTag::label() const {
  switch (kind) {
    case ForbiddenKind::OddHole: return "odd-hole";
    case ForbiddenKind::LongAntihole: return "antihole-" + std::to_string(witness.size());
    case ForbiddenKind::FamilyMember:
      return std::string(family_name(spec->family)) + "(" + format_params(*spec) + ")";
  }
  return "unknown";
}

std::optional<ForbiddenTag> contains_forbidden(const Graph& g, bool include_graph_vi) {
  if (auto h = find_odd_hole(g)) return ForbiddenTag{ForbiddenKind::OddHole, std::nullopt, *h};
  if (auto h = find_long_antihole(g)) {
    return ForbiddenTag{ForbiddenKind::LongAntihole, std::nullopt, *h};
  }
  for (Family f : forbidden_families()) {
    if (f == Family::GraphVI && !include_graph_vi) continue;
    for (int order = 1; order <= g.order(); ++order) {
      for (const auto& inst : instances_of_order(f, order)) {
        if (auto e = find_induced_embedding(inst.graph, g)) {
          VertexSet img;
          for (int v : e->map) img.insert(v);
          return ForbiddenTag{ForbiddenKind::FamilyMember, inst.spec, img};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace sperf
