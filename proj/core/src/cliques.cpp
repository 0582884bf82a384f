#include "sperf/cliques.hpp"

#include <algorithm>

#include "sperf/error.hpp"

namespace sperf {

BudgetMeter::BudgetMeter(Budget b) : budget_(b), start_(std::chrono::steady_clock::now()) {}

std::chrono::milliseconds BudgetMeter::elapsed() const {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               start_);
}

void BudgetMeter::tick() {
  ++nodes_;
  if (nodes_ > budget_.max_nodes) {
    throw Error(Errc::BudgetExceeded,
                "search node budget of " + std::to_string(budget_.max_nodes) + " exhausted");
  }
  if ((nodes_ & 0xFFF) == 0 && elapsed() > budget_.max_time) {
    throw Error(Errc::BudgetExceeded, "time budget of " +
                                          std::to_string(budget_.max_time.count()) +
                                          " ms exhausted");
  }
}

namespace {

// Bron-Kerbosch with Tomita pivoting.
void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x, CliqueList& out) {
  if (p.empty()) {
    if (x.empty()) out.push_back(r);
    return;
  }
  int pivot = -1, best = -1;
  for (int u : p | x) {
    const int c = (p & g.neighbors(u)).size();
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  for (int v : p - g.neighbors(pivot)) {
    const VertexSet nv = g.neighbors(v);
    bron_kerbosch(g, r.with(v), p & nv, x & nv, out);
    p.erase(v);
    x.insert(v);
  }
}

class SssSearch {
 public:
  SssSearch(const Graph& g, CliqueList cliques, BudgetMeter* meter)
      : g_(g), cliques_(std::move(cliques)), meter_(meter) {}

  std::optional<VertexSet> run(VertexSet chosen, VertexSet forbid) {
    VertexSet blocked = forbid;
    for (int v : chosen) blocked |= g_.neighbors(v);
    if (search(chosen, blocked)) return result_;
    return std::nullopt;
  }

 private:
  // blocked: vertices that may no longer join (forbidden or adjacent to a
  // chosen vertex).
  bool search(VertexSet chosen, VertexSet blocked) {
    if (meter_) meter_->tick();
    int best = -1;
    int best_size = 65;
    for (std::size_t i = 0; i < cliques_.size(); ++i) {
      const VertexSet c = cliques_[i];
      if (c.intersects(chosen)) continue;
      const int avail = (c - blocked).size();
      if (avail < best_size) {
        best_size = avail;
        best = static_cast<int>(i);
        if (avail == 0) return false;
      }
    }
    if (best < 0) {
      result_ = chosen;
      return true;
    }
    VertexSet tried;
    for (int v : cliques_[best] - blocked) {
      if (search(chosen.with(v), blocked | tried | g_.neighbors(v))) return true;
      tried.insert(v);
    }
    return false;
  }

  const Graph& g_;
  CliqueList cliques_;
  BudgetMeter* meter_;
  VertexSet result_;
};

}  // namespace

CliqueList maximal_cliques(const Graph& g) {
  CliqueList out;
  if (g.order() == 0) return out;
  bron_kerbosch(g, {}, g.vertices(), {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<VertexSet> find_sss(const Graph& g, const SssQuery& q, BudgetMeter* meter) {
  if (q.require_in.intersects(q.forbid)) {
    throw Error(Errc::InvalidQuery, "a vertex is both required and forbidden");
  }
  if (!q.require_in.is_subset_of(g.vertices()) || !q.forbid.is_subset_of(g.vertices())) {
    throw Error(Errc::InvalidQuery, "query names a vertex outside the graph");
  }
  if (!g.is_stable(q.require_in)) {
    throw Error(Errc::InvalidQuery, "required vertices are not pairwise nonadjacent");
  }
  return SssSearch(g, maximal_cliques(g), meter).run(q.require_in, q.forbid);
}

bool has_sss(const Graph& g, BudgetMeter* meter) { return find_sss(g, {}, meter).has_value(); }

bool is_strong_stable_set(const Graph& g, VertexSet s) {
  if (!s.is_subset_of(g.vertices()) || !g.is_stable(s)) return false;
  for (VertexSet c : maximal_cliques(g)) {
    if (!c.intersects(s)) return false;
  }
  return true;
}

const char* membership_name(Membership m) {
  switch (m) {
    case Membership::Wanted: return "wanted";
    case Membership::Unwanted: return "unwanted";
    case Membership::Free: return "free";
  }
  return "free";
}

namespace {

struct Forcing {
  bool avoidable;   // some SSS misses v
  bool includable;  // some SSS contains v
};

Forcing forcing(const Graph& g, int v, BudgetMeter* meter) {
  return {find_sss(g, {{}, VertexSet::single(v)}, meter).has_value(),
          find_sss(g, {VertexSet::single(v), {}}, meter).has_value()};
}

}  // namespace

VertexStatus vertex_status(const Graph& g, int v, BudgetMeter* meter) {
  if (v < 0 || v >= g.order()) throw Error(Errc::BadVertex, "vertex out of range");
  const Forcing f = forcing(g, v, meter);
  if (!f.avoidable && !f.includable) {
    throw Error(Errc::NoSssInGraph, "graph has no strong stable set");
  }
  VertexStatus st;
  st.membership = !f.avoidable ? Membership::Wanted
                  : !f.includable ? Membership::Unwanted
                                  : Membership::Free;
  if (st.membership == Membership::Free) return st;
  bool never_forced = true;
  for (int u = 0; u < g.order() && never_forced; ++u) {
    if (u == v) continue;
    const Graph h = remove_vertex(g, u);
    const Forcing fu = forcing(h, u < v ? v - 1 : v, meter);
    never_forced = fu.avoidable && fu.includable;
  }
  st.desirable = never_forced && st.membership == Membership::Wanted;
  st.undesirable = never_forced && st.membership == Membership::Unwanted;
  return st;
}

}  // namespace sperf
