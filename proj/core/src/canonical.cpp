#include "sperf/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>

#include "sperf/graph6.hpp"

namespace sperf {

namespace {

using Partition = std::vector<VertexSet>;  // ordered cells
using Rows = std::vector<std::uint64_t>;

// Splits cells by neighbour counts into each splitter cell until stable.
// Every decision depends only on cell structure, never on vertex labels.
void refine(const Graph& g, Partition& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t w = 0; w < cells.size(); ++w) {
      const VertexSet splitter = cells[w];
      Partition next;
      next.reserve(cells.size() + 4);
      for (VertexSet cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::array<VertexSet, kMaxOrder + 1> by_count{};
        int lo = kMaxOrder, hi = 0;
        for (int v : cell) {
          const int c = (g.neighbors(v) & splitter).size();
          by_count[c].insert(v);
          lo = std::min(lo, c);
          hi = std::max(hi, c);
        }
        if (lo == hi) {
          next.push_back(cell);
          continue;
        }
        for (int c = lo; c <= hi; ++c) {
          if (!by_count[c].empty()) next.push_back(by_count[c]);
        }
        changed = true;
      }
      cells.swap(next);
      if (changed) break;
    }
  }
}

Rows leaf_rows(const Graph& g, const Partition& cells, std::vector<int>& lab) {
  const int n = g.order();
  lab.assign(n, 0);
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) {
    lab[i] = cells[i].first();
    pos[lab[i]] = i;
  }
  Rows rows(n, 0);
  for (int i = 0; i < n; ++i) {
    std::uint64_t r = 0;
    for (int w : g.neighbors(lab[i])) r |= std::uint64_t{1} << pos[w];
    rows[i] = r;
  }
  return rows;
}

class Search {
 public:
  explicit Search(const Graph& g) : g_(g) {}

  void run() {
    Partition root{g_.vertices()};
    if (g_.order() == 0) {
      best_lab_.clear();
      best_rows_.clear();
      return;
    }
    std::vector<int> prefix;
    descend(root, prefix);
  }

  const std::vector<int>& best_lab() const { return best_lab_; }
  const Rows& best_rows() const { return best_rows_; }

 private:
  void descend(Partition cells, std::vector<int>& prefix) {
    refine(g_, cells);
    auto target = std::find_if(cells.begin(), cells.end(),
                               [](VertexSet c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const std::size_t ti = static_cast<std::size_t>(target - cells.begin());
    const VertexSet cell = *target;
    VertexSet explored;
    for (int x : cell) {
      if (!explored.empty() && in_explored_orbit(x, explored, prefix)) continue;
      explored.insert(x);
      Partition child = cells;
      child[ti] = VertexSet::single(x);
      child.insert(child.begin() + static_cast<long>(ti) + 1, cell.without(x));
      prefix.push_back(x);
      descend(std::move(child), prefix);
      prefix.pop_back();
    }
  }

  // True when some automorphism fixing the prefix pointwise carries an
  // already-explored sibling onto x.
  bool in_explored_orbit(int x, VertexSet explored,
                         const std::vector<int>& prefix) const {
    const int n = g_.order();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    bool any = false;
    for (const auto& aut : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(),
                               [&](int p) { return aut[p] == p; });
      if (!fixes) continue;
      any = true;
      for (int v = 0; v < n; ++v) {
        int a = find(v), b = find(aut[v]);
        if (a != b) parent[a] = b;
      }
    }
    if (!any) return false;
    const int rx = find(x);
    for (int e : explored) {
      if (find(e) == rx) return true;
    }
    return false;
  }

  void leaf(const Partition& cells) {
    std::vector<int> lab;
    Rows rows = leaf_rows(g_, cells, lab);
    if (best_lab_.empty()) {
      first_lab_ = lab;
      first_rows_ = rows;
      best_lab_ = std::move(lab);
      best_rows_ = std::move(rows);
      return;
    }
    if (rows == first_rows_) record_automorphism(first_lab_, lab);
    if (rows == best_rows_) {
      record_automorphism(best_lab_, lab);
    } else if (rows < best_rows_) {
      best_lab_ = std::move(lab);
      best_rows_ = std::move(rows);
    }
  }

  void record_automorphism(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> aut(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) aut[a[i]] = b[i];
    bool identity = true;
    for (std::size_t v = 0; v < aut.size(); ++v) {
      if (aut[v] != static_cast<int>(v)) {
        identity = false;
        break;
      }
    }
    if (!identity) automorphisms_.push_back(std::move(aut));
  }

  const Graph& g_;
  std::vector<int> best_lab_, first_lab_;
  Rows best_rows_, first_rows_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  Search search(g);
  search.run();
  const int n = g.order();
  CanonicalForm out;
  out.labeling.assign(n, 0);
  const auto& lab = search.best_lab();
  for (int i = 0; i < n; ++i) out.labeling[lab[i]] = i;
  out.graph = relabel(g, out.labeling);
  if (n <= kMaxGraph6Order) {
    out.key.bytes = write_graph6(out.graph);
  } else {
    out.key.bytes.push_back(static_cast<char>(n));
    for (std::uint64_t row : search.best_rows()) {
      for (int b = 0; b < 8; ++b) {
        out.key.bytes.push_back(static_cast<char>((row >> (8 * b)) & 0xFF));
      }
    }
  }
  return out;
}

CanonicalKey canonical_key(const Graph& g) { return canonical_form(g).key; }

bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() &&
         canonical_key(a) == canonical_key(b);
}

}  // namespace sperf
