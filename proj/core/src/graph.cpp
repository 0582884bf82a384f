#include "sperf/graph.hpp"

#include <sstream>
#include <string>

#include "sperf/error.hpp"

namespace sperf {

int Graph::edge_count() const {
  int twice = 0;
  for (VertexSet n : adj_) twice += n.size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_clique(VertexSet s) const {
  for (int v : s) {
    if (!(s - adj_[v]).without(v).empty()) return false;
  }
  return true;
}

bool Graph::is_stable(VertexSet s) const {
  for (int v : s) {
    if (adj_[v].intersects(s)) return false;
  }
  return true;
}

VertexSet Graph::common_neighbors(VertexSet s) const {
  VertexSet out = vertices() - s;
  for (int v : s) out &= adj_[v];
  return out;
}

GraphBuilder::GraphBuilder(int order) {
  if (order < 0 || order > kMaxOrder) {
    throw Error(Errc::OrderTooLarge,
                "graph order " + std::to_string(order) + " exceeds 64");
  }
  adj_.resize(order);
}

GraphBuilder::GraphBuilder(const Graph& g) : adj_(g.adj_) {}

int GraphBuilder::add_vertex() {
  if (order() >= kMaxOrder) {
    throw Error(Errc::OrderTooLarge, "graph order would exceed 64");
  }
  adj_.emplace_back();
  return order() - 1;
}

void GraphBuilder::check_vertex(int v) const {
  if (v < 0 || v >= order()) {
    throw Error(Errc::BadEdge, "vertex " + std::to_string(v) +
                                   " out of range for order " +
                                   std::to_string(order()));
  }
}

void GraphBuilder::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    throw Error(Errc::BadEdge, "loop at vertex " + std::to_string(u));
  }
  adj_[u].insert(v);
  adj_[v].insert(u);
}

void GraphBuilder::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u].erase(v);
  adj_[v].erase(u);
}

std::vector<int> GraphBuilder::add_path(int u, int v, int length) {
  check_vertex(u);
  check_vertex(v);
  if (length < 1) {
    throw Error(Errc::SizeViolation, "path length must be at least 1");
  }
  std::vector<int> inner;
  int prev = u;
  for (int i = 1; i < length; ++i) {
    int w = add_vertex();
    add_edge(prev, w);
    inner.push_back(w);
    prev = w;
  }
  add_edge(prev, v);
  return inner;
}

void GraphBuilder::make_complete(int v, std::span<const int> s) {
  for (int w : s) add_edge(v, w);
}

Graph build_graph(int order, std::span<const Edge> edges) {
  GraphBuilder b(order);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

VertexSet lift(VertexSet sub, VertexSet s) {
  VertexSet out;
  int i = 0;
  for (int v : s) {
    if (sub.contains(i)) out.insert(v);
    ++i;
  }
  return out;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  s &= g.vertices();
  std::vector<int> index(g.order(), -1);
  int next = 0;
  for (int v : s) index[v] = next++;
  GraphBuilder b(next);
  for (int v : s) {
    for (int w : g.neighbors(v) & s) {
      if (v < w) b.add_edge(index[v], index[w]);
    }
  }
  return b.build();
}

Graph remove_vertex(const Graph& g, int v) {
  return induced_subgraph(g, g.vertices().without(v));
}

Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v : g.vertices() - g.neighbors(u)) {
      if (u < v) b.add_edge(u, v);
    }
  }
  return b.build();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  GraphBuilder out(a.order() + b.order());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(u + a.order(), v + a.order());
  return out.build();
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  GraphBuilder b(g.order());
  for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
  return b.build();
}

std::vector<VertexSet> components(const Graph& g, VertexSet s) {
  std::vector<VertexSet> out;
  VertexSet rest = s;
  while (!rest.empty()) {
    VertexSet comp = VertexSet::single(rest.first());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      next = (next & rest) - comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

bool is_connected(const Graph& g, VertexSet s) {
  return components(g, s).size() <= 1;
}

std::string write_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph {\n";
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) out << "  " << v << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

Graph make_cycle(int k) {
  GraphBuilder b(k);
  for (int i = 0; i < k; ++i) b.add_edge(i, (i + 1) % k);
  return b.build();
}

Graph make_path(int vertices) {
  GraphBuilder b(vertices);
  for (int i = 0; i + 1 < vertices; ++i) b.add_edge(i, i + 1);
  return b.build();
}

Graph make_complete(int n) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

Graph make_empty(int n) { return GraphBuilder(n).build(); }

}  // namespace sperf
