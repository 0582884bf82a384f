#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sperf/vertex_set.hpp"

namespace sperf {

using Edge = std::pair<int, int>;

// Simple undirected graph on at most 64 vertices, adjacency stored as one
// bit mask per vertex. Instances are immutable once built; use GraphBuilder
// or build_graph to make one.
class Graph {
 public:
  Graph() = default;

  int order() const { return static_cast<int>(adj_.size()); }
  VertexSet vertices() const { return VertexSet::prefix(order()); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].size(); }
  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  int edge_count() const;

  // Edges (u, v) with u < v, ascending by (u, v).
  std::vector<Edge> edges() const;

  bool is_clique(VertexSet s) const;
  bool is_stable(VertexSet s) const;
  // Vertices adjacent to every member of s (members of s excluded).
  VertexSet common_neighbors(VertexSet s) const;

  bool operator==(const Graph&) const = default;

 private:
  friend class GraphBuilder;
  explicit Graph(std::vector<VertexSet> adj) : adj_(std::move(adj)) {}

  std::vector<VertexSet> adj_;
};

class GraphBuilder {
 public:
  GraphBuilder() = default;
  explicit GraphBuilder(int order);
  explicit GraphBuilder(const Graph& g);

  int order() const { return static_cast<int>(adj_.size()); }
  int add_vertex();
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  // Adds a path of `length` edges from u to v through length-1 new vertices;
  // returns the new internal vertices in path order.
  std::vector<int> add_path(int u, int v, int length);
  // Makes v adjacent to every member of s.
  void make_complete(int v, std::span<const int> s);

  Graph build() const { return Graph(adj_); }

 private:
  void check_vertex(int v) const;

  std::vector<VertexSet> adj_;
};

Graph build_graph(int order, std::span<const Edge> edges);
inline Graph build_graph(int order, std::initializer_list<Edge> edges) {
  return build_graph(order, std::span<const Edge>(edges.begin(), edges.size()));
}

// G[s], relabeled 0..|s|-1 in ascending order of the original labels.
Graph induced_subgraph(const Graph& g, VertexSet s);
Graph remove_vertex(const Graph& g, int v);
Graph complement(const Graph& g);
// Vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);
// Applies a relabeling: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

bool is_connected(const Graph& g, VertexSet s);
// Connected components of G[s], each as a vertex set, ordered by least member.
std::vector<VertexSet> components(const Graph& g, VertexSet s);

// Maps a vertex set of G[s] (relabeled) back to labels of g.
VertexSet lift(VertexSet sub, VertexSet s);

// Undirected DOT: one `u -- v;` line per edge, smaller endpoint first;
// isolated vertices get a bare `v;` line so the order survives.
std::string write_dot(const Graph& g);

// Standard named graphs used throughout tests and generators.
Graph make_cycle(int k);
Graph make_path(int vertices);
Graph make_complete(int n);
Graph make_empty(int n);

}  // namespace sperf
