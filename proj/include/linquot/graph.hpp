#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "linquot/ideal.hpp"

namespace linquot {

/// Undirected edge {u, v}, stored with u < v. Vertices are 1-based.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  Edge() = default;
  Edge(std::size_t a, std::size_t b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool touches(std::size_t w) const { return u == w || v == w; }
  bool shares_vertex(const Edge& o) const { return touches(o.u) || touches(o.v); }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple finite graph on the vertex set {1, ..., n}.
class Graph {
 public:
  Graph() = default;
  /// Validates endpoints and rejects loops; duplicate edges collapse.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t n() const { return n_; }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_edge(std::size_t a, std::size_t b) const;
  std::size_t degree(std::size_t v) const;

  Graph with_edge(Edge e) const;
  Graph without_edge(Edge e) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;  // sorted, unique
};

Graph cycle(std::size_t n);
Graph complement(const Graph& g);
Graph anticycle(std::size_t n);
/// Star with center n and leaves 1..n-3.
Graph star_f(std::size_t n);
/// Anticycle of order n without {n-2, n} and {1, n-1}, plus {1, n}.
Graph h_n(std::size_t n);
/// Anticycle of order n without {n-2, n}.
Graph g_n(std::size_t n);

/// Same vertex count, edges of both. Vertex counts may differ; the larger wins.
Graph graph_union(const Graph& a, const Graph& b);

/// Image of g under the vertex map v -> perm[v - 1].
Graph relabel(const Graph& g, std::span<const std::size_t> perm);

struct HFamilyMember {
  Graph graph;
  /// perm[v - 1] is the image of vertex v; relabel(graph, perm) == h_n(n).
  std::vector<std::size_t> perm;
};

/// Anticycle of order n with {a, b} and {a+1, b+1} removed and {b, b+1}
/// added (indices mod n), where b = a +- 2 (mod n), together with a dihedral
/// relabelling onto h_n(n). Prefers a relabelling with a -> n-2, b -> n.
HFamilyMember h_family(std::size_t n, std::size_t a, std::size_t b);

/// Squarefree quadratic generator x_u x_v per edge.
MonomialIdeal edge_ideal(const Graph& g);

/// True iff e and f are disjoint edges of g with no edge of g between them.
bool is_gap(const Graph& g, const Edge& e, const Edge& f);
/// First gap in the sorted order of edge pairs, if any.
std::optional<std::pair<Edge, Edge>> find_gap(const Graph& g);

/// True iff every edge of g0 shares a vertex with some edge of f0.
/// f0 must be a star centered at its highest vertex.
bool star_adjacency_condition(const Graph& g0, const Graph& f0);

/// Center of a star (every edge contains it), or nullopt. Edgeless graphs are
/// not stars.
std::optional<std::size_t> star_center(const Graph& g);

}  // namespace linquot
