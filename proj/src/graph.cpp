#include "linquot/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace linquot {
namespace {

std::size_t wrap(std::ptrdiff_t c, std::size_t n) {
  const auto m = static_cast<std::ptrdiff_t>(n);
  return static_cast<std::size_t>(((c - 1) % m + m) % m + 1);
}

void require_order(std::size_t n, std::size_t min, const char* what) {
  if (n < min) {
    throw std::invalid_argument(std::string(what) + " requires n >= " + std::to_string(min) +
                                ", got " + std::to_string(n));
  }
}

// Rotations v -> v + k and reflections v -> k - v of Z/n, as 1-based maps.
std::vector<std::vector<std::size_t>> dihedral_group(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::size_t> rot(n), refl(n);
    for (std::size_t v = 1; v <= n; ++v) {
      rot[v - 1] = wrap(static_cast<std::ptrdiff_t>(v + k), n);
      refl[v - 1] = wrap(static_cast<std::ptrdiff_t>(k) - static_cast<std::ptrdiff_t>(v), n);
    }
    out.push_back(std::move(rot));
    out.push_back(std::move(refl));
  }
  return out;
}

}  // namespace

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (const auto& e : edges_) {
    if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    if (e.u < 1 || e.v > n_) {
      throw std::invalid_argument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  "} outside vertex set 1.." + std::to_string(n_));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Graph::has_edge(std::size_t a, std::size_t b) const {
  if (a == b) return false;
  return std::binary_search(edges_.begin(), edges_.end(), Edge(a, b));
}

std::size_t Graph::degree(std::size_t v) const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.touches(v); }));
}

Graph Graph::with_edge(Edge e) const {
  auto edges = edges_;
  edges.push_back(e);
  return Graph(n_, std::move(edges));
}

Graph Graph::without_edge(Edge e) const {
  auto edges = edges_;
  std::erase(edges, e);
  return Graph(n_, std::move(edges));
}

Graph cycle(std::size_t n) {
  require_order(n, 3, "cycle");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(1, n);
  return Graph(n, std::move(edges));
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (std::size_t u = 1; u <= g.n(); ++u) {
    for (std::size_t v = u + 1; v <= g.n(); ++v) {
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph(g.n(), std::move(edges));
}

Graph anticycle(std::size_t n) {
  require_order(n, 4, "anticycle");
  return complement(cycle(n));
}

Graph star_f(std::size_t n) {
  require_order(n, 5, "star_f");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i + 3 <= n; ++i) edges.emplace_back(i, n);
  return Graph(n, std::move(edges));
}

Graph h_n(std::size_t n) {
  require_order(n, 6, "h_n");
  return anticycle(n).without_edge({n - 2, n}).without_edge({1, n - 1}).with_edge({1, n});
}

Graph g_n(std::size_t n) {
  require_order(n, 5, "g_n");
  return anticycle(n).without_edge({n - 2, n});
}

Graph graph_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  edges.insert(edges.end(), b.edges().begin(), b.edges().end());
  return Graph(std::max(a.n(), b.n()), std::move(edges));
}

Graph relabel(const Graph& g, std::span<const std::size_t> perm) {
  if (perm.size() != g.n()) throw std::invalid_argument("relabel: permutation size mismatch");
  std::vector<bool> seen(g.n() + 1, false);
  for (auto image : perm) {
    if (image < 1 || image > g.n() || seen[image]) {
      throw std::invalid_argument("relabel: not a permutation of the vertex set");
    }
    seen[image] = true;
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) edges.emplace_back(perm[e.u - 1], perm[e.v - 1]);
  return Graph(g.n(), std::move(edges));
}

HFamilyMember h_family(std::size_t n, std::size_t a, std::size_t b) {
  require_order(n, 7, "h_family");
  if (a < 1 || a > n || b < 1 || b > n) {
    throw std::invalid_argument("h_family: vertices must lie in 1..n");
  }
  const auto diff = wrap(static_cast<std::ptrdiff_t>(b) - static_cast<std::ptrdiff_t>(a), n);
  if (diff != 2 && diff != n - 2) {
    throw std::invalid_argument("h_family: |a - b| must be congruent to +-2 mod n");
  }
  const auto next = [n](std::size_t v) { return wrap(static_cast<std::ptrdiff_t>(v) + 1, n); };

  Graph h = anticycle(n).without_edge({a, b}).without_edge({next(a), next(b)}).with_edge(
      {b, next(b)});

  const Graph target = h_n(n);
  std::optional<std::vector<std::size_t>> fallback;
  for (auto& perm : dihedral_group(n)) {
    if (relabel(h, perm) != target) continue;
    if (perm[a - 1] == n - 2 && perm[b - 1] == n) return {std::move(h), std::move(perm)};
    if (!fallback) fallback = std::move(perm);
  }
  if (!fallback) throw std::logic_error("h_family: no dihedral relabelling onto h_n");
  return {std::move(h), std::move(*fallback)};
}

MonomialIdeal edge_ideal(const Graph& g) {
  if (g.edge_count() == 0) throw std::invalid_argument("edge_ideal: graph has no edges");
  std::vector<Monomial> gens;
  gens.reserve(g.edge_count());
  for (const auto& e : g.edges()) gens.push_back(Monomial::from_indices(g.n(), {e.u, e.v}));
  return minimalize(gens);
}

bool is_gap(const Graph& g, const Edge& e, const Edge& f) {
  if (!g.has_edge(e.u, e.v) || !g.has_edge(f.u, f.v) || e.shares_vertex(f)) return false;
  for (auto x : {e.u, e.v}) {
    for (auto y : {f.u, f.v}) {
      if (g.has_edge(x, y)) return false;
    }
  }
  return true;
}

std::optional<std::pair<Edge, Edge>> find_gap(const Graph& g) {
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (is_gap(g, edges[i], edges[j])) return std::pair{edges[i], edges[j]};
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> star_center(const Graph& g) {
  const auto edges = g.edges();
  if (edges.empty()) return std::nullopt;
  for (auto c : {edges.front().v, edges.front().u}) {
    if (std::all_of(edges.begin(), edges.end(), [c](const Edge& e) { return e.touches(c); })) {
      return c;
    }
  }
  return std::nullopt;
}

bool star_adjacency_condition(const Graph& g0, const Graph& f0) {
  const auto center = star_center(f0);
  if (!center || *center != f0.n()) {
    throw std::invalid_argument("star_adjacency_condition: f0 must be a star centered at n");
  }
  return std::all_of(g0.edges().begin(), g0.edges().end(), [&](const Edge& e) {
    return std::any_of(f0.edges().begin(), f0.edges().end(),
                       [&](const Edge& f) { return e.shares_vertex(f); });
  });
}

}  // namespace linquot
