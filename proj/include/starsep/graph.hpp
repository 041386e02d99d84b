#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "starsep/errors.hpp"
#include "starsep/vertex_set.hpp"

namespace starsep {

using Edge = std::pair<Vertex, Vertex>;

/**
 * Immutable simple graph.
 *
 * Vertex identities are dense integers below capacity(); V(G) may be a proper
 * subset of them so that induced subgraphs keep the identities of their host.
 */
class Graph {
 public:
  Graph() = default;

  /// Graph on vertices 0..n-1. Rejects loops, out-of-range endpoints and
  /// repeated edges.
  static Graph from_edges(int n, std::span<const Edge> edges) {
    if (n < 0) throw InputError("negative vertex count");
    if (n > max_vertices)
      throw CapacityError("graph has " + std::to_string(n) + " vertices; capacity is " +
                          std::to_string(max_vertices));
    Graph g;
    g.capacity_ = n;
    g.vertices_ = VertexSet::range(n);
    g.adjacency_.assign(static_cast<std::size_t>(n), VertexSet{});
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
      if (u == v) throw InputError("loop at vertex " + std::to_string(u));
      if (g.adjacency_[u].contains(v))
        throw InputError("parallel edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
      g.adjacency_[u].insert(v);
      g.adjacency_[v].insert(u);
    }
    return g;
  }

  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// One past the largest vertex identity.
  int capacity() const { return capacity_; }
  /// |V(G)|
  int order() const { return vertices_.size(); }
  const VertexSet& vertices() const { return vertices_; }
  bool has_vertex(Vertex v) const { return vertices_.contains(v); }

  bool adjacent(Vertex u, Vertex v) const { return adjacency_[u].contains(v); }
  const VertexSet& neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return adjacency_[v].size(); }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u : vertices_)
      for (Vertex v : adjacency_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }
  int edge_count() const {
    int total = 0;
    for (Vertex u : vertices_) total += adjacency_[u].size();
    return total / 2;
  }

  /// Subgraph induced on `keep`, which must be a subset of V(G).
  Graph induced(const VertexSet& keep) const {
    require_subset(keep);
    Graph h;
    h.capacity_ = capacity_;
    h.vertices_ = keep;
    h.adjacency_.assign(adjacency_.size(), VertexSet{});
    for (Vertex v : keep) h.adjacency_[v] = adjacency_[v] & keep;
    return h;
  }

  void require_subset(const VertexSet& x) const {
    if (!x.is_subset_of(vertices_)) {
      Vertex bad = (x - vertices_).first();
      throw InputError("vertex " + std::to_string(bad) + " is not a vertex of the graph");
    }
  }
  void require_vertex(Vertex v) const {
    if (!has_vertex(v)) throw InputError("vertex " + std::to_string(v) + " is not a vertex of the graph");
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.capacity_ != b.capacity_ || !(a.vertices_ == b.vertices_)) return false;
    for (Vertex v : a.vertices_)
      if (!(a.adjacency_[v] == b.adjacency_[v])) return false;
    return true;
  }

 private:
  int capacity_ = 0;
  VertexSet vertices_;
  std::vector<VertexSet> adjacency_;
};

/// Open neighborhood: vertices outside X with a neighbor in X. Closed adds X.
inline VertexSet neighborhood(const Graph& g, const VertexSet& x, bool closed = false) {
  g.require_subset(x);
  VertexSet out;
  for (Vertex v : x) out |= g.neighbors(v);
  if (closed) return out | x;
  return out - x;
}

inline VertexSet open_neighborhood(const Graph& g, Vertex v) { return g.neighbors(v); }
inline VertexSet closed_neighborhood(const Graph& g, Vertex v) { return g.neighbors(v).with(v); }

/// Vertices of `within` reachable from `start` inside G[within].
inline VertexSet reach(const Graph& g, Vertex start, const VertexSet& within) {
  VertexSet seen{start};
  VertexSet frontier{start};
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    next &= within;
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

/// Connected components of G[X], ordered by smallest vertex.
inline std::vector<VertexSet> components(const Graph& g, const VertexSet& x) {
  g.require_subset(x);
  std::vector<VertexSet> out;
  VertexSet rest = x;
  while (!rest.empty()) {
    VertexSet comp = reach(g, rest.first(), rest);
    rest -= comp;
    out.push_back(comp);
  }
  return out;
}

inline bool is_connected(const Graph& g, const VertexSet& x) {
  if (x.empty()) return true;
  return reach(g, x.first(), x) == x;
}

inline bool is_clique(const Graph& g, const VertexSet& x) {
  for (Vertex v : x)
    if (!(x.without(v)).is_subset_of(g.neighbors(v))) return false;
  return true;
}

inline bool is_independent(const Graph& g, const VertexSet& x) {
  for (Vertex v : x)
    if (g.neighbors(v).intersects(x)) return false;
  return true;
}

inline bool anticomplete(const Graph& g, const VertexSet& x, const VertexSet& y) {
  for (Vertex v : x)
    if (g.neighbors(v).intersects(y)) return false;
  return true;
}

/// Shortest path from any vertex of `from` to any vertex of `to` inside G[within].
inline std::vector<Vertex> shortest_path(const Graph& g, const VertexSet& from, const VertexSet& to,
                                         const VertexSet& within) {
  std::vector<Vertex> parent(static_cast<std::size_t>(g.capacity()), -1);
  VertexSet seen = from & within;
  std::vector<Vertex> queue = seen.to_vector();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    if (to.contains(u)) {
      std::vector<Vertex> path{u};
      while (parent[u] != -1) {
        u = parent[u];
        path.push_back(u);
      }
      return {path.rbegin(), path.rend()};
    }
    for (Vertex v : (g.neighbors(u) & within) - seen) {
      seen.insert(v);
      parent[v] = u;
      queue.push_back(v);
    }
  }
  return {};
}

/// Size of the largest clique of G[X] (branch and bound over bit sets).
inline int clique_number(const Graph& g, const VertexSet& x) {
  int best = 0;
  auto grow = [&](auto&& self, int size, VertexSet cand) -> void {
    if (cand.empty()) {
      best = std::max(best, size);
      return;
    }
    while (!cand.empty()) {
      if (size + cand.size() <= best) return;
      Vertex v = cand.first();
      cand.erase(v);
      self(self, size + 1, cand & g.neighbors(v));
    }
    best = std::max(best, size);
  };
  grow(grow, 0, x & g.vertices());
  return best;
}

inline int clique_number(const Graph& g) { return clique_number(g, g.vertices()); }

}  // namespace starsep
