#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "starsep/cutsets.hpp"
#include "starsep/weights.hpp"

namespace starsep {

struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> edges;

  int add_node(const VertexSet& bag) {
    bags.push_back(bag);
    return static_cast<int>(bags.size()) - 1;
  }
  void link(int a, int b) { edges.emplace_back(a, b); }

  int width() const {
    int best = 0;
    for (const auto& b : bags) best = std::max(best, b.size());
    return best - 1;
  }
};

struct TdCheck {
  bool pass = true;
  std::string failure;
  std::vector<int> witness;  // vertex, edge endpoints, or node ids depending on the failure
};

/**
 * Checks that the node graph is a tree and that the bags cover every vertex,
 * cover every edge, and hold each vertex on a connected set of nodes.
 */
inline TdCheck validate_td(const Graph& g, const TreeDecomposition& td) {
  auto fail = [](std::string what, std::vector<int> witness) { return TdCheck{false, std::move(what), std::move(witness)}; };
  const int nodes = static_cast<int>(td.bags.size());
  if (nodes == 0) {
    if (g.order() == 0) return {};
    return fail("decomposition has no nodes", {});
  }
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(nodes));
  for (auto [a, b] : td.edges) {
    if (a < 0 || b < 0 || a >= nodes || b >= nodes || a == b) return fail("bad tree edge", {a, b});
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  if (static_cast<int>(td.edges.size()) != nodes - 1) return fail("node graph is not a tree", {});
  {
    std::vector<char> seen(static_cast<std::size_t>(nodes), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj[u])
        if (!seen[v]) {
          seen[v] = 1;
          ++count;
          stack.push_back(v);
        }
    }
    if (count != nodes) return fail("node graph is not a tree", {});
  }
  for (int i = 0; i < nodes; ++i)
    if (!td.bags[i].is_subset_of(g.vertices())) return fail("bag holds a non-vertex", {i});
  for (Vertex v : g.vertices()) {
    std::vector<int> holding;
    for (int i = 0; i < nodes; ++i)
      if (td.bags[i].contains(v)) holding.push_back(i);
    if (holding.empty()) return fail("vertex not covered", {v});
    std::vector<char> in(static_cast<std::size_t>(nodes), 0), seen(static_cast<std::size_t>(nodes), 0);
    for (int i : holding) in[i] = 1;
    std::vector<int> stack{holding.front()};
    seen[holding.front()] = 1;
    int count = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int x : adj[u])
        if (in[x] && !seen[x]) {
          seen[x] = 1;
          ++count;
          stack.push_back(x);
        }
    }
    if (count != static_cast<int>(holding.size())) return fail("nodes holding a vertex are disconnected", {v});
  }
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (const auto& b : td.bags)
      if (b.contains(u) && b.contains(v)) {
        covered = true;
        break;
      }
    if (!covered) return fail("edge not covered", {u, v});
  }
  return {};
}

inline constexpr int default_exact_cap = 14;

/**
 * Exact treewidth by dynamic programming over vertex subsets:
 * TW(S) = min over v in S of max(TW(S - v), |Q(S - v, v)|), where Q(S, v) is
 * the set of vertices outside S ∪ {v} reachable from v through S.
 * Returns -1 for the empty graph.
 */
inline int exact_treewidth(const Graph& g, int cap = default_exact_cap) {
  const int n = g.order();
  if (n > cap) throw CapacityError("exact treewidth is capped at " + std::to_string(cap) + " vertices; got " + std::to_string(n));
  if (n > 30) throw CapacityError("exact treewidth cannot exceed 30 vertices");
  if (n == 0) return -1;
  const auto ids = g.vertices().to_vector();
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.adjacent(ids[i], ids[j])) adj[i] |= std::uint32_t{1} << j;
  const std::uint32_t full = n == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);
  auto q_size = [&](std::uint32_t s, int v) {
    std::uint32_t reached = 0, frontier = adj[v] & s;
    while (frontier) {
      reached |= frontier;
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
      frontier = next & s & ~reached;
    }
    std::uint32_t boundary = adj[v];
    for (std::uint32_t r = reached; r; r &= r - 1) boundary |= adj[std::countr_zero(r)];
    boundary &= full & ~s & ~(std::uint32_t{1} << v);
    return std::popcount(boundary);
  };
  std::vector<std::int8_t> tw(std::size_t{1} << n, 0);
  tw[0] = -1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    int best = std::numeric_limits<int>::max();
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      std::uint32_t without = s & ~(std::uint32_t{1} << v);
      int value = std::max<int>(tw[without], q_size(without, v));
      best = std::min(best, value);
    }
    tw[s] = static_cast<std::int8_t>(best);
    if (s == full) break;
  }
  return tw[full];
}

/// tw(G[X]) <= 2, by deleting vertices of degree <= 1 and suppressing degree-2 vertices.
inline bool treewidth_at_most_two(const Graph& g, const VertexSet& x) {
  std::vector<VertexSet> adj(static_cast<std::size_t>(g.capacity()));
  VertexSet alive = x & g.vertices();
  for (Vertex v : alive) adj[v] = g.neighbors(v) & alive;
  for (bool changed = true; changed && !alive.empty();) {
    changed = false;
    for (Vertex v : alive) {
      int d = adj[v].size();
      if (d <= 1) {
        for (Vertex u : adj[v]) adj[u].erase(v);
      } else if (d == 2) {
        Vertex a = adj[v].first(), b = adj[v].last();
        adj[a].erase(v);
        adj[b].erase(v);
        adj[a].insert(b);
        adj[b].insert(a);
      } else {
        continue;
      }
      adj[v] = VertexSet{};
      alive.erase(v);
      changed = true;
    }
  }
  return alive.empty();
}

inline bool treewidth_at_most_two(const Graph& g) { return treewidth_at_most_two(g, g.vertices()); }

/// Separator oracle: given weights uniform on a subset, returns a balanced separator of the graph.
using SeparatorOracle = std::function<VertexSet(const Graph&, const WeightFn&)>;

struct BuildStats {
  int max_separator = 0;
  int oracle_calls = 0;
};

namespace detail {

class SeparatorRecursion {
 public:
  SeparatorRecursion(const Graph& atom, const SeparatorOracle& oracle, TreeDecomposition& td, BuildStats& stats)
      : g_(atom), oracle_(oracle), td_(td), stats_(stats) {}

  /// Node whose bag contains W, rooting a decomposition of G[S].
  int decompose(const VertexSet& s, const VertexSet& w) {
    if (s.size() <= 2 * leaf_scale() + 1) return td_.add_node(s);
    VertexSet x = call(w.empty() ? s : w) & s;
    VertexSet bag = w | x;
    auto parts = components(g_, s - bag);
    if (parts.size() == 1 && neighborhood(g_, parts[0]) == bag && bag == w) {
      bag.insert(parts[0].first());
      parts = components(g_, s - bag);
    }
    const int node = td_.add_node(bag);
    for (const auto& d : parts) {
      VertexSet boundary = neighborhood(g_, d) & s;
      int child = decompose(d | boundary, boundary);
      td_.link(node, child);
    }
    return node;
  }

  VertexSet call(const VertexSet& support) {
    WeightFn w = WeightFn::uniform_on(g_, support);
    VertexSet x = oracle_(g_, w);
    if (!x.is_subset_of(g_.vertices())) throw InternalError("oracle returned non-vertices");
    if (!is_balanced_separator(g_, w, x)) throw InternalError("oracle returned an unbalanced separator");
    ++stats_.oracle_calls;
    stats_.max_separator = std::max(stats_.max_separator, x.size());
    return x;
  }

 private:
  int leaf_scale() const { return std::max(1, stats_.max_separator); }

  const Graph& g_;
  const SeparatorOracle& oracle_;
  TreeDecomposition& td_;
  BuildStats& stats_;
};

/// Node of `td` (within [first, last)) whose bag contains `clique`.
inline int node_containing(const TreeDecomposition& td, int first, int last, const VertexSet& clique) {
  for (int i = first; i < last; ++i)
    if (clique.is_subset_of(td.bags[i])) return i;
  throw InternalError("no bag contains a clique of the piece");
}

inline int glue(const Graph& g, const AtomTree& node, const SeparatorOracle& oracle, TreeDecomposition& td,
                BuildStats& stats) {
  if (node.is_atom()) {
    Graph atom = g.induced(node.vertices);
    SeparatorRecursion rec(atom, oracle, td, stats);
    rec.call(atom.vertices());
    return rec.decompose(atom.vertices(), VertexSet{});
  }
  const int hub = td.add_node(node.cutset);
  for (const auto& piece : node.pieces) {
    const int first = static_cast<int>(td.bags.size());
    glue(g, piece, oracle, td, stats);
    const int last = static_cast<int>(td.bags.size());
    td.link(hub, node_containing(td, first, last, piece.vertices & node.cutset));
  }
  return hub;
}

}  // namespace detail

struct BuildResult {
  TreeDecomposition td;
  AtomDecomposition atoms;
  BuildStats stats;
};

/**
 * Decomposes each clique-cutset atom by recursive balanced separation and
 * glues the pieces along bags equal to the cutsets. Inside an atom, a node
 * with interface W gets bag W ∪ X for a separator X of the atom under weights
 * uniform on W; each component D of the remainder recurses with interface N(D).
 */
inline BuildResult build_td(const Graph& g, const SeparatorOracle& oracle) {
  BuildResult out;
  if (g.order() == 0) return out;
  out.atoms = clique_cutset_atoms(g);
  detail::glue(g, out.atoms.tree, oracle, out.td, out.stats);
  TdCheck check = validate_td(g, out.td);
  if (!check.pass) throw InternalError("constructed decomposition is invalid: " + check.failure);
  return out;
}

}  // namespace starsep
