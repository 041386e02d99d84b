#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "starsep/detectors.hpp"

namespace starsep {

// ---------------------------------------------------------------------------
// Clique cutsets
// ---------------------------------------------------------------------------

namespace detail {

template <typename F>
bool cliques_of_size(const Graph& g, const VertexSet& within, int k, std::vector<Vertex>& chosen, VertexSet cand,
                     F& fn) {
  if (static_cast<int>(chosen.size()) == k) return fn(VertexSet::of(chosen));
  for (Vertex v : cand) {
    chosen.push_back(v);
    bool go_on = cliques_of_size(g, within, k, chosen, cand & g.neighbors(v) & (within - VertexSet::range(v + 1)), fn);
    chosen.pop_back();
    if (!go_on) return false;
  }
  return true;
}

}  // namespace detail

/**
 * First clique K of G[S] (by size, then lexicographically) such that
 * G[S] - K is disconnected. The empty set is tried first, so a disconnected
 * G[S] yields an empty cutset.
 */
inline std::optional<VertexSet> find_clique_cutset(const Graph& g, const VertexSet& s) {
  g.require_subset(s);
  if (s.size() <= 2) return is_connected(g, s) ? std::nullopt : std::optional<VertexSet>(VertexSet{});
  std::optional<VertexSet> found;
  const int omega = clique_number(g, s);
  for (int k = 0; k <= omega && !found; ++k) {
    std::vector<Vertex> chosen;
    auto test = [&](const VertexSet& clique) {
      VertexSet rest = s - clique;
      if (!rest.empty() && !is_connected(g, rest)) {
        found = clique;
        return false;
      }
      return true;
    };
    detail::cliques_of_size(g, s, k, chosen, s, test);
  }
  return found;
}

inline bool has_clique_cutset(const Graph& g, const VertexSet& s) { return find_clique_cutset(g, s).has_value(); }

/// Node of the split tree: a leaf is an atom; an inner node was split along `cutset`.
struct AtomTree {
  VertexSet vertices;
  VertexSet cutset;
  std::vector<AtomTree> pieces;

  bool is_atom() const { return pieces.empty(); }
};

struct AtomDecomposition {
  std::vector<VertexSet> atoms;    // distinct, in discovery order
  std::vector<VertexSet> cutsets;  // in discovery order
  AtomTree tree;
};

namespace detail {

inline AtomTree split_atoms(const Graph& g, const VertexSet& s, AtomDecomposition& out) {
  AtomTree node;
  node.vertices = s;
  auto cut = find_clique_cutset(g, s);
  if (!cut) {
    if (std::find(out.atoms.begin(), out.atoms.end(), s) == out.atoms.end()) out.atoms.push_back(s);
    return node;
  }
  node.cutset = *cut;
  out.cutsets.push_back(*cut);
  for (const VertexSet& d : components(g, s - *cut)) {
    VertexSet piece = d | (neighborhood(g, d) & *cut);
    node.pieces.push_back(split_atoms(g, piece, out));
  }
  return node;
}

}  // namespace detail

/// Recursive decomposition along clique cutsets; each piece is a component
/// of G[S] - K together with its attachments in K.
inline AtomDecomposition clique_cutset_atoms(const Graph& g) {
  AtomDecomposition out;
  out.tree = detail::split_atoms(g, g.vertices(), out);
  return out;
}

// ---------------------------------------------------------------------------
// Star cutset from a proper wheel
// ---------------------------------------------------------------------------

struct ForcerCutset {
  WheelWitness wheel;
  std::vector<Vertex> sector;  // x1 ... x2
  VertexSet w;
  VertexSet z;
  VertexSet cutset;  // (N(x) \ W) ∪ {x}
};

/// Lexicographically least long sector, as a vertex sequence.
inline std::vector<Vertex> default_long_sector(const WheelWitness& wheel) {
  auto longs = wheel.long_sectors();
  if (longs.empty()) throw PreconditionError("wheel has no long sector");
  return *std::min_element(longs.begin(), longs.end());
}

/**
 * For a proper, non-universal wheel (H, x) and a long sector Q from x1 to x2:
 * W holds the neighbors h of x such that the subpath of H - x1 from x2 to h
 * contains an even number of neighbors of x; Z = H \ (Q ∪ N(x)). The cutset
 * (N(x) \ W) ∪ {x} is verified to separate Q* from W ∪ Z.
 */
inline ForcerCutset forcer_cutset(const Graph& g, const WheelWitness& wheel,
                                  std::optional<std::vector<Vertex>> sector = std::nullopt) {
  if (!wheel.wheel || !wheel.proper) throw PreconditionError("forcer cutset needs a proper wheel");
  if (wheel.universal) throw PreconditionError("forcer cutset needs a non-universal wheel");
  if (!is_hole(g, wheel.hole.cycle)) throw InputError("witness hole is not a hole of the graph");
  const Vertex x = wheel.center;
  std::vector<Vertex> q = sector ? *sector : default_long_sector(wheel);
  {
    auto longs = wheel.long_sectors();
    std::vector<Vertex> reversed(q.rbegin(), q.rend());
    bool known = std::find(longs.begin(), longs.end(), q) != longs.end() ||
                 std::find(longs.begin(), longs.end(), reversed) != longs.end();
    if (!known) throw PreconditionError("Q is not a long sector of the wheel");
  }
  const Vertex x1 = q.front(), x2 = q.back();
  const auto& cycle = wheel.hole.cycle;
  const int len = wheel.hole.length();
  const int i1 = static_cast<int>(std::find(cycle.begin(), cycle.end(), x1) - cycle.begin());

  // H - x1 as a path, starting next to x1.
  std::vector<Vertex> path;
  for (int step = 1; step < len; ++step) path.push_back(cycle[(i1 + step) % len]);
  const int p2 = static_cast<int>(std::find(path.begin(), path.end(), x2) - path.begin());

  ForcerCutset out;
  out.wheel = wheel;
  out.sector = q;
  for (int p = 0; p < static_cast<int>(path.size()); ++p) {
    Vertex h = path[p];
    if (!g.adjacent(x, h)) continue;
    int lo = std::min(p, p2), hi = std::max(p, p2), count = 0;
    for (int r = lo; r <= hi; ++r) count += g.adjacent(x, path[r]) ? 1 : 0;
    if (count % 2 == 0) out.w.insert(h);
  }
  const VertexSet h_set = wheel.hole.members();
  const VertexSet q_set = VertexSet::of(q);
  out.z = h_set - q_set - g.neighbors(x);
  out.cutset = (g.neighbors(x) - out.w).with(x);

  const VertexSet interior = q_set.without(x1).without(x2);
  const VertexSet far = out.w | out.z;
  auto leak = shortest_path(g, interior, far, g.vertices() - out.cutset);
  if (!leak.empty())
    throw HypothesisViolation("star cutset from the wheel does not separate the sector interior", leak);
  return out;
}

// ---------------------------------------------------------------------------
// Attachments of three vertices
// ---------------------------------------------------------------------------

enum class AttachmentCase { path, star, triangle };

inline const char* to_string(AttachmentCase c) {
  switch (c) {
    case AttachmentCase::path: return "i";
    case AttachmentCase::star: return "ii";
    case AttachmentCase::triangle: return "iii";
  }
  return "?";
}

struct AttachmentResult {
  VertexSet h;
  AttachmentCase kind = AttachmentCase::path;
  /// path case: P from x_i to x_j (through H), and k.
  std::vector<Vertex> path;
  int k = -1;
  /// star case: branch vertex; triangle case: triangle a1 a2 a3.
  Vertex branch = -1;
  std::array<Vertex, 3> triangle{-1, -1, -1};
  /// star and triangle cases: paths[i] runs from the branch (or a_i) to x_i.
  std::array<std::vector<Vertex>, 3> legs;
};

namespace detail {

inline bool attaches(const Graph& g, const VertexSet& s, const std::array<Vertex, 3>& xs) {
  if (s.empty() || !is_connected(g, s)) return false;
  for (Vertex x : xs)
    if (!g.neighbors(x).intersects(s)) return false;
  return true;
}

/// Unique path of a tree-like G[S] between two vertices, or empty.
inline std::vector<Vertex> path_within(const Graph& g, Vertex from, Vertex to, const VertexSet& s) {
  return shortest_path(g, VertexSet{from}, VertexSet{to}, s);
}

/// Legs from each start[i] to x_i through H; checks the configuration of the
/// star (shared start) or triangle (distinct starts) case.
inline std::optional<std::array<std::vector<Vertex>, 3>> legs_from(const Graph& g, const VertexSet& h,
                                                                   const std::array<Vertex, 3>& xs,
                                                                   const std::array<Vertex, 3>& start) {
  const bool shared = start[0] == start[1];
  std::array<std::vector<Vertex>, 3> legs;
  VertexSet used;
  VertexSet starts = VertexSet::of(start);
  for (int i = 0; i < 3; ++i) {
    VertexSet nx = g.neighbors(xs[i]) & h;
    if (nx.size() != 1) return std::nullopt;
    VertexSet within = (h - starts).with(start[i]);
    auto p = path_within(g, start[i], nx.first(), within);
    if (p.empty()) return std::nullopt;
    p.push_back(xs[i]);
    legs[i] = p;
    VertexSet body = VertexSet::of(p).without(xs[i]);
    if (shared) body.erase(start[i]);
    if (body.intersects(used)) return std::nullopt;
    used |= body;
  }
  if (!((shared ? used.with(start[0]) : used) == h)) return std::nullopt;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      VertexSet a = VertexSet::of(legs[i]), b = VertexSet::of(legs[j]);
      if (shared) {
        a.erase(start[0]);
        b.erase(start[0]);
      }
      for (Vertex u : a)
        for (Vertex v : g.neighbors(u) & b) {
          bool allowed = (u == xs[i] && v == xs[j]) || (!shared && u == start[i] && v == start[j]);
          if (!allowed) return std::nullopt;
        }
    }
  return legs;
}

}  // namespace detail

/**
 * Minimizes D to a connected set H holding a neighbor of each x_i (greedy
 * single-vertex deletion in increasing id order, repeated to a fixed point)
 * and classifies H as a path, subdivided star, or triangle with legs.
 */
inline AttachmentResult attachment_trichotomy(const Graph& g, Vertex x1, Vertex x2, Vertex x3, const VertexSet& d) {
  const std::array<Vertex, 3> xs{x1, x2, x3};
  for (Vertex x : xs) g.require_vertex(x);
  g.require_subset(d);
  if (x1 == x2 || x1 == x3 || x2 == x3) throw PreconditionError("attachment vertices must be distinct");
  if (d.intersects(VertexSet::of(xs))) throw PreconditionError("D must avoid x1, x2, x3");
  if (!detail::attaches(g, d, xs)) throw PreconditionError("D must be connected and contain a neighbor of each x_i");

  VertexSet h = d;
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex v : h)
      if (detail::attaches(g, h.without(v), xs)) {
        h.erase(v);
        changed = true;
      }
  }

  AttachmentResult out;
  out.h = h;
  const int n = h.size();
  int degree_sum = 0, max_degree = 0;
  for (Vertex v : h) {
    int deg = (g.neighbors(v) & h).size();
    degree_sum += deg;
    max_degree = std::max(max_degree, deg);
  }
  const bool is_path = degree_sum / 2 == n - 1 && max_degree <= 2;

  if (is_path && n >= 2) {
    std::vector<Vertex> ends;
    for (Vertex v : h)
      if ((g.neighbors(v) & h).size() <= 1) ends.push_back(v);
    std::vector<Vertex> order = detail::path_within(g, ends[0], ends[1], h);
    const std::array<std::array<int, 3>, 3> choices{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
    for (const auto& c : choices) {
      VertexSet ni = g.neighbors(xs[c[0]]) & h, nj = g.neighbors(xs[c[1]]) & h, nk = g.neighbors(xs[c[2]]) & h;
      for (int flip = 0; flip < 2; ++flip) {
        Vertex first = flip ? order.back() : order.front();
        Vertex last = flip ? order.front() : order.back();
        if (!(ni == VertexSet{first}) || !(nj == VertexSet{last})) continue;
        bool k_ok = (nk.size() == 2 && is_clique(g, nk)) || (nk.size() >= 2 && !is_clique(g, nk));
        if (!k_ok) continue;
        out.kind = AttachmentCase::path;
        out.path.push_back(xs[c[0]]);
        if (flip) out.path.insert(out.path.end(), order.rbegin(), order.rend());
        else out.path.insert(out.path.end(), order.begin(), order.end());
        out.path.push_back(xs[c[1]]);
        out.k = c[2] + 1;
        return out;
      }
    }
  }

  for (Vertex a : h)
    if (auto legs = detail::legs_from(g, h, xs, {a, a, a})) {
      out.kind = AttachmentCase::star;
      out.branch = a;
      out.legs = *legs;
      return out;
    }

  for (Vertex a : h)
    for (Vertex b : g.neighbors(a) & h)
      for (Vertex c : g.neighbors(a) & g.neighbors(b) & h) {
        if (a == b || b == c || a == c) continue;
        if (auto legs = detail::legs_from(g, h, xs, {a, b, c})) {
          out.kind = AttachmentCase::triangle;
          out.triangle = {a, b, c};
          out.legs = *legs;
          return out;
        }
      }

  throw InternalError("minimal attachment set matches none of the three cases");
}

}  // namespace starsep
