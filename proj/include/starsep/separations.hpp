#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "starsep/graph.hpp"
#include "starsep/weights.hpp"

namespace starsep {

struct Separation {
  VertexSet a, c, b;
  std::optional<Vertex> center;

  friend bool operator==(const Separation&, const Separation&) = default;
};

inline bool is_separation(const Graph& g, const Separation& s) {
  if (!((s.a | s.b | s.c) == g.vertices())) return false;
  if (s.a.intersects(s.b) || s.a.intersects(s.c) || s.b.intersects(s.c)) return false;
  return anticomplete(g, s.a, s.b);
}

/// Separation with a center v such that v ∈ C ⊆ N[v].
inline bool is_star_separation(const Graph& g, const Separation& s) {
  if (!s.center || !is_separation(g, s)) return false;
  Vertex v = *s.center;
  return s.c.contains(v) && s.c.is_subset_of(closed_neighborhood(g, v));
}

struct BalanceSplit {
  VertexSet balanced;
  VertexSet unbalanced;
};

/// v is balanced iff every component of G - N[v] weighs at most 1/2.
inline bool is_balanced_vertex(const Graph& g, const WeightFn& w, Vertex v) {
  g.require_vertex(v);
  return is_balanced_separator(g, w, closed_neighborhood(g, v), one_half);
}

inline BalanceSplit classify_balanced(const Graph& g, const WeightFn& w) {
  BalanceSplit out;
  for (Vertex v : g.vertices()) (is_balanced_vertex(g, w, v) ? out.balanced : out.unbalanced).insert(v);
  return out;
}

/// Heaviest component of G - N[v]; ties go to the lexicographically least.
inline VertexSet heaviest_component(const Graph& g, const WeightFn& w, const VertexSet& removed) {
  VertexSet best;
  std::optional<Mass> best_mass;
  for (const auto& d : components(g, g.vertices() - removed)) {
    Mass m = w.mass(d);
    if (!best_mass || compare(m, *best_mass) > 0) {
      best = d;
      best_mass = m;
    }
  }
  return best;
}

/**
 * S_v = (A_v, C_v, B_v) for an unbalanced v: B_v is the heaviest component
 * of G - N[v], C_v = {v} ∪ (N(v) ∩ N(B_v)), A_v is the rest.
 */
inline Separation canonical_separation(const Graph& g, const WeightFn& w, Vertex v) {
  g.require_vertex(v);
  if (is_balanced_vertex(g, w, v)) throw PreconditionError("vertex " + std::to_string(v) + " is balanced");
  Separation s;
  s.center = v;
  s.b = heaviest_component(g, w, closed_neighborhood(g, v));
  s.c = (g.neighbors(v) & neighborhood(g, s.b)).with(v);
  s.a = g.vertices() - s.b - s.c;
  if (!(neighborhood(g, s.b) == s.c.without(v)) || !is_star_separation(g, s))
    throw InternalError("canonical separation of " + std::to_string(v) + " is malformed");
  return s;
}

/// B1 ∪ C1 ⊆ B2 ∪ C2.
inline bool shield_check(const Separation& s1, const Separation& s2) {
  return (s1.b | s1.c).is_subset_of(s2.b | s2.c);
}

/// A component of G[A1 ∪ A2] that lies in neither A1 nor A2, if any.
inline std::optional<VertexSet> crossing_component(const Graph& g, const Separation& s1, const Separation& s2) {
  for (const auto& d : components(g, s1.a | s2.a))
    if (!d.is_subset_of(s1.a) && !d.is_subset_of(s2.a)) return d;
  return std::nullopt;
}

/// Every component of A1 ∪ A2 is a component of A1 or of A2.
inline bool nearly_noncrossing(const Graph& g, const Separation& s1, const Separation& s2) {
  return !crossing_component(g, s1, s2).has_value();
}

struct OrderDigest {
  VertexSet unbalanced;
  std::map<Vertex, Separation> separations;
  /// (x, y) with x ≤_A y: x = y or y ∈ A_x.
  std::vector<std::pair<Vertex, Vertex>> pairs;
  VertexSet minimal;

  bool leq(Vertex x, Vertex y) const { return x == y || separations.at(x).a.contains(y); }

  /// Elements of `subset` with no other element of `subset` below them.
  VertexSet minimal_within(const VertexSet& subset) const {
    VertexSet out;
    for (Vertex x : subset) {
      bool is_min = true;
      for (Vertex y : subset.without(x))
        if (leq(y, x)) {
          is_min = false;
          break;
        }
      if (is_min) out.insert(x);
    }
    return out;
  }
};

/**
 * The relation x ≤_A y on unbalanced vertices, materialized and checked for
 * antisymmetry and transitivity.
 */
inline OrderDigest leq_A(const Graph& g, const WeightFn& w) {
  OrderDigest out;
  out.unbalanced = classify_balanced(g, w).unbalanced;
  for (Vertex x : out.unbalanced) out.separations.emplace(x, canonical_separation(g, w, x));
  for (Vertex x : out.unbalanced)
    for (Vertex y : out.unbalanced)
      if (out.leq(x, y)) out.pairs.emplace_back(x, y);
  for (Vertex x : out.unbalanced)
    for (Vertex y : out.separations.at(x).a & out.unbalanced) {
      if (out.leq(y, x)) throw HypothesisViolation("≤_A is not antisymmetric", {x, y});
      for (Vertex z : out.separations.at(y).a & out.unbalanced)
        if (!out.leq(x, z)) throw HypothesisViolation("≤_A is not transitive", {x, y, z});
    }
  out.minimal = out.minimal_within(out.unbalanced);
  return out;
}

}  // namespace starsep
