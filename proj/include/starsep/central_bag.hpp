#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "starsep/separations.hpp"

namespace starsep {

/// The X-revised separations S̃_u for u ∈ X, with the canonical S_u they refine.
struct RevisedCollection {
  VertexSet base;
  std::map<Vertex, Separation> revised;
  std::map<Vertex, Separation> canonical;
};

/**
 * S̃_u: B̃_u = B_u, C̃_u = {u} ∪ (N(u) ∩ N(B̃_u)) ∪ ⋃_{v ∈ N(u) ∩ X} (N(u) ∩ N(v)),
 * Ã_u the rest. Checks B̃_u = B_u, C_u ⊆ C̃_u ⊆ N[u], Ã_u ⊆ A_u and
 * A_u \ N(u) ⊆ Ã_u.
 */
inline RevisedCollection revised_collection(const Graph& g, const WeightFn& w, const VertexSet& x) {
  g.require_subset(x);
  RevisedCollection out;
  out.base = x;
  for (Vertex u : x) {
    if (is_balanced_vertex(g, w, u))
      throw PreconditionError("revised separation needs an unbalanced vertex; " + std::to_string(u) + " is balanced");
    Separation s = canonical_separation(g, w, u);
    Separation r;
    r.center = u;
    r.b = s.b;
    r.c = (g.neighbors(u) & neighborhood(g, r.b)).with(u);
    for (Vertex v : g.neighbors(u) & x) r.c |= g.neighbors(u) & g.neighbors(v);
    r.a = g.vertices() - r.c - r.b;
    const VertexSet nu = closed_neighborhood(g, u);
    bool ok = r.b == s.b && s.c.is_subset_of(r.c) && r.c.is_subset_of(nu) && r.a.is_subset_of(s.a) &&
              (s.a - g.neighbors(u)).is_subset_of(r.a) && is_star_separation(g, r);
    if (!ok) throw InternalError("revised separation of " + std::to_string(u) + " violates its containments");
    out.canonical.emplace(u, s);
    out.revised.emplace(u, r);
  }
  return out;
}

/// Separations f(v) listed in the fixed order of their centers v(S).
struct SmoothCollection {
  std::vector<Vertex> order;
  std::vector<Separation> separations;

  VertexSet centers() const { return VertexSet::of(order); }
  int size() const { return static_cast<int>(order.size()); }
};

struct SmoothViolation {
  int condition;  // 1: crossing pair, 2: center not in C ⊆ N[v], 3: center inside an A-side
  std::string message;
  std::vector<Vertex> witness;
};

inline std::optional<SmoothViolation> check_smooth(const Graph& g, const SmoothCollection& coll) {
  if (coll.order.size() != coll.separations.size())
    throw InputError("smooth collection needs one separation per center");
  const VertexSet centers = coll.centers();
  if (centers.size() != coll.size()) throw InputError("centers of a smooth collection must be distinct");
  for (int i = 0; i < coll.size(); ++i) {
    const Vertex v = coll.order[i];
    const Separation& s = coll.separations[i];
    if (!is_separation(g, s) || !s.c.contains(v) || !s.c.is_subset_of(closed_neighborhood(g, v)))
      return SmoothViolation{2, "separation of " + std::to_string(v) + " is not a star separation centered there", {v}};
  }
  for (int i = 0; i < coll.size(); ++i)
    for (int j = i + 1; j < coll.size(); ++j)
      if (auto d = crossing_component(g, coll.separations[i], coll.separations[j])) {
        std::vector<Vertex> witness{coll.order[i], coll.order[j]};
        for (Vertex v : *d) witness.push_back(v);
        return SmoothViolation{1,
                               "separations of " + std::to_string(coll.order[i]) + " and " +
                                   std::to_string(coll.order[j]) + " cross",
                               witness};
      }
  for (int i = 0; i < coll.size(); ++i)
    if (coll.separations[i].a.intersects(centers)) {
      Vertex bad = (coll.separations[i].a & centers).first();
      return SmoothViolation{3,
                             "center " + std::to_string(bad) + " lies in the A-side of " +
                                 std::to_string(coll.order[i]),
                             {coll.order[i], bad}};
    }
  return std::nullopt;
}

inline SmoothCollection validate_smooth(const Graph& g, std::vector<Separation> separations,
                                        std::vector<Vertex> order) {
  SmoothCollection coll{std::move(order), std::move(separations)};
  if (auto violation = check_smooth(g, coll))
    throw HypothesisViolation("collection is not smooth (condition " + std::to_string(violation->condition) +
                                  "): " + violation->message,
                              violation->witness);
  return coll;
}

/// The revised collection packaged in the given center order.
inline SmoothCollection as_smooth_collection(const Graph& g, const RevisedCollection& rc,
                                             const std::vector<Vertex>& order) {
  std::vector<Separation> seps;
  for (Vertex v : order) seps.push_back(rc.revised.at(v));
  return validate_smooth(g, std::move(seps), order);
}

struct CentralBag {
  VertexSet beta;
  Graph graph;  // G[β]
  std::vector<Vertex> order;
  std::vector<VertexSet> a_star;  // aligned with order
  WeightFn weights;               // inherited weights on β
};

/**
 * β = ⋂ (B ∪ C). A*(f(v_i)) gathers the components of ⋃ A that lie in
 * A(f(v_i)) but in no earlier A(f(v_j)); each center absorbs the weight of
 * its part.
 */
inline CentralBag central_bag(const Graph& g, const WeightFn& w, const SmoothCollection& coll) {
  CentralBag bag;
  bag.order = coll.order;
  bag.beta = g.vertices();
  VertexSet a_union;
  for (const auto& s : coll.separations) {
    bag.beta &= s.b | s.c;
    a_union |= s.a;
  }
  bag.graph = g.induced(bag.beta);
  bag.a_star.assign(coll.order.size(), VertexSet{});
  for (const auto& d : components(g, a_union)) {
    bool placed = false;
    for (int i = 0; i < coll.size() && !placed; ++i)
      if (d.is_subset_of(coll.separations[i].a)) {
        bag.a_star[i] |= d;
        placed = true;
      }
    if (!placed)
      throw HypothesisViolation("a component of the union of A-sides lies in no single A-side", d.to_vector());
  }
  if (!coll.centers().is_subset_of(bag.beta)) throw InternalError("a center lies outside the central bag");

  std::vector<Mass> values(static_cast<std::size_t>(g.capacity()),
                           w.is_exact() ? Mass::exact(0, w.denominator()) : Mass::real(0.0));
  for (Vertex v : g.vertices()) values[v] = w.of(v);
  for (int i = 0; i < coll.size(); ++i) values[coll.order[i]] = w.of(coll.order[i]) + w.mass(bag.a_star[i]);
  bag.weights = w.with_values(bag.graph, values);
  if (!(bag.weights.total() == w.mass(g.vertices())))
    throw InternalError("inherited weights do not preserve the total");
  return bag;
}

/// Centers whose A-side weighs more than 1/2 (expected: none).
inline std::vector<Vertex> heavy_a_sides(const Graph& g, const WeightFn& w, const SmoothCollection& coll) {
  std::vector<Vertex> out;
  const Mass total = w.mass(g.vertices());
  for (int i = 0; i < coll.size(); ++i)
    if (!w.mass(coll.separations[i].a).at_most(one_half, total)) out.push_back(coll.order[i]);
  return out;
}

/**
 * Lifts a (w_S, c)-balanced separator X of β to Y = X ∪ (N[X ∩ v(S)] ∩ β)
 * and verifies that Y is (w, c)-balanced in G.
 */
inline VertexSet grow_separator(const Graph& g, const WeightFn& w, const SmoothCollection& coll, const CentralBag& bag,
                                const VertexSet& x, Ratio c = one_half) {
  if (!x.is_subset_of(bag.beta)) throw PreconditionError("separator must lie inside the central bag");
  if (!is_balanced_separator(bag.graph, bag.weights, x, c))
    throw PreconditionError("separator is not balanced for the inherited weights");
  VertexSet y = x;
  for (Vertex v : x & coll.centers()) y |= closed_neighborhood(g, v) & bag.beta;
  if (!is_balanced_separator(g, w, y, c)) {
    VertexSet heavy = heaviest_component(g, w, y);
    throw HypothesisViolation("lifted separator is not balanced in the whole graph", heavy.to_vector());
  }
  return y;
}

}  // namespace starsep
