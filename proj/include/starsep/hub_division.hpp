#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "starsep/central_bag.hpp"
#include "starsep/detectors.hpp"

namespace starsep {

struct DegeneracyPartition {
  std::vector<VertexSet> parts;
  int degeneracy = 0;        // measured on the subgraph induced by the hubs
  int back_degree = 0;       // max |N(v) \ (T_1 ∪ ... ∪ T_{i-1})| over v ∈ T_i, within the hubs
  int log_bound = 0;         // max(1, ceil(log2 |Hub|)), 0 when there are no hubs
  bool within_log_bound = true;

  /// Index of the part holding v, or -1.
  int part_of(Vertex v) const {
    for (int i = 0; i < static_cast<int>(parts.size()); ++i)
      if (parts[i].contains(v)) return i;
    return -1;
  }
};

inline int degeneracy(const Graph& g, const VertexSet& x) {
  VertexSet rest = x;
  int best = 0;
  while (!rest.empty()) {
    Vertex pick = -1;
    int low = max_vertices;
    for (Vertex v : rest) {
      int d = (g.neighbors(v) & rest).size();
      if (d < low) {
        low = d;
        pick = v;
      }
    }
    best = std::max(best, low);
    rest.erase(pick);
  }
  return best;
}

/**
 * Independent parts T_1, ..., T_l of X: each round takes a greedy maximal
 * independent set (increasing id) among the remaining vertices of remaining
 * degree at most twice the degeneracy.
 */
inline DegeneracyPartition degeneracy_partition(const Graph& g, const VertexSet& x) {
  g.require_subset(x);
  DegeneracyPartition out;
  out.degeneracy = degeneracy(g, x);
  VertexSet rest = x;
  while (!rest.empty()) {
    VertexSet low;
    for (Vertex v : rest)
      if ((g.neighbors(v) & rest).size() <= 2 * out.degeneracy) low.insert(v);
    if (low.empty()) throw InternalError("no low-degree vertex left in a degenerate graph");
    VertexSet part;
    for (Vertex v : low)
      if (!g.neighbors(v).intersects(part)) part.insert(v);
    for (Vertex v : part) out.back_degree = std::max(out.back_degree, (g.neighbors(v) & rest).size());
    out.parts.push_back(part);
    rest -= part;
  }
  const int k = x.size();
  if (k > 0) {
    int lg = 0;
    while ((1 << lg) < k) ++lg;
    out.log_bound = std::max(1, lg);
  }
  out.within_log_bound = static_cast<int>(out.parts.size()) <= out.log_bound || k == 0;
  return out;
}

inline DegeneracyPartition degeneracy_partition(const Graph& g) { return degeneracy_partition(g, g.vertices()); }

struct NoWheelsReport {
  bool pass = true;
  std::optional<WheelWitness> witness;
};

struct HubDivision {
  VertexSet hubs;
  DegeneracyPartition partition;
  std::vector<Vertex> ordering;  // v_1, ..., v_k
  int m = 1;                     // 1-based; k + 1 when every hub is unbalanced
  VertexSet unbalanced;
  VertexSet m_set;               // M
  RevisedCollection revised;
  SmoothCollection collection;
  CentralBag bag;
  VertexSet bag_hubs;            // Hub(β_M)
  std::vector<Vertex> heavy_a_sides;

  int k() const { return static_cast<int>(ordering.size()); }
  bool all_hubs_unbalanced() const { return m == k() + 1; }
  std::optional<Vertex> v_m() const {
    if (all_hubs_unbalanced()) return std::nullopt;
    return ordering[static_cast<std::size_t>(m - 1)];
  }
  VertexSet prefix() const {
    VertexSet s;
    for (int i = 0; i + 1 < m; ++i) s.insert(ordering[static_cast<std::size_t>(i)]);
    return s;
  }
  VertexSet tail() const {
    VertexSet s;
    for (int i = m - 1; i < k(); ++i) s.insert(ordering[static_cast<std::size_t>(i)]);
    return s;
  }
};

/// ≤_A-minimal elements of a set of unbalanced vertices.
inline VertexSet minimal_under_leq_A(const Graph& g, const WeightFn& w, const VertexSet& subset) {
  std::map<Vertex, Separation> seps;
  for (Vertex v : subset) seps.emplace(v, canonical_separation(g, w, v));
  VertexSet out;
  for (Vertex x : subset) {
    bool is_min = true;
    for (Vertex y : subset.without(x))
      if (seps.at(y).a.contains(x)) {
        is_min = false;
        break;
      }
    if (is_min) out.insert(x);
  }
  return out;
}

/**
 * Hub ordering by (part, id), the index m of the first balanced hub, the
 * minimal set M of the unbalanced prefix, its revised collection and the
 * central bag β_M with inherited weights.
 */
inline HubDivision hub_division(const Graph& g, const WeightFn& w, int t) {
  if (t < 1) throw PreconditionError("t must be positive");
  HubDivision div;
  div.hubs = hub_set(g);
  div.partition = degeneracy_partition(g, div.hubs);
  div.ordering = div.hubs.to_vector();
  std::stable_sort(div.ordering.begin(), div.ordering.end(), [&](Vertex a, Vertex b) {
    return div.partition.part_of(a) < div.partition.part_of(b);
  });
  div.unbalanced = classify_balanced(g, w).unbalanced;
  div.m = div.k() + 1;
  for (int i = 0; i < div.k(); ++i)
    if (!div.unbalanced.contains(div.ordering[static_cast<std::size_t>(i)])) {
      div.m = i + 1;
      break;
    }
  div.m_set = minimal_under_leq_A(g, w, div.prefix());
  div.revised = revised_collection(g, w, div.m_set);
  std::vector<Vertex> order;
  for (Vertex v : div.ordering)
    if (div.m_set.contains(v)) order.push_back(v);
  div.collection = as_smooth_collection(g, div.revised, order);
  div.bag = central_bag(g, w, div.collection);
  div.bag_hubs = hub_set(div.bag.graph);
  div.heavy_a_sides = heavy_a_sides(g, w, div.collection);
  return div;
}

/// No v_i with i < m centers a wheel whose hole lies in β_M.
inline NoWheelsReport check_no_wheels_in_bag(const Graph& g, const HubDivision& div) {
  NoWheelsReport report;
  for (Vertex v : div.prefix()) {
    if (!div.bag.beta.contains(v)) continue;
    if (auto wheel = find_wheel_at(g, div.bag.beta, v)) {
      report.pass = false;
      report.witness = wheel;
      return report;
    }
  }
  return report;
}

}  // namespace starsep
