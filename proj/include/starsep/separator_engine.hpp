#pragma once

#include <optional>
#include <string>
#include <vector>

#include "starsep/hub_division.hpp"
#include "starsep/treewidth.hpp"

namespace starsep {

/// One inequality of a size ledger, with both sides measured.
struct LedgerEntry {
  std::string name;
  long long value = 0;
  long long bound = 0;
  bool holds() const { return value <= bound; }
};

struct AuxGraph {
  Vertex center = -1;
  std::vector<VertexSet> cliques;     // K_1..K_p: node i
  std::vector<VertexSet> components;  // D_1..D_q: node p + j
  Graph graph;
  WeightFn weights;  // w_H(k_i) = w(K_i), w_H(d_j) = w(D_j), same scale as the bag weights
  bool bipartite = true;
  int max_d_degree = 0;
  bool tw_at_most_two = true;
  std::optional<int> exact_tw;

  int k_node(int i) const { return i; }
  int d_node(int j) const { return static_cast<int>(cliques.size()) + j; }
  bool is_k_node(int node) const { return node < static_cast<int>(cliques.size()); }
};

/**
 * Auxiliary bipartite graph of a vertex v of β: one node per clique of
 * N_β(v) \ Hub(β), one per component of β \ N[v], adjacent when the clique
 * has a neighbor in the component.
 */
inline AuxGraph aux_graph(const Graph& beta, const WeightFn& w, Vertex v, const VertexSet& beta_hubs) {
  beta.require_vertex(v);
  AuxGraph out;
  out.center = v;
  const VertexSet nbrs = beta.neighbors(v) - beta_hubs;
  out.cliques = components(beta, nbrs);
  for (const auto& k : out.cliques)
    if (!is_clique(beta, k)) {
      std::vector<Vertex> witness{v};
      for (Vertex a : k)
        for (Vertex b : k - beta.neighbors(a))
          if (a < b && witness.size() == 1) witness.insert(witness.end(), {a, b});
      throw HypothesisViolation("neighborhood of " + std::to_string(v) + " is not a union of anticomplete cliques",
                                witness);
    }
  out.components = components(beta, beta.vertices() - closed_neighborhood(beta, v));
  const int p = static_cast<int>(out.cliques.size());
  const int q = static_cast<int>(out.components.size());
  if (p + q > max_vertices) throw CapacityError("auxiliary graph too large");
  std::vector<Edge> edges;
  for (int j = 0; j < q; ++j) {
    const VertexSet touch = neighborhood(beta, out.components[j]);
    std::vector<int> hit;
    for (int i = 0; i < p; ++i)
      if (touch.intersects(out.cliques[i])) {
        edges.emplace_back(i, p + j);
        hit.push_back(i);
      }
    out.max_d_degree = std::max(out.max_d_degree, static_cast<int>(hit.size()));
    if (hit.size() > 2) {
      std::vector<Vertex> witness{v};
      for (int idx = 0; idx < 3; ++idx) witness.push_back(out.cliques[hit[idx]].first());
      witness.push_back(out.components[j].first());
      throw HypothesisViolation("a component of the bag minus N[v] meets three cliques of N(v)", witness);
    }
  }
  out.graph = Graph::from_edges(p + q, edges);
  for (auto [a, b] : out.graph.edges()) out.bipartite = out.bipartite && (out.is_k_node(a) != out.is_k_node(b));
  std::vector<std::int64_t> num;
  std::vector<double> real;
  if (w.is_exact()) {
    for (const auto& k : out.cliques) num.push_back(w.mass(k).numerator());
    for (const auto& d : out.components) num.push_back(w.mass(d).numerator());
    out.weights = WeightFn::raw_exact(out.graph, num, w.denominator());
  } else {
    for (const auto& k : out.cliques) real.push_back(w.mass(k).value());
    for (const auto& d : out.components) real.push_back(w.mass(d).value());
    out.weights = WeightFn::raw_real(out.graph, real);
  }
  out.tw_at_most_two = treewidth_at_most_two(out.graph);
  if (out.graph.order() <= default_exact_cap) {
    out.exact_tw = exact_treewidth(out.graph);
    if ((*out.exact_tw <= 2) != out.tw_at_most_two) throw InternalError("treewidth tests disagree on the auxiliary graph");
  }
  if (!out.tw_at_most_two) throw HypothesisViolation("auxiliary graph has treewidth above 2", {v});
  return out;
}

struct SeparatorCertificate {
  std::string source;  // "aux_graph", "wheel_free" or "lifted"
  VertexSet separator;
  Ratio c = one_half;
  std::vector<Mass> component_weights;
  std::vector<LedgerEntry> ledger;
  std::optional<AuxGraph> aux;
  VertexSet aux_separator;  // node ids of the auxiliary graph
  VertexSet hub_nbrs;

  bool ledger_holds() const {
    for (const auto& e : ledger)
      if (!e.holds()) return false;
    return true;
  }
};

namespace detail {

inline std::vector<Mass> component_masses(const Graph& g, const WeightFn& w, const VertexSet& x) {
  std::vector<Mass> out;
  for (const auto& d : components(g, g.vertices() - x)) out.push_back(w.mass(d));
  return out;
}

/// Calls fn(subset) on the k-subsets of `pool` in lexicographic order until fn returns false.
template <typename F>
bool for_each_subset(const std::vector<Vertex>& pool, int k, F&& fn) {
  const int n = static_cast<int>(pool.size());
  if (k > n) return true;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    VertexSet s;
    for (int i : idx) s.insert(pool[i]);
    if (!fn(s)) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail

/**
 * Balanced separator of β around a vertex v balanced in G: a separator X of
 * at most three auxiliary nodes, expanded to Y = {v} ∪ hub_nbrs ∪ the cliques
 * K_i with X ∩ N[k_i] nonempty.
 */
inline SeparatorCertificate balanced_vertex_separator(const Graph& beta, const WeightFn& w, Vertex v,
                                                      const VertexSet& hub_nbrs, const VertexSet& beta_hubs) {
  beta.require_vertex(v);
  if (detect_pyramid(beta, v)) throw PreconditionError("vertex " + std::to_string(v) + " is a pyramid apex in the bag");
  SeparatorCertificate cert;
  cert.source = "aux_graph";
  cert.hub_nbrs = hub_nbrs;
  AuxGraph aux = aux_graph(beta, w, v, beta_hubs);
  const auto nodes = aux.graph.vertices().to_vector();
  std::optional<VertexSet> found;
  for (int size = 0; size <= 3 && !found; ++size)
    detail::for_each_subset(nodes, size, [&](const VertexSet& x) {
      if (is_balanced_separator(aux.graph, aux.weights, x)) {
        found = x;
        return false;
      }
      return true;
    });
  if (!found) throw HypothesisViolation("auxiliary graph has no balanced separator of size 3", {v});
  VertexSet y = hub_nbrs.with(v);
  for (int i = 0; i < static_cast<int>(aux.cliques.size()); ++i)
    if (closed_neighborhood(aux.graph, aux.k_node(i)).intersects(*found)) y |= aux.cliques[i];
  if (!is_balanced_separator(beta, w, y))
    throw HypothesisViolation("expanded separator is not balanced in the bag", heaviest_component(beta, w, y).to_vector());
  const int omega = clique_number(beta);
  cert.separator = y;
  cert.component_weights = detail::component_masses(beta, w, y);
  cert.ledger.push_back({"aux_separator_size", found->size(), 3});
  cert.ledger.push_back({"bag_separator_size", y.size(), 6LL * omega + hub_nbrs.size()});
  cert.aux_separator = *found;
  cert.aux = std::move(aux);
  if (!cert.ledger_holds()) throw HypothesisViolation("balanced-vertex separator exceeds its size bound", y.to_vector());
  return cert;
}

/// R(t, 4) for t <= 5; beyond that the binomial upper bound C(t + 2, 3).
inline int ramsey_t4(int t) {
  switch (t) {
    case 1: return 1;
    case 2: return 4;
    case 3: return 9;
    case 4: return 18;
    case 5: return 25;
    default: return static_cast<int>(detail::binomial(t + 2, 3));
  }
}

inline constexpr double wheelfree_exhaustive_cap = 2e6;

/**
 * Balanced separator of a wheel-free bag within a size budget. Sizes are
 * tried in increasing order; the first size admitting a balanced separator
 * wins, choosing the least heaviest component and then the lexicographically
 * least set. Sizes whose subset count exceeds the cap fall back to greedy
 * bisection of the heaviest component.
 */
inline SeparatorCertificate wheelfree_separator(const Graph& beta, const WeightFn& w, int budget,
                                                std::optional<VertexSet> beta_hubs = std::nullopt) {
  VertexSet hubs = beta_hubs ? *beta_hubs : hub_set(beta);
  if (!hubs.empty()) throw PreconditionError("bag is not wheel-free; hub " + std::to_string(hubs.first()));
  SeparatorCertificate cert;
  cert.source = "wheel_free";
  const auto pool = beta.vertices().to_vector();
  std::optional<VertexSet> best;
  std::optional<Mass> best_mass;
  for (int size = 0; size <= std::min(budget, beta.order()) && !best; ++size) {
    if (detail::binomial(static_cast<int>(pool.size()), size) > wheelfree_exhaustive_cap) break;
    detail::for_each_subset(pool, size, [&](const VertexSet& x) {
      if (!is_balanced_separator(beta, w, x)) return true;
      Mass m = heaviest_component_mass(beta, w, x);
      if (!best || compare(m, *best_mass) < 0) {
        best = x;
        best_mass = m;
      }
      return true;
    });
  }
  if (!best) {
    VertexSet x;
    while (!is_balanced_separator(beta, w, x) && x.size() < budget) {
      VertexSet heavy = heaviest_component(beta, w, x);
      Vertex pick = -1;
      std::optional<Mass> pick_mass;
      for (Vertex v : heavy) {
        Mass m = heaviest_component_mass(beta, w, x.with(v));
        if (!pick_mass || compare(m, *pick_mass) < 0) {
          pick = v;
          pick_mass = m;
        }
      }
      x.insert(pick);
    }
    if (is_balanced_separator(beta, w, x)) best = x;
  }
  if (!best) throw HypothesisViolation("no balanced separator of the wheel-free bag within the budget", {});
  cert.separator = *best;
  cert.component_weights = detail::component_masses(beta, w, *best);
  cert.ledger.push_back({"wheel_free_separator_size", best->size(), budget});
  return cert;
}

/// Checks a hub division's asserted properties; throws on the first failure.
inline void require_division_properties(const Graph& g, const HubDivision& div) {
  if (auto vm = div.v_m()) {
    if (!div.bag.beta.contains(*vm)) throw HypothesisViolation("v_m lies outside the central bag", {*vm});
    int nbr = (g.neighbors(*vm) & div.bag_hubs).size();
    if (nbr > div.partition.back_degree)
      throw HypothesisViolation("v_m has more hub neighbors in the bag than the back-degree", {*vm});
  }
  if (!div.bag_hubs.is_subset_of(div.tail()))
    throw HypothesisViolation("a hub of the central bag precedes v_m", (div.bag_hubs - div.tail()).to_vector());
  NoWheelsReport nw = check_no_wheels_in_bag(g, div);
  if (!nw.pass) {
    auto witness = nw.witness->hole.cycle;
    witness.insert(witness.begin(), nw.witness->center);
    throw HypothesisViolation("an early hub is a wheel center of the central bag", witness);
  }
}

/**
 * Separator of β_M: the wheel-free routine when every hub is unbalanced,
 * otherwise the balanced-vertex routine at v_m.
 */
inline SeparatorCertificate central_bag_separator(const Graph& g, const HubDivision& div, int t) {
  const Graph& beta = div.bag.graph;
  if (auto p = detect_pyramid(beta)) throw PreconditionError("central bag contains a pyramid");
  SeparatorCertificate cert;
  const int budget = ramsey_t4(t) + 1;
  const int omega = clique_number(beta);
  if (div.all_hubs_unbalanced()) {
    if (!div.bag_hubs.empty())
      throw HypothesisViolation("central bag has hubs although every hub is unbalanced", div.bag_hubs.to_vector());
    cert = wheelfree_separator(beta, div.bag.weights, budget, div.bag_hubs);
  } else {
    Vertex vm = *div.v_m();
    VertexSet hub_nbrs = g.neighbors(vm) & div.bag_hubs;
    cert = balanced_vertex_separator(beta, div.bag.weights, vm, hub_nbrs, div.bag_hubs);
  }
  cert.ledger.push_back({"central_bag_bound", cert.separator.size(),
                         std::max<long long>(budget, 6LL * omega + div.partition.back_degree)});
  (void)g;
  return cert;
}

struct MainSeparatorResult {
  HubDivision division;
  SeparatorCertificate bag_certificate;
  SeparatorCertificate certificate;  // lifted to G
};

/**
 * Hub division, separator of the central bag, and the lift to G, with every
 * intermediate bound asserted on the measured quantities.
 */
inline MainSeparatorResult main_separator(const Graph& g, const WeightFn& w, int t) {
  MainSeparatorResult out;
  out.division = hub_division(g, w, t);
  const HubDivision& div = out.division;
  require_division_properties(g, div);
  out.bag_certificate = central_bag_separator(g, div, t);
  const VertexSet& x = out.bag_certificate.separator;
  VertexSet y = grow_separator(g, w, div.collection, div.bag, x);

  SeparatorCertificate& cert = out.certificate;
  cert.source = "lifted";
  cert.separator = y;
  cert.component_weights = detail::component_masses(g, w, y);
  for (Vertex u : x & div.m_set) {
    if (detect_pyramid(div.bag.graph, u)) continue;
    int small = (div.bag.graph.neighbors(u) - div.bag_hubs).size();
    cert.ledger.push_back({"small_nbrs_" + std::to_string(u), small, 2LL * t});
  }
  cert.ledger.push_back({"extension_size", y.size(), (2LL * t + div.partition.back_degree) * x.size()});
  if (!cert.ledger_holds()) throw HypothesisViolation("lifted separator violates a size bound", y.to_vector());
  if (!is_balanced_separator(g, w, y)) throw HypothesisViolation("lifted separator is not balanced", y.to_vector());
  return out;
}

}  // namespace starsep
