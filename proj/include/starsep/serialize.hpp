#pragma once

#include <json.hpp>

#include "starsep/certify.hpp"
#include "starsep/generators.hpp"

namespace starsep {

using Json = nlohmann::json;

inline Json to_json(const VertexSet& s) { return Json(s.to_vector()); }

inline Json to_json(const Mass& m) {
  if (m.is_exact()) return m.to_string();
  return m.value();
}

inline Json to_json(const Separation& s) {
  Json j{{"A", to_json(s.a)}, {"C", to_json(s.c)}, {"B", to_json(s.b)}};
  if (s.center) j["center"] = *s.center;
  return j;
}

inline Json weights_json(const WeightFn& w) {
  Json j = Json::object();
  for (Vertex v : w.support()) j[std::to_string(v)] = to_json(w.of(v));
  return j;
}

inline Json to_json(const WheelWitness& w) {
  Json flags = Json::object();
  for (WheelKind k : all_wheel_kinds) flags[to_string(k)] = w.has(k);
  Json sectors = Json::array();
  for (const auto& s : w.sectors) sectors.push_back({{"path", s}, {"long", s.size() > 2}});
  return {{"hole", w.hole.cycle}, {"center", w.center}, {"spokes", to_json(w.spokes)},
          {"kind", to_string(w.kind)}, {"flags", flags}, {"sectors", sectors}};
}

inline Json to_json(const ObstructionReport& r) {
  Json j{{"t", r.t}, {"variant", r.variant == ClassVariant::star ? "star" : "standard"}, {"member", r.member}};
  if (r.obstruction) {
    const Obstruction& o = *r.obstruction;
    Json ob{{"kind", to_string(o.kind)}, {"vertices", o.vertices}};
    if (auto* th = std::get_if<ThetaWitness>(&o.detail))
      ob["paths"] = {th->paths[0], th->paths[1], th->paths[2]};
    else if (auto* py = std::get_if<PyramidWitness>(&o.detail)) {
      ob["apex"] = py->apex;
      ob["triangle"] = py->base;
      ob["paths"] = {py->paths[0], py->paths[1], py->paths[2]};
    } else if (auto* pr = std::get_if<PrismWitness>(&o.detail)) {
      ob["triangles"] = {pr->top, pr->bottom};
      ob["paths"] = {pr->paths[0], pr->paths[1], pr->paths[2]};
    } else if (auto* wh = std::get_if<WheelWitness>(&o.detail))
      ob["wheel"] = to_json(*wh);
    j["obstruction"] = ob;
  } else {
    j["obstruction"] = nullptr;
  }
  return j;
}

inline Json to_json(const AtomDecomposition& a) {
  Json atoms = Json::array(), cutsets = Json::array();
  for (const auto& s : a.atoms) atoms.push_back(to_json(s));
  for (const auto& s : a.cutsets) cutsets.push_back(to_json(s));
  return {{"atoms", atoms}, {"cutsets", cutsets}};
}

inline Json to_json(const OrderDigest& d) {
  Json seps = Json::array();
  for (const auto& [v, s] : d.separations) seps.push_back(to_json(s));
  Json pairs = Json::array();
  for (auto [x, y] : d.pairs) pairs.push_back({x, y});
  return {{"unbalanced", to_json(d.unbalanced)}, {"separations", seps}, {"pairs", pairs},
          {"minimal", to_json(d.minimal)}};
}

inline Json to_json(const DegeneracyPartition& p) {
  Json parts = Json::array();
  for (const auto& s : p.parts) parts.push_back(to_json(s));
  return {{"parts", parts},
          {"degeneracy", p.degeneracy},
          {"back_degree", p.back_degree},
          {"log_bound", p.log_bound},
          {"within_log_bound", p.within_log_bound}};
}

inline Json to_json(const HubDivision& d) {
  Json revised = Json::array();
  for (const auto& s : d.collection.separations) revised.push_back(to_json(s));
  Json a_star = Json::array();
  for (const auto& s : d.bag.a_star) a_star.push_back(to_json(s));
  return {{"hubs", to_json(d.hubs)},
          {"partition", to_json(d.partition)},
          {"ordering", d.ordering},
          {"m", d.m},
          {"M", to_json(d.m_set)},
          {"unbalanced", to_json(d.unbalanced)},
          {"revised", revised},
          {"bag", {{"beta", to_json(d.bag.beta)}, {"a_star", a_star}, {"weights", weights_json(d.bag.weights)}}},
          {"bag_hubs", to_json(d.bag_hubs)},
          {"heavy_a_sides", d.heavy_a_sides}};
}

inline Json to_json(const LedgerEntry& e) {
  return {{"name", e.name}, {"value", e.value}, {"bound", e.bound}, {"holds", e.holds()}};
}

inline Json to_json(const AuxGraph& a) {
  Json cliques = Json::array(), comps = Json::array(), edges = Json::array();
  for (const auto& k : a.cliques) cliques.push_back(to_json(k));
  for (const auto& d : a.components) comps.push_back(to_json(d));
  for (auto [u, v] : a.graph.edges()) edges.push_back({u, v});
  Json j{{"center", a.center},
         {"cliques", cliques},
         {"components", comps},
         {"edges", edges},
         {"bipartite", a.bipartite},
         {"max_d_degree", a.max_d_degree},
         {"tw_at_most_two", a.tw_at_most_two}};
  j["exact_tw"] = a.exact_tw ? Json(*a.exact_tw) : Json(nullptr);
  return j;
}

inline Json to_json(const SeparatorCertificate& c) {
  Json weights = Json::array(), ledger = Json::array();
  for (const auto& m : c.component_weights) weights.push_back(to_json(m));
  for (const auto& e : c.ledger) ledger.push_back(to_json(e));
  Json j{{"source", c.source},
         {"separator", to_json(c.separator)},
         {"c", std::to_string(c.c.num) + "/" + std::to_string(c.c.den)},
         {"component_weights", weights},
         {"ledger", ledger}};
  if (c.aux) {
    j["aux_graph"] = to_json(*c.aux);
    j["aux_separator"] = to_json(c.aux_separator);
    j["hub_nbrs"] = to_json(c.hub_nbrs);
  }
  return j;
}

inline Json to_json(const MainSeparatorResult& r) {
  return {{"division", to_json(r.division)}, {"bag_separator", to_json(r.bag_certificate)},
          {"separator", to_json(r.certificate)}};
}

inline Json to_json(const TreeDecomposition& td) {
  Json nodes = Json::array(), edges = Json::array(), bags = Json::array();
  for (int i = 0; i < static_cast<int>(td.bags.size()); ++i) {
    nodes.push_back(i);
    bags.push_back(to_json(td.bags[i]));
  }
  for (auto [a, b] : td.edges) edges.push_back({a, b});
  return {{"nodes", nodes}, {"edges", edges}, {"bags", bags}};
}

inline TreeDecomposition td_from_json(const Json& j) {
  TreeDecomposition td;
  try {
    if (!j.contains("bags") || !j["bags"].is_array()) throw InputError("decomposition needs a \"bags\" array");
    for (const auto& b : j["bags"]) {
      VertexSet s;
      for (const auto& v : b) {
        int x = v.get<int>();
        if (x < 0 || x >= max_vertices) throw InputError("bag vertex out of range");
        s.insert(x);
      }
      td.bags.push_back(s);
    }
    if (j.contains("edges"))
      for (const auto& e : j["edges"]) td.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed decomposition: ") + e.what());
  }
  return td;
}

inline Json to_json(const TdCheck& c) {
  return {{"valid", c.pass}, {"failure", c.failure}, {"witness", c.witness}};
}

inline Json to_json(const CertifyReport& r) {
  Json calls = Json::array();
  for (const auto& c : r.calls)
    calls.push_back({{"atom_size", c.atom_size},
                     {"separator_size", c.separator_size},
                     {"bag_separator_size", c.bag_separator_size},
                     {"branch", c.branch},
                     {"back_degree", c.back_degree},
                     {"omega", c.omega},
                     {"ledger_holds", c.ledger_holds}});
  Json j{{"t", r.t},
         {"decomposition", to_json(r.td)},
         {"atoms", to_json(r.atoms)},
         {"validity", to_json(r.validity)},
         {"width", r.width},
         {"max_separator", r.max_separator},
         {"oracle_calls", calls},
         {"max_back_degree", r.max_back_degree},
         {"omega", r.omega},
         {"composed_bound", r.composed_bound},
         {"theorem_bound", r.theorem_bound},
         {"width_within_composed", r.width_within_composed()},
         {"width_at_least_exact", r.width_at_least_exact()}};
  j["exact_tw"] = r.exact_tw ? Json(*r.exact_tw) : Json(nullptr);
  return j;
}

}  // namespace starsep
