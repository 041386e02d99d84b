#pragma once

// Brute-force reference implementations over vertex subsets. Deliberately
// naive: every structure is recognized from degree patterns of the induced
// subgraph, never by path search.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "starsep/graph.hpp"

namespace oracle {

using starsep::Graph;
using starsep::Vertex;
using starsep::VertexSet;

/// Induced subgraph on a subset, given as a sorted member list.
struct Sub {
  const Graph& g;
  std::vector<Vertex> members;

  int degree(Vertex v) const {
    int d = 0;
    for (Vertex u : members) d += g.adjacent(u, v) ? 1 : 0;
    return d;
  }
  int edge_count() const {
    int e = 0;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) e += g.adjacent(members[i], members[j]) ? 1 : 0;
    return e;
  }
};

/// Components of G[S] by repeated scanning; deliberately not using the library.
inline std::vector<std::vector<Vertex>> naive_components(const Graph& g, const std::vector<Vertex>& s) {
  std::vector<int> label(s.size(), -1);
  int next = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (label[i] != -1) continue;
    label[i] = next;
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t a = 0; a < s.size(); ++a)
        if (label[a] == next)
          for (std::size_t b = 0; b < s.size(); ++b)
            if (label[b] == -1 && g.adjacent(s[a], s[b])) {
              label[b] = next;
              grew = true;
            }
    }
    ++next;
  }
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(next));
  for (std::size_t i = 0; i < s.size(); ++i) out[label[i]].push_back(s[i]);
  return out;
}

inline bool naive_connected(const Graph& g, const std::vector<Vertex>& s) {
  return s.empty() || naive_components(g, s).size() == 1;
}

/// Calls fn(subset) for every subset of V(G) of the given sizes, sorted ascending.
template <typename F>
void for_each_subset(const Graph& g, int min_size, int max_size, F&& fn) {
  const auto ids = g.vertices().to_vector();
  const int n = static_cast<int>(ids.size());
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size < min_size || size > max_size) continue;
    std::vector<Vertex> s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1U) s.push_back(ids[i]);
    fn(s);
  }
}

inline bool is_c4(const Graph& g, const std::vector<Vertex>& s) {
  Sub sub{g, s};
  if (s.size() != 4 || sub.edge_count() != 4) return false;
  for (Vertex v : s)
    if (sub.degree(v) != 2) return false;
  return true;
}

inline bool is_diamond(const Graph& g, const std::vector<Vertex>& s) {
  return s.size() == 4 && Sub{g, s}.edge_count() == 5;
}

inline bool is_clique(const Graph& g, const std::vector<Vertex>& s) {
  return Sub{g, s}.edge_count() == static_cast<int>(s.size() * (s.size() - 1) / 2);
}

inline bool is_hole(const Graph& g, const std::vector<Vertex>& s) {
  if (s.size() < 4) return false;
  Sub sub{g, s};
  for (Vertex v : s)
    if (sub.degree(v) != 2) return false;
  return naive_connected(g, s);
}

inline bool is_theta(const Graph& g, const std::vector<Vertex>& s) {
  Sub sub{g, s};
  std::vector<Vertex> branch;
  for (Vertex v : s) {
    int d = sub.degree(v);
    if (d == 3) branch.push_back(v);
    else if (d != 2) return false;
  }
  if (branch.size() != 2 || g.adjacent(branch[0], branch[1])) return false;
  std::vector<Vertex> rest;
  for (Vertex v : s)
    if (v != branch[0] && v != branch[1]) rest.push_back(v);
  auto comps = naive_components(g, rest);
  if (comps.size() != 3) return false;
  for (const auto& c : comps) {
    bool to_a = false, to_b = false;
    for (Vertex v : c) {
      to_a = to_a || g.adjacent(v, branch[0]);
      to_b = to_b || g.adjacent(v, branch[1]);
    }
    if (!to_a || !to_b) return false;
  }
  return true;
}

/// Degree counts after deleting the edges inside `triangles`.
inline std::map<Vertex, int> degrees_without(const Graph& g, const std::vector<Vertex>& s,
                                              const std::vector<std::array<Vertex, 3>>& triangles) {
  std::map<Vertex, int> deg;
  for (Vertex v : s) deg[v] = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      Vertex a = s[i], b = s[j];
      if (!g.adjacent(a, b)) continue;
      bool in_triangle = false;
      for (const auto& t : triangles) {
        bool ha = std::find(t.begin(), t.end(), a) != t.end();
        bool hb = std::find(t.begin(), t.end(), b) != t.end();
        in_triangle = in_triangle || (ha && hb);
      }
      if (in_triangle) continue;
      ++deg[a];
      ++deg[b];
    }
  return deg;
}

inline bool is_pyramid(const Graph& g, const std::vector<Vertex>& s) {
  Sub sub{g, s};
  std::vector<Vertex> three;
  for (Vertex v : s) {
    int d = sub.degree(v);
    if (d == 3) three.push_back(v);
    else if (d != 2) return false;
  }
  if (three.size() != 4) return false;
  for (int apex_index = 0; apex_index < 4; ++apex_index) {
    Vertex a = three[apex_index];
    std::array<Vertex, 3> t{};
    int k = 0;
    for (int i = 0; i < 4; ++i)
      if (i != apex_index) t[k++] = three[i];
    if (!g.adjacent(t[0], t[1]) || !g.adjacent(t[0], t[2]) || !g.adjacent(t[1], t[2])) continue;
    int short_legs = 0;
    for (Vertex b : t) short_legs += g.adjacent(a, b) ? 1 : 0;
    if (short_legs > 1) continue;
    auto deg = degrees_without(g, s, {t});
    // a spider: tree, apex of degree 3, triangle vertices as its leaves
    if (deg[a] != 3 || deg[t[0]] != 1 || deg[t[1]] != 1 || deg[t[2]] != 1) continue;
    int edges = 0;
    for (auto [v, d] : deg) edges += d;
    if (edges / 2 != static_cast<int>(s.size()) - 1) continue;
    bool ok = true;
    for (auto [v, d] : deg)
      if (v != a && v != t[0] && v != t[1] && v != t[2] && d != 2) ok = false;
    if (!ok) continue;
    // Removing the triangle edges must leave it connected.
    std::map<Vertex, Vertex> parent;
    for (Vertex v : s) parent[v] = v;
    std::function<Vertex(Vertex)> find = [&](Vertex v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        Vertex x = s[i], y = s[j];
        if (!g.adjacent(x, y)) continue;
        bool tri = std::find(t.begin(), t.end(), x) != t.end() && std::find(t.begin(), t.end(), y) != t.end();
        if (!tri) parent[find(x)] = find(y);
      }
    std::set<Vertex> roots;
    for (Vertex v : s) roots.insert(find(v));
    if (roots.size() == 1) return true;
  }
  return false;
}

inline bool is_prism(const Graph& g, const std::vector<Vertex>& s) {
  Sub sub{g, s};
  std::vector<Vertex> three;
  for (Vertex v : s) {
    int d = sub.degree(v);
    if (d == 3) three.push_back(v);
    else if (d != 2) return false;
  }
  if (three.size() != 6) return false;
  auto triangle = [&](Vertex a, Vertex b, Vertex c) { return g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(b, c); };
  for (int mask = 0; mask < 64; ++mask) {
    if (__builtin_popcount(mask) != 3 || !(mask & 1)) continue;
    std::array<Vertex, 3> t1{}, t2{};
    int i1 = 0, i2 = 0;
    for (int i = 0; i < 6; ++i) (mask >> i & 1 ? t1[i1++] : t2[i2++]) = three[i];
    if (!triangle(t1[0], t1[1], t1[2]) || !triangle(t2[0], t2[1], t2[2])) continue;
    auto deg = degrees_without(g, s, {t1, t2});
    bool ok = true;
    for (auto [v, d] : deg) {
      bool corner = std::find(three.begin(), three.end(), v) != three.end();
      if (d != (corner ? 1 : 2)) ok = false;
    }
    if (!ok) continue;
    // Three paths, each from t1 to t2: union-find on non-triangle edges.
    std::map<Vertex, Vertex> parent;
    for (Vertex v : s) parent[v] = v;
    std::function<Vertex(Vertex)> find = [&](Vertex v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    auto in = [](const std::array<Vertex, 3>& t, Vertex v) { return std::find(t.begin(), t.end(), v) != t.end(); };
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        Vertex x = s[i], y = s[j];
        if (!g.adjacent(x, y)) continue;
        if ((in(t1, x) && in(t1, y)) || (in(t2, x) && in(t2, y))) continue;
        parent[find(x)] = find(y);
      }
    std::map<Vertex, std::pair<int, int>> per_root;
    for (Vertex v : s) {
      auto& c = per_root[find(v)];
      if (in(t1, v)) ++c.first;
      if (in(t2, v)) ++c.second;
    }
    if (per_root.size() != 3) continue;
    bool matched = true;
    for (auto& [r, c] : per_root) matched = matched && c.first == 1 && c.second == 1;
    if (matched) return true;
  }
  return false;
}

struct WheelFlags {
  bool wheel = false, line = false, even = false, twin = false, short_pyramid = false, proper = false,
       universal = false;
};

/// Flags of (hole S, center x) from brute-force checks on N(x) ∩ S.
inline WheelFlags wheel_flags(const Graph& g, const std::vector<Vertex>& hole, Vertex x) {
  std::vector<Vertex> n;
  for (Vertex v : hole)
    if (g.adjacent(v, x)) n.push_back(v);
  WheelFlags f;
  const int k = static_cast<int>(n.size());
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      for (int c = b + 1; c < k; ++c)
        if (!g.adjacent(n[a], n[b]) && !g.adjacent(n[a], n[c]) && !g.adjacent(n[b], n[c])) f.wheel = true;
  const int e = Sub{g, n}.edge_count();
  bool degrees_one = true;
  for (Vertex v : n) degrees_one = degrees_one && Sub{g, n}.degree(v) == 1;
  f.line = k == 4 && e == 2 && degrees_one;
  f.twin = k == 3 && e == 2;
  f.short_pyramid = k == 3 && e == 1;
  f.universal = k == static_cast<int>(hole.size());
  f.even = f.line || (f.wheel && k % 2 == 0);
  f.proper = !f.twin && !f.short_pyramid;
  return f;
}

inline std::vector<std::pair<const char*, bool WheelFlags::*>> flag_members() {
  return {{"wheel", &WheelFlags::wheel},
          {"line_wheel", &WheelFlags::line},
          {"even_wheel", &WheelFlags::even},
          {"twin_wheel", &WheelFlags::twin},
          {"short_pyramid", &WheelFlags::short_pyramid},
          {"proper_wheel", &WheelFlags::proper},
          {"universal_wheel", &WheelFlags::universal}};
}

/// For every (center, kind name) with a configuration: the shortest, then lexicographically least, hole.
inline std::map<std::pair<Vertex, std::string>, std::vector<Vertex>> wheel_table(const Graph& g) {
  std::map<std::pair<Vertex, std::string>, std::vector<Vertex>> best;
  std::vector<std::vector<Vertex>> holes;
  for_each_subset(g, 4, g.order(), [&](const std::vector<Vertex>& s) {
    if (oracle::is_hole(g, s)) holes.push_back(s);
  });
  std::sort(holes.begin(), holes.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (const auto& h : holes)
    for (Vertex x : g.vertices()) {
      if (std::find(h.begin(), h.end(), x) != h.end()) continue;
      int k = 0;
      for (Vertex v : h) k += g.adjacent(v, x) ? 1 : 0;
      if (k < 3) continue;
      WheelFlags f = wheel_flags(g, h, x);
      for (auto [name, member] : flag_members())
        if (f.*member) best.emplace(std::make_pair(x, std::string(name)), h);
    }
  return best;
}

struct Presence {
  bool c4 = false, diamond = false, theta = false, pyramid = false, prism = false;
  std::optional<std::vector<Vertex>> least_c4, least_diamond, least_clique;
};

/// Presence of each fixed structure, with lexicographically least fixed patterns.
inline Presence presence(const Graph& g, int clique_size) {
  Presence p;
  auto consider = [](std::optional<std::vector<Vertex>>& slot, const std::vector<Vertex>& s) {
    if (!slot || s < *slot) slot = s;
  };
  for_each_subset(g, 1, g.order(), [&](const std::vector<Vertex>& s) {
    if (s.size() == 4 && is_c4(g, s)) {
      p.c4 = true;
      consider(p.least_c4, s);
    }
    if (s.size() == 4 && is_diamond(g, s)) {
      p.diamond = true;
      consider(p.least_diamond, s);
    }
    if (static_cast<int>(s.size()) == clique_size && oracle::is_clique(g, s)) consider(p.least_clique, s);
    if (s.size() >= 5) {
      if (!p.theta && is_theta(g, s)) p.theta = true;
      if (!p.pyramid && is_pyramid(g, s)) p.pyramid = true;
    }
    if (s.size() >= 6 && !p.prism && is_prism(g, s)) p.prism = true;
  });
  return p;
}

/// Exhaustive minimum balanced-separator size (weights given per vertex as integers over their sum).
inline int min_balanced_separator_size(const Graph& g, const std::vector<long long>& weight) {
  long long total = 0;
  for (Vertex v : g.vertices()) total += weight[v];
  const auto ids = g.vertices().to_vector();
  int best = static_cast<int>(ids.size());
  for_each_subset(g, 0, g.order(), [&](const std::vector<Vertex>& x) {
    if (static_cast<int>(x.size()) >= best) return;
    std::vector<Vertex> rest;
    for (Vertex v : ids)
      if (std::find(x.begin(), x.end(), v) == x.end()) rest.push_back(v);
    for (const auto& c : naive_components(g, rest)) {
      long long m = 0;
      for (Vertex v : c) m += weight[v];
      if (2 * m > total) return;
    }
    best = static_cast<int>(x.size());
  });
  return best;
}

}  // namespace oracle
