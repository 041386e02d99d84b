#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "starsep/graph.hpp"

namespace starsep {

// ---------------------------------------------------------------------------
// Holes
// ---------------------------------------------------------------------------

/// Induced cycle of length >= 4, stored from its smallest vertex towards the
/// smaller of that vertex's two cycle neighbors.
struct Hole {
  std::vector<Vertex> cycle;

  int length() const { return static_cast<int>(cycle.size()); }
  VertexSet members() const { return VertexSet::of(cycle); }
  friend bool operator==(const Hole&, const Hole&) = default;
};

inline bool is_hole(const Graph& g, const std::vector<Vertex>& cycle) {
  const int len = static_cast<int>(cycle.size());
  if (len < 4) return false;
  VertexSet members = VertexSet::of(cycle);
  if (members.size() != len) return false;
  for (int i = 0; i < len; ++i) {
    Vertex v = cycle[i];
    VertexSet expected{cycle[(i + 1) % len], cycle[(i + len - 1) % len]};
    if (!((g.neighbors(v) & members) == expected)) return false;
  }
  return true;
}

namespace detail {

template <typename F>
bool extend_hole(const Graph& g, const VertexSet& allowed, int target, std::vector<Vertex>& path,
                 const VertexSet& blocked, F& fn) {
  const Vertex s = path.front();
  const Vertex u = path.back();
  const int have = static_cast<int>(path.size());
  for (Vertex y : (g.neighbors(u) & allowed) - blocked) {
    if (g.adjacent(y, s)) {
      if (have + 1 == target && have >= 3 && path[1] < y) {
        path.push_back(y);
        bool go_on = fn(path);
        path.pop_back();
        if (!go_on) return false;
      }
      continue;
    }
    if (have + 2 > target) continue;
    path.push_back(y);
    bool go_on = extend_hole(g, allowed, target, path, blocked | closed_neighborhood(g, u), fn);
    path.pop_back();
    if (!go_on) return false;
  }
  return true;
}

}  // namespace detail

/**
 * Calls fn(cycle) for every hole of G[X] in order of increasing length.
 * Extension is pruned as soon as a chord appears. fn returns false to stop.
 * Returns false iff stopped early.
 */
template <typename F>
bool for_each_hole(const Graph& g, const VertexSet& x, F&& fn) {
  const VertexSet within = x & g.vertices();
  const int n = within.size();
  for (int target = 4; target <= n; ++target) {
    for (Vertex s : within) {
      VertexSet allowed = within - VertexSet::range(s + 1);
      for (Vertex p1 : g.neighbors(s) & allowed) {
        std::vector<Vertex> path{s, p1};
        if (!detail::extend_hole(g, allowed, target, path, VertexSet{s}, fn)) return false;
      }
    }
  }
  return true;
}

inline std::vector<Hole> all_holes(const Graph& g, const VertexSet& x) {
  std::vector<Hole> out;
  for_each_hole(g, x, [&](const std::vector<Vertex>& c) {
    out.push_back(Hole{c});
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Fixed patterns
// ---------------------------------------------------------------------------

enum class Pattern { c4, diamond, clique };

namespace detail {

inline std::optional<std::vector<Vertex>> find_c4(const Graph& g) {
  for (Vertex a : g.vertices()) {
    const VertexSet above = g.vertices() - VertexSet::range(a + 1);
    const VertexSet nbrs = g.neighbors(a) & above;
    std::optional<VertexSet> best;
    std::vector<Vertex> best_cycle;
    for (Vertex x : nbrs)
      for (Vertex y : nbrs - VertexSet::range(x + 1)) {
        if (g.adjacent(x, y)) continue;
        VertexSet far = (g.neighbors(x) & g.neighbors(y) & above) - closed_neighborhood(g, a);
        if (far.empty()) continue;
        Vertex z = far.first();
        VertexSet candidate{a, x, y, z};
        if (!best || lex_less(candidate, *best)) {
          best = candidate;
          best_cycle = {a, x, z, y};
        }
      }
    if (best) return best_cycle;
  }
  return std::nullopt;
}

/// Returns [u, v, x, y]: uv is the edge of the two degree-3 vertices.
inline std::optional<std::vector<Vertex>> find_diamond(const Graph& g) {
  std::optional<VertexSet> best;
  std::vector<Vertex> best_embedding;
  for (auto [u, v] : g.edges()) {
    VertexSet common = g.neighbors(u) & g.neighbors(v);
    for (Vertex x : common)
      for (Vertex y : common - VertexSet::range(x + 1)) {
        if (g.adjacent(x, y)) continue;
        VertexSet candidate{u, v, x, y};
        if (!best || lex_less(candidate, *best)) {
          best = candidate;
          best_embedding = {u, v, x, y};
        }
      }
  }
  if (best) return best_embedding;
  return std::nullopt;
}

inline bool find_clique(const Graph& g, int t, std::vector<Vertex>& chosen, const VertexSet& cand) {
  if (static_cast<int>(chosen.size()) == t) return true;
  if (static_cast<int>(chosen.size()) + cand.size() < t) return false;
  for (Vertex v : cand) {
    chosen.push_back(v);
    if (find_clique(g, t, chosen, cand & g.neighbors(v) & (g.vertices() - VertexSet::range(v + 1)))) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

/**
 * Lexicographically least induced copy of a fixed pattern, by sorted vertex
 * set. C4 comes back in cyclic order, the diamond as [u, v, x, y] with uv the
 * middle edge, and K_t sorted.
 */
inline std::optional<std::vector<Vertex>> detect_fixed(const Graph& g, Pattern pattern, int t = 3) {
  switch (pattern) {
    case Pattern::c4:
      return detail::find_c4(g);
    case Pattern::diamond:
      return detail::find_diamond(g);
    case Pattern::clique: {
      if (t < 1) throw PreconditionError("clique size must be positive");
      std::vector<Vertex> chosen;
      if (detail::find_clique(g, t, chosen, g.vertices())) return chosen;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Three-path configurations
// ---------------------------------------------------------------------------

struct ThetaWitness {
  Vertex a = -1, b = -1;
  std::array<std::vector<Vertex>, 3> paths;  // each from a to b
  VertexSet members() const {
    VertexSet s;
    for (const auto& p : paths) s |= VertexSet::of(p);
    return s;
  }
};

struct PyramidWitness {
  Vertex apex = -1;
  std::array<Vertex, 3> base{};
  std::array<std::vector<Vertex>, 3> paths;  // paths[i] from apex to base[i]
  VertexSet members() const {
    VertexSet s;
    for (const auto& p : paths) s |= VertexSet::of(p);
    return s;
  }
};

struct PrismWitness {
  std::array<Vertex, 3> top{}, bottom{};
  std::array<std::vector<Vertex>, 3> paths;  // paths[i] from top[i] to bottom[i]
  VertexSet members() const {
    VertexSet s;
    for (const auto& p : paths) s |= VertexSet::of(p);
    return s;
  }
};

namespace detail {

/**
 * Backtracking search for three induced paths between fixed endpoint pairs.
 * Interior vertices avoid every endpoint other than their own path's ends,
 * and the interiors of different paths are disjoint and anticomplete.
 */
class ThreePathSearch {
 public:
  struct Leg {
    Vertex from, to;
    int min_length;
  };

  ThreePathSearch(const Graph& g, std::array<Leg, 3> legs, bool order_by_first)
      : g_(g), legs_(legs), order_by_first_(order_by_first) {
    for (const auto& l : legs_) {
      core_.insert(l.from);
      core_.insert(l.to);
    }
  }

  bool run() { return solve(0, VertexSet{}); }
  const std::array<std::vector<Vertex>, 3>& paths() const { return paths_; }

 private:
  bool solve(int i, const VertexSet& forbidden) {
    if (i == 3) return true;
    const Leg& leg = legs_[i];
    if (g_.adjacent(leg.from, leg.to)) {
      if (leg.min_length > 1) return false;
      paths_[i] = {leg.from, leg.to};
      return solve(i + 1, forbidden);
    }
    const VertexSet own_ends{leg.from, leg.to};
    for (Vertex y : g_.neighbors(leg.from) - forbidden - core_) {
      if (!(g_.neighbors(y) & core_).is_subset_of(own_ends)) continue;
      if (order_by_first_ && i > 0 && y <= paths_[i - 1][1]) continue;
      std::vector<Vertex> path{leg.from, y};
      if (extend(i, path, closed_neighborhood(g_, leg.from), forbidden)) return true;
    }
    return false;
  }

  bool extend(int i, std::vector<Vertex>& path, const VertexSet& own_block, const VertexSet& forbidden) {
    const Leg& leg = legs_[i];
    const Vertex u = path.back();
    if (g_.adjacent(u, leg.to)) {
      if (static_cast<int>(path.size()) < leg.min_length) return false;
      path.push_back(leg.to);
      paths_[i] = path;
      path.pop_back();
      VertexSet interior = VertexSet::of(path).without(leg.from);
      return solve(i + 1, forbidden | neighborhood(g_, interior, true));
    }
    const VertexSet to_only{leg.to};
    for (Vertex y : g_.neighbors(u) - forbidden - core_ - own_block) {
      if (!(g_.neighbors(y) & core_).is_subset_of(to_only)) continue;
      path.push_back(y);
      bool found = extend(i, path, own_block | closed_neighborhood(g_, u), forbidden);
      path.pop_back();
      if (found) return true;
    }
    return false;
  }

  const Graph& g_;
  std::array<Leg, 3> legs_;
  bool order_by_first_;
  VertexSet core_;
  std::array<std::vector<Vertex>, 3> paths_;
};

inline std::vector<std::array<Vertex, 3>> triangles(const Graph& g) {
  std::vector<std::array<Vertex, 3>> out;
  for (Vertex a : g.vertices())
    for (Vertex b : g.neighbors(a) - VertexSet::range(a + 1))
      for (Vertex c : (g.neighbors(a) & g.neighbors(b)) - VertexSet::range(b + 1)) out.push_back({a, b, c});
  return out;
}

}  // namespace detail

inline std::optional<ThetaWitness> detect_theta(const Graph& g) {
  for (Vertex a : g.vertices()) {
    if (g.degree(a) < 3) continue;
    for (Vertex b : g.vertices() - VertexSet::range(a + 1) - closed_neighborhood(g, a)) {
      if (g.degree(b) < 3) continue;
      detail::ThreePathSearch search(g, {{{a, b, 2}, {a, b, 2}, {a, b, 2}}}, true);
      if (search.run()) return ThetaWitness{a, b, search.paths()};
    }
  }
  return std::nullopt;
}

/// Pyramid search; with `apex` set, only pyramids with that apex are found.
inline std::optional<PyramidWitness> detect_pyramid(const Graph& g, std::optional<Vertex> apex = std::nullopt) {
  const auto tris = detail::triangles(g);
  if (tris.empty()) return std::nullopt;
  VertexSet apexes = g.vertices();
  if (apex) apexes = VertexSet{*apex} & g.vertices();
  for (Vertex a : apexes) {
    if (g.degree(a) < 3) continue;
    for (const auto& t : tris) {
      VertexSet base = VertexSet::of(t);
      if (base.contains(a) || (g.neighbors(a) & base).size() > 1) continue;
      if (g.degree(t[0]) < 3 || g.degree(t[1]) < 3 || g.degree(t[2]) < 3) continue;
      detail::ThreePathSearch search(g, {{{a, t[0], 1}, {a, t[1], 1}, {a, t[2], 1}}}, false);
      if (search.run()) return PyramidWitness{a, t, search.paths()};
    }
  }
  return std::nullopt;
}

inline std::optional<PrismWitness> detect_prism(const Graph& g) {
  const auto tris = detail::triangles(g);
  for (std::size_t i = 0; i < tris.size(); ++i) {
    const auto& top = tris[i];
    VertexSet top_set = VertexSet::of(top);
    if (g.degree(top[0]) < 3 || g.degree(top[1]) < 3 || g.degree(top[2]) < 3) continue;
    for (std::size_t j = i + 1; j < tris.size(); ++j) {
      auto bottom = tris[j];
      VertexSet bottom_set = VertexSet::of(bottom);
      if (top_set.intersects(bottom_set)) continue;
      if (g.degree(bottom[0]) < 3 || g.degree(bottom[1]) < 3 || g.degree(bottom[2]) < 3) continue;
      std::sort(bottom.begin(), bottom.end());
      do {
        bool matching_only = true;
        for (int p = 0; p < 3 && matching_only; ++p)
          for (int q = 0; q < 3; ++q)
            if (p != q && g.adjacent(top[p], bottom[q])) {
              matching_only = false;
              break;
            }
        if (!matching_only) continue;
        detail::ThreePathSearch search(g, {{{top[0], bottom[0], 1}, {top[1], bottom[1], 1}, {top[2], bottom[2], 1}}},
                                       false);
        if (search.run()) return PrismWitness{top, bottom, search.paths()};
      } while (std::next_permutation(bottom.begin(), bottom.end()));
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Wheels
// ---------------------------------------------------------------------------

enum class WheelKind { wheel, line, even, twin, short_pyramid, proper, universal };

inline constexpr std::array<WheelKind, 7> all_wheel_kinds{WheelKind::wheel, WheelKind::line,
                                                          WheelKind::even,  WheelKind::twin,
                                                          WheelKind::short_pyramid, WheelKind::proper,
                                                          WheelKind::universal};

inline const char* to_string(WheelKind k) {
  switch (k) {
    case WheelKind::wheel: return "wheel";
    case WheelKind::line: return "line_wheel";
    case WheelKind::even: return "even_wheel";
    case WheelKind::twin: return "twin_wheel";
    case WheelKind::short_pyramid: return "short_pyramid";
    case WheelKind::proper: return "proper_wheel";
    case WheelKind::universal: return "universal_wheel";
  }
  return "?";
}

/**
 * A hole H and a vertex outside it with at least three neighbors on H.
 * `wheel` is the strict condition (three pairwise non-adjacent neighbors);
 * the remaining flags refine the configuration.
 */
struct WheelWitness {
  Hole hole;
  Vertex center = -1;
  VertexSet spokes;  // N(center) ∩ H
  bool wheel = false;
  bool line = false;
  bool even = false;
  bool twin = false;
  bool short_pyramid = false;
  bool proper = false;
  bool universal = false;
  /// Sectors in hole order; each runs from one neighbor of the center to the next.
  std::vector<std::vector<Vertex>> sectors;
  WheelKind kind = WheelKind::wheel;

  bool has(WheelKind k) const {
    switch (k) {
      case WheelKind::wheel: return wheel;
      case WheelKind::line: return line;
      case WheelKind::even: return even;
      case WheelKind::twin: return twin;
      case WheelKind::short_pyramid: return short_pyramid;
      case WheelKind::proper: return proper;
      case WheelKind::universal: return universal;
    }
    return false;
  }

  std::vector<std::vector<Vertex>> long_sectors() const {
    std::vector<std::vector<Vertex>> out;
    for (const auto& s : sectors)
      if (s.size() > 2) out.push_back(s);
    return out;
  }
};

/// Flags for (hole, center); nullopt unless the center has >= 3 neighbors on the hole.
inline std::optional<WheelWitness> classify_configuration(const Graph& g, const Hole& hole, Vertex center) {
  const VertexSet h = hole.members();
  if (h.contains(center)) return std::nullopt;
  const VertexSet spokes = g.neighbors(center) & h;
  const int k = spokes.size();
  if (k < 3) return std::nullopt;
  const int len = hole.length();

  WheelWitness w;
  w.hole = hole;
  w.center = center;
  w.spokes = spokes;
  w.universal = k == len;

  // Runs of consecutive spokes around the hole.
  std::vector<int> runs;
  int independent = 0;
  if (w.universal) {
    independent = len / 2;
  } else {
    int start = 0;
    while (spokes.contains(hole.cycle[start])) ++start;
    int run = 0;
    for (int step = 1; step <= len; ++step) {
      if (spokes.contains(hole.cycle[(start + step) % len])) {
        ++run;
      } else if (run > 0) {
        runs.push_back(run);
        independent += (run + 1) / 2;
        run = 0;
      }
    }
  }
  const int run_count = static_cast<int>(runs.size());
  w.wheel = independent >= 3;
  w.line = !w.universal && run_count == 2 && runs[0] == 2 && runs[1] == 2;
  w.twin = !w.universal && run_count == 1 && runs[0] == 3;
  w.short_pyramid = k == 3 && run_count == 2 && (runs[0] + runs[1] == 3);
  const bool single_edge = !w.universal && run_count == 1 && runs[0] == 2;
  w.even = w.line || (w.wheel && k % 2 == 0 && !single_edge);
  w.proper = !w.twin && !w.short_pyramid;

  // Sectors, starting from the first spoke in hole order.
  std::vector<int> idx;
  for (int i = 0; i < len; ++i)
    if (spokes.contains(hole.cycle[i])) idx.push_back(i);
  for (std::size_t s = 0; s < idx.size(); ++s) {
    int from = idx[s];
    int to = idx[(s + 1) % idx.size()];
    std::vector<Vertex> sector{hole.cycle[from]};
    for (int i = (from + 1) % len;; i = (i + 1) % len) {
      sector.push_back(hole.cycle[i]);
      if (i == to) break;
    }
    w.sectors.push_back(std::move(sector));
  }
  return w;
}

/**
 * Hub(X): vertices x of X that center a (strict) wheel whose hole lies in X.
 */
inline VertexSet hub_set(const Graph& g, const VertexSet& x) {
  g.require_subset(x);
  VertexSet hubs;
  for_each_hole(g, x, [&](const std::vector<Vertex>& cycle) {
    const VertexSet h = VertexSet::of(cycle);
    Hole hole{cycle};
    for (Vertex v : x - h - hubs) {
      if ((g.neighbors(v) & h).size() < 3) continue;
      auto cfg = classify_configuration(g, hole, v);
      if (cfg && cfg->wheel) hubs.insert(v);
    }
    return !(hubs == x);
  });
  return hubs;
}

inline VertexSet hub_set(const Graph& g) { return hub_set(g, g.vertices()); }

/// True iff some hole inside X makes `center` a wheel center (center in X).
inline std::optional<WheelWitness> find_wheel_at(const Graph& g, const VertexSet& x, Vertex center) {
  std::optional<WheelWitness> found;
  for_each_hole(g, x.without(center), [&](const std::vector<Vertex>& cycle) {
    auto cfg = classify_configuration(g, Hole{cycle}, center);
    if (cfg && cfg->wheel) {
      found = std::move(cfg);
      return false;
    }
    return true;
  });
  return found;
}

/**
 * One witness per (center, kind): the shortest hole, ties broken by the
 * lexicographically least vertex set. Sorted by center, then kind.
 */
inline std::vector<WheelWitness> classify_wheels(const Graph& g) {
  std::map<std::pair<Vertex, int>, WheelWitness> best;
  for_each_hole(g, g.vertices(), [&](const std::vector<Vertex>& cycle) {
    const VertexSet h = VertexSet::of(cycle);
    Hole hole{cycle};
    for (Vertex v : g.vertices() - h) {
      if ((g.neighbors(v) & h).size() < 3) continue;
      auto cfg = classify_configuration(g, hole, v);
      if (!cfg) continue;
      for (WheelKind kind : all_wheel_kinds) {
        if (!cfg->has(kind)) continue;
        auto key = std::make_pair(v, static_cast<int>(kind));
        auto it = best.find(key);
        if (it == best.end() || shortlex_less(h, it->second.hole.members())) {
          WheelWitness w = *cfg;
          w.kind = kind;
          best.insert_or_assign(key, std::move(w));
        }
      }
    }
    return true;
  });
  std::vector<WheelWitness> out;
  for (auto& [key, w] : best) out.push_back(std::move(w));
  return out;
}

inline std::optional<WheelWitness> detect_even_wheel(const Graph& g) {
  std::optional<WheelWitness> found;
  for_each_hole(g, g.vertices(), [&](const std::vector<Vertex>& cycle) {
    const VertexSet h = VertexSet::of(cycle);
    Hole hole{cycle};
    for (Vertex v : g.vertices() - h) {
      if ((g.neighbors(v) & h).size() < 3) continue;
      auto cfg = classify_configuration(g, hole, v);
      if (cfg && cfg->even) {
        cfg->kind = WheelKind::even;
        found = std::move(cfg);
        return false;
      }
    }
    return true;
  });
  return found;
}

// ---------------------------------------------------------------------------
// Class membership
// ---------------------------------------------------------------------------

enum class ClassVariant { standard, star };

enum class ObstructionKind { c4, diamond, clique, theta, pyramid, prism, even_wheel, wheel };

inline const char* to_string(ObstructionKind k) {
  switch (k) {
    case ObstructionKind::c4: return "C4";
    case ObstructionKind::diamond: return "diamond";
    case ObstructionKind::clique: return "K_t";
    case ObstructionKind::theta: return "theta";
    case ObstructionKind::pyramid: return "pyramid";
    case ObstructionKind::prism: return "prism";
    case ObstructionKind::even_wheel: return "even_wheel";
    case ObstructionKind::wheel: return "wheel";
  }
  return "?";
}

struct Obstruction {
  ObstructionKind kind;
  std::vector<Vertex> vertices;
  std::variant<std::monostate, ThetaWitness, PyramidWitness, PrismWitness, WheelWitness> detail;
};

struct ObstructionReport {
  int t = 4;
  ClassVariant variant = ClassVariant::standard;
  bool member = true;
  std::optional<Obstruction> obstruction;
};

/**
 * Membership in the class of (C4, diamond, theta, pyramid, prism, even wheel,
 * K_t)-free graphs; the star variant drops the pyramid test. Tests run in the
 * order listed and the first obstruction found is reported.
 */
inline ObstructionReport class_membership(const Graph& g, int t, ClassVariant variant = ClassVariant::standard) {
  if (t < 4) throw PreconditionError("class membership needs t >= 4");
  ObstructionReport report;
  report.t = t;
  report.variant = variant;
  auto fail = [&](Obstruction o) {
    report.member = false;
    report.obstruction = std::move(o);
    return report;
  };
  if (auto e = detect_fixed(g, Pattern::c4)) return fail({ObstructionKind::c4, *e, {}});
  if (auto e = detect_fixed(g, Pattern::diamond)) return fail({ObstructionKind::diamond, *e, {}});
  if (auto e = detect_fixed(g, Pattern::clique, t)) return fail({ObstructionKind::clique, *e, {}});
  if (auto w = detect_theta(g)) return fail({ObstructionKind::theta, w->members().to_vector(), *w});
  if (variant == ClassVariant::standard)
    if (auto w = detect_pyramid(g)) return fail({ObstructionKind::pyramid, w->members().to_vector(), *w});
  if (auto w = detect_prism(g)) return fail({ObstructionKind::prism, w->members().to_vector(), *w});
  if (auto w = detect_even_wheel(g)) {
    auto verts = w->hole.members().with(w->center).to_vector();
    return fail({ObstructionKind::even_wheel, verts, *w});
  }
  return report;
}

inline bool is_member(const Graph& g, int t, ClassVariant variant = ClassVariant::standard) {
  return class_membership(g, t, variant).member;
}

}  // namespace starsep
