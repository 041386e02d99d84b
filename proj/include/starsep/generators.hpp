#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "starsep/detectors.hpp"
#include "starsep/weights.hpp"

namespace starsep {

namespace detail {

inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw InputError("bad number '" + item + "'");
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw InputError("bad number '" + item + "'");
    }
  }
  return out;
}

inline int parse_count(const std::string& text) {
  auto v = parse_int_list(text);
  if (v.size() != 1) throw InputError("expected one number, got '" + text + "'");
  return v[0];
}

/// Appends an induced path of `length` edges between `from` and `to`, creating interior vertices.
inline void add_path(std::vector<Edge>& edges, int& next_id, Vertex from, Vertex to, int length) {
  Vertex prev = from;
  for (int i = 1; i < length; ++i) {
    edges.emplace_back(prev, next_id);
    prev = next_id++;
  }
  edges.emplace_back(prev, to);
}

}  // namespace detail

inline Graph make_path(int n) {
  if (n < 1) throw InputError("path needs at least one vertex");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

inline Graph make_cycle(int n) {
  if (n < 3) throw InputError("cycle needs at least three vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

inline Graph make_complete(int n) {
  if (n < 1) throw InputError("complete graph needs at least one vertex");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

/// a = 0, b = 1; paths of the given lengths (each >= 2).
inline Graph make_theta(int l1, int l2, int l3) {
  for (int l : {l1, l2, l3})
    if (l < 2) throw InputError("theta paths need length at least two");
  std::vector<Edge> edges;
  int next = 2;
  for (int l : {l1, l2, l3}) detail::add_path(edges, next, 0, 1, l);
  return Graph::from_edges(next, edges);
}

/// Triangles 0,1,2 and 3,4,5; path i joins i to 3 + i.
inline Graph make_prism(int l1, int l2, int l3) {
  for (int l : {l1, l2, l3})
    if (l < 1) throw InputError("prism paths need length at least one");
  std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}};
  int next = 6, i = 0;
  for (int l : {l1, l2, l3}) {
    detail::add_path(edges, next, i, 3 + i, l);
    ++i;
  }
  return Graph::from_edges(next, edges);
}

/// Apex 0, triangle 1,2,3; path i joins the apex to 1 + i. At most one length may be 1.
inline Graph make_pyramid(int l1, int l2, int l3) {
  int ones = 0;
  for (int l : {l1, l2, l3}) {
    if (l < 1) throw InputError("pyramid paths need length at least one");
    ones += l == 1;
  }
  if (ones > 1) throw InputError("at most one pyramid path may have length one");
  std::vector<Edge> edges{{1, 2}, {1, 3}, {2, 3}};
  int next = 4, i = 0;
  for (int l : {l1, l2, l3}) {
    detail::add_path(edges, next, 0, 1 + i, l);
    ++i;
  }
  return Graph::from_edges(next, edges);
}

/// Hole 0..n-1 and center n adjacent to the 1-based positions in `spokes`.
inline Graph make_wheel(int n, const std::vector<int>& spokes) {
  if (n < 4) throw InputError("wheel rim needs at least four vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  std::vector<int> seen;
  for (int s : spokes) {
    if (s < 1 || s > n) throw InputError("spoke position " + std::to_string(s) + " out of range");
    if (std::find(seen.begin(), seen.end(), s) != seen.end()) throw InputError("repeated spoke position");
    seen.push_back(s);
    edges.emplace_back(s - 1, n);
  }
  return Graph::from_edges(n + 1, edges);
}

/**
 * Named graphs: P<n>, C<n>, K<n>, theta:l1,l2,l3, prism:l1,l2,l3,
 * pyramid:l1,l2,l3, wheel:n:s1,s2,..., W93, W5, bowtie, diamond, PYR6,
 * PRISM3, THETA233. THETA(2,3,3)-style spellings are accepted too.
 */
inline Graph make(std::string id) {
  if (id == "W93") return make_wheel(9, {1, 4, 7});
  if (id == "W5") return make_wheel(5, {1, 2, 3, 4, 5});
  if (id == "PYR6") return make_pyramid(1, 2, 2);
  if (id == "PRISM3") return make_prism(1, 1, 1);
  if (id == "THETA233") return make_theta(2, 3, 3);
  if (id == "bowtie") return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  if (id == "diamond") return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  std::string norm;
  for (char ch : id) {
    if (ch == '(') norm.push_back(':');
    else if (ch == ')' || ch == '{' || ch == '}' || ch == ' ') continue;
    else norm.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  auto colon = norm.find(':');
  std::string head = norm.substr(0, colon);
  std::string args = colon == std::string::npos ? "" : norm.substr(colon + 1);
  if (head == "theta" || head == "prism" || head == "pyramid") {
    auto l = detail::parse_int_list(args);
    if (l.size() != 3) throw InputError(head + " needs three path lengths");
    if (head == "theta") return make_theta(l[0], l[1], l[2]);
    if (head == "prism") return make_prism(l[0], l[1], l[2]);
    return make_pyramid(l[0], l[1], l[2]);
  }
  if (head == "wheel") {
    auto sep = args.find(':');
    if (sep == std::string::npos) {
      // WHEEL(n,s1,...) spelling: first number is the rim size.
      auto l = detail::parse_int_list(args);
      if (l.size() < 2) throw InputError("wheel needs a rim size and spokes");
      return make_wheel(l[0], std::vector<int>(l.begin() + 1, l.end()));
    }
    return make_wheel(detail::parse_count(args.substr(0, sep)), detail::parse_int_list(args.substr(sep + 1)));
  }
  if (colon == std::string::npos && norm.size() >= 2 && std::isdigit(static_cast<unsigned char>(norm[1]))) {
    int n = detail::parse_count(norm.substr(1));
    if (norm[0] == 'p') return make_path(n);
    if (norm[0] == 'c') return make_cycle(n);
    if (norm[0] == 'k') return make_complete(n);
  }
  throw InputError("unknown graph id '" + id + "'");
}

// ---------------------------------------------------------------------------
// Random instances
// ---------------------------------------------------------------------------

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  bool chance(int percent) { return static_cast<int>(below(100)) < percent; }

 private:
  std::mt19937_64 engine_;
};

struct SampleStats {
  int proposals = 0;
  int accepted = 0;
  int rejected = 0;
};

using GraphPredicate = std::function<bool(const Graph&)>;

/**
 * Adds random non-edges one at a time to `base`, keeping each only if the
 * predicate still holds, until `target_edges` edges or the proposal budget.
 */
inline Graph grow_graph(const Graph& base, std::uint64_t seed, const GraphPredicate& keep, int target_edges,
                        int max_proposals, SampleStats* stats = nullptr) {
  Rng rng(seed);
  const int n = base.capacity();
  std::vector<Edge> edges = base.edges();
  Graph g = base;
  SampleStats local;
  while (static_cast<int>(edges.size()) < target_edges && local.proposals < max_proposals && n >= 2) {
    ++local.proposals;
    Vertex u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
    Vertex v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
    if (u == v || g.adjacent(u, v)) continue;
    edges.emplace_back(std::min(u, v), std::max(u, v));
    Graph candidate = Graph::from_edges(n, edges);
    if (keep(candidate)) {
      g = std::move(candidate);
      ++local.accepted;
    } else {
      edges.pop_back();
      ++local.rejected;
    }
  }
  if (stats) *stats = local;
  return g;
}

struct SampleOptions {
  /// Expected average degree of the grown graph.
  double average_degree = 2.5;
  /// Start from an odd wheel (hole of length >= 9, three spokes) when n allows it.
  bool plant_wheel = false;
  int max_proposals = 0;  // 0: 20 * n
  /// Number of vertex-disjoint planted wheels, each needing at least ten vertices.
  int wheels = 1;
};

struct Sample {
  Graph graph;
  ObstructionReport report;
  SampleStats stats;
};

/// Hole 0..len-1 with center `len` adjacent to three rim vertices at gaps >= 3.
inline std::vector<Edge> planted_wheel_edges(int len, Rng& rng) {
  std::vector<Edge> edges;
  for (int i = 0; i < len; ++i) edges.emplace_back(i, (i + 1) % len);
  int g1 = 3 + static_cast<int>(rng.below(static_cast<std::uint64_t>(len - 8)));
  int g2 = 3 + static_cast<int>(rng.below(static_cast<std::uint64_t>(len - 5 - g1)));
  int offset = static_cast<int>(rng.below(static_cast<std::uint64_t>(len)));
  for (int pos : {0, g1, g1 + g2}) edges.emplace_back((pos + offset) % len, len);
  return edges;
}

/**
 * Random member of the class: starts from the empty graph (or a planted odd
 * wheel) and adds random edges that keep the graph inside the class.
 */
inline Sample sample_class(int n, int t, std::uint64_t seed, ClassVariant variant = ClassVariant::standard,
                           SampleOptions options = {}) {
  if (n < 0 || n > 32) throw PreconditionError("sampling supports 0 <= n <= 32");
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<Edge> base_edges;
  const int wheels = std::min(options.wheels, n / 10);
  if (options.plant_wheel && wheels >= 1) {
    int first = 0;
    for (int i = 0; i < wheels; ++i) {
      int room = wheels == 1 ? n - 1 : (n - first) / (wheels - i) - 1;
      int len = 9 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(room, 14) - 9 + 1)));
      for (auto [u, v] : planted_wheel_edges(len, rng)) base_edges.emplace_back(u + first, v + first);
      first += len + 1;
    }
    // Permute identities so the wheel is not always on the low ids.
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i + 1))]);
    for (auto& [u, v] : base_edges) {
      u = perm[u];
      v = perm[v];
    }
  }
  Graph base = Graph::from_edges(n, base_edges);
  if (!is_member(base, t, variant)) throw SamplingError("planted start graph is not a class member");
  const int target = static_cast<int>(options.average_degree * n / 2.0 + 0.5);
  const int budget = options.max_proposals > 0 ? options.max_proposals : 20 * std::max(n, 1);
  Sample out;
  out.graph = grow_graph(base, seed, [&](const Graph& g) { return is_member(g, t, variant); }, target, budget,
                         &out.stats);
  out.report = class_membership(out.graph, t, variant);
  if (!out.report.member) throw InternalError("sampled graph left the class");
  return out;
}

/// Random exact weights: small integers with occasional heavy vertices, normalized by their sum.
inline WeightFn random_weights(const Graph& g, std::uint64_t seed) {
  Rng rng(seed * 2654435761ULL + 17);
  std::vector<std::int64_t> num(static_cast<std::size_t>(g.capacity()), 0);
  std::int64_t total = 0;
  for (Vertex v : g.vertices()) {
    std::int64_t x = static_cast<std::int64_t>(rng.below(6));
    if (rng.chance(15)) x += 5 + static_cast<std::int64_t>(rng.below(20));
    num[v] = x;
    total += x;
  }
  if (total == 0) return WeightFn::uniform(g);
  return WeightFn::exact(g, std::move(num), total);
}

}  // namespace starsep
