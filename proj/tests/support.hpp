#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "starsep/starsep.hpp"

namespace testing_support {

using starsep::Edge;
using starsep::Graph;

/// G(n, p) with p = percent / 100, from a seed.
inline Graph random_graph(int n, int percent, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(rng() % 100) < percent) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

inline const std::vector<std::string>& named_graphs() {
  static const std::vector<std::string> names{"W93", "W5", "PYR6", "PRISM3", "THETA233", "bowtie", "diamond",
                                              "P9", "C6", "C4", "C5", "K4", "K5", "wheel:8:1,3,5,7",
                                              "wheel:6:1,3,5", "theta:2,2,2", "pyramid:2,2,2", "prism:2,2,3"};
  return names;
}

/// Exact weights from integers, normalized by their sum.
inline starsep::WeightFn weights_of(const Graph& g, std::vector<std::int64_t> num) {
  std::int64_t total = 0;
  for (auto x : num) total += x;
  return starsep::WeightFn::exact(g, std::move(num), total);
}

/// One random vertex outweighs all others together; the rest get small random integers.
inline starsep::WeightFn skewed_weights(const Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::int64_t> num(static_cast<std::size_t>(g.capacity()), 0);
  auto ids = g.vertices().to_vector();
  std::int64_t rest = 0;
  for (auto v : ids) rest += num[v] = static_cast<std::int64_t>(1 + rng() % 3);
  auto heavy = ids[rng() % ids.size()];
  rest -= num[heavy];
  num[heavy] = rest + 1 + static_cast<std::int64_t>(rng() % 3);
  return weights_of(g, std::move(num));
}

/// Class members with no clique cutset: the largest atom of sampled graphs, renumbered to 0..k-1.
/// With several wheels every sample starts from that many planted odd wheels.
inline std::vector<Graph> atom_corpus(int count, int n, starsep::ClassVariant variant = starsep::ClassVariant::standard,
                                      std::uint64_t first_seed = 1, int min_size = 5, int wheels = 1) {
  using namespace starsep;
  std::vector<Graph> out;
  for (std::uint64_t seed = first_seed; static_cast<int>(out.size()) < count && seed < first_seed + 5000; ++seed) {
    Sample s = sample_class(n, 4, seed, variant, SampleOptions{2.8, wheels > 1 || seed % 2 == 0, 0, wheels});
    VertexSet best;
    for (const auto& a : clique_cutset_atoms(s.graph).atoms)
      if (a.size() > best.size()) best = a;
    if (best.size() < min_size) continue;
    std::vector<Vertex> ids = best.to_vector();
    auto index = [&](Vertex v) { return static_cast<Vertex>(std::find(ids.begin(), ids.end(), v) - ids.begin()); };
    std::vector<Edge> edges;
    for (auto [u, v] : s.graph.induced(best).edges()) edges.emplace_back(index(u), index(v));
    out.push_back(Graph::from_edges(static_cast<int>(ids.size()), edges));
  }
  return out;
}

}  // namespace testing_support
