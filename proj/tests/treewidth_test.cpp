#include <gtest/gtest.h>

#include <numeric>

#include "oracle.hpp"
#include "support.hpp"

using namespace starsep;
using testing_support::random_graph;

namespace {

TreeDecomposition chain(const std::vector<VertexSet>& bags) {
  TreeDecomposition td;
  for (const auto& b : bags) td.add_node(b);
  for (int i = 0; i + 1 < static_cast<int>(bags.size()); ++i) td.link(i, i + 1);
  return td;
}

/// Treewidth as the least over elimination orderings of the largest eliminated degree.
int elimination_treewidth(const Graph& g) {
  std::vector<Vertex> order = g.vertices().to_vector();
  int best = std::max(0, g.order() - 1);
  do {
    std::vector<VertexSet> adj(static_cast<std::size_t>(g.capacity()));
    for (Vertex v : g.vertices()) adj[v] = g.neighbors(v);
    int width = 0;
    VertexSet gone;
    for (Vertex v : order) {
      VertexSet nbrs = adj[v] - gone;
      width = std::max(width, nbrs.size());
      for (Vertex a : nbrs) adj[a] |= nbrs.without(a);
      gone.insert(v);
    }
    best = std::min(best, width);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

bool theta_triangle_wheel_free(const Graph& g) {
  return !detect_fixed(g, Pattern::clique, 3) && !detect_theta(g) && hub_set(g).empty();
}

}  // namespace

TEST(Validate, PathDecomposition) {
  Graph p9 = make_path(9);
  std::vector<VertexSet> bags;
  for (int i = 0; i + 1 < 9; ++i) bags.push_back(VertexSet{i, i + 1});
  TreeDecomposition td = chain(bags);
  EXPECT_TRUE(validate_td(p9, td).pass);
  EXPECT_EQ(td.width(), 1);

  bags.erase(bags.begin() + 3);
  TdCheck missing = validate_td(p9, chain(bags));
  EXPECT_FALSE(missing.pass);
}

TEST(Validate, CycleFan) {
  Graph c6 = make_cycle(6);
  TreeDecomposition td = chain({VertexSet{0, 1, 2}, VertexSet{0, 2, 3}, VertexSet{0, 3, 4}, VertexSet{0, 4, 5}});
  EXPECT_TRUE(validate_td(c6, td).pass);
  EXPECT_EQ(td.width(), 2);
}

TEST(Validate, Failures) {
  Graph p3 = make_path(3);
  TreeDecomposition cyclic = chain({VertexSet{0, 1}, VertexSet{1, 2}, VertexSet{1}});
  cyclic.link(2, 0);
  EXPECT_FALSE(validate_td(p3, cyclic).pass);

  TreeDecomposition split = chain({VertexSet{0, 1}, VertexSet{2}, VertexSet{1, 2}});
  EXPECT_FALSE(validate_td(p3, split).pass);

  TreeDecomposition forest;
  forest.add_node(VertexSet{0, 1});
  forest.add_node(VertexSet{1, 2});
  EXPECT_FALSE(validate_td(p3, forest).pass);

  TreeDecomposition uncovered = chain({VertexSet{0, 1}});
  EXPECT_FALSE(validate_td(p3, uncovered).pass);
}

TEST(Exact, SmallValues) {
  EXPECT_EQ(exact_treewidth(make_path(9)), 1);
  EXPECT_EQ(exact_treewidth(make_cycle(6)), 2);
  EXPECT_EQ(exact_treewidth(make_complete(5)), 4);
  EXPECT_EQ(exact_treewidth(make("W93")), 3);
  EXPECT_EQ(exact_treewidth(Graph::from_edges(3, {})), 0);
  EXPECT_THROW(exact_treewidth(make_path(15)), CapacityError);
  EXPECT_EQ(exact_treewidth(make_path(15), 15), 1);
}

TEST(Exact, AgreesWithEliminationOrderings) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = random_graph(7, 20 + static_cast<int>(seed % 6) * 12, seed + 900);
    EXPECT_EQ(exact_treewidth(g), elimination_treewidth(g)) << "seed " << seed;
  }
}

TEST(AtMostTwo, AgreesWithExact) {
  EXPECT_TRUE(treewidth_at_most_two(make_cycle(8)));
  EXPECT_FALSE(treewidth_at_most_two(make_complete(4)));
  EXPECT_FALSE(treewidth_at_most_two(make("W93")));
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    Graph g = random_graph(9, 10 + static_cast<int>(seed % 5) * 8, seed + 1300);
    EXPECT_EQ(treewidth_at_most_two(g), exact_treewidth(g) <= 2) << "seed " << seed;
  }
}

TEST(Certify, PathCycleAndW93) {
  for (const char* id : {"P9", "C6", "W93"}) {
    Graph g = make(id);
    CertifyReport r = certify(g, 4);
    EXPECT_TRUE(r.validity.pass) << id;
    ASSERT_TRUE(r.exact_tw.has_value());
    EXPECT_TRUE(r.width_at_least_exact()) << id;
    for (const auto& c : r.calls) EXPECT_TRUE(c.ledger_holds) << id;
  }
  EXPECT_EQ(certify(make_path(9), 4).width, 1);
  EXPECT_EQ(certify(make_cycle(6), 4).max_separator, 2);
}

TEST(Certify, RejectsNonMembers) { EXPECT_THROW(certify(make("W5"), 4), PreconditionError); }

TEST(Build, CustomOracleOnDisconnectedGraph) {
  Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {3, 4}});
  SeparatorOracle oracle = [](const Graph& atom, const WeightFn& w) {
    return wheelfree_separator(atom, w, atom.order()).separator;
  };
  BuildResult r = build_td(g, oracle);
  EXPECT_TRUE(validate_td(g, r.td).pass);
  EXPECT_EQ(r.td.width(), 1);
  EXPECT_TRUE(build_td(Graph::from_edges(0, {}), oracle).td.bags.empty());
}

TEST(TwProperty, ThetaTriangleWheelFreeHasTreewidthAtMostTwo) {
  int count = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = grow_graph(Graph::from_edges(12, {}), seed + 40, theta_triangle_wheel_free, 18, 240);
    ASSERT_TRUE(theta_triangle_wheel_free(g));
    EXPECT_LE(exact_treewidth(g), 2) << "seed " << seed;
    ++count;
  }
  EXPECT_EQ(count, 40);
}

TEST(TwProperty, TreewidthBoundsTheBalancedSeparator) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = random_graph(9, 30, seed + 2000);
    std::vector<long long> weight(9);
    std::mt19937_64 rng(seed);
    for (auto& x : weight) x = static_cast<long long>(rng() % 5);
    if (std::accumulate(weight.begin(), weight.end(), 0LL) == 0) weight[0] = 1;
    EXPECT_LE(oracle::min_balanced_separator_size(g, weight), exact_treewidth(g) + 1) << "seed " << seed;
  }
}
