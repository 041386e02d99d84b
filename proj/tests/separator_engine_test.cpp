#include <gtest/gtest.h>

#include "support.hpp"

using namespace starsep;
using testing_support::atom_corpus;
using testing_support::weights_of;

TEST(Aux, FiveCycle) {
  Graph g = make_cycle(5);
  AuxGraph aux = aux_graph(g, WeightFn::uniform(g), 0, VertexSet{});
  ASSERT_EQ(aux.cliques.size(), 2U);
  EXPECT_EQ(aux.cliques[0], VertexSet{1});
  EXPECT_EQ(aux.cliques[1], VertexSet{4});
  ASSERT_EQ(aux.components.size(), 1U);
  EXPECT_EQ(aux.components[0], (VertexSet{2, 3}));
  EXPECT_EQ(aux.graph.edges(), (std::vector<Edge>{{0, 2}, {1, 2}}));
  EXPECT_EQ(aux.weights.of(aux.d_node(0)).to_string(), "2/5");
  EXPECT_EQ(aux.max_d_degree, 2);
  EXPECT_TRUE(aux.tw_at_most_two);
}

TEST(Aux, W93IsASixCycle) {
  Graph g = make("W93");
  AuxGraph aux = aux_graph(g, WeightFn::uniform(g), 9, VertexSet{9});
  EXPECT_EQ(aux.graph.order(), 6);
  EXPECT_EQ(aux.graph.edge_count(), 6);
  for (Vertex v : aux.graph.vertices()) EXPECT_EQ(aux.graph.degree(v), 2);
  EXPECT_TRUE(is_connected(aux.graph, aux.graph.vertices()));
  ASSERT_TRUE(aux.exact_tw.has_value());
  EXPECT_EQ(*aux.exact_tw, 2);
}

TEST(Aux, IsolatedVertex) {
  Graph g = Graph::from_edges(1, {});
  AuxGraph aux = aux_graph(g, WeightFn::uniform(g), 0, VertexSet{});
  EXPECT_EQ(aux.graph.order(), 0);
}

TEST(Aux, RejectsNonCliqueNeighborhood) {
  Graph g = make("W5");
  EXPECT_THROW(aux_graph(g, WeightFn::uniform(g), 5, VertexSet{}), HypothesisViolation);
}

TEST(BalancedVertex, FiveCycle) {
  Graph g = make_cycle(5);
  auto cert = balanced_vertex_separator(g, WeightFn::uniform(g), 0, VertexSet{}, VertexSet{});
  EXPECT_EQ(cert.aux_separator, VertexSet{2});
  EXPECT_EQ(cert.separator, (VertexSet{0, 1, 4}));
  EXPECT_TRUE(cert.ledger_holds());
}

TEST(BalancedVertex, W93Hub) {
  Graph g = make("W93");
  auto cert = balanced_vertex_separator(g, WeightFn::uniform(g), 9, VertexSet{}, VertexSet{9});
  EXPECT_EQ(cert.aux_separator, (VertexSet{0, 4}));
  EXPECT_EQ(cert.separator, (VertexSet{0, 3, 6, 9}));
}

TEST(BalancedVertex, RejectsPyramidApex) {
  Graph g = make("PYR6");
  EXPECT_THROW(balanced_vertex_separator(g, WeightFn::uniform(g), 0, VertexSet{}, VertexSet{}), PreconditionError);
}

TEST(WheelFree, SmallExamples) {
  Graph c6 = make_cycle(6);
  EXPECT_EQ(wheelfree_separator(c6, WeightFn::uniform(c6), 19).separator, (VertexSet{0, 3}));
  Graph p9 = make_path(9);
  EXPECT_EQ(wheelfree_separator(p9, WeightFn::uniform(p9), 19).separator, VertexSet{4});
  Graph one = Graph::from_edges(1, {});
  EXPECT_EQ(wheelfree_separator(one, WeightFn::uniform(one), 19).separator, VertexSet{0});
  Graph w93 = make("W93");
  EXPECT_THROW(wheelfree_separator(w93, WeightFn::uniform(w93), 19), PreconditionError);
  EXPECT_THROW(wheelfree_separator(c6, WeightFn::uniform(c6), 1), HypothesisViolation);
}

TEST(WheelFree, MinimizesTheHeaviestComponent) {
  Graph bag = make_cycle(5);
  WeightFn w = weights_of(bag, {1, 6, 6, 1, 6});
  auto cert = wheelfree_separator(bag, w, 19);
  EXPECT_EQ(cert.separator, (VertexSet{0, 2}));
  EXPECT_EQ(heaviest_component_mass(bag, w, cert.separator).to_string(), "7/20");
}

TEST(Ramsey, Table) {
  EXPECT_EQ(ramsey_t4(3), 9);
  EXPECT_EQ(ramsey_t4(4), 18);
  EXPECT_EQ(ramsey_t4(5), 25);
  EXPECT_EQ(ramsey_t4(6), 56);
}

TEST(Main, PathGoesThroughTheWheelFreeRoutine) {
  Graph g = make_path(9);
  auto r = main_separator(g, WeightFn::uniform(g), 4);
  EXPECT_EQ(r.bag_certificate.source, "wheel_free");
  EXPECT_EQ(r.certificate.separator, VertexSet{4});
}

TEST(Main, W93UsesTheHub) {
  Graph g = make("W93");
  auto r = main_separator(g, WeightFn::uniform(g), 4);
  EXPECT_EQ(r.bag_certificate.source, "aux_graph");
  EXPECT_EQ(r.certificate.separator, (VertexSet{0, 3, 6, 9}));
  ASSERT_TRUE(r.bag_certificate.aux.has_value());
  EXPECT_EQ(r.bag_certificate.aux->graph.order(), 6);
}

TEST(Main, W93WithAHeavySector) {
  Graph g = make("W93");
  WeightFn w = weights_of(g, {1, 6, 6, 1, 1, 1, 1, 1, 1, 1});
  auto r = main_separator(g, w, 4);
  EXPECT_EQ(r.bag_certificate.source, "wheel_free");
  EXPECT_EQ(r.bag_certificate.separator, (VertexSet{0, 2}));
  EXPECT_EQ(r.certificate.separator, (VertexSet{0, 2}));
  EXPECT_TRUE(is_balanced_separator(g, w, r.certificate.separator));
}

TEST(MainProperty, LedgersAndAuxStructure) {
  auto corpus = atom_corpus(60, 18, ClassVariant::standard, 700);
  ASSERT_GE(corpus.size(), 20U);
  int seed = 0, aux_cases = 0, pyramid_bags = 0;
  for (const auto& g : corpus) {
    WeightFn w = random_weights(g, static_cast<std::uint64_t>(++seed));
    if (detect_pyramid(hub_division(g, w, 4).bag.graph)) {
      EXPECT_THROW(main_separator(g, w, 4), PreconditionError);
      ++pyramid_bags;
      continue;
    }
    MainSeparatorResult r;
    ASSERT_NO_THROW(r = main_separator(g, w, 4)) << "instance " << seed;
    EXPECT_TRUE(is_balanced_separator(g, w, r.certificate.separator));
    EXPECT_TRUE(r.certificate.ledger_holds());
    EXPECT_TRUE(r.bag_certificate.ledger_holds());
    EXPECT_TRUE(r.bag_certificate.separator.is_subset_of(r.division.bag.beta));
    EXPECT_TRUE(r.bag_certificate.separator.is_subset_of(r.certificate.separator));
    if (const auto& aux = r.bag_certificate.aux) {
      ++aux_cases;
      EXPECT_TRUE(aux->bipartite);
      EXPECT_LE(aux->max_d_degree, 2);
      EXPECT_LE(r.bag_certificate.aux_separator.size(), 3);
      for (auto [a, b] : aux->graph.edges()) EXPECT_NE(aux->is_k_node(a), aux->is_k_node(b));
    }
  }
  EXPECT_LT(pyramid_bags, static_cast<int>(corpus.size()));
  RecordProperty("aux_cases", aux_cases);
  RecordProperty("pyramid_bags", pyramid_bags);
}
