#include <gtest/gtest.h>

#include "oracles.h"
#include "rigidkit/connectivity.h"
#include "rigidkit/corpus.h"
#include "rigidkit/error.h"
#include "rigidkit/extractor.h"
#include "rigidkit/generators.h"
#include "rigidkit/global_rigidity.h"
#include "rigidkit/transforms.h"

namespace rigidkit {
namespace {

TEST(ExtractorTest, CompleteGraphsSurvive) {
  const ExtractionResult k7 = MixedKConnectedSubgraph(Complete(7), 6);
  EXPECT_EQ(k7.graph, Complete(7));
  EXPECT_EQ(k7.min_mixed_cut, 6);
  EXPECT_TRUE(k7.trace.steps.empty());
  EXPECT_EQ(MixedKConnectedSubgraph(Complete(5), 4).graph, Complete(5));
}

TEST(ExtractorTest, PendantPathIsStripped) {
  // K7 plus a 3-vertex pendant path is too sparse for k = 6 (48 <= 70).
  EdgeList e = Complete(7).edges();
  e.push_back({6, 7});
  e.push_back({7, 8});
  e.push_back({8, 9});
  EXPECT_THROW(MixedKConnectedSubgraph(Graph(10, e), 6), HypothesisNotSatisfied);

  // K12 with the same tail: the path goes first, then the clique shrinks.
  EdgeList big = Complete(12).edges();
  big.push_back({11, 12});
  big.push_back({12, 13});
  big.push_back({13, 14});
  const ExtractionResult r = MixedKConnectedSubgraph(Graph(15, big), 6);
  EXPECT_EQ(r.graph, Complete(7));
  EXPECT_EQ(r.vertices, (std::vector<int>{5, 6, 7, 8, 9, 10, 11}));
  ASSERT_EQ(r.trace.steps.size(), 8u);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(r.trace.steps[i].kind, ExtractionStep::Kind::kVertexDeletion);
    EXPECT_EQ(r.trace.steps[i].reason, "degree");
  }
  EXPECT_EQ(r.trace.steps[3].reason, "minimality");
}

TEST(ExtractorTest, HypothesisAndPromotion) {
  EXPECT_TRUE(SatisfiesDensityHypothesis(7, 21, 6));
  EXPECT_FALSE(SatisfiesDensityHypothesis(7, 20, 6));
  EXPECT_FALSE(SatisfiesDensityHypothesis(6, 15, 6));
  try {
    MixedKConnectedSubgraph(K4eChain(3), 6);
    FAIL();
  } catch (const HypothesisNotSatisfied& e) {
    EXPECT_NE(std::string(e.what()).find("(k-1)(2|V|-k)"), std::string::npos);
  }
  EXPECT_THROW(MixedKConnectedSubgraph(Complete(4), 6), HypothesisNotSatisfied);
  const ExtractionResult r = MixedKConnectedSubgraph(Complete(7), 5);
  EXPECT_TRUE(r.trace.promoted);
  EXPECT_EQ(r.trace.k, 6);
  EXPECT_EQ(r.trace.requested_k, 5);
  EXPECT_EQ(r.graph, Complete(7));
  EXPECT_THROW(MixedKConnectedSubgraph(Complete(6), 5), HypothesisNotSatisfied);
  EXPECT_THROW(MixedKConnectedSubgraph(Complete(6), 0), std::invalid_argument);
}

TEST(ExtractorTest, SplitsAlongCheapCuts) {
  // Two K6s joined by a single edge: no vertex can go, the edge is a cut.
  EdgeList e;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) {
      e.push_back({a, b});
      e.push_back({a + 6, b + 6});
    }
  e.push_back({0, 6});
  const Graph g(12, e);
  // The K6 side is then trimmed to K5, the smallest graph meeting the bound.
  const ExtractionResult r = MixedKConnectedSubgraph(g, 4);
  EXPECT_EQ(r.graph, Complete(5));
  EXPECT_EQ(r.vertices, (std::vector<int>{1, 2, 3, 4, 5}));
  ASSERT_EQ(r.trace.steps.size(), 2u);
  EXPECT_EQ(r.trace.steps[1].vertex, 0);
  EXPECT_EQ(r.trace.steps[0].kind, ExtractionStep::Kind::kCutSplit);
  EXPECT_EQ(r.trace.steps[0].cut_edges, (EdgeList{{0, 6}}));
  EXPECT_EQ(r.trace.steps[0].side, 1);
  const ExtractionResult again = ReplayTrace(g, r.trace);
  EXPECT_EQ(again.graph, r.graph);
  EXPECT_EQ(again.vertices, r.vertices);

  // Disconnected input: the empty cut.
  const ExtractionResult t = MixedKConnectedSubgraph(DisjointUnion(Complete(3), Complete(3)), 2);
  EXPECT_EQ(t.graph, Complete(3));
  EXPECT_EQ(t.vertices, (std::vector<int>{0, 1, 2}));
}

TEST(ExtractorTest, RandomOutputsVerify) {
  Rng rng(1);
  for (int t = 0; t < 40; ++t) {
    const int n = 8 + rng.NextBelow(10);
    const int k = 2 + 2 * rng.NextBelow(3);
    const long min_edges = (static_cast<long>(k - 1) * (2 * n - k)) / 2 + 1;
    const long max_edges = static_cast<long>(n) * (n - 1) / 2;
    if (min_edges > max_edges) continue;
    const int m = static_cast<int>(min_edges + rng.NextBelow(max_edges - min_edges + 1));
    const Graph g = RandomGraphWithEdges(n, m, rng);
    const ExtractionResult r = MixedKConnectedSubgraph(g, k);
    EXPECT_GE(MinMixedCut(r.graph).cost, k);
    if (r.graph.num_vertices() <= 8) EXPECT_GE(oracle::MinMixedCutCost(r.graph), k);
    EXPECT_TRUE(IsKConnected(r.graph, (k + 1) / 2));
    EXPECT_TRUE(SatisfiesDensityHypothesis(r.graph.num_vertices(), r.graph.num_edges(), k));
    const ExtractionResult replay = ReplayTrace(g, r.trace);
    EXPECT_EQ(replay.graph, r.graph);
    EXPECT_EQ(replay.vertices, r.vertices);
    for (const auto& edge : r.graph.edges()) {
      EXPECT_TRUE(g.has_edge(r.vertices[edge.u], r.vertices[edge.v]));
    }
  }
}

TEST(GloballyRigidSubgraphTest, Examples) {
  Rng rng(2);
  const auto k7 = GloballyRigidSubgraph2d(Complete(7), rng);
  ASSERT_TRUE(k7.has_value());
  EXPECT_EQ(k7->extraction.graph, Complete(7));
  EXPECT_TRUE(k7->redundantly_globally_rigid);
  EXPECT_FALSE(GloballyRigidSubgraph2d(K4eChain(3), rng).has_value());

  const Graph g = RandomGraphWithEdges(20, 90, rng);
  const auto r = GloballyRigidSubgraph2d(g, rng);
  ASSERT_TRUE(r.has_value());
  EXPECT_GE(r->extraction.graph.num_vertices(), 7);
  EXPECT_TRUE(r->globally_rigid);
  EXPECT_TRUE(r->redundantly_globally_rigid);
}

TEST(GrnTest, LowerBounds) {
  Rng rng(3);
  const GrnEstimate k7 = EstimateGrn(Complete(7), 5, rng);
  EXPECT_GE(k7.lower_bound, 5);
  const GrnEstimate chain = EstimateGrn(K4eChain(3), 3, rng);
  EXPECT_EQ(chain.lower_bound, 1);
  EXPECT_GE(chain.witness.num_vertices(), 3);
  const GrnEstimate k77 = EstimateGrn(CompleteBipartite(7, 7), 3, rng);
  EXPECT_GE(k77.lower_bound, 3);
  EXPECT_TRUE(IsGloballyRigid(k77.witness, k77.lower_bound, rng));
  EXPECT_EQ(EstimateGrn(Complete(40), 1, rng).conditional_bound, 1);  // 780 / 240
  EXPECT_EQ(EstimateGrn(Path(4), 2, rng).lower_bound, 0);
}

}  // namespace
}  // namespace rigidkit
