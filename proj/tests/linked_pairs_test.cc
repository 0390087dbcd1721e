#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.h"
#include "rigidkit/connectivity.h"
#include "rigidkit/corpus.h"
#include "rigidkit/generators.h"
#include "rigidkit/global_rigidity.h"
#include "rigidkit/linked_pairs.h"
#include "rigidkit/rigidity.h"
#include "rigidkit/transforms.h"

namespace rigidkit {
namespace {

Graph TwoK4SharingVertex() {
  // K4 on {0,1,2,3} and K4 on {3,4,5,6}.
  EdgeList e;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      e.push_back({a, b});
      e.push_back({a + 3, b + 3});
    }
  return Graph(7, e);
}

TEST(LinkedTest, Examples) {
  Rng rng(1);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) EXPECT_TRUE(IsLinked(Complete(4), u, v, 2, rng));
  EXPECT_TRUE(IsLinked(Cycle(4), 0, 2, 1, rng));
  EXPECT_FALSE(IsLinked(TwoK4SharingVertex(), 0, 6, 2, rng));
  EXPECT_THROW(IsLinked(Complete(4), 1, 1, 2, rng), std::invalid_argument);
}

TEST(LinkedTest, AgreesWithRankDefinition) {
  Rng rng(2);
  for (int t = 0; t < 60; ++t) {
    const Graph g = RandomGraph(4 + rng.NextBelow(4), 0.5, rng);
    const int d = 1 + rng.NextBelow(3);
    const int u = 0, v = g.num_vertices() - 1;
    const bool expected = g.has_edge(u, v) || oracle::RigidityRank(g.WithEdge(u, v), d, t) ==
                                                  oracle::RigidityRank(g, d, t);
    EXPECT_EQ(IsLinked(g, u, v, d, rng), expected);
  }
}

TEST(GloballyLinkedTest, OneDimension) {
  for (const Graph& g : AllGraphs(5)) {
    for (int u = 0; u < 5; ++u)
      for (int v = u + 1; v < 5; ++v)
        EXPECT_EQ(IsGloballyLinked1d(g, u, v), g.has_edge(u, v) || oracle::LocalConnectivity(g, u, v) >= 2);
  }
}

TEST(GloballyLinkedTest, PlaneExamples) {
  Rng rng(3);
  const Graph k34 = CompleteBipartite(3, 4);
  const PairVerdict p = IsGloballyLinked2d(k34, 3, 4, rng);
  EXPECT_EQ(p.verdict, LinkVerdict::kYes);
  EXPECT_EQ(p.reason, LinkReason::kKappaCriterion);
  EXPECT_EQ(p.kappa, 3);
  const PairVerdict adj = IsGloballyLinked2d(k34, 0, 3, rng);
  EXPECT_EQ(adj.verdict, LinkVerdict::kYes);
  EXPECT_EQ(adj.reason, LinkReason::kEdgePresent);
  EXPECT_THROW(IsGloballyLinked2d(k34, 2, 2, rng), std::invalid_argument);

  // Two triangles sharing the edge 12; the pair 0,3 has kappa 2.
  const Graph diamond(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  const PairVerdict dv = IsGloballyLinked2d(diamond, 0, 3, rng);
  EXPECT_EQ(dv.kappa, 2);
  EXPECT_NE(dv.verdict, LinkVerdict::kYes);
  if (dv.verdict == LinkVerdict::kNo) EXPECT_EQ(dv.reason, LinkReason::kKappaCriterion);
  EXPECT_EQ(VerdictName(LinkVerdict::kUnknown), std::string("unknown"));
  EXPECT_EQ(ReasonName(LinkReason::kR3CircuitRoute), std::string("r3-circuit-route"));
}

TEST(GloballyLinkedTest, VerdictsCarryConsistentWitnesses) {
  Rng rng(4);
  int route = 0;
  for (int n = 4; n <= 7; ++n) {
    CorpusSpec spec;
    spec.kind = CorpusSpec::Kind::kRandom;
    spec.count = 40;
    spec.n = n;
    spec.edge_probability = 0.6;
    spec.seed = 100 + n;
    for (const Graph& g : BuildCorpus(spec)) {
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          const PairVerdict p = IsGloballyLinked2d(g, u, v, rng);
          if (p.verdict == LinkVerdict::kYes) {
            EXPECT_TRUE(IsLinked(g, u, v, 2, rng));
            if (!g.has_edge(u, v)) EXPECT_GE(oracle::LocalConnectivity(g, u, v), 3);
          }
          if (p.reason == LinkReason::kEdgePresent) EXPECT_TRUE(g.has_edge(u, v));
          if (p.verdict == LinkVerdict::kNo) EXPECT_EQ(p.reason, LinkReason::kKappaCriterion);
          if (p.verdict == LinkVerdict::kUnknown) EXPECT_EQ(p.reason, LinkReason::kOpen);
          if (p.reason == LinkReason::kR3CircuitRoute) {
            ++route;
            EXPECT_TRUE(std::find(p.circuit.begin(), p.circuit.end(), Edge{u, v}) != p.circuit.end());
            const Graph c(n, p.circuit);
            EXPECT_TRUE(IsCircuit(c, 3, rng));
          }
          // Linked in R_3 always yields an answer.
          if (p.linked.count(3) && p.linked.at(3)) EXPECT_EQ(p.verdict, LinkVerdict::kYes);
        }
      }
    }
  }
  EXPECT_GT(route, 0);
}

TEST(BridgePropertiesTest, ConnectivityAndRedundancyBreakingEdges) {
  Rng rng(5);
  int cases = 0;
  for (int t = 0; t < 300; ++t) {
    const Graph g = RandomGraph(4 + rng.NextBelow(4), 0.7, rng);
    for (int d = 1; d <= 2; ++d) {
      const auto bridges = Bridges(g, d + 1, rng);
      const bool conn = IsKConnected(g, d + 1);
      const bool red = IsRedundantlyRigid(g, d, rng);
      for (int e = 0; e < g.num_edges(); ++e) {
        const Graph h = g.WithoutEdgeAt(e);
        const bool a = conn && !IsKConnected(h, d + 1);
        const bool b = red && !IsRedundantlyRigid(h, d, rng);
        if (a || b) {
          ++cases;
          EXPECT_TRUE(std::binary_search(bridges.begin(), bridges.end(), e));
        }
      }
    }
  }
  EXPECT_GT(cases, 20);
}

TEST(BridgePropertiesTest, ConnectedGraphsLoseAnEdgeGracefully) {
  Rng rng(6);
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : AllGraphs(n)) {
      for (int d = 1; d <= 2; ++d) {
        if (IsRConnected(g, d + 1, rng)) {
          bool some = false;
          for (int e = 0; e < g.num_edges() && !some; ++e) some = IsRConnected(g.WithoutEdgeAt(e), d, rng);
          EXPECT_TRUE(some) << SerializeEdgeList(g);
        }
        if (Bridges(g, d + 1, rng).empty()) {
          for (int v = 0; v < n; ++v) {
            EXPECT_TRUE(Bridges(RemoveVertices(g, {v}).graph, d, rng).empty());
          }
        }
      }
    }
  }
}

TEST(ExplorerTest, ProvedCasesHaveNoCandidates) {
  ExplorerOptions o;
  o.corpus.max_n = 6;
  o.kind = ConjectureKind::kLinkedGloballyLinked;
  o.d = 1;
  ExplorerReport r = ExploreConjecture(o);
  EXPECT_TRUE(r.candidates.empty());
  EXPECT_GT(r.confirmed, 0u);
  EXPECT_EQ(r.unknown, 0u);

  o.d = 2;
  r = ExploreConjecture(o);
  EXPECT_TRUE(r.candidates.empty());
  EXPECT_EQ(r.unknown, 0u);

  o.kind = ConjectureKind::kRedundantlyConnected;
  r = ExploreConjecture(o);
  EXPECT_TRUE(r.candidates.empty());
  EXPECT_GT(r.instances, 0u);

  o.kind = ConjectureKind::kBridge;
  r = ExploreConjecture(o);
  EXPECT_TRUE(r.candidates.empty());
  EXPECT_GT(r.confirmed, 0u);
}

TEST(ExplorerTest, ThreadedRunMatchesSequential) {
  ExplorerOptions o;
  o.kind = ConjectureKind::kBridge;
  o.d = 2;
  o.corpus.kind = CorpusSpec::Kind::kRandom;
  o.corpus.count = 40;
  o.corpus.n = 7;
  o.corpus.edge_probability = 0.7;
  const ExplorerReport a = ExploreConjecture(o);
  o.threads = 3;
  const ExplorerReport b = ExploreConjecture(o);
  EXPECT_EQ(a.graphs, b.graphs);
  EXPECT_EQ(a.instances, b.instances);
  EXPECT_EQ(a.confirmed, b.confirmed);
}

TEST(ExplorerTest, MergeIsAssociative) {
  auto make = [](std::uint64_t g, std::uint64_t c, std::size_t index) {
    ExplorerReport r;
    r.graphs = g;
    r.instances = c;
    r.confirmed = c;
    ConjectureCandidate cand;
    cand.graph_index = index;
    r.candidates.push_back(cand);
    return r;
  };
  ExplorerReport a = make(1, 2, 5), b = make(3, 4, 1), c = make(5, 6, 3);
  ExplorerReport left = a;
  left.Merge(b);
  left.Merge(c);
  ExplorerReport bc = b;
  bc.Merge(c);
  ExplorerReport right = a;
  right.Merge(bc);
  EXPECT_EQ(left.graphs, right.graphs);
  EXPECT_EQ(left.confirmed, right.confirmed);
  ASSERT_EQ(left.candidates.size(), 3u);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(left.candidates[i].graph_index, right.candidates[i].graph_index);
  EXPECT_EQ(ParseConjecture("redundant-mc"), ConjectureKind::kRedundantlyConnected);
  EXPECT_THROW(ParseConjecture("nope"), std::invalid_argument);
}

}  // namespace
}  // namespace rigidkit
