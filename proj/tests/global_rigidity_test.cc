#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.h"
#include "rigidkit/connectivity.h"
#include "rigidkit/corpus.h"
#include "rigidkit/error.h"
#include "rigidkit/generators.h"
#include "rigidkit/global_rigidity.h"
#include "rigidkit/transforms.h"

namespace rigidkit {
namespace {

using Method = GlobalRigidityMethod;

TEST(StressTest, TriangleOnALine) {
  Realization p;
  p.d = 1;
  p.coords = {{FieldElement(0)}, {FieldElement(1)}, {FieldElement(3)}};
  const Graph k3 = Complete(3);  // edges 01, 02, 12
  const std::vector<int> basis{0, 2};
  const auto stresses = StressBasis(k3, p, basis);
  ASSERT_EQ(stresses.size(), 1u);
  const FieldVector& w = stresses[0].omega;
  EXPECT_EQ(w[0], FieldElement::FromInt(-3));
  EXPECT_EQ(w[1], FieldElement(1));
  EXPECT_EQ(w[2], FieldElement::FromInt(-3) / FieldElement(2));
  const FieldMatrix omega = BuildStressMatrix(k3, stresses[0]);
  EXPECT_EQ(Rank(omega), 1);
  EXPECT_EQ(omega, omega.Transposed());
}

TEST(StressTest, NonBasisIsRejected) {
  Realization p;
  p.d = 1;
  p.coords = {{FieldElement(0)}, {FieldElement(1)}, {FieldElement(3)}};
  const std::vector<int> not_spanning{0};
  EXPECT_THROW(StressBasis(Complete(3), p, not_spanning), NonGenericRealization);
}

TEST(StressTest, CircuitStressIsNowhereZero) {
  Rng rng(1);
  GenericFramework f(Complete(4), 2, rng);
  const auto s = StressBasis(f);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].Support().size(), 6u);
  EXPECT_EQ(Rank(BuildStressMatrix(Complete(4), s[0])), 1);
  GenericFramework tree(Path(5), 1, rng);
  EXPECT_TRUE(StressBasis(tree).empty());
  EXPECT_TRUE(BuildStressMatrix(Complete(3), Stress{FieldVector(3)}).IsZero());
}

TEST(StressTest, MatricesHaveZeroRowSumsAndBoundedRank) {
  Rng rng(2);
  for (int t = 0; t < 80; ++t) {
    const int d = 1 + rng.NextBelow(3);
    const Graph g = RandomGraph(d + 2 + rng.NextBelow(4), 0.8, rng);
    GenericFramework f(g, d, rng);
    const auto stresses = StressBasis(f);
    EXPECT_EQ(static_cast<int>(stresses.size()), g.num_edges() - f.rank());
    const auto basis = f.Basis();
    std::vector<int> non_basis;
    for (int e = 0; e < g.num_edges(); ++e) {
      if (std::find(basis.begin(), basis.end(), e) == basis.end()) non_basis.push_back(e);
    }
    for (std::size_t i = 0; i < stresses.size(); ++i) {
      const FieldMatrix m = BuildStressMatrix(g, stresses[i]);
      for (int r = 0; r < m.rows(); ++r) {
        FieldElement sum;
        for (int c = 0; c < m.cols(); ++c) sum += m(r, c);
        EXPECT_TRUE(sum.IsZero());
      }
      EXPECT_LE(Rank(m), g.num_vertices() - d - 1);
      // Support is exactly the fundamental circuit.
      EXPECT_EQ(stresses[i].Support(), f.FundamentalCircuit(basis, non_basis[i]));
      EXPECT_EQ(stresses[i].omega[non_basis[i]], FieldElement(1));
    }
  }
}

TEST(GlobalRigidityTest, Examples) {
  Rng rng(3);
  for (int d = 1; d <= 3; ++d) {
    for (Method m : {Method::kAuto, Method::kStress, Method::kCombinatorial}) {
      EXPECT_TRUE(IsGloballyRigid(Complete(d + 2), d, rng, m));
    }
  }
  EXPECT_TRUE(IsGloballyRigid(CompleteBipartite(3, 4), 2, rng, Method::kStress));
  EXPECT_TRUE(IsGloballyRigid(CompleteBipartite(3, 4), 2, rng, Method::kCombinatorial));
  EXPECT_TRUE(IsGloballyRigid(IcosahedronBraced(), 3, rng));
  EXPECT_FALSE(IsGloballyRigid(Icosahedron(), 3, rng));
  EXPECT_FALSE(IsGloballyRigid(Cycle(4), 2, rng, Method::kStress));
  EXPECT_TRUE(IsGloballyRigid(Cycle(4), 1, rng, Method::kStress));
  EXPECT_FALSE(IsGloballyRigid(Path(3), 2, rng));

  const auto cert = CheckGlobalRigidity(IcosahedronBraced(), 3, rng);
  EXPECT_EQ(cert.path, "stress");
  EXPECT_EQ(cert.stress_rank, 8);
  EXPECT_EQ(cert.target_rank, 8);
  EXPECT_EQ(CheckGlobalRigidity(Complete(4), 2, rng).path, "three-connected-redundantly-rigid");
  EXPECT_EQ(CheckGlobalRigidity(Complete(4), 1, rng).path, "two-connected");
  EXPECT_EQ(CheckGlobalRigidity(Complete(3), 2, rng).path, "small-complete");
  EXPECT_EQ(CheckGlobalRigidity(Complete(5), 3, rng, Method::kCombinatorial).path, "stress");
  EXPECT_EQ(ParseMethod("stress"), Method::kStress);
  EXPECT_THROW(ParseMethod("magic"), std::invalid_argument);
}

TEST(GlobalRigidityTest, CompleteBipartiteCharacterization) {
  Rng rng(4);
  for (int d = 1; d <= 3; ++d) {
    for (int a = 1; a <= 6; ++a) {
      for (int b = a; b <= 7; ++b) {
        if (a + b < d + 2) continue;
        const bool expected = a >= d + 1 && b >= d + 1 && a + b >= Binomial(d + 2, 2) + 1;
        EXPECT_EQ(IsGloballyRigid(CompleteBipartite(a, b), d, rng, Method::kStress), expected)
            << a << "," << b << " d=" << d;
      }
    }
  }
}

TEST(GlobalRigidityTest, Minimality) {
  Rng rng(5);
  EXPECT_TRUE(IsMinimallyGloballyRigid(Complete(4), 2, rng));
  EXPECT_TRUE(IsMinimallyGloballyRigid(CompleteBipartite(3, 4), 2, rng));
  EXPECT_FALSE(IsMinimallyGloballyRigid(Complete(5), 2, rng));
  EXPECT_TRUE(IsMinimallyGloballyRigid(IcosahedronBraced(), 3, rng));
  EXPECT_TRUE(IsRedundantlyGloballyRigid(Complete(5), 2, rng));
  EXPECT_FALSE(IsRedundantlyGloballyRigid(Complete(4), 2, rng));
}

TEST(GlobalRigidityTest, KDRigidity) {
  Rng rng(6);
  EXPECT_TRUE(IsGloballyKDRigid(Complete(6), 2, 2, rng));
  EXPECT_FALSE(IsGloballyKDRigid(CompleteBipartite(3, 4), 2, 2, rng));
  for (const Graph& g : {Complete(5), Wheel(5), CompleteBipartite(3, 4), Cycle(5)}) {
    EXPECT_EQ(IsGloballyKDRigid(g, 1, 2, rng), IsGloballyRigid(g, 2, rng));
  }
  EXPECT_THROW(IsGloballyKDRigid(Complete(4), 0, 2, rng), std::invalid_argument);
}

FieldMatrix Unit(int n, int i, int j) {
  FieldMatrix m(n, n);
  m(i, j) = FieldElement(1);
  return m;
}

TEST(SubsetRankReduceTest, Examples) {
  Rng rng(7);
  const std::vector<FieldMatrix> two{Unit(2, 0, 0), Unit(2, 1, 1)};
  EXPECT_EQ(SubsetRankReduce(two, 1, rng).indices.size(), 1u);
  const std::vector<FieldMatrix> three{Unit(2, 0, 0), Unit(2, 1, 1), Unit(2, 0, 0) + Unit(2, 1, 1)};
  // E11 + E22 alone already has rank 2, so the greedy pass may keep one index.
  const SubsetReduction r = SubsetRankReduce(three, 2, rng);
  EXPECT_LE(r.indices.size(), 2u);
  EXPECT_EQ(r.rank, 2);
  std::vector<FieldMatrix> chosen;
  for (int i : r.indices) chosen.push_back(three[i]);
  EXPECT_EQ(Rank(LinearCombination(chosen, r.coefficients)), 2);
  EXPECT_THROW(SubsetRankReduce(two, 3, rng), RankNotAchievable);
  EXPECT_EQ(SubsetRankReduce(two, 2, rng).indices.size(), 2u);  // r >= k keeps all
}

TEST(SubsetRankReduceTest, RandomFullRankInstances) {
  Rng rng(8);
  for (int t = 0; t < 20; ++t) {
    std::vector<FieldMatrix> mats;
    for (int i = 0; i < 5; ++i) {
      FieldMatrix m(4, 4);
      // rank-one pieces, so several are needed
      FieldVector a(4), b(4);
      for (auto& x : a) x = rng.NextField();
      for (auto& x : b) x = rng.NextField();
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m(r, c) = a[r] * b[c];
      mats.push_back(m);
    }
    const SubsetReduction red = SubsetRankReduce(mats, 4, rng);
    EXPECT_EQ(red.indices.size(), 4u);
    EXPECT_GE(red.rank, 4);
  }
}

TEST(SparsifyTest, Examples) {
  Rng rng(9);
  const SparsifyResult k5 = SparsifyGloballyRigid(Complete(5), 2, rng);
  EXPECT_LE(k5.graph.num_edges(), 9);
  EXPECT_TRUE(IsMinimallyGloballyRigid(k5.graph, 2, rng));
  EXPECT_EQ(k5.kept.size(), static_cast<std::size_t>(k5.graph.num_edges()));

  const SparsifyResult k4 = SparsifyGloballyRigid(Complete(4), 2, rng);
  EXPECT_EQ(k4.graph, Complete(4));
  EXPECT_TRUE(k4.removed.empty());

  const SparsifyResult k6 = SparsifyGloballyRigid(Complete(6), 3, rng);
  EXPECT_LE(k6.graph.num_edges(), 14);
  EXPECT_LE(k6.stage4_edges, 14);
  EXPECT_EQ(k6.basis_size, 12);
  EXPECT_EQ(k6.generators_before, 3);
  EXPECT_LE(k6.generators_after, 2);
  EXPECT_TRUE(IsGloballyRigid(k6.graph, 3, rng));

  EXPECT_THROW(SparsifyGloballyRigid(Cycle(4), 2, rng), NotGloballyRigid);
  EXPECT_EQ(SparsifyBound(4, 2), 6);
  EXPECT_EQ(SparsifyBound(11, 3), 34);
}

TEST(SparsifyTest, ReproducibleFromSeed) {
  Rng a(10), b(10);
  const auto x = SparsifyGloballyRigid(Complete(7), 2, a, Method::kStress);
  const auto y = SparsifyGloballyRigid(Complete(7), 2, b, Method::kStress);
  EXPECT_EQ(x.graph, y.graph);
  EXPECT_EQ(x.seed, y.seed);
}

TEST(GlobalRigidityInvariantsTest, NecessaryConditionsAndConing) {
  Rng rng(11);
  int rigid_count = 0;
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& g : AllGraphs(n)) {
      for (int d = 1; d <= 2; ++d) {
        const bool gr = IsGloballyRigid(g, d, rng, Method::kStress);
        if (gr && n >= d + 2) {
          ++rigid_count;
          EXPECT_TRUE(IsKConnected(g, d + 1));
          EXPECT_TRUE(IsRedundantlyRigid(g, d, rng));
          EXPECT_TRUE(IsRConnected(g, d, rng));
        }
        EXPECT_EQ(gr, IsGloballyRigid(Cone(g), d + 1, rng, Method::kStress));
        if (IsRigid(g, d + 1, rng)) EXPECT_TRUE(gr);
      }
    }
  }
  EXPECT_GT(rigid_count, 50);
}

}  // namespace
}  // namespace rigidkit
