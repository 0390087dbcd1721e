#ifndef RIGIDKIT_RIGIDITY_H_
#define RIGIDKIT_RIGIDITY_H_

#include <cstdint>
#include <span>
#include <vector>

#include "rigidkit/field_matrix.h"
#include "rigidkit/graph.h"
#include "rigidkit/rng.h"

namespace rigidkit {

// Random realizations drawn per randomized rank query; the best one is kept.
inline constexpr int kTrials = 3;

// A placement p: V -> Z_p^d.
struct Realization {
  int d = 0;
  std::vector<FieldVector> coords;  // coords[v].size() == d
  std::uint64_t seed = 0;
};

// Uniform coordinates from a stream seeded by `rng` (the seed is recorded).
Realization SampleRealization(const Graph& g, int d, Rng& rng);

// |E| x d|V| rigidity matrix: row i belongs to edge(i) = uv and holds
// p(u) - p(v) in u's column block, p(v) - p(u) in v's. Throws
// std::invalid_argument when the realization does not fit the graph.
FieldMatrix BuildRigidityMatrix(const Graph& g, const Realization& p);

// d|V| - C(d+1, 2) for |V| >= d + 1, C(|V|, 2) below that.
long RigidRank(int n, int d);
long Binomial(int n, int k);

// A graph together with the realization of largest rank found in kTrials
// draws. Subset queries (independence of an edge set, bridges, circuits)
// are answered at this one realization.
class GenericFramework {
 public:
  GenericFramework(const Graph& g, int d, Rng& rng, int trials = kTrials);

  const Graph& graph() const { return graph_; }
  int dimension() const { return d_; }
  const Realization& realization() const { return realization_; }
  const FieldMatrix& matrix() const { return matrix_; }
  int rank() const { return rank_; }

  bool IsRigid() const;
  int RankOf(std::span<const int> edge_indices) const;
  bool IsIndependentSet(std::span<const int> edge_indices) const;

  // Greedy basis over canonical edge order.
  const std::vector<int>& Basis() const;
  // Greedy basis visiting edges in `order` (any subset of edge indices).
  std::vector<int> GreedyBasis(std::span<const int> order) const;
  // Basis of { w : w^T R = 0 }, the stresses at this realization.
  const std::vector<FieldVector>& Cokernel() const;
  // Edges outside the support of every stress.
  std::vector<int> Bridges() const;
  // {e} plus the basis edges f with (basis - f) + e independent. Throws
  // std::invalid_argument if e is in the basis or `basis` is not a basis.
  std::vector<int> FundamentalCircuit(std::span<const int> basis, int e) const;
  // Edge classes, each sorted, ordered by smallest member.
  std::vector<std::vector<int>> Components() const;

 private:
  Graph graph_;
  int d_;
  Realization realization_;
  FieldMatrix matrix_;
  int rank_ = 0;
  mutable std::vector<int> basis_;
  mutable bool basis_ready_ = false;
  mutable std::vector<FieldVector> cokernel_;
  mutable bool cokernel_ready_ = false;
};

struct MatroidReport {
  int d = 0;
  int rank = 0;
  bool independent = false;
  bool circuit = false;
  bool connected = false;
  std::vector<int> bridges;
  std::vector<std::vector<int>> components;
  std::vector<int> basis;
};

int GenericRank(const Graph& g, int d, Rng& rng);
// Rank d|V| - C(d+1,2); graphs with at most d + 1 vertices are rigid iff
// complete.
bool IsRigid(const Graph& g, int d, Rng& rng);
bool IsRedundantlyRigid(const Graph& g, int d, Rng& rng);
bool IsVertexRedundantlyRigid(const Graph& g, int d, Rng& rng);
bool IsIndependent(const Graph& g, int d, Rng& rng);
bool IsCircuit(const Graph& g, int d, Rng& rng);
std::vector<int> Bridges(const Graph& g, int d, Rng& rng);
std::vector<int> RigidBasis(const Graph& g, int d, Rng& rng);
std::vector<int> FundamentalCircuit(const Graph& g, int d, std::span<const int> basis, int e,
                                    Rng& rng);
std::vector<std::vector<int>> MatroidComponents(const Graph& g, int d, Rng& rng);
// One matroid component containing at least two edges.
bool IsRConnected(const Graph& g, int d, Rng& rng);
bool IsRConnected(const GenericFramework& f);
// R_d-connected after deleting any single edge.
bool IsRedundantlyRConnected(const Graph& g, int d, Rng& rng);
MatroidReport AnalyzeMatroid(const Graph& g, int d, Rng& rng);

}  // namespace rigidkit

#endif  // RIGIDKIT_RIGIDITY_H_
