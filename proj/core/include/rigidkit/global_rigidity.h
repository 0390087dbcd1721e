#ifndef RIGIDKIT_GLOBAL_RIGIDITY_H_
#define RIGIDKIT_GLOBAL_RIGIDITY_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rigidkit/field_matrix.h"
#include "rigidkit/graph.h"
#include "rigidkit/rigidity.h"
#include "rigidkit/rng.h"

namespace rigidkit {

// Edge weights w with R(G,p)^T w = 0, aligned to canonical edge order.
struct Stress {
  FieldVector omega;

  std::vector<int> Support() const;
};

// One stress per non-basis edge e, supported on the fundamental circuit of e
// and scaled so omega(e) = 1. Together they span the cokernel of R(G,p).
// Throws NonGenericRealization when `basis` is not a basis of the row space
// at p, std::invalid_argument on shape mismatches.
std::vector<Stress> StressBasis(const Graph& g, const Realization& p, std::span<const int> basis);
std::vector<Stress> StressBasis(const GenericFramework& f);

// |V| x |V| symmetric matrix: -omega(uv) at (u,v) and (v,u), the sum of the
// incident weights on the diagonal.
FieldMatrix BuildStressMatrix(const Graph& g, const Stress& stress);

enum class GlobalRigidityMethod { kAuto, kStress, kCombinatorial };

const char* MethodName(GlobalRigidityMethod method);
// Throws std::invalid_argument on an unknown name.
GlobalRigidityMethod ParseMethod(const std::string& name);

// How a verdict was reached. `path` is one of "small-complete",
// "two-connected" (d = 1), "three-connected-redundantly-rigid" (d = 2) or
// "stress". For the stress path, `seed` is the realization seed and
// `stress_rank` the best rank found (target |V| - d - 1).
struct GlobalRigidityCertificate {
  bool globally_rigid = false;
  std::string path;
  bool rigid = false;
  std::uint64_t seed = 0;
  int stress_rank = -1;
  int target_rank = -1;
};

// kAuto uses the exact combinatorial characterizations for d <= 2 and the
// stress test above that; kCombinatorial falls back to the stress test
// where no characterization is known (d >= 3).
GlobalRigidityCertificate CheckGlobalRigidity(const Graph& g, int d, Rng& rng,
                                              GlobalRigidityMethod method = GlobalRigidityMethod::kAuto);
bool IsGloballyRigid(const Graph& g, int d, Rng& rng,
                     GlobalRigidityMethod method = GlobalRigidityMethod::kAuto);
// Globally rigid, and no single edge deletion keeps it so.
bool IsMinimallyGloballyRigid(const Graph& g, int d, Rng& rng,
                              GlobalRigidityMethod method = GlobalRigidityMethod::kAuto);
// G - e globally rigid for every edge e.
bool IsRedundantlyGloballyRigid(const Graph& g, int d, Rng& rng,
                                GlobalRigidityMethod method = GlobalRigidityMethod::kAuto);
// G - S globally rigid for every vertex set S with |S| < k.
bool IsGloballyKDRigid(const Graph& g, int k, int d, Rng& rng,
                       GlobalRigidityMethod method = GlobalRigidityMethod::kAuto);

struct SubsetReduction {
  std::vector<int> indices;                // increasing
  std::vector<FieldElement> coefficients;  // aligned with indices
  int rank = 0;                            // exact rank of the witness
};

// Greedy index dropping: index i is removed for good when a fresh random
// combination of the remaining matrices still has rank >= r (kTrials
// attempts). Throws RankNotAchievable if the full list never reaches r.
SubsetReduction SubsetRankReduce(std::span<const FieldMatrix> mats, int r, Rng& rng);

struct SparsifyResult {
  Graph graph;                  // final minimally globally rigid subgraph
  std::vector<int> basis;       // E0, edge indices into the input
  std::vector<int> extra;       // E', edge indices into the input
  std::vector<int> kept;        // edges of the final graph, indices into the input
  EdgeList removed;             // dropped by the minimization pass, in order
  int basis_size = 0;
  int generators_before = 0;    // |E - E0|
  int generators_after = 0;     // |E'|
  int stage4_edges = 0;         // |E0| + |E'|
  int randomized_faults = 0;    // failed attempts before success
  std::uint64_t seed = 0;       // seed of the successful attempt
};

// Sparsifier pipeline: basis, fundamental stress matrices, subset rank
// reduction down to |V| - d - 1 generators, then greedy edge deletion.
// Throws NotGloballyRigid for an input that is not globally rigid, and
// RandomizedFault if every attempt fails.
SparsifyResult SparsifyGloballyRigid(const Graph& g, int d, Rng& rng,
                                     GlobalRigidityMethod method = GlobalRigidityMethod::kAuto);

// (d+1)|V| - C(d+2, 2).
long SparsifyBound(int n, int d);

}  // namespace rigidkit

#endif  // RIGIDKIT_GLOBAL_RIGIDITY_H_
