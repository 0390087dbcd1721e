#ifndef RIGIDKIT_EXTRACTOR_H_
#define RIGIDKIT_EXTRACTOR_H_

#include <optional>
#include <string>
#include <vector>

#include "rigidkit/graph.h"
#include "rigidkit/rng.h"

namespace rigidkit {

// 2|E| > (k-1)(2|V| - k) and |V| >= k + 1, in integers.
bool SatisfiesDensityHypothesis(long n, long m, int k);

struct ExtractionStep {
  enum class Kind { kVertexDeletion, kCutSplit };
  Kind kind = Kind::kVertexDeletion;

  // Vertex deletion (original labels). `reason` is "degree" when the vertex
  // had degree below k, "minimality" otherwise.
  int vertex = -1;
  std::string reason;

  // Cut split along (S, F): the surviving side keeps `side_vertices` (the
  // chosen components, original labels) plus S. Side 1 also keeps the edges
  // inside S; side 2 does not.
  std::vector<int> cut_vertices;
  EdgeList cut_edges;
  int side = 0;
  std::vector<int> side_vertices;
};

struct ExtractionTrace {
  int requested_k = 0;
  int k = 0;  // even; requested_k + 1 when requested_k was odd
  bool promoted = false;
  std::vector<ExtractionStep> steps;
};

struct ExtractionResult {
  Graph graph;               // relabeled 0..n'-1 in increasing original order
  std::vector<int> vertices; // original label of each vertex of `graph`
  ExtractionTrace trace;
  int min_mixed_cut = 0;     // independent re-check of the output
};

// Constructive form of the mixed analogue of Mader's theorem: shrink G while
// the density hypothesis survives (minimum-degree vertex first), split along
// any mixed cut of cost < k, stop when neither applies. Throws
// HypothesisNotSatisfied (message states the failing inequality) and
// std::invalid_argument for k < 1.
ExtractionResult MixedKConnectedSubgraph(const Graph& g, int k);

// Applies a trace to g; reproduces the extractor's output.
ExtractionResult ReplayTrace(const Graph& g, const ExtractionTrace& trace);

struct RigidSubgraphResult {
  ExtractionResult extraction;
  bool globally_rigid = false;
  bool redundantly_globally_rigid = false;
};

// Mixed 6-connected subgraph, verified (redundantly) globally rigid in the
// plane. Empty when |V| < 7 or |E| < 5|V| - 14.
std::optional<RigidSubgraphResult> GloballyRigidSubgraph2d(const Graph& g, Rng& rng);

struct GrnEstimate {
  int lower_bound = 0;         // largest d certified, 0 if none
  std::string method;          // how the witness was found
  Graph witness;
  std::vector<int> vertices;   // original labels of the witness
  long conditional_bound = 0;  // floor(sqrt(|E| / (6|V|))); assumes an open conjecture
};

// Lower bound on the largest d with a globally rigid subgraph on >= d + 2
// vertices, searching d = d_max down to 1.
GrnEstimate EstimateGrn(const Graph& g, int d_max, Rng& rng);

}  // namespace rigidkit

#endif  // RIGIDKIT_EXTRACTOR_H_
