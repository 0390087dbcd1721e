#ifndef RIGIDKIT_LINKED_PAIRS_H_
#define RIGIDKIT_LINKED_PAIRS_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rigidkit/corpus.h"
#include "rigidkit/graph.h"
#include "rigidkit/rng.h"

namespace rigidkit {

// r_d(G + uv) == r_d(G); an existing edge counts as linked. Throws
// std::invalid_argument when u == v or a vertex is out of range.
bool IsLinked(const Graph& g, int u, int v, int d, Rng& rng);

// Exact in one dimension: an edge, or two openly disjoint u-v paths.
bool IsGloballyLinked1d(const Graph& g, int u, int v);

enum class LinkVerdict { kYes, kNo, kUnknown };
enum class LinkReason { kEdgePresent, kKappaCriterion, kR3CircuitRoute, kOpen };

const char* VerdictName(LinkVerdict v);
const char* ReasonName(LinkReason r);

struct PairVerdict {
  int u = 0;
  int v = 0;
  std::map<int, bool> linked;  // dimension -> linked flag, for the dimensions queried
  LinkVerdict verdict = LinkVerdict::kUnknown;
  LinkReason reason = LinkReason::kOpen;
  int kappa = -1;               // kappa(u, v; G); -1 when not computed
  EdgeList circuit;             // R_3-circuit through uv for kR3CircuitRoute
};

// Globally linked in the plane:
//   uv in E                                  -> yes (edge-present)
//   G R_2-connected                          -> yes iff kappa(u,v) >= 3
//   uv closes an R_3-circuit C of G + uv (the fundamental circuit for one
//   basis) with kappa(u,v; C - uv) >= 3 and C - uv R_2-connected -> yes
//   otherwise                                -> unknown
PairVerdict IsGloballyLinked2d(const Graph& g, int u, int v, Rng& rng);

enum class ConjectureKind {
  kLinkedGloballyLinked,    // linked in R_{d+1} => globally linked in R_d
  kRedundantlyConnected,    // R_{d+1}-connected => redundantly R_d-connected
  kBridge,                  // G globally rigid in R_d, G - e not => e an R_{d+1}-bridge
};

const char* ConjectureName(ConjectureKind kind);  // "linked-gl", "redundant-mc", "bridge"
// Throws std::invalid_argument on an unknown name.
ConjectureKind ParseConjecture(const std::string& name);

struct ConjectureCandidate {
  std::size_t graph_index = 0;
  Graph graph;
  bool has_item = false;
  Edge item;                // the pair or edge under test, when applicable
  std::string detail;
};

// Counts over the instances (graph, pair or edge) whose hypothesis held.
struct ExplorerReport {
  ConjectureKind kind = ConjectureKind::kLinkedGloballyLinked;
  int d = 1;
  std::uint64_t graphs = 0;
  std::uint64_t instances = 0;
  std::uint64_t confirmed = 0;
  std::uint64_t unknown = 0;
  std::vector<ConjectureCandidate> candidates;  // ordered by graph index

  // Associative, and commutative up to candidate order (kept sorted).
  void Merge(const ExplorerReport& other);
};

struct ExplorerOptions {
  ConjectureKind kind = ConjectureKind::kLinkedGloballyLinked;
  int d = 1;
  CorpusSpec corpus;
  std::uint64_t seed = Rng::kDefaultSeed;  // graph i uses Rng::Derive(seed, i)
  // Worker threads; 0 means hardware concurrency. RIGIDKIT_THREADS caps it.
  int threads = 1;
};

// Evaluates one graph of the corpus.
ExplorerReport ExploreGraph(ConjectureKind kind, int d, std::size_t graph_index, const Graph& g,
                            Rng& rng);
// Throws std::invalid_argument for an invalid corpus or dimension.
ExplorerReport ExploreConjecture(const ExplorerOptions& options);

}  // namespace rigidkit

#endif  // RIGIDKIT_LINKED_PAIRS_H_
