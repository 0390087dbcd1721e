#ifndef RIGIDKIT_CORPUS_H_
#define RIGIDKIT_CORPUS_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "rigidkit/graph.h"
#include "rigidkit/rng.h"

namespace rigidkit {

// Largest vertex count for which adjacency fits the 64-bit canonical code.
inline constexpr int kMaxCodeVertices = 11;

// Canonical code: the lexicographically least upper-triangle bit string over
// all relabelings that respect a colour refinement of the vertices. Pairs are
// read in colex order (0,1),(0,2),(1,2),(0,3),... starting at the most
// significant bit. Isomorphic graphs, and only those, share a code.
std::uint64_t CanonicalCode(const Graph& g);
Graph GraphFromCode(int n, std::uint64_t code);
bool AreIsomorphic(const Graph& a, const Graph& b);

// Calls `visit` for every graph on n vertices: one representative per
// isomorphism class (n <= 10) or every labeled graph (n <= 7).
void ForEachGraph(int n, bool isomorph_rejection, const std::function<void(const Graph&)>& visit);
std::vector<Graph> AllGraphs(int n, bool isomorph_rejection = true);

// Erdos-Renyi G(n, p).
Graph RandomGraph(int n, double edge_probability, Rng& rng);
// Uniform among labeled graphs with exactly m edges.
Graph RandomGraphWithEdges(int n, int m, Rng& rng);

struct CorpusSpec {
  enum class Kind { kExhaustive, kRandom };
  Kind kind = Kind::kExhaustive;

  // Exhaustive: every graph with min_n <= n <= max_n.
  int min_n = 1;
  int max_n = 0;
  bool isomorph_rejection = true;
  bool connected_only = false;

  // Random: `count` samples of G(n, p). Graph i uses Rng::Derive(seed, i).
  int count = 0;
  int n = 0;
  double edge_probability = 0.5;
  std::uint64_t seed = Rng::kDefaultSeed;
};

// Throws std::invalid_argument for an unusable spec (vertex bounds outside
// the supported range, probability outside [0, 1], negative counts).
void ValidateCorpus(const CorpusSpec& spec);
// Visits the corpus in a fixed order, passing each graph's index.
void ForEachCorpusGraph(const CorpusSpec& spec,
                        const std::function<void(std::size_t, const Graph&)>& visit);
std::vector<Graph> BuildCorpus(const CorpusSpec& spec);

}  // namespace rigidkit

#endif  // RIGIDKIT_CORPUS_H_
