#ifndef RIGIDKIT_TRANSFORMS_H_
#define RIGIDKIT_TRANSFORMS_H_

#include <vector>

#include "rigidkit/graph.h"

namespace rigidkit {

// G plus a new vertex n joined to every vertex of G.
Graph Cone(const Graph& g);

// Vertex-disjoint union; the second graph's vertices are shifted by
// g1.num_vertices().
Graph DisjointUnion(const Graph& g1, const Graph& g2);

// Subgraph induced by `vertices` (any order, no repeats). Vertex i of the
// result is original vertex sorted(vertices)[i].
struct Subgraph {
  Graph graph;
  std::vector<int> original;  // result vertex -> vertex of the parent
};
Subgraph InducedSubgraph(const Graph& g, std::vector<int> vertices);
// G - S, relabeled through InducedSubgraph.
Subgraph RemoveVertices(const Graph& g, const std::vector<int>& removed);

// Designated edges for a 2-sum, oriented: `first.u` is identified with
// `second.u` and `first.v` with `second.v`. Members are ordered pairs, not
// canonical edges.
struct TwoSumSpec {
  Edge first;
  Edge second;
};

// 2-sum of G1 and G2 along the designated edges: delete both, identify
// endpoints. G1 keeps its labels (so the identified vertices are labeled
// first.u, first.v); the remaining vertices of G2 follow as
// n1, n1+1, ... in increasing G2 order. Throws std::invalid_argument if a
// designated edge is missing.
Graph TwoSum(const Graph& g1, const Graph& g2, const TwoSumSpec& spec);

struct Separation {
  Graph first;
  Graph second;
  std::vector<int> first_original;   // piece vertex -> vertex of G
  std::vector<int> second_original;
  // The separating pair inside each piece, oriented (u, v) as passed in.
  // two_sum(first, second, {first_pair, second_pair}) recovers G up to
  // relabeling when G lacked the edge uv and add_edge was set.
  Edge first_pair;
  Edge second_pair;
  bool cleaved = false;  // uv was an edge of G and was removed first
};

// 2-separation along {u, v} (cleaving when uv is an edge). The components of
// G - {u,v} - uv are split as: the component holding the smallest vertex
// label goes to `first`, all others to `second`; u and v join both pieces.
// Piece vertices are relabeled in increasing order of original label. With
// add_edge, uv is added to both pieces. Throws std::invalid_argument when
// {u, v} does not separate G.
Separation TwoSeparation(const Graph& g, int u, int v, bool add_edge);

}  // namespace rigidkit

#endif  // RIGIDKIT_TRANSFORMS_H_
