#ifndef RIGIDKIT_CONNECTIVITY_H_
#define RIGIDKIT_CONNECTIVITY_H_

#include <vector>

#include "rigidkit/graph.h"

namespace rigidkit {

// Component id per vertex; ids are numbered by smallest member vertex.
std::vector<int> ConnectedComponents(const Graph& g);
int NumComponents(const Graph& g);
// Graphs on at most one vertex count as connected.
bool IsConnected(const Graph& g);

// Maximum number of internally vertex-disjoint u-v paths. When uv is an
// edge the result is 1 + kappa(u, v; G - uv). Throws std::invalid_argument
// if u == v.
int LocalConnectivity(const Graph& g, int u, int v);

// Largest k such that removing fewer than k vertices leaves G connected;
// K_n gives n - 1 and disconnected graphs give 0. Needs n >= 2.
int VertexConnectivity(const Graph& g);
// At least k + 1 vertices and vertex connectivity >= k.
bool IsKConnected(const Graph& g, int k);

// (S, F) with G - S - F disconnected. F never contains an edge incident to S.
struct MixedCut {
  std::vector<int> vertices;
  EdgeList edges;
  int cost = 0;  // 2|S| + |F|
};

// Minimum-cost mixed cut. Built from s-t cuts in the network where every
// vertex other than s, t becomes an arc of capacity 2 and every edge a pair
// of opposite unit arcs; s only ranges over the first floor(best/2) + 1
// vertices since some vertex among them survives any optimal S. On complete
// graphs this is the star of a minimum-degree vertex. Needs n >= 2.
MixedCut MinMixedCut(const Graph& g);
bool IsMixedKConnected(const Graph& g, int k);

// True when removing S and F from g leaves at least two components.
bool IsMixedCut(const Graph& g, const std::vector<int>& vertices, const EdgeList& edges);

}  // namespace rigidkit

#endif  // RIGIDKIT_CONNECTIVITY_H_
