#include "rigidkit/transforms.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rigidkit/connectivity.h"

namespace rigidkit {

Graph Cone(const Graph& g) {
  const int n = g.num_vertices();
  EdgeList e = g.edges();
  for (int v = 0; v < n; ++v) e.push_back({v, n});
  return Graph(n + 1, std::move(e));
}

Graph DisjointUnion(const Graph& g1, const Graph& g2) {
  const int shift = g1.num_vertices();
  EdgeList e = g1.edges();
  for (const auto& x : g2.edges()) e.push_back({x.u + shift, x.v + shift});
  return Graph(g1.num_vertices() + g2.num_vertices(), std::move(e));
}

Subgraph InducedSubgraph(const Graph& g, std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw std::invalid_argument("InducedSubgraph: repeated vertex");
  }
  std::vector<int> local(g.num_vertices(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const int v = vertices[i];
    if (v < 0 || v >= g.num_vertices()) throw std::invalid_argument("InducedSubgraph: bad vertex");
    local[v] = static_cast<int>(i);
  }
  EdgeList e;
  for (const auto& x : g.edges()) {
    if (local[x.u] >= 0 && local[x.v] >= 0) e.push_back(MakeEdge(local[x.u], local[x.v]));
  }
  return {Graph(static_cast<int>(vertices.size()), std::move(e)), std::move(vertices)};
}

Subgraph RemoveVertices(const Graph& g, const std::vector<int>& removed) {
  std::vector<bool> gone(g.num_vertices(), false);
  for (const int v : removed) gone.at(v) = true;
  std::vector<int> keep;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!gone[v]) keep.push_back(v);
  }
  return InducedSubgraph(g, std::move(keep));
}

Graph TwoSum(const Graph& g1, const Graph& g2, const TwoSumSpec& spec) {
  const auto [u1, v1] = spec.first;
  const auto [u2, v2] = spec.second;
  if (!g1.has_edge(u1, v1)) {
    throw std::invalid_argument("two_sum: designated edge " + std::to_string(u1) + "-" +
                                std::to_string(v1) + " is not in the first graph");
  }
  if (!g2.has_edge(u2, v2)) {
    throw std::invalid_argument("two_sum: designated edge " + std::to_string(u2) + "-" +
                                std::to_string(v2) + " is not in the second graph");
  }
  const int n1 = g1.num_vertices();
  std::vector<int> map2(g2.num_vertices(), -1);
  map2[u2] = u1;
  map2[v2] = v1;
  int next = n1;
  for (int x = 0; x < g2.num_vertices(); ++x) {
    if (map2[x] < 0) map2[x] = next++;
  }
  const Edge skip1 = MakeEdge(u1, v1);
  const Edge skip2 = MakeEdge(u2, v2);
  EdgeList e;
  for (const auto& x : g1.edges()) {
    if (x != skip1) e.push_back(x);
  }
  for (const auto& x : g2.edges()) {
    if (x != skip2) e.push_back(MakeEdge(map2[x.u], map2[x.v]));
  }
  return Graph(next, std::move(e));
}

Separation TwoSeparation(const Graph& g, int u, int v, bool add_edge) {
  const int n = g.num_vertices();
  if (u == v || u < 0 || v < 0 || u >= n || v >= n) {
    throw std::invalid_argument("two_separation: need two distinct vertices of G");
  }
  const bool cleaved = g.has_edge(u, v);
  const auto rest = RemoveVertices(g, {u, v});
  const auto comp = ConnectedComponents(rest.graph);
  const int num_comp = rest.graph.num_vertices() == 0
                           ? 0
                           : *std::max_element(comp.begin(), comp.end()) + 1;
  if (num_comp < 2) {
    throw std::invalid_argument("two_separation: {" + std::to_string(u) + ", " +
                                std::to_string(v) + "} is not a separating pair");
  }
  // Component ids are assigned in order of smallest vertex, so component 0
  // holds the smallest label outside {u, v}.
  std::vector<int> first_vertices = {u, v};
  std::vector<int> second_vertices = {u, v};
  for (int i = 0; i < rest.graph.num_vertices(); ++i) {
    (comp[i] == 0 ? first_vertices : second_vertices).push_back(rest.original[i]);
  }

  auto build = [&](std::vector<int> vertices, Edge& pair) {
    Subgraph piece = InducedSubgraph(g, std::move(vertices));
    const auto& orig = piece.original;
    const int lu = static_cast<int>(std::lower_bound(orig.begin(), orig.end(), u) - orig.begin());
    const int lv = static_cast<int>(std::lower_bound(orig.begin(), orig.end(), v) - orig.begin());
    pair = {lu, lv};
    Graph h = piece.graph.WithoutEdge(lu, lv);
    if (add_edge) h = h.WithEdge(lu, lv);
    return Subgraph{std::move(h), piece.original};
  };

  Separation out;
  out.cleaved = cleaved;
  auto a = build(std::move(first_vertices), out.first_pair);
  auto b = build(std::move(second_vertices), out.second_pair);
  out.first = std::move(a.graph);
  out.first_original = std::move(a.original);
  out.second = std::move(b.graph);
  out.second_original = std::move(b.original);
  return out;
}

}  // namespace rigidkit
