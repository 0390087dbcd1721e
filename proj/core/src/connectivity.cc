#include "rigidkit/connectivity.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "max_flow.h"

namespace rigidkit {
namespace {

using internal::FlowNetwork;

constexpr std::int64_t kInfinity = std::numeric_limits<int>::max();

int In(int x) { return 2 * x; }
int Out(int x) { return 2 * x + 1; }

// kappa(u, v) for non-adjacent u, v, capped at `limit`.
int SplitFlow(const Graph& g, int u, int v, int limit) {
  FlowNetwork net(2 * g.num_vertices());
  for (int x = 0; x < g.num_vertices(); ++x) {
    net.AddArc(In(x), Out(x), (x == u || x == v) ? kInfinity : 1);
  }
  for (const auto& e : g.edges()) {
    net.AddArc(Out(e.u), In(e.v), kInfinity);
    net.AddArc(Out(e.v), In(e.u), kInfinity);
  }
  return static_cast<int>(net.MaxFlow(Out(u), In(v), limit));
}

int CappedLocalConnectivity(const Graph& g, int u, int v, int limit) {
  if (u == v) throw std::invalid_argument("local connectivity needs u != v");
  if (g.has_edge(u, v)) {
    if (limit <= 0) return 0;
    return 1 + SplitFlow(g.WithoutEdge(u, v), u, v, limit - 1);
  }
  return SplitFlow(g, u, v, limit);
}

}  // namespace

std::vector<int> ConnectedComponents(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> comp(n, -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (const int y : g.neighbors(x)) {
        if (comp[y] < 0) {
          comp[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return comp;
}

int NumComponents(const Graph& g) {
  const auto comp = ConnectedComponents(g);
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

bool IsConnected(const Graph& g) { return NumComponents(g) <= 1; }

int LocalConnectivity(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.num_vertices() || v >= g.num_vertices()) {
    throw std::invalid_argument("local connectivity: vertex out of range");
  }
  return CappedLocalConnectivity(g, u, v, static_cast<int>(kInfinity));
}

int VertexConnectivity(const Graph& g) {
  const int n = g.num_vertices();
  if (n < 2) throw std::invalid_argument("vertex connectivity needs at least two vertices");
  if (g.is_complete()) return n - 1;
  // Even's scheme: if i is the first vertex outside a minimum separator,
  // some later non-neighbour sits across it.
  int best = g.min_degree();
  for (int i = 0; i <= best && i < n; ++i) {
    for (int j = i + 1; j < n && best > 0; ++j) {
      if (g.has_edge(i, j)) continue;
      best = std::min(best, SplitFlow(g, i, j, best));
    }
  }
  return best;
}

bool IsKConnected(const Graph& g, int k) {
  if (g.num_vertices() < k + 1) return false;
  if (k <= 0) return true;
  return VertexConnectivity(g) >= k;
}

bool IsMixedCut(const Graph& g, const std::vector<int>& vertices, const EdgeList& edges) {
  std::vector<bool> removed(g.num_vertices(), false);
  for (const int v : vertices) removed.at(v) = true;
  std::vector<int> keep;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!removed[v]) keep.push_back(v);
  }
  if (keep.size() < 2) return false;
  EdgeList rest;
  std::vector<Edge> cut = edges;
  std::sort(cut.begin(), cut.end());
  for (const auto& e : g.edges()) {
    if (removed[e.u] || removed[e.v]) continue;
    if (std::binary_search(cut.begin(), cut.end(), e)) continue;
    rest.push_back(e);
  }
  const Graph h(g.num_vertices(), std::move(rest));
  const auto comp = ConnectedComponents(h);
  const int first = comp[keep.front()];
  for (const int v : keep) {
    if (comp[v] != first) return true;
  }
  return false;
}

MixedCut MinMixedCut(const Graph& g) {
  const int n = g.num_vertices();
  if (n < 2) throw std::invalid_argument("mixed cut needs at least two vertices");
  if (!IsConnected(g)) return {};

  MixedCut best;
  {
    int v = 0;
    for (int x = 1; x < n; ++x) {
      if (g.degree(x) < g.degree(v)) v = x;
    }
    for (const int y : g.neighbors(v)) best.edges.push_back(MakeEdge(v, y));
    best.cost = g.degree(v);
  }

  for (int s = 0; 2 * s <= best.cost && s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      FlowNetwork net(2 * n);
      for (int w = 0; w < n; ++w) {
        net.AddArc(In(w), Out(w), (w == s || w == t) ? kInfinity : 2);
      }
      for (const auto& e : g.edges()) {
        net.AddArc(Out(e.u), In(e.v), 1);
        net.AddArc(Out(e.v), In(e.u), 1);
      }
      const std::int64_t flow = net.MaxFlow(In(s), Out(t), best.cost);
      if (flow >= best.cost) continue;

      const auto reach = net.ResidualReachable(In(s));
      MixedCut cut;
      std::vector<bool> in_s(n, false);
      for (int w = 0; w < n; ++w) {
        if (reach[In(w)] && !reach[Out(w)]) {
          cut.vertices.push_back(w);
          in_s[w] = true;
        }
      }
      for (const auto& e : g.edges()) {
        if (in_s[e.u] || in_s[e.v]) continue;
        if ((reach[Out(e.u)] && !reach[In(e.v)]) || (reach[Out(e.v)] && !reach[In(e.u)])) {
          cut.edges.push_back(e);
        }
      }
      cut.cost = 2 * static_cast<int>(cut.vertices.size()) + static_cast<int>(cut.edges.size());
      if (cut.cost != flow || !IsMixedCut(g, cut.vertices, cut.edges)) {
        throw std::logic_error("mixed cut decoding disagrees with the flow value");
      }
      best = std::move(cut);
    }
  }
  return best;
}

bool IsMixedKConnected(const Graph& g, int k) { return MinMixedCut(g).cost >= k; }

}  // namespace rigidkit
