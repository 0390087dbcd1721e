#include "rigidkit/linked_pairs.h"

#include <algorithm>
#include <stdexcept>

#include "rigidkit/connectivity.h"
#include "rigidkit/rigidity.h"

namespace rigidkit {
namespace {

void CheckPair(const Graph& g, int u, int v) {
  const int n = g.num_vertices();
  if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("vertex out of range");
  if (u == v) throw std::invalid_argument("pair needs two distinct vertices");
}

// Edge subgraph with isolated vertices dropped; `map` sends old ids to new.
Graph Compact(int n, const EdgeList& edges, std::vector<int>* map) {
  map->assign(n, -1);
  int next = 0;
  for (const auto& e : edges) {
    for (int x : {e.u, e.v}) {
      if ((*map)[x] < 0) (*map)[x] = next++;
    }
  }
  EdgeList renamed;
  for (const auto& e : edges) renamed.push_back(MakeEdge((*map)[e.u], (*map)[e.v]));
  return Graph(next, std::move(renamed));
}

}  // namespace

bool IsLinked(const Graph& g, int u, int v, int d, Rng& rng) {
  CheckPair(g, u, v);
  if (g.has_edge(u, v)) return true;
  const Graph plus = g.WithEdge(u, v);
  GenericFramework f(plus, d, rng);
  const int e = *plus.edge_index(u, v);
  const auto bridges = f.Bridges();
  return !std::binary_search(bridges.begin(), bridges.end(), e);
}

bool IsGloballyLinked1d(const Graph& g, int u, int v) {
  CheckPair(g, u, v);
  return g.has_edge(u, v) || LocalConnectivity(g, u, v) >= 2;
}

const char* VerdictName(LinkVerdict v) {
  switch (v) {
    case LinkVerdict::kYes:
      return "yes";
    case LinkVerdict::kNo:
      return "no";
    case LinkVerdict::kUnknown:
      return "unknown";
  }
  return "?";
}

const char* ReasonName(LinkReason r) {
  switch (r) {
    case LinkReason::kEdgePresent:
      return "edge-present";
    case LinkReason::kKappaCriterion:
      return "kappa-criterion";
    case LinkReason::kR3CircuitRoute:
      return "r3-circuit-route";
    case LinkReason::kOpen:
      return "open";
  }
  return "?";
}

PairVerdict IsGloballyLinked2d(const Graph& g, int u, int v, Rng& rng) {
  CheckPair(g, u, v);
  PairVerdict out;
  out.u = std::min(u, v);
  out.v = std::max(u, v);
  if (g.has_edge(u, v)) {
    out.linked[2] = true;
    out.verdict = LinkVerdict::kYes;
    out.reason = LinkReason::kEdgePresent;
    return out;
  }
  out.kappa = LocalConnectivity(g, u, v);
  out.linked[2] = IsLinked(g, u, v, 2, rng);
  if (IsRConnected(g, 2, rng)) {
    out.verdict = out.kappa >= 3 ? LinkVerdict::kYes : LinkVerdict::kNo;
    out.reason = LinkReason::kKappaCriterion;
    return out;
  }

  const Graph plus = g.WithEdge(u, v);
  const int uv = *plus.edge_index(u, v);
  GenericFramework f3(plus, 3, rng);
  std::vector<int> order;
  for (int e = 0; e < plus.num_edges(); ++e) {
    if (e != uv) order.push_back(e);
  }
  const std::vector<int> basis = f3.GreedyBasis(order);
  out.linked[3] = static_cast<int>(basis.size()) == f3.rank();
  if (!out.linked[3]) return out;

  const std::vector<int> circuit = f3.FundamentalCircuit(basis, uv);
  EdgeList rest;
  for (int e : circuit) {
    if (e != uv) rest.push_back(plus.edge(e));
  }
  std::vector<int> map;
  const Graph c = Compact(plus.num_vertices(), rest, &map);
  if (map[u] < 0 || map[v] < 0) return out;
  if (LocalConnectivity(c, map[u], map[v]) >= 3 && IsRConnected(c, 2, rng)) {
    out.verdict = LinkVerdict::kYes;
    out.reason = LinkReason::kR3CircuitRoute;
    for (int e : circuit) out.circuit.push_back(plus.edge(e));
  }
  return out;
}

}  // namespace rigidkit
