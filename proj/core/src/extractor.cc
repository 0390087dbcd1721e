#include "rigidkit/extractor.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rigidkit/connectivity.h"
#include "rigidkit/error.h"
#include "rigidkit/global_rigidity.h"
#include "rigidkit/transforms.h"

namespace rigidkit {
namespace {

// Subgraph of the input in original labels.
struct Work {
  std::vector<int> vertices;  // sorted
  EdgeList edges;             // sorted, original labels
};

Work FromGraph(const Graph& g) {
  Work w;
  w.vertices.resize(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) w.vertices[v] = v;
  w.edges = g.edges();
  return w;
}

int LocalId(const Work& w, int original) {
  return static_cast<int>(std::lower_bound(w.vertices.begin(), w.vertices.end(), original) -
                          w.vertices.begin());
}

Graph ToGraph(const Work& w) {
  EdgeList local;
  local.reserve(w.edges.size());
  for (const auto& e : w.edges) local.push_back({LocalId(w, e.u), LocalId(w, e.v)});
  return Graph(static_cast<int>(w.vertices.size()), std::move(local));
}

Work Apply(const Work& w, const ExtractionStep& step) {
  Work out;
  if (step.kind == ExtractionStep::Kind::kVertexDeletion) {
    for (int v : w.vertices) {
      if (v != step.vertex) out.vertices.push_back(v);
    }
    for (const auto& e : w.edges) {
      if (e.u != step.vertex && e.v != step.vertex) out.edges.push_back(e);
    }
    return out;
  }
  std::set<int> s(step.cut_vertices.begin(), step.cut_vertices.end());
  std::set<int> keep(step.side_vertices.begin(), step.side_vertices.end());
  keep.insert(s.begin(), s.end());
  std::set<Edge> f(step.cut_edges.begin(), step.cut_edges.end());
  out.vertices.assign(keep.begin(), keep.end());
  for (const auto& e : w.edges) {
    if (f.count(e) || !keep.count(e.u) || !keep.count(e.v)) continue;
    if (step.side == 2 && s.count(e.u) && s.count(e.v)) continue;
    out.edges.push_back(e);
  }
  return out;
}

ExtractionResult Finish(const Work& w, ExtractionTrace trace) {
  ExtractionResult r;
  r.graph = ToGraph(w);
  r.vertices = w.vertices;
  r.trace = std::move(trace);
  r.min_mixed_cut = r.graph.num_vertices() >= 2 ? MinMixedCut(r.graph).cost : 0;
  return r;
}

int EvenK(int k) { return k % 2 == 0 ? k : k + 1; }

// Vertices of a shortest cycle through some edge, or empty for a forest.
std::vector<int> FindCycle(const Graph& g) {
  for (const auto& e : g.edges()) {
    std::vector<int> parent(g.num_vertices(), -2);
    std::vector<int> queue{e.u};
    parent[e.u] = -1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int x = queue[head];
      for (int y : g.neighbors(x)) {
        if (x == e.u && y == e.v) continue;
        if (parent[y] != -2) continue;
        parent[y] = x;
        queue.push_back(y);
      }
    }
    if (parent[e.v] == -2) continue;
    std::vector<int> cycle;
    for (int x = e.v; x != -1; x = parent[x]) cycle.push_back(x);
    std::sort(cycle.begin(), cycle.end());
    return cycle;
  }
  return {};
}

// Vertices of a clique of the given size, or empty.
bool GrowClique(const Graph& g, std::vector<int>& clique, int size, int next) {
  if (static_cast<int>(clique.size()) == size) return true;
  for (int v = next; v < g.num_vertices(); ++v) {
    if (g.degree(v) < size - 1) continue;
    bool ok = true;
    for (int c : clique) ok = ok && g.has_edge(c, v);
    if (!ok) continue;
    clique.push_back(v);
    if (GrowClique(g, clique, size, v + 1)) return true;
    clique.pop_back();
  }
  return false;
}

// Vertices surviving repeated deletion of vertices of degree < k.
std::vector<int> Core(const Graph& g, int k) {
  std::vector<int> deg(g.num_vertices());
  std::vector<bool> alive(g.num_vertices(), true);
  std::vector<int> stack;
  for (int v = 0; v < g.num_vertices(); ++v) {
    deg[v] = g.degree(v);
    if (deg[v] < k) {
      alive[v] = false;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (alive[w] && --deg[w] < k) {
        alive[w] = false;
        stack.push_back(w);
      }
    }
  }
  std::vector<int> out;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (alive[v]) out.push_back(v);
  }
  return out;
}

}  // namespace

bool SatisfiesDensityHypothesis(long n, long m, int k) {
  return n >= k + 1 && 2 * m > static_cast<long>(k - 1) * (2 * n - k);
}

ExtractionResult MixedKConnectedSubgraph(const Graph& g, int requested_k) {
  if (requested_k < 1) throw std::invalid_argument("k must be >= 1");
  ExtractionTrace trace;
  trace.requested_k = requested_k;
  trace.k = EvenK(requested_k);
  trace.promoted = trace.k != requested_k;
  const int k = trace.k;
  const long n0 = g.num_vertices();
  const long m0 = g.num_edges();
  if (n0 < k + 1) {
    throw HypothesisNotSatisfied("|V| = " + std::to_string(n0) + " < k + 1 = " +
                                 std::to_string(k + 1) + " (k = " + std::to_string(k) + ")");
  }
  if (!SatisfiesDensityHypothesis(n0, m0, k)) {
    throw HypothesisNotSatisfied("2|E| = " + std::to_string(2 * m0) + " <= (k-1)(2|V|-k) = " +
                                 std::to_string(static_cast<long>(k - 1) * (2 * n0 - k)) +
                                 " (k = " + std::to_string(k) + ")");
  }

  Work w = FromGraph(g);
  for (;;) {
    const Graph h = ToGraph(w);
    const long n = h.num_vertices();
    const long m = h.num_edges();
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (best < 0 || h.degree(v) < h.degree(best)) best = v;
    }
    if (SatisfiesDensityHypothesis(n - 1, m - h.degree(best), k)) {
      ExtractionStep step;
      step.kind = ExtractionStep::Kind::kVertexDeletion;
      step.vertex = w.vertices[best];
      step.reason = h.degree(best) < k ? "degree" : "minimality";
      w = Apply(w, step);
      trace.steps.push_back(std::move(step));
      continue;
    }
    if (n == k + 1) break;
    const MixedCut cut = MinMixedCut(h);
    if (cut.cost >= k) break;

    // Components of H - S - F.
    std::set<int> in_s(cut.vertices.begin(), cut.vertices.end());
    std::set<Edge> in_f(cut.edges.begin(), cut.edges.end());
    EdgeList rest;
    for (const auto& e : h.edges()) {
      if (in_s.count(e.u) || in_s.count(e.v) || in_f.count(e)) continue;
      rest.push_back(e);
    }
    const std::vector<int> comp = ConnectedComponents(Graph(static_cast<int>(n), rest));
    int first = -1;
    for (int v = 0; v < n; ++v) {
      if (!in_s.count(v)) {
        first = v;
        break;
      }
    }
    ExtractionStep split[2];
    for (int side = 1; side <= 2; ++side) {
      ExtractionStep& s = split[side - 1];
      s.kind = ExtractionStep::Kind::kCutSplit;
      s.side = side;
      for (int v : cut.vertices) s.cut_vertices.push_back(w.vertices[v]);
      for (const auto& e : cut.edges) s.cut_edges.push_back({w.vertices[e.u], w.vertices[e.v]});
      for (int v = 0; v < n; ++v) {
        if (in_s.count(v)) continue;
        if ((comp[v] == comp[first]) == (side == 1)) s.side_vertices.push_back(w.vertices[v]);
      }
    }
    const Work w1 = Apply(w, split[0]);
    const Work w2 = Apply(w, split[1]);
    const bool ok1 = SatisfiesDensityHypothesis(w1.vertices.size(), w1.edges.size(), k);
    const bool ok2 = SatisfiesDensityHypothesis(w2.vertices.size(), w2.edges.size(), k);
    if (!ok1 && !ok2) throw std::logic_error("no side of the mixed cut keeps the density hypothesis");
    const bool pick2 = !ok1 || (ok2 && w2.vertices.size() < w1.vertices.size());
    trace.steps.push_back(split[pick2 ? 1 : 0]);
    w = pick2 ? w2 : w1;
  }
  ExtractionResult r = Finish(w, std::move(trace));
  if (r.min_mixed_cut < k) throw std::logic_error("extracted subgraph is not mixed k-connected");
  return r;
}

ExtractionResult ReplayTrace(const Graph& g, const ExtractionTrace& trace) {
  Work w = FromGraph(g);
  for (const auto& step : trace.steps) w = Apply(w, step);
  return Finish(w, trace);
}

std::optional<RigidSubgraphResult> GloballyRigidSubgraph2d(const Graph& g, Rng& rng) {
  const long n = g.num_vertices();
  const long m = g.num_edges();
  if (n < 7 || m < 5 * n - 14) return std::nullopt;
  RigidSubgraphResult r;
  r.extraction = MixedKConnectedSubgraph(g, 6);
  const Graph& h = r.extraction.graph;
  r.globally_rigid = IsGloballyRigid(h, 2, rng);
  r.redundantly_globally_rigid = r.globally_rigid && IsRedundantlyGloballyRigid(h, 2, rng);
  return r;
}

GrnEstimate EstimateGrn(const Graph& g, int d_max, Rng& rng) {
  if (d_max < 1) throw std::invalid_argument("d_max must be >= 1");
  GrnEstimate out;
  const long n = g.num_vertices();
  const long m = g.num_edges();
  if (n > 0) {
    long t = 0;
    while (6 * n * (t + 1) * (t + 1) <= m) ++t;
    out.conditional_bound = t;
  }
  auto certify = [&](int d, const std::vector<int>& vertices, const char* method) {
    if (static_cast<int>(vertices.size()) < d + 2) return false;
    Subgraph s = InducedSubgraph(g, vertices);
    if (!IsGloballyRigid(s.graph, d, rng)) return false;
    out.lower_bound = d;
    out.method = method;
    out.witness = std::move(s.graph);
    out.vertices = std::move(s.original);
    return true;
  };
  std::vector<int> all(n);
  for (int v = 0; v < n; ++v) all[v] = v;

  for (int d = d_max; d >= 1; --d) {
    if (certify(d, all, "whole-graph")) return out;
    std::vector<int> clique;
    if (d + 2 <= 10 && GrowClique(g, clique, d + 2, 0) && certify(d, clique, "clique")) return out;
    if (d == 1) {
      const auto cycle = FindCycle(g);
      if (!cycle.empty() && certify(1, cycle, "cycle")) return out;
    }
    if (d == 2) {
      if (auto r = GloballyRigidSubgraph2d(g, rng); r && r->globally_rigid) {
        if (certify(2, r->extraction.vertices, "mixed-6-connected")) return out;
      }
    }
    // High-degree cores, then descent by minimum degree.
    for (int k : {d * (d + 1) + 1, d + 1}) {
      std::vector<int> current = Core(g, k);
      while (static_cast<int>(current.size()) >= d + 2) {
        Subgraph s = InducedSubgraph(g, current);
        const auto comp = ConnectedComponents(s.graph);
        bool found = false;
        for (int c = 0; !found && c < NumComponents(s.graph); ++c) {
          std::vector<int> part;
          for (int v = 0; v < s.graph.num_vertices(); ++v) {
            if (comp[v] == c) part.push_back(s.original[v]);
          }
          found = certify(d, part, k == d + 1 ? "core-descent" : "connectivity-core");
        }
        if (found) return out;
        int worst = 0;
        for (int v = 1; v < s.graph.num_vertices(); ++v) {
          if (s.graph.degree(v) < s.graph.degree(worst)) worst = v;
        }
        current.erase(current.begin() + worst);
        Subgraph rest = InducedSubgraph(g, current);
        std::vector<int> core;
        for (int v : Core(rest.graph, d + 1)) core.push_back(rest.original[v]);
        current = std::move(core);
      }
    }
  }
  out.method = "none";
  return out;
}

}  // namespace rigidkit
