#include "rigidkit/corpus.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "rigidkit/connectivity.h"

namespace rigidkit {
namespace {

int PairBit(int i, int j) {  // i < j, colex position
  return j * (j - 1) / 2 + i;
}

std::uint64_t BitFor(int i, int j) { return std::uint64_t{1} << (63 - PairBit(i, j)); }

// Ordered colour classes from iterated degree refinement.
std::vector<int> RefinedColors(int n, const std::vector<std::uint32_t>& adj) {
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = __builtin_popcount(adj[v]);
  int classes = -1;
  for (;;) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> nb;
      for (int w = 0; w < n; ++w) {
        if (adj[v] >> w & 1) nb.push_back(color[w]);
      }
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::map<std::vector<int>, int> ids;
    for (int v = 0; v < n; ++v) ids.emplace(sig[v], 0);
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (int v = 0; v < n; ++v) color[v] = ids[sig[v]];
    if (next == classes) break;
    classes = next;
  }
  return color;
}

struct CanonSearch {
  int n;
  const std::vector<std::uint32_t>* adj;
  std::vector<int> slot_class;  // class required at each position
  std::vector<int> vertex_class;
  std::vector<int> placed;      // position -> vertex
  std::vector<bool> used;
  std::uint64_t best = ~std::uint64_t{0};
  bool have_best = false;

  static std::uint64_t PrefixMask(int positions) {
    const int bits = positions * (positions - 1) / 2;
    if (bits == 0) return 0;
    return ~std::uint64_t{0} << (64 - bits);
  }

  void Search(int pos, std::uint64_t code) {
    if (pos == n) {
      if (!have_best || code < best) {
        best = code;
        have_best = true;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v] || vertex_class[v] != slot_class[pos]) continue;
      std::uint64_t next = code;
      for (int q = 0; q < pos; ++q) {
        if ((*adj)[placed[q]] >> v & 1) next |= BitFor(q, pos);
      }
      if (have_best) {
        const std::uint64_t mask = PrefixMask(pos + 1);
        if ((next & mask) > (best & mask)) continue;
      }
      used[v] = true;
      placed[pos] = v;
      Search(pos + 1, next);
      used[v] = false;
    }
  }
};

std::uint64_t CanonicalCodeFromAdjacency(int n, const std::vector<std::uint32_t>& adj) {
  CanonSearch s;
  s.n = n;
  s.adj = &adj;
  s.vertex_class = RefinedColors(n, adj);
  s.slot_class = s.vertex_class;
  std::sort(s.slot_class.begin(), s.slot_class.end());
  s.placed.assign(n, -1);
  s.used.assign(n, false);
  s.Search(0, 0);
  return s.best;
}

std::vector<std::uint32_t> AdjacencyOf(const Graph& g) {
  std::vector<std::uint32_t> adj(g.num_vertices(), 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= std::uint32_t{1} << e.v;
    adj[e.v] |= std::uint32_t{1} << e.u;
  }
  return adj;
}

std::vector<std::uint64_t> IsomorphismClasses(int n) {
  if (n <= 1) return {0};
  const auto smaller = IsomorphismClasses(n - 1);
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> out;
  for (const std::uint64_t code : smaller) {
    std::vector<std::uint32_t> adj(n, 0);
    for (int j = 1; j < n - 1; ++j) {
      for (int i = 0; i < j; ++i) {
        if (code & BitFor(i, j)) {
          adj[i] |= std::uint32_t{1} << j;
          adj[j] |= std::uint32_t{1} << i;
        }
      }
    }
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (n - 1)); ++mask) {
      std::vector<std::uint32_t> ext = adj;
      for (int i = 0; i < n - 1; ++i) {
        if (mask >> i & 1) {
          ext[i] |= std::uint32_t{1} << (n - 1);
          ext[n - 1] |= std::uint32_t{1} << i;
        }
      }
      const std::uint64_t canon = CanonicalCodeFromAdjacency(n, ext);
      if (seen.insert(canon).second) out.push_back(canon);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::uint64_t CanonicalCode(const Graph& g) {
  if (g.num_vertices() > kMaxCodeVertices) {
    throw std::invalid_argument("canonical code supports at most " +
                                std::to_string(kMaxCodeVertices) + " vertices");
  }
  return CanonicalCodeFromAdjacency(g.num_vertices(), AdjacencyOf(g));
}

Graph GraphFromCode(int n, std::uint64_t code) {
  EdgeList e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (code & BitFor(i, j)) e.push_back({i, j});
    }
  }
  return Graph(n, std::move(e));
}

bool AreIsomorphic(const Graph& a, const Graph& b) {
  return a.num_vertices() == b.num_vertices() && a.num_edges() == b.num_edges() &&
         CanonicalCode(a) == CanonicalCode(b);
}

void ForEachGraph(int n, bool isomorph_rejection,
                  const std::function<void(const Graph&)>& visit) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (isomorph_rejection) {
    if (n > 10) throw std::invalid_argument("isomorphism-class enumeration supports n <= 10");
    for (const std::uint64_t code : IsomorphismClasses(n)) visit(GraphFromCode(n, code));
    return;
  }
  if (n > 7) throw std::invalid_argument("labeled enumeration supports n <= 7");
  std::vector<Edge> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  }
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    EdgeList e;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (mask >> k & 1) e.push_back(pairs[k]);
    }
    visit(Graph(n, std::move(e)));
  }
}

std::vector<Graph> AllGraphs(int n, bool isomorph_rejection) {
  std::vector<Graph> out;
  ForEachGraph(n, isomorph_rejection, [&](const Graph& g) { out.push_back(g); });
  return out;
}

Graph RandomGraph(int n, double edge_probability, Rng& rng) {
  EdgeList e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.NextBernoulli(edge_probability)) e.push_back({i, j});
    }
  }
  return Graph(n, std::move(e));
}

Graph RandomGraphWithEdges(int n, int m, Rng& rng) {
  std::vector<Edge> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  }
  if (m < 0 || m > static_cast<int>(pairs.size())) {
    throw std::invalid_argument("RandomGraphWithEdges: m out of range");
  }
  for (int k = 0; k < m; ++k) {
    const auto pick = k + rng.NextBelow(pairs.size() - k);
    std::swap(pairs[k], pairs[pick]);
  }
  pairs.resize(m);
  return Graph(n, std::move(pairs));
}

void ValidateCorpus(const CorpusSpec& spec) {
  if (spec.kind == CorpusSpec::Kind::kExhaustive) {
    const int limit = spec.isomorph_rejection ? 10 : 7;
    if (spec.max_n < 1 || spec.max_n > limit) {
      throw std::invalid_argument("exhaustive corpus needs 1 <= max_n <= " + std::to_string(limit));
    }
    if (spec.min_n < 1 || spec.min_n > spec.max_n) {
      throw std::invalid_argument("exhaustive corpus needs 1 <= min_n <= max_n");
    }
    return;
  }
  if (spec.count < 0) throw std::invalid_argument("random corpus needs count >= 0");
  if (spec.n < 1 || spec.n > 64) throw std::invalid_argument("random corpus needs 1 <= n <= 64");
  if (!(spec.edge_probability >= 0.0 && spec.edge_probability <= 1.0)) {
    throw std::invalid_argument("random corpus needs edge probability in [0, 1]");
  }
}

void ForEachCorpusGraph(const CorpusSpec& spec,
                        const std::function<void(std::size_t, const Graph&)>& visit) {
  ValidateCorpus(spec);
  std::size_t index = 0;
  if (spec.kind == CorpusSpec::Kind::kExhaustive) {
    for (int n = spec.min_n; n <= spec.max_n; ++n) {
      ForEachGraph(n, spec.isomorph_rejection, [&](const Graph& g) {
        if (spec.connected_only && !IsConnected(g)) return;
        visit(index++, g);
      });
    }
    return;
  }
  for (int i = 0; i < spec.count; ++i) {
    Rng rng = Rng::Derive(spec.seed, static_cast<std::uint64_t>(i));
    const Graph g = RandomGraph(spec.n, spec.edge_probability, rng);
    if (spec.connected_only && !IsConnected(g)) continue;
    visit(index++, g);
  }
}

std::vector<Graph> BuildCorpus(const CorpusSpec& spec) {
  std::vector<Graph> out;
  ForEachCorpusGraph(spec, [&](std::size_t, const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace rigidkit
