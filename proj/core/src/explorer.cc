#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

#include "rigidkit/connectivity.h"
#include "rigidkit/global_rigidity.h"
#include "rigidkit/linked_pairs.h"
#include "rigidkit/rigidity.h"

namespace rigidkit {
namespace {

int WorkerCount(int requested) {
  int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("RIGIDKIT_THREADS")) {
    const int limit = std::atoi(cap);
    if (limit > 0) n = std::min(n, limit);
  }
  return std::max(n, 1);
}

void AddCandidate(ExplorerReport* r, std::size_t index, const Graph& g, bool has_item, Edge item,
                  std::string detail) {
  ConjectureCandidate c;
  c.graph_index = index;
  c.graph = g;
  c.has_item = has_item;
  c.item = item;
  c.detail = std::move(detail);
  r->candidates.push_back(std::move(c));
}

void ExploreLinked(int d, std::size_t index, const Graph& g, Rng& rng, ExplorerReport* r) {
  const int n = g.num_vertices();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      if (!IsLinked(g, u, v, d + 1, rng)) continue;
      ++r->instances;
      if (d == 1) {
        if (IsGloballyLinked1d(g, u, v)) {
          ++r->confirmed;
        } else {
          AddCandidate(r, index, g, true, {u, v},
                       "linked in R_2 but kappa(u,v) = " + std::to_string(LocalConnectivity(g, u, v)));
        }
      } else if (d == 2) {
        const PairVerdict pv = IsGloballyLinked2d(g, u, v, rng);
        if (pv.verdict == LinkVerdict::kYes) {
          ++r->confirmed;
        } else if (pv.verdict == LinkVerdict::kNo) {
          AddCandidate(r, index, g, true, {u, v},
                       std::string("linked in R_3 but globally linked verdict no (") +
                           ReasonName(pv.reason) + ", kappa " + std::to_string(pv.kappa) + ")");
        } else {
          ++r->unknown;
        }
      } else {
        ++r->unknown;
      }
    }
  }
}

void ExploreRedundant(int d, std::size_t index, const Graph& g, Rng& rng, ExplorerReport* r) {
  if (!IsRConnected(g, d + 1, rng)) return;
  ++r->instances;
  if (IsRedundantlyRConnected(g, d, rng)) {
    ++r->confirmed;
    return;
  }
  std::string detail = "R_" + std::to_string(d + 1) + "-connected but not redundantly R_" +
                       std::to_string(d) + "-connected";
  for (int e = 0; e < g.num_edges(); ++e) {
    if (!IsRConnected(g.WithoutEdgeAt(e), d, rng)) {
      AddCandidate(r, index, g, true, g.edge(e), detail + "; G - e is not R_d-connected");
      return;
    }
  }
  AddCandidate(r, index, g, false, {}, detail);
}

void ExploreBridge(int d, std::size_t index, const Graph& g, Rng& rng, ExplorerReport* r) {
  if (!IsGloballyRigid(g, d, rng)) return;
  std::vector<int> bridges;
  bool have_bridges = false;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (IsGloballyRigid(g.WithoutEdgeAt(e), d, rng)) continue;
    ++r->instances;
    if (!have_bridges) {
      bridges = GenericFramework(g, d + 1, rng).Bridges();
      have_bridges = true;
    }
    if (std::binary_search(bridges.begin(), bridges.end(), e)) {
      ++r->confirmed;
    } else {
      AddCandidate(r, index, g, true, g.edge(e),
                   "G - e not globally rigid but e is not an R_" + std::to_string(d + 1) + "-bridge");
    }
  }
}

}  // namespace

const char* ConjectureName(ConjectureKind kind) {
  switch (kind) {
    case ConjectureKind::kLinkedGloballyLinked:
      return "linked-gl";
    case ConjectureKind::kRedundantlyConnected:
      return "redundant-mc";
    case ConjectureKind::kBridge:
      return "bridge";
  }
  return "?";
}

ConjectureKind ParseConjecture(const std::string& name) {
  if (name == "linked-gl") return ConjectureKind::kLinkedGloballyLinked;
  if (name == "redundant-mc") return ConjectureKind::kRedundantlyConnected;
  if (name == "bridge") return ConjectureKind::kBridge;
  throw std::invalid_argument("unknown conjecture '" + name + "'");
}

void ExplorerReport::Merge(const ExplorerReport& other) {
  graphs += other.graphs;
  instances += other.instances;
  confirmed += other.confirmed;
  unknown += other.unknown;
  candidates.insert(candidates.end(), other.candidates.begin(), other.candidates.end());
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const ConjectureCandidate& a, const ConjectureCandidate& b) {
                     return a.graph_index < b.graph_index;
                   });
}

ExplorerReport ExploreGraph(ConjectureKind kind, int d, std::size_t graph_index, const Graph& g,
                            Rng& rng) {
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  ExplorerReport r;
  r.kind = kind;
  r.d = d;
  r.graphs = 1;
  switch (kind) {
    case ConjectureKind::kLinkedGloballyLinked:
      ExploreLinked(d, graph_index, g, rng, &r);
      break;
    case ConjectureKind::kRedundantlyConnected:
      ExploreRedundant(d, graph_index, g, rng, &r);
      break;
    case ConjectureKind::kBridge:
      ExploreBridge(d, graph_index, g, rng, &r);
      break;
  }
  return r;
}

ExplorerReport ExploreConjecture(const ExplorerOptions& options) {
  if (options.d < 1) throw std::invalid_argument("dimension must be >= 1");
  ValidateCorpus(options.corpus);
  ExplorerReport total;
  total.kind = options.kind;
  total.d = options.d;
  const int workers = WorkerCount(options.threads);

  constexpr std::size_t kBatch = 2048;
  std::vector<std::pair<std::size_t, Graph>> batch;
  auto flush = [&] {
    if (batch.empty()) return;
    const int w = std::min<int>(workers, static_cast<int>(batch.size()));
    std::vector<ExplorerReport> parts(w);
    auto work = [&](int worker) {
      for (std::size_t i = worker; i < batch.size(); i += w) {
        Rng rng = Rng::Derive(options.seed, batch[i].first);
        parts[worker].Merge(ExploreGraph(options.kind, options.d, batch[i].first, batch[i].second, rng));
      }
    };
    if (w == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int i = 0; i < w; ++i) pool.emplace_back(work, i);
      for (auto& t : pool) t.join();
    }
    for (const auto& p : parts) total.Merge(p);
    batch.clear();
  };
  ForEachCorpusGraph(options.corpus, [&](std::size_t index, const Graph& g) {
    batch.emplace_back(index, g);
    if (batch.size() >= kBatch) flush();
  });
  flush();
  return total;
}

}  // namespace rigidkit
