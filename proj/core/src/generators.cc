#include "rigidkit/generators.h"

#include <queue>
#include <stdexcept>

namespace rigidkit {
namespace {

void Require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

Graph Complete(int n) {
  Require(n >= 1, "complete(n) needs n >= 1");
  EdgeList e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  }
  return Graph(n, std::move(e));
}

Graph CompleteBipartite(int a, int b) {
  Require(a >= 1 && b >= 1, "complete_bipartite(a,b) needs a, b >= 1");
  EdgeList e;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) e.push_back({i, a + j});
  }
  return Graph(a + b, std::move(e));
}

Graph Cycle(int n) {
  Require(n >= 3, "cycle(n) needs n >= 3");
  EdgeList e;
  for (int i = 0; i < n; ++i) e.push_back(MakeEdge(i, (i + 1) % n));
  return Graph(n, std::move(e));
}

Graph Wheel(int n) {
  Require(n >= 3, "wheel(n) needs n >= 3 rim vertices");
  EdgeList e = Cycle(n).edges();
  for (int i = 0; i < n; ++i) e.push_back({i, n});
  return Graph(n + 1, std::move(e));
}

Graph Path(int n) {
  Require(n >= 1, "path(n) needs n >= 1");
  EdgeList e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, std::move(e));
}

Graph Icosahedron() {
  EdgeList e;
  for (int i = 0; i < 5; ++i) {
    const int upper = 1 + i;
    const int upper_next = 1 + (i + 1) % 5;
    const int lower = 6 + i;
    const int lower_next = 6 + (i + 1) % 5;
    e.push_back(MakeEdge(0, upper));
    e.push_back(MakeEdge(upper, upper_next));
    e.push_back(MakeEdge(upper, lower));
    e.push_back(MakeEdge(upper, lower_next));
    e.push_back(MakeEdge(lower, lower_next));
    e.push_back(MakeEdge(lower, 11));
  }
  return Graph(12, std::move(e));
}

Graph IcosahedronBraced() {
  const Graph ico = Icosahedron();
  const int n = ico.num_vertices();
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (const int y : ico.neighbors(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          q.push(y);
        }
      }
    }
    for (int t = s + 1; t < n; ++t) {
      if (dist[t] == 2) return ico.WithEdge(s, t);
    }
  }
  throw std::logic_error("icosahedron has no distance-2 pair");
}

Graph K4eChain(int l) {
  Require(l >= 1, "k4e_chain(l) needs l >= 1");
  EdgeList e;
  for (int i = 0; i < l; ++i) {
    const int a = 2 + 2 * i;
    const int b = a + 1;
    e.push_back({0, a});
    e.push_back({0, b});
    e.push_back({1, a});
    e.push_back({1, b});
    e.push_back({a, b});
  }
  return Graph(2 * l + 2, std::move(e));
}

std::vector<std::string> GeneratorFamilies() {
  return {"complete", "complete_bipartite", "cycle", "wheel", "path",
          "icosahedron", "icosahedron_braced", "k4e_chain"};
}

Graph Generate(const GeneratorSpec& spec) {
  const auto& f = spec.family;
  const auto& p = spec.params;
  auto arity = [&](std::size_t k) {
    Require(p.size() == k, f + " takes " + std::to_string(k) + " parameter(s), got " +
                               std::to_string(p.size()));
  };
  if (f == "complete") {
    arity(1);
    return Complete(p[0]);
  }
  if (f == "complete_bipartite") {
    arity(2);
    return CompleteBipartite(p[0], p[1]);
  }
  if (f == "cycle") {
    arity(1);
    return Cycle(p[0]);
  }
  if (f == "wheel") {
    arity(1);
    return Wheel(p[0]);
  }
  if (f == "path") {
    arity(1);
    return Path(p[0]);
  }
  if (f == "icosahedron") {
    arity(0);
    return Icosahedron();
  }
  if (f == "icosahedron_braced") {
    arity(0);
    return IcosahedronBraced();
  }
  if (f == "k4e_chain") {
    arity(1);
    return K4eChain(p[0]);
  }
  throw std::invalid_argument("unknown generator family '" + f + "'");
}

}  // namespace rigidkit
