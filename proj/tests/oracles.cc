#include "oracles.h"

#include <algorithm>
#include <numeric>
#include <random>

namespace oracle {

std::uint64_t MulMod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kP);
}
std::uint64_t AddMod(std::uint64_t a, std::uint64_t b) { return (a + b) % kP; }
std::uint64_t SubMod(std::uint64_t a, std::uint64_t b) { return (a + kP - b) % kP; }

static std::uint64_t PowMod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = MulMod(r, a);
    a = MulMod(a, a);
    e >>= 1;
  }
  return r;
}

int Rank(Matrix m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[r][c] % kP != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    const std::uint64_t inv = PowMod(m[rank][c] % kP, kP - 2);
    for (int r = rank + 1; r < rows; ++r) {
      const std::uint64_t f = MulMod(m[r][c] % kP, inv);
      if (f == 0) continue;
      for (int k = c; k < cols; ++k) m[r][k] = SubMod(m[r][k] % kP, MulMod(f, m[rank][k] % kP));
    }
    ++rank;
  }
  return rank;
}

Matrix RigidityMatrix(const Graph& g, int d, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<std::vector<std::uint64_t>> p(g.num_vertices(), std::vector<std::uint64_t>(d));
  for (auto& pt : p) {
    for (auto& x : pt) x = gen() % kP;
  }
  Matrix m(g.num_edges(), std::vector<std::uint64_t>(d * g.num_vertices(), 0));
  for (int i = 0; i < g.num_edges(); ++i) {
    const Edge e = g.edge(i);
    for (int k = 0; k < d; ++k) {
      m[i][e.u * d + k] = SubMod(p[e.u][k], p[e.v][k]);
      m[i][e.v * d + k] = SubMod(p[e.v][k], p[e.u][k]);
    }
  }
  return m;
}

int RigidityRank(const Graph& g, int d, std::uint64_t seed) {
  int best = 0;
  for (int t = 0; t < 2; ++t) best = std::max(best, Rank(RigidityMatrix(g, d, seed + 7919 * t)));
  return best;
}

int RigidityRankOfEdges(const Graph& g, const std::vector<int>& edges, int d, std::uint64_t seed) {
  const Matrix full = RigidityMatrix(g, d, seed);
  Matrix sub;
  for (int e : edges) sub.push_back(full[e]);
  return Rank(sub);
}

bool IsConnected(const Graph& g, const std::vector<bool>& removed) {
  const int n = g.num_vertices();
  int start = -1, alive = 0;
  for (int v = 0; v < n; ++v) {
    if (removed.empty() || !removed[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  }
  if (alive <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{start};
  seen[start] = true;
  int count = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : g.neighbors(x)) {
      if (seen[y] || (!removed.empty() && removed[y])) continue;
      seen[y] = true;
      ++count;
      stack.push_back(y);
    }
  }
  return count == alive;
}

int VertexConnectivity(const Graph& g) {
  const int n = g.num_vertices();
  if (g.is_complete()) return n - 1;
  int best = n - 1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size >= best || n - size < 2) continue;
    std::vector<bool> removed(n);
    for (int v = 0; v < n; ++v) removed[v] = mask >> v & 1;
    if (!IsConnected(g, removed)) best = size;
  }
  return best;
}

static bool Separated(const Graph& g, int u, int v, const std::vector<bool>& removed) {
  std::vector<bool> seen(g.num_vertices(), false);
  std::vector<int> stack{u};
  seen[u] = true;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : g.neighbors(x)) {
      if (x == u && y == v) continue;  // ignore a direct edge
      if (seen[y] || removed[y]) continue;
      if (y == v) return false;
      seen[y] = true;
      stack.push_back(y);
    }
  }
  return true;
}

int LocalConnectivity(const Graph& g, int u, int v) {
  const int n = g.num_vertices();
  int best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if ((mask >> u & 1) || (mask >> v & 1)) continue;
    const int size = __builtin_popcount(mask);
    if (size >= best) continue;
    std::vector<bool> removed(n);
    for (int x = 0; x < n; ++x) removed[x] = mask >> x & 1;
    if (Separated(g, u, v, removed)) best = size;
  }
  return best + (g.has_edge(u, v) ? 1 : 0);
}

int MinMixedCutCost(const Graph& g) {
  const int n = g.num_vertices();
  if (n < 2) return -1;
  int best = -1;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    std::vector<int> rest;
    for (int v = 0; v < n; ++v) {
      if (!(s >> v & 1)) rest.push_back(v);
    }
    const int r = static_cast<int>(rest.size());
    if (r < 2) continue;
    const int base = 2 * __builtin_popcount(s);
    if (best >= 0 && base >= best) continue;
    // Fix rest[0] on side A; enumerate the others.
    for (std::uint32_t side = 0; side < (1u << (r - 1)); ++side) {
      if (side == (1u << (r - 1)) - 1) continue;  // side B empty
      std::vector<int> in_a(n, -1);
      in_a[rest[0]] = 1;
      for (int i = 1; i < r; ++i) in_a[rest[i]] = side >> (i - 1) & 1;
      int crossing = 0;
      for (const auto& e : g.edges()) {
        if (in_a[e.u] >= 0 && in_a[e.v] >= 0 && in_a[e.u] != in_a[e.v]) ++crossing;
      }
      const int cost = base + crossing;
      if (best < 0 || cost < best) best = cost;
    }
  }
  return best;
}

std::vector<std::vector<int>> Circuits(const Graph& g, int d, std::uint64_t seed) {
  const int m = g.num_edges();
  const Matrix full = RigidityMatrix(g, d, seed);
  std::vector<std::uint32_t> dependent_minimal;
  std::vector<std::uint32_t> order(1u << m);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
    return __builtin_popcount(a) < __builtin_popcount(b);
  });
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask : order) {
    if (mask == 0) continue;
    bool contains = false;
    for (std::uint32_t c : dependent_minimal) {
      if ((c & mask) == c) {
        contains = true;
        break;
      }
    }
    if (contains) continue;
    Matrix sub;
    std::vector<int> edges;
    for (int e = 0; e < m; ++e) {
      if (mask >> e & 1) {
        sub.push_back(full[e]);
        edges.push_back(e);
      }
    }
    if (Rank(sub) < static_cast<int>(edges.size())) {
      dependent_minimal.push_back(mask);
      out.push_back(edges);
    }
  }
  return out;
}

std::vector<std::vector<int>> ComponentsFromCircuits(int m, const std::vector<std::vector<int>>& circuits) {
  std::vector<int> label(m);
  std::iota(label.begin(), label.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& c : circuits) {
      int low = m;
      for (int e : c) low = std::min(low, label[e]);
      for (int e : c) {
        if (label[e] != low) {
          label[e] = low;
          changed = true;
        }
      }
    }
  }
  std::vector<std::vector<int>> groups(m);
  for (int e = 0; e < m; ++e) groups[label[e]].push_back(e);
  std::vector<std::vector<int>> out;
  for (auto& g : groups) {
    if (!g.empty()) out.push_back(g);
  }
  return out;
}

bool Isomorphic(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  std::vector<int> perm(a.num_vertices());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const auto& e : a.edges()) {
      if (!b.has_edge(perm[e.u], perm[e.v])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace oracle
