#include "rigidkit/rigidity.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rigidkit {
namespace {

// Union-find with path halving.
class Forest {
 public:
  explicit Forest(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

void CheckDimension(int d) {
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
}

}  // namespace

long Binomial(int n, int k) {
  if (k < 0 || n < k) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long RigidRank(int n, int d) {
  if (n <= d + 1) return Binomial(n, 2);
  return static_cast<long>(d) * n - Binomial(d + 1, 2);
}

Realization SampleRealization(const Graph& g, int d, Rng& rng) {
  CheckDimension(d);
  Realization p;
  p.d = d;
  Rng stream = rng.Split();
  p.seed = stream.seed();
  p.coords.resize(g.num_vertices());
  for (auto& c : p.coords) {
    c.resize(d);
    for (auto& x : c) x = stream.NextField();
  }
  return p;
}

FieldMatrix BuildRigidityMatrix(const Graph& g, const Realization& p) {
  const int d = p.d;
  if (d < 1 || static_cast<int>(p.coords.size()) != g.num_vertices()) {
    throw std::invalid_argument("realization does not match the graph");
  }
  for (const auto& c : p.coords) {
    if (static_cast<int>(c.size()) != d) {
      throw std::invalid_argument("realization has a point of the wrong dimension");
    }
  }
  FieldMatrix r(g.num_edges(), d * g.num_vertices());
  for (int i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edge(i);
    for (int k = 0; k < d; ++k) {
      const FieldElement diff = p.coords[e.u][k] - p.coords[e.v][k];
      r(i, e.u * d + k) = diff;
      r(i, e.v * d + k) = -diff;
    }
  }
  return r;
}

GenericFramework::GenericFramework(const Graph& g, int d, Rng& rng, int trials)
    : graph_(g), d_(d) {
  CheckDimension(d);
  const long cap = std::min<long>(g.num_edges(), RigidRank(g.num_vertices(), d));
  bool have = false;
  for (int t = 0; t < std::max(trials, 1); ++t) {
    Realization p = SampleRealization(g, d, rng);
    FieldMatrix m = BuildRigidityMatrix(g, p);
    const int r = Rank(m);
    if (!have || r > rank_) {
      realization_ = std::move(p);
      matrix_ = std::move(m);
      rank_ = r;
      have = true;
    }
    if (rank_ >= cap) break;
  }
}

bool GenericFramework::IsRigid() const {
  const int n = graph_.num_vertices();
  if (n <= d_ + 1) return graph_.is_complete();
  return rank_ == RigidRank(n, d_);
}

int GenericFramework::RankOf(std::span<const int> edge_indices) const {
  if (edge_indices.empty()) return 0;
  return Rank(matrix_.SelectRows(edge_indices));
}

bool GenericFramework::IsIndependentSet(std::span<const int> edge_indices) const {
  return RankOf(edge_indices) == static_cast<int>(edge_indices.size());
}

const std::vector<int>& GenericFramework::Basis() const {
  if (!basis_ready_) {
    std::vector<int> order(matrix_.rows());
    std::iota(order.begin(), order.end(), 0);
    basis_ = GreedyBasis(order);
    basis_ready_ = true;
  }
  return basis_;
}

std::vector<int> GenericFramework::GreedyBasis(std::span<const int> order) const {
  std::vector<int> basis;
  // Incremental elimination: keep reduced rows with their pivot columns.
  std::vector<FieldVector> reduced;
  std::vector<int> pivot;
  for (int i : order) {
    if (i < 0 || i >= matrix_.rows()) throw std::invalid_argument("edge index out of range");
    auto src = matrix_.row(i);
    FieldVector row(src.begin(), src.end());
    for (std::size_t k = 0; k < reduced.size(); ++k) {
      const FieldElement f = row[pivot[k]];
      if (f.IsZero()) continue;
      for (int c = 0; c < matrix_.cols(); ++c) row[c] -= f * reduced[k][c];
    }
    int lead = -1;
    for (int c = 0; c < matrix_.cols(); ++c) {
      if (!row[c].IsZero()) {
        lead = c;
        break;
      }
    }
    if (lead < 0) continue;
    const FieldElement inv = row[lead].Inverse();
    for (auto& x : row) x *= inv;
    // Keep earlier rows reduced at the new pivot so each pivot column is a
    // unit column among stored rows.
    for (auto& other : reduced) {
      const FieldElement f = other[lead];
      if (f.IsZero()) continue;
      for (int c = 0; c < matrix_.cols(); ++c) other[c] -= f * row[c];
    }
    reduced.push_back(std::move(row));
    pivot.push_back(lead);
    basis.push_back(i);
  }
  return basis;
}

const std::vector<FieldVector>& GenericFramework::Cokernel() const {
  if (!cokernel_ready_) {
    if (matrix_.rows() > 0) cokernel_ = NullspaceBasis(matrix_, KernelSide::kRow);
    cokernel_ready_ = true;
  }
  return cokernel_;
}

std::vector<int> GenericFramework::Bridges() const {
  const auto& stresses = Cokernel();
  std::vector<int> out;
  for (int e = 0; e < graph_.num_edges(); ++e) {
    bool supported = false;
    for (const auto& w : stresses) {
      if (!w[e].IsZero()) {
        supported = true;
        break;
      }
    }
    if (!supported) out.push_back(e);
  }
  return out;
}

std::vector<int> GenericFramework::FundamentalCircuit(std::span<const int> basis, int e) const {
  if (e < 0 || e >= graph_.num_edges()) throw std::invalid_argument("edge index out of range");
  if (std::find(basis.begin(), basis.end(), e) != basis.end()) {
    throw std::invalid_argument("edge belongs to the basis");
  }
  if (static_cast<int>(basis.size()) != rank_ || !IsIndependentSet(basis)) {
    throw std::invalid_argument("edge set is not a basis");
  }
  std::vector<int> out{e};
  std::vector<int> trial(basis.begin(), basis.end());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    trial[k] = e;
    if (IsIndependentSet(trial)) out.push_back(basis[k]);
    trial[k] = basis[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> GenericFramework::Components() const {
  const int m = graph_.num_edges();
  Forest forest(m);
  const auto& basis = Basis();
  std::vector<bool> in_basis(m, false);
  for (int b : basis) in_basis[b] = true;
  for (int e = 0; e < m; ++e) {
    if (in_basis[e]) continue;
    const auto circuit = FundamentalCircuit(basis, e);
    for (int f : circuit) forest.Union(e, f);
  }
  std::vector<std::vector<int>> groups(m);
  for (int e = 0; e < m; ++e) groups[forest.Find(e)].push_back(e);
  std::vector<std::vector<int>> out;
  for (auto& g : groups) {
    if (!g.empty()) out.push_back(std::move(g));
  }
  return out;
}

int GenericRank(const Graph& g, int d, Rng& rng) { return GenericFramework(g, d, rng).rank(); }

bool IsRigid(const Graph& g, int d, Rng& rng) {
  CheckDimension(d);
  if (g.num_vertices() <= d + 1) return g.is_complete();
  return GenericFramework(g, d, rng).IsRigid();
}

bool IsRedundantlyRigid(const Graph& g, int d, Rng& rng) {
  CheckDimension(d);
  GenericFramework f(g, d, rng);
  return f.IsRigid() && f.Bridges().empty();
}

bool IsVertexRedundantlyRigid(const Graph& g, int d, Rng& rng) {
  if (g.num_vertices() < 2) throw std::invalid_argument("needs at least two vertices");
  for (int v = 0; v < g.num_vertices(); ++v) {
    EdgeList kept;
    for (const auto& e : g.edges()) {
      if (e.u == v || e.v == v) continue;
      kept.push_back({e.u > v ? e.u - 1 : e.u, e.v > v ? e.v - 1 : e.v});
    }
    if (!IsRigid(Graph(g.num_vertices() - 1, std::move(kept)), d, rng)) return false;
  }
  return true;
}

bool IsIndependent(const Graph& g, int d, Rng& rng) {
  return GenericRank(g, d, rng) == g.num_edges();
}

bool IsCircuit(const Graph& g, int d, Rng& rng) {
  GenericFramework f(g, d, rng);
  return g.num_edges() >= 1 && f.rank() == g.num_edges() - 1 && f.Bridges().empty();
}

std::vector<int> Bridges(const Graph& g, int d, Rng& rng) {
  return GenericFramework(g, d, rng).Bridges();
}

std::vector<int> RigidBasis(const Graph& g, int d, Rng& rng) {
  return GenericFramework(g, d, rng).Basis();
}

std::vector<int> FundamentalCircuit(const Graph& g, int d, std::span<const int> basis, int e,
                                    Rng& rng) {
  return GenericFramework(g, d, rng).FundamentalCircuit(basis, e);
}

std::vector<std::vector<int>> MatroidComponents(const Graph& g, int d, Rng& rng) {
  return GenericFramework(g, d, rng).Components();
}

bool IsRConnected(const GenericFramework& f) {
  if (f.graph().num_edges() < 2) return false;
  if (f.rank() == f.graph().num_edges()) return false;
  if (!f.Bridges().empty()) return false;
  return f.Components().size() == 1;
}

bool IsRConnected(const Graph& g, int d, Rng& rng) {
  CheckDimension(d);
  if (g.num_edges() < 2) return false;
  return IsRConnected(GenericFramework(g, d, rng));
}

bool IsRedundantlyRConnected(const Graph& g, int d, Rng& rng) {
  CheckDimension(d);
  if (!IsRConnected(g, d, rng)) return false;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (!IsRConnected(g.WithoutEdgeAt(e), d, rng)) return false;
  }
  return true;
}

MatroidReport AnalyzeMatroid(const Graph& g, int d, Rng& rng) {
  GenericFramework f(g, d, rng);
  MatroidReport r;
  r.d = d;
  r.rank = f.rank();
  r.independent = f.rank() == g.num_edges();
  r.bridges = f.Bridges();
  r.circuit = g.num_edges() >= 1 && f.rank() == g.num_edges() - 1 && r.bridges.empty();
  r.basis = f.Basis();
  r.components = f.Components();
  r.connected = g.num_edges() >= 2 && r.components.size() == 1;
  return r;
}

}  // namespace rigidkit
