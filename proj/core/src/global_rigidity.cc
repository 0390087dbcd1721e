#include "rigidkit/global_rigidity.h"

#include <algorithm>
#include <stdexcept>

#include "rigidkit/connectivity.h"
#include "rigidkit/error.h"
#include "rigidkit/transforms.h"

namespace rigidkit {
namespace {

GlobalRigidityCertificate StressPath(const Graph& g, int d, Rng& rng) {
  GlobalRigidityCertificate cert;
  cert.path = "stress";
  const int n = g.num_vertices();
  cert.target_rank = n - d - 1;
  GenericFramework f(g, d, rng);
  cert.seed = f.realization().seed;
  cert.rigid = f.IsRigid();
  if (!cert.rigid) return cert;
  const std::vector<Stress> stresses = StressBasis(f);
  if (stresses.empty()) {
    cert.stress_rank = 0;
    return cert;
  }
  std::vector<FieldMatrix> mats;
  mats.reserve(stresses.size());
  for (const auto& s : stresses) mats.push_back(BuildStressMatrix(g, s));
  for (int t = 0; t < kTrials; ++t) {
    const Combination c = RandomCombination(mats, rng);
    const int r = Rank(c.sum);
    cert.stress_rank = std::max(cert.stress_rank, r);
    if (r >= cert.target_rank) {
      cert.globally_rigid = true;
      break;
    }
  }
  return cert;
}

}  // namespace

std::vector<int> Stress::Support() const {
  std::vector<int> out;
  for (int e = 0; e < static_cast<int>(omega.size()); ++e) {
    if (!omega[e].IsZero()) out.push_back(e);
  }
  return out;
}

std::vector<Stress> StressBasis(const Graph& g, const Realization& p, std::span<const int> basis) {
  const FieldMatrix r = BuildRigidityMatrix(g, p);
  const int m = g.num_edges();
  std::vector<bool> in_basis(m, false);
  for (int b : basis) {
    if (b < 0 || b >= m) throw std::invalid_argument("basis edge index out of range");
    if (in_basis[b]) throw std::invalid_argument("basis lists an edge twice");
    in_basis[b] = true;
  }
  std::vector<int> rows(basis.begin(), basis.end());
  if (Rank(r.SelectRows(rows)) != static_cast<int>(rows.size()) ||
      (m > 0 && Rank(r) != static_cast<int>(rows.size()))) {
    throw NonGenericRealization("edge set is not a basis of the rigidity matrix at this realization");
  }
  std::vector<Stress> out;
  rows.push_back(-1);
  for (int e = 0; e < m; ++e) {
    if (in_basis[e]) continue;
    rows.back() = e;
    const auto kernel = NullspaceBasis(r.SelectRows(rows), KernelSide::kRow);
    if (kernel.size() != 1 || kernel[0].back().IsZero()) {
      throw NonGenericRealization("fundamental stress is not unique");
    }
    const FieldElement scale = kernel[0].back().Inverse();
    Stress s;
    s.omega.assign(m, FieldElement());
    for (std::size_t k = 0; k < rows.size(); ++k) s.omega[rows[k]] = kernel[0][k] * scale;
    for (const auto& x : r.ApplyTransposed(s.omega)) {
      if (!x.IsZero()) throw std::logic_error("stress fails the equilibrium check");
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Stress> StressBasis(const GenericFramework& f) {
  return StressBasis(f.graph(), f.realization(), f.Basis());
}

FieldMatrix BuildStressMatrix(const Graph& g, const Stress& stress) {
  if (static_cast<int>(stress.omega.size()) != g.num_edges()) {
    throw std::invalid_argument("stress length does not match the edge count");
  }
  const int n = g.num_vertices();
  FieldMatrix m(n, n);
  for (int i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edge(i);
    const FieldElement w = stress.omega[i];
    m(e.u, e.v) -= w;
    m(e.v, e.u) -= w;
    m(e.u, e.u) += w;
    m(e.v, e.v) += w;
  }
  return m;
}

const char* MethodName(GlobalRigidityMethod method) {
  switch (method) {
    case GlobalRigidityMethod::kAuto:
      return "auto";
    case GlobalRigidityMethod::kStress:
      return "stress";
    case GlobalRigidityMethod::kCombinatorial:
      return "combinatorial";
  }
  return "?";
}

GlobalRigidityMethod ParseMethod(const std::string& name) {
  if (name == "auto") return GlobalRigidityMethod::kAuto;
  if (name == "stress") return GlobalRigidityMethod::kStress;
  if (name == "combinatorial") return GlobalRigidityMethod::kCombinatorial;
  throw std::invalid_argument("unknown method '" + name + "'");
}

GlobalRigidityCertificate CheckGlobalRigidity(const Graph& g, int d, Rng& rng,
                                              GlobalRigidityMethod method) {
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  const int n = g.num_vertices();
  GlobalRigidityCertificate cert;
  if (n <= d + 1) {
    cert.path = "small-complete";
    cert.globally_rigid = cert.rigid = g.is_complete();
    return cert;
  }
  if (method != GlobalRigidityMethod::kStress && d == 1) {
    cert.path = "two-connected";
    cert.rigid = IsConnected(g);
    cert.globally_rigid = IsKConnected(g, 2);
    return cert;
  }
  if (method != GlobalRigidityMethod::kStress && d == 2) {
    cert.path = "three-connected-redundantly-rigid";
    GenericFramework f(g, 2, rng);
    cert.seed = f.realization().seed;
    cert.rigid = f.IsRigid();
    cert.globally_rigid = cert.rigid && IsKConnected(g, 3) && f.Bridges().empty();
    return cert;
  }
  return StressPath(g, d, rng);
}

bool IsGloballyRigid(const Graph& g, int d, Rng& rng, GlobalRigidityMethod method) {
  return CheckGlobalRigidity(g, d, rng, method).globally_rigid;
}

bool IsMinimallyGloballyRigid(const Graph& g, int d, Rng& rng, GlobalRigidityMethod method) {
  if (!IsGloballyRigid(g, d, rng, method)) return false;
  const std::uint64_t base = rng.NextU64();
  for (int e = 0; e < g.num_edges(); ++e) {
    Rng er = Rng::Derive(base, e);
    if (IsGloballyRigid(g.WithoutEdgeAt(e), d, er, method)) return false;
  }
  return true;
}

bool IsRedundantlyGloballyRigid(const Graph& g, int d, Rng& rng, GlobalRigidityMethod method) {
  const std::uint64_t base = rng.NextU64();
  for (int e = 0; e < g.num_edges(); ++e) {
    Rng er = Rng::Derive(base, e);
    if (!IsGloballyRigid(g.WithoutEdgeAt(e), d, er, method)) return false;
  }
  return true;
}

bool IsGloballyKDRigid(const Graph& g, int k, int d, Rng& rng, GlobalRigidityMethod method) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const int n = g.num_vertices();
  const int max_size = std::min(k - 1, n);
  for (int size = 0; size <= max_size; ++size) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    for (;;) {
      if (!IsGloballyRigid(RemoveVertices(g, pick).graph, d, rng, method)) return false;
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return true;
}

SubsetReduction SubsetRankReduce(std::span<const FieldMatrix> mats, int r, Rng& rng) {
  SubsetReduction out;
  if (r <= 0) return out;
  if (mats.empty()) throw RankNotAchievable("no matrices to combine");
  auto attempt = [&](const std::vector<int>& indices, SubsetReduction* witness) {
    std::vector<FieldMatrix> chosen;
    chosen.reserve(indices.size());
    for (int i : indices) chosen.push_back(mats[i]);
    for (int t = 0; t < kTrials; ++t) {
      Combination c = RandomCombination(chosen, rng);
      const int rank = Rank(c.sum);
      if (rank >= r) {
        witness->indices = indices;
        witness->coefficients = std::move(c.coefficients);
        witness->rank = rank;
        return true;
      }
    }
    return false;
  };
  std::vector<int> current(mats.size());
  for (std::size_t i = 0; i < mats.size(); ++i) current[i] = static_cast<int>(i);
  if (!attempt(current, &out)) {
    throw RankNotAchievable("no random combination reaches rank " + std::to_string(r));
  }
  if (r >= static_cast<int>(mats.size())) return out;
  for (std::size_t i = 0; i < mats.size(); ++i) {
    std::vector<int> candidate;
    for (int j : current) {
      if (j != static_cast<int>(i)) candidate.push_back(j);
    }
    if (candidate.size() == current.size() || candidate.empty()) continue;
    SubsetReduction w;
    if (attempt(candidate, &w)) {
      current = std::move(candidate);
      out = std::move(w);
    }
  }
  return out;
}

long SparsifyBound(int n, int d) {
  return static_cast<long>(d + 1) * n - Binomial(d + 2, 2);
}

SparsifyResult SparsifyGloballyRigid(const Graph& g, int d, Rng& rng, GlobalRigidityMethod method) {
  const int n = g.num_vertices();
  if (n < d + 2) throw std::invalid_argument("sparsification needs at least d + 2 vertices");
  if (!IsGloballyRigid(g, d, rng, method)) {
    throw NotGloballyRigid("input graph is not globally rigid in dimension " + std::to_string(d));
  }
  constexpr int kAttempts = 8;
  const std::uint64_t base = rng.NextU64();
  SparsifyResult res;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Rng ar = Rng::Derive(base, attempt);
    GenericFramework f(g, d, ar);
    if (!f.IsRigid()) {
      ++res.randomized_faults;
      continue;
    }
    std::vector<int> basis = f.Basis();
    std::vector<int> non_basis;
    {
      std::vector<bool> in_basis(g.num_edges(), false);
      for (int b : basis) in_basis[b] = true;
      for (int e = 0; e < g.num_edges(); ++e) {
        if (!in_basis[e]) non_basis.push_back(e);
      }
    }
    std::vector<FieldMatrix> mats;
    try {
      for (const auto& s : StressBasis(f)) mats.push_back(BuildStressMatrix(g, s));
    } catch (const NonGenericRealization&) {
      ++res.randomized_faults;
      continue;
    }
    SubsetReduction reduced;
    try {
      reduced = SubsetRankReduce(mats, n - d - 1, ar);
    } catch (const RankNotAchievable&) {
      ++res.randomized_faults;
      continue;
    }
    std::vector<int> extra;
    for (int i : reduced.indices) extra.push_back(non_basis[i]);
    std::vector<int> kept = basis;
    kept.insert(kept.end(), extra.begin(), extra.end());
    std::sort(kept.begin(), kept.end());
    if (!IsGloballyRigid(g.EdgeSubgraph(kept), d, ar, method)) {
      ++res.randomized_faults;
      continue;
    }
    res.basis = basis;
    res.extra = extra;
    res.basis_size = static_cast<int>(basis.size());
    res.generators_before = static_cast<int>(non_basis.size());
    res.generators_after = static_cast<int>(extra.size());
    res.stage4_edges = static_cast<int>(kept.size());
    res.seed = Rng::DeriveSeed(base, attempt);
    // A deletion that fails now fails for every later subgraph too, so a
    // single pass ends at a minimal graph.
    for (std::size_t pos = 0; pos < kept.size();) {
      std::vector<int> without = kept;
      without.erase(without.begin() + pos);
      if (IsGloballyRigid(g.EdgeSubgraph(without), d, ar, method)) {
        res.removed.push_back(g.edge(kept[pos]));
        kept = std::move(without);
      } else {
        ++pos;
      }
    }
    res.kept = kept;
    res.graph = g.EdgeSubgraph(kept);
    return res;
  }
  throw RandomizedFault("sparsification failed in every attempt");
}

}  // namespace rigidkit
