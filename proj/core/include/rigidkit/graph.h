#ifndef RIGIDKIT_GRAPH_H_
#define RIGIDKIT_GRAPH_H_

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rigidkit {

// Unordered vertex pair stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Canonical edge {a, b}; throws std::invalid_argument when a == b.
Edge MakeEdge(int a, int b);

using EdgeList = std::vector<Edge>;

// Simple undirected graph on vertices 0..n-1. Immutable once built; every
// "modifying" member returns a new graph. Edges are kept sorted (u < v,
// lexicographic), so the index of an edge in edges() is its canonical
// position and is what every edge-indexed vector in the library refers to.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Validates: endpoints in range, no loops, no duplicates.
  Graph(int n, EdgeList edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const EdgeList& edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[index]; }

  std::span<const int> neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  // Minimum degree; 0 for the empty graph.
  int min_degree() const;

  bool has_edge(int a, int b) const;
  // Canonical position of {a, b}, if present.
  std::optional<int> edge_index(int a, int b) const;
  bool is_complete() const;

  Graph WithEdge(int a, int b) const;
  Graph WithoutEdge(int a, int b) const;
  Graph WithoutEdgeAt(int index) const;
  // Same vertex set, only the listed edges (canonical indices).
  Graph EdgeSubgraph(std::span<const int> edge_indices) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  EdgeList edges_;
  std::vector<std::vector<int>> adjacency_;
};

// Edge-list text: header "n m", then m lines "u v". ASCII, LF line endings.
// A trailing newline is optional. Errors carry the offending line number.
Graph ParseEdgeList(std::string_view text);
// Canonical text: header plus sorted edges, every line LF-terminated.
std::string SerializeEdgeList(const Graph& g);

// 64-bit FNV-1a of the canonical serialization, as 16 hex digits.
std::string CanonicalHash(const Graph& g);

}  // namespace rigidkit

#endif  // RIGIDKIT_GRAPH_H_
