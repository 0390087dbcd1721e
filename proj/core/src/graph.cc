#include "rigidkit/graph.h"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "rigidkit/error.h"

namespace rigidkit {

Edge MakeEdge(int a, int b) {
  if (a == b) throw std::invalid_argument("self-loop " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, EdgeList edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (auto& e : edges_) {
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.u) + " " +
                                  std::to_string(e.v));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw std::invalid_argument("duplicate edge " + std::to_string(dup->u) + " " +
                                std::to_string(dup->v));
  }
  adjacency_.assign(n, {});
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

int Graph::min_degree() const {
  int best = n_ == 0 ? 0 : std::numeric_limits<int>::max();
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

bool Graph::has_edge(int a, int b) const {
  if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_) return false;
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

std::optional<int> Graph::edge_index(int a, int b) const {
  if (a == b) return std::nullopt;
  const Edge key = MakeEdge(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

bool Graph::is_complete() const {
  return static_cast<long long>(num_edges()) * 2 == static_cast<long long>(n_) * (n_ - 1);
}

Graph Graph::WithEdge(int a, int b) const {
  if (has_edge(a, b)) return *this;
  EdgeList e = edges_;
  e.push_back(MakeEdge(a, b));
  return Graph(n_, std::move(e));
}

Graph Graph::WithoutEdge(int a, int b) const {
  const auto idx = edge_index(a, b);
  if (!idx) return *this;
  return WithoutEdgeAt(*idx);
}

Graph Graph::WithoutEdgeAt(int index) const {
  EdgeList e = edges_;
  e.erase(e.begin() + index);
  return Graph(n_, std::move(e));
}

Graph Graph::EdgeSubgraph(std::span<const int> edge_indices) const {
  EdgeList e;
  e.reserve(edge_indices.size());
  for (const int i : edge_indices) e.push_back(edges_.at(i));
  return Graph(n_, std::move(e));
}

namespace {

// Splits on '\n'; a single trailing newline does not start a new line.
std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

// Exactly two non-negative decimal integers separated by one space.
bool ParsePair(std::string_view line, long long& a, long long& b) {
  const std::size_t space = line.find(' ');
  if (space == std::string_view::npos || space == 0) return false;
  const std::string_view first = line.substr(0, space);
  const std::string_view second = line.substr(space + 1);
  if (second.empty()) return false;
  auto parse = [](std::string_view s, long long& out) {
    if (s.empty() || s.front() < '0' || s.front() > '9') return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
  };
  return parse(first, a) && parse(second, b);
}

}  // namespace

Graph ParseEdgeList(std::string_view text) {
  const auto lines = SplitLines(text);
  if (lines.empty()) throw ParseError(1, "missing \"n m\" header");
  long long n = 0;
  long long m = 0;
  if (!ParsePair(lines[0], n, m)) throw ParseError(1, "malformed header, expected \"n m\"");
  if (n > std::numeric_limits<int>::max() / 2) throw ParseError(1, "vertex count too large");
  if (m > n * (n - 1) / 2) {
    throw ParseError(1, "edge count " + std::to_string(m) + " exceeds a simple graph on " +
                            std::to_string(n) + " vertices");
  }
  if (static_cast<long long>(lines.size()) - 1 != m) {
    const int where = static_cast<long long>(lines.size()) - 1 < m
                          ? static_cast<int>(lines.size()) + 1
                          : static_cast<int>(m) + 2;
    throw ParseError(where, "expected " + std::to_string(m) + " edge lines, found " +
                                std::to_string(lines.size() - 1));
  }
  EdgeList edges;
  edges.reserve(m);
  for (long long i = 1; i <= m; ++i) {
    const int line_no = static_cast<int>(i) + 1;
    long long a = 0;
    long long b = 0;
    if (!ParsePair(lines[i], a, b)) throw ParseError(line_no, "malformed edge line, expected \"u v\"");
    if (a >= n || b >= n) {
      throw ParseError(line_no, "vertex out of range (n = " + std::to_string(n) + ")");
    }
    if (a == b) throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
    edges.push_back(MakeEdge(static_cast<int>(a), static_cast<int>(b)));
  }
  // Report the later occurrence of a duplicate.
  std::vector<std::pair<Edge, int>> order;
  order.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) order.emplace_back(edges[i], static_cast<int>(i));
  std::sort(order.begin(), order.end());
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (order[i].first == order[i - 1].first) {
      const int later = std::max(order[i].second, order[i - 1].second);
      throw ParseError(later + 2, "duplicate edge " + std::to_string(order[i].first.u) + " " +
                                      std::to_string(order[i].first.v));
    }
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string SerializeEdgeList(const Graph& g) {
  std::string out = std::to_string(g.num_vertices()) + " " + std::to_string(g.num_edges()) + "\n";
  for (const auto& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

std::string CanonicalHash(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : SerializeEdgeList(g)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace rigidkit
