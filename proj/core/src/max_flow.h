#ifndef RIGIDKIT_SRC_MAX_FLOW_H_
#define RIGIDKIT_SRC_MAX_FLOW_H_

#include <cstdint>
#include <vector>

namespace rigidkit::internal {

// Dinic's algorithm on integer capacities.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes);

  // Returns the arc id (its reverse arc is id ^ 1).
  int AddArc(int from, int to, std::int64_t capacity);

  // Max flow from s to t, stopping early once `limit` is reached.
  std::int64_t MaxFlow(int s, int t, std::int64_t limit);

  // After MaxFlow: nodes reachable from s in the residual network.
  std::vector<bool> ResidualReachable(int s) const;

  int num_nodes() const { return static_cast<int>(head_.size()); }
  int arc_from(int id) const { return arcs_[id ^ 1].to; }
  int arc_to(int id) const { return arcs_[id].to; }
  std::int64_t arc_capacity(int id) const { return arcs_[id].capacity; }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }

 private:
  struct Arc {
    int to;
    std::int64_t capacity;
    std::int64_t residual;
  };

  bool BuildLevels(int s, int t);
  std::int64_t Augment(int x, int t, std::int64_t pushed);

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> head_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace rigidkit::internal

#endif  // RIGIDKIT_SRC_MAX_FLOW_H_
