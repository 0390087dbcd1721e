#include "max_flow.h"

#include <algorithm>
#include <queue>

namespace rigidkit::internal {

FlowNetwork::FlowNetwork(int nodes) : head_(nodes), level_(nodes), cursor_(nodes) {}

int FlowNetwork::AddArc(int from, int to, std::int64_t capacity) {
  const int id = static_cast<int>(arcs_.size());
  arcs_.push_back({to, capacity, capacity});
  arcs_.push_back({from, 0, 0});
  head_[from].push_back(id);
  head_[to].push_back(id + 1);
  return id;
}

bool FlowNetwork::BuildLevels(int s, int t) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<int> q;
  level_[s] = 0;
  q.push(s);
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    for (const int id : head_[x]) {
      const Arc& a = arcs_[id];
      if (a.residual > 0 && level_[a.to] < 0) {
        level_[a.to] = level_[x] + 1;
        q.push(a.to);
      }
    }
  }
  return level_[t] >= 0;
}

std::int64_t FlowNetwork::Augment(int x, int t, std::int64_t pushed) {
  if (x == t) return pushed;
  for (std::size_t& i = cursor_[x]; i < head_[x].size(); ++i) {
    const int id = head_[x][i];
    Arc& a = arcs_[id];
    if (a.residual <= 0 || level_[a.to] != level_[x] + 1) continue;
    const std::int64_t got = Augment(a.to, t, std::min(pushed, a.residual));
    if (got > 0) {
      a.residual -= got;
      arcs_[id ^ 1].residual += got;
      return got;
    }
  }
  return 0;
}

std::int64_t FlowNetwork::MaxFlow(int s, int t, std::int64_t limit) {
  std::int64_t flow = 0;
  while (flow < limit && BuildLevels(s, t)) {
    std::fill(cursor_.begin(), cursor_.end(), 0);
    while (flow < limit) {
      const std::int64_t got = Augment(s, t, limit - flow);
      if (got == 0) break;
      flow += got;
    }
  }
  return flow;
}

std::vector<bool> FlowNetwork::ResidualReachable(int s) const {
  std::vector<bool> seen(head_.size(), false);
  std::queue<int> q;
  seen[s] = true;
  q.push(s);
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    for (const int id : head_[x]) {
      const Arc& a = arcs_[id];
      if (a.residual > 0 && !seen[a.to]) {
        seen[a.to] = true;
        q.push(a.to);
      }
    }
  }
  return seen;
}

}  // namespace rigidkit::internal
