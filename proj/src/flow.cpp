#include "kneser/flow.hpp"

#include <algorithm>
#include <limits>

#include "kneser/subsets.hpp"

namespace kneser {

namespace {
constexpr std::int64_t kNoLimit = std::numeric_limits<std::int64_t>::max() / 2;
}

FlowNetwork::FlowNetwork(int node_count) {
  detail::require(node_count >= 0, "flow: negative node count");
  adjacency_.resize(node_count);
}

int FlowNetwork::add_node() {
  adjacency_.emplace_back();
  return node_count() - 1;
}

int FlowNetwork::add_arc(int from, int to, std::int64_t capacity) {
  detail::require(0 <= from && from < node_count(), "flow: bad arc tail");
  detail::require(0 <= to && to < node_count(), "flow: bad arc head");
  detail::require(from != to, "flow: self-loop");
  detail::require(capacity >= 0, "flow: negative capacity");
  const int arc = static_cast<int>(capacity_.size());
  capacity_.push_back(capacity);
  adjacency_[from].push_back(2 * arc);
  adjacency_[to].push_back(2 * arc + 1);
  half_arcs_.push_back({to, capacity});
  half_arcs_.push_back({from, 0});
  return arc;
}

void FlowNetwork::raise_capacity(int arc, std::int64_t capacity) {
  detail::require(0 <= arc && arc < static_cast<int>(capacity_.size()), "flow: bad arc id");
  detail::require(capacity >= capacity_[arc], "flow: capacity may only be raised");
  half_arcs_[2 * arc].residual += capacity - capacity_[arc];
  capacity_[arc] = capacity;
}

std::int64_t FlowNetwork::capacity_on(int arc) const {
  detail::require(0 <= arc && arc < static_cast<int>(capacity_.size()), "flow: bad arc id");
  return capacity_[arc];
}

std::int64_t FlowNetwork::flow_on(int arc) const {
  detail::require(0 <= arc && arc < static_cast<int>(capacity_.size()), "flow: bad arc id");
  return capacity_[arc] - half_arcs_[2 * arc].residual;
}

bool FlowNetwork::bfs_levels(int source, int sink) {
  level_.assign(node_count(), -1);
  level_[source] = 0;
  std::vector<int> queue{source};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int node = queue[head];
    for (int half : adjacency_[node]) {
      const HalfArc& a = half_arcs_[half];
      if (a.residual > 0 && level_[a.to] < 0) {
        level_[a.to] = level_[node] + 1;
        queue.push_back(a.to);
      }
    }
  }
  return level_[sink] >= 0;
}

std::int64_t FlowNetwork::blocking_dfs(int node, int sink, std::int64_t limit) {
  if (node == sink || limit == 0) return limit;
  for (std::size_t& i = next_arc_[node]; i < adjacency_[node].size(); ++i) {
    const int half = adjacency_[node][i];
    HalfArc& a = half_arcs_[half];
    if (a.residual <= 0 || level_[a.to] != level_[node] + 1) continue;
    const std::int64_t pushed = blocking_dfs(a.to, sink, std::min(limit, a.residual));
    if (pushed > 0) {
      a.residual -= pushed;
      half_arcs_[half ^ 1].residual += pushed;
      return pushed;
    }
  }
  level_[node] = -1;
  return 0;
}

std::int64_t FlowNetwork::augment(int source, int sink) {
  detail::require(0 <= source && source < node_count(), "flow: bad source");
  detail::require(0 <= sink && sink < node_count(), "flow: bad sink");
  detail::require(source != sink, "flow: source equals sink");
  std::int64_t added = 0;
  while (bfs_levels(source, sink)) {
    next_arc_.assign(node_count(), 0);
    while (std::int64_t pushed = blocking_dfs(source, sink, kNoLimit)) added += pushed;
  }
  return added;
}

std::int64_t max_flow(FlowNetwork& net, int source, int sink) {
  return net.augment(source, sink);
}

}  // namespace kneser
