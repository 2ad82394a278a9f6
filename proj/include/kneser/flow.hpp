#pragma once

#include <cstdint>
#include <vector>

namespace kneser {

// Integer max-flow network (Dinic). Arcs keep their insertion order, which
// fixes the augmenting order, so repeated runs over the same build sequence
// produce identical flows. Capacities may be raised between calls to
// augment(); flow already placed is kept and extended.
class FlowNetwork {
 public:
  explicit FlowNetwork(int node_count = 0);

  int node_count() const { return static_cast<int>(adjacency_.size()); }
  int add_node();

  // Returns an arc id for later capacity and flow queries.
  int add_arc(int from, int to, std::int64_t capacity);
  void raise_capacity(int arc, std::int64_t capacity);

  std::int64_t capacity_on(int arc) const;
  std::int64_t flow_on(int arc) const;

  // Pushes as much additional source-to-sink flow as possible and returns the
  // amount added by this call.
  std::int64_t augment(int source, int sink);

 private:
  struct HalfArc {
    int to = 0;
    std::int64_t residual = 0;
  };

  bool bfs_levels(int source, int sink);
  std::int64_t blocking_dfs(int node, int sink, std::int64_t limit);

  std::vector<HalfArc> half_arcs_;           // forward at 2*id, reverse at 2*id+1
  std::vector<std::int64_t> capacity_;       // by arc id
  std::vector<std::vector<int>> adjacency_;  // half-arc indices per node
  std::vector<int> level_;
  std::vector<std::size_t> next_arc_;
};

// Runs the network to its maximum flow value and returns it.
std::int64_t max_flow(FlowNetwork& net, int source, int sink);

}  // namespace kneser
