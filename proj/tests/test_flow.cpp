#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "kneser/flow.hpp"

using namespace kneser;

namespace {

// Independent bound: the maximum flow equals the smallest cut, found here by
// trying every partition of the nodes.
std::int64_t brute_min_cut(int nodes, int source, int sink,
                           const std::vector<std::tuple<int, int, std::int64_t>>& arcs) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (unsigned side = 0; side < (1u << nodes); ++side) {
    if (!(side >> source & 1) || (side >> sink & 1)) continue;
    std::int64_t cut = 0;
    for (const auto& [from, to, cap] : arcs)
      if ((side >> from & 1) && !(side >> to & 1)) cut += cap;
    best = std::min(best, cut);
  }
  return best;
}

}  // namespace

TEST_CASE("handmade diamond network") {
  FlowNetwork net(4);
  net.add_arc(0, 1, 3);
  net.add_arc(0, 2, 2);
  net.add_arc(1, 3, 2);
  net.add_arc(2, 3, 3);
  net.add_arc(1, 2, 5);
  CHECK(max_flow(net, 0, 3) == 5);
}

TEST_CASE("disconnected sink carries no flow") {
  FlowNetwork net(3);
  net.add_arc(0, 1, 7);
  CHECK(max_flow(net, 0, 2) == 0);
}

TEST_CASE("flow conservation and capacity bounds on a fixed network") {
  FlowNetwork net(5);
  std::vector<std::tuple<int, int, std::int64_t>> arcs{
      {0, 1, 4}, {0, 2, 3}, {1, 2, 2}, {1, 3, 2}, {2, 3, 3}, {2, 4, 2}, {3, 4, 5}};
  std::vector<int> ids;
  for (const auto& [f, t, c] : arcs) ids.push_back(net.add_arc(f, t, c));
  const std::int64_t value = max_flow(net, 0, 4);
  CHECK(value == brute_min_cut(5, 0, 4, arcs));
  std::vector<std::int64_t> net_out(5, 0);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const auto& [f, t, c] = arcs[i];
    const std::int64_t flow = net.flow_on(ids[i]);
    CHECK(flow >= 0);
    CHECK(flow <= c);
    net_out[static_cast<std::size_t>(f)] += flow;
    net_out[static_cast<std::size_t>(t)] -= flow;
  }
  CHECK(net_out[0] == value);
  CHECK(net_out[4] == -value);
  CHECK(net_out[1] == 0);
  CHECK(net_out[2] == 0);
  CHECK(net_out[3] == 0);
}

TEST_CASE("random networks match the cut bound") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    const int nodes = 2 + static_cast<int>(rng() % 7);
    FlowNetwork net(nodes);
    std::vector<std::tuple<int, int, std::int64_t>> arcs;
    for (int from = 0; from < nodes; ++from)
      for (int to = 0; to < nodes; ++to) {
        if (from == to) continue;
        if (rng() % 2 == 0) continue;
        const auto cap = static_cast<std::int64_t>(rng() % 8);
        net.add_arc(from, to, cap);
        arcs.emplace_back(from, to, cap);
      }
    CHECK(max_flow(net, 0, nodes - 1) == brute_min_cut(nodes, 0, nodes - 1, arcs));
  }
}

TEST_CASE("capacities can be raised and the flow extended") {
  FlowNetwork net(3);
  const int a = net.add_arc(0, 1, 1);
  const int b = net.add_arc(1, 2, 4);
  CHECK(net.augment(0, 2) == 1);
  CHECK(net.flow_on(a) == 1);
  CHECK(net.flow_on(b) == 1);
  net.raise_capacity(a, 3);
  CHECK(net.capacity_on(a) == 3);
  CHECK(net.flow_on(a) == 1);
  CHECK(net.augment(0, 2) == 2);
  CHECK(net.flow_on(a) == 3);
  CHECK(net.flow_on(b) == 3);
  CHECK(net.augment(0, 2) == 0);
  CHECK_THROWS_AS(net.raise_capacity(a, 1), std::invalid_argument);
}

TEST_CASE("earlier flow is kept when augmenting further") {
  // Two parallel routes; saturating one first must not disturb it later.
  FlowNetwork net(4);
  const int top = net.add_arc(0, 1, 2);
  net.add_arc(1, 3, 2);
  const int bottom = net.add_arc(0, 2, 0);
  net.add_arc(2, 3, 5);
  CHECK(net.augment(0, 3) == 2);
  CHECK(net.flow_on(top) == 2);
  net.raise_capacity(bottom, 3);
  CHECK(net.augment(0, 3) == 3);
  CHECK(net.flow_on(top) == 2);
  CHECK(net.flow_on(bottom) == 3);
}

TEST_CASE("identical build sequences give identical flows") {
  auto build = [] {
    FlowNetwork net(6);
    std::mt19937 rng(777);
    std::vector<int> ids;
    for (int from = 0; from < 6; ++from)
      for (int to = 0; to < 6; ++to) {
        if (from == to) continue;
        ids.push_back(net.add_arc(from, to, static_cast<std::int64_t>(rng() % 5)));
      }
    max_flow(net, 0, 5);
    std::vector<std::int64_t> flows;
    for (int id : ids) flows.push_back(net.flow_on(id));
    return flows;
  };
  CHECK(build() == build());
}

TEST_CASE("argument validation") {
  FlowNetwork net(2);
  CHECK_THROWS_AS(net.add_arc(0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(net.add_arc(0, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(net.add_arc(-1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(net.add_arc(0, 1, -1), std::invalid_argument);
  CHECK_THROWS_AS(net.flow_on(0), std::invalid_argument);
}
