#include "kneser/baranyai.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "kneser/flow.hpp"

namespace kneser {

namespace {

void validate_plan_shape(const SizePlan& plan) {
  validate_ground({plan.n, plan.k});
  detail::require(!plan.sizes.empty(), "size plan: empty size list");
  std::uint64_t total = 0;
  for (int a : plan.sizes) {
    detail::require(a >= 1, "size plan: class size below 1");
    detail::require(a <= plan.n / plan.k, "size plan: class size above floor(n/k)");
    total += static_cast<std::uint64_t>(a);
  }
  detail::require(total == binomial(plan.n, plan.k), "size plan: sizes do not sum to C(n,k)");
}

}  // namespace

SizePlan SizePlan::from_sizes(int n, int k, std::vector<int> sizes) {
  SizePlan plan;
  plan.n = n;
  plan.k = k;
  validate_ground({n, k});
  plan.max_size = n / k;
  plan.div_remainder = n % k;
  plan.class_count = static_cast<std::int64_t>(sizes.size());
  plan.residue = sizes.empty() ? 0 : sizes.back();
  plan.demoted = 0;
  plan.path = PlanPath::kStandard;
  plan.sizes = std::move(sizes);
  validate_plan_shape(plan);
  return plan;
}

SizePlan compute_size_plan(int n, int k) {
  validate_ground({n, k});
  detail::require(n >= 4 * k, "method requires n >= 4k");

  SizePlan plan;
  plan.n = n;
  plan.k = k;
  plan.max_size = n / k;
  plan.div_remainder = n % k;

  const std::uint64_t total = binomial(n, k);
  detail::require(total <= 100'000'000, "instance too large to materialize");
  const int p = plan.max_size;
  plan.class_count = static_cast<std::int64_t>((total + p - 1) / p);
  plan.residue = static_cast<int>(total - static_cast<std::uint64_t>(plan.class_count - 1) * p);

  const std::int64_t m = plan.class_count;
  const int q = plan.residue;
  plan.sizes.reserve(static_cast<std::size_t>(m));
  if (p == 4 && q <= 3) {
    // No room to demote: keep the last class small and splice it in later.
    plan.path = PlanPath::kSpliceLast;
    plan.demoted = 0;
    plan.sizes.assign(static_cast<std::size_t>(m - 1), p);
    plan.sizes.push_back(q);
  } else {
    // Pad the last class to size at least 4 by shrinking `demoted` classes
    // in front of it by one each.
    plan.path = PlanPath::kStandard;
    plan.demoted = std::max(4 - q, 0);
    detail::ensure(plan.demoted == 0 || p >= 5, "size plan: demotion needs max_size >= 5");
    detail::ensure(m - 1 - plan.demoted >= 0, "size plan: more demotions than classes");
    plan.sizes.assign(static_cast<std::size_t>(m - 1 - plan.demoted), p);
    plan.sizes.insert(plan.sizes.end(), static_cast<std::size_t>(plan.demoted), p - 1);
    plan.sizes.push_back(q + plan.demoted);
    for (int a : plan.sizes) detail::ensure(a >= 4, "size plan: class size below 4");
  }
  validate_plan_shape(plan);
  return plan;
}

StageState initial_stage_state(const SizePlan& plan) {
  validate_plan_shape(plan);
  StageState state;
  state.n = plan.n;
  state.k = plan.k;
  state.level = 0;
  state.sizes = plan.sizes;
  state.classes.reserve(plan.sizes.size());
  for (int a : plan.sizes) state.classes.push_back({{0u, a}});
  return state;
}

StageState extend_stage(const StageState& state) {
  detail::require(state.level < state.n, "extend_stage: no elements left to place");
  const int n = state.n;
  const int k = state.k;
  const int remaining = n - state.level;  // unplaced elements, the new one included
  const std::uint64_t new_bit = std::uint64_t{1} << state.level;
  const auto class_count = static_cast<std::int64_t>(state.classes.size());

  // A class whose members together still need `remaining` elements must grow
  // now; skipping it once would leave more needs than elements.
  std::vector<int> deficiency(static_cast<std::size_t>(class_count), 0);
  for (std::int64_t i = 0; i < class_count; ++i)
    for (const auto& [mask, mult] : state.classes[i])
      deficiency[i] += mult * (k - std::popcount(mask));

  // Growable member types and their global demands d_S = C(n-L-1, k-|S|-1).
  std::map<std::uint64_t, std::int64_t> demand;
  for (const auto& cls : state.classes)
    for (const auto& [mask, mult] : cls) {
      if (std::popcount(mask) >= k) continue;
      const std::uint64_t d = binomial(remaining - 1, k - std::popcount(mask) - 1);
      if (d > 0) demand.emplace(mask, static_cast<std::int64_t>(d));
    }

  const int source = 0;
  const int sink = 1;
  FlowNetwork net(2 + static_cast<int>(class_count));
  std::map<std::uint64_t, int> type_node;
  std::int64_t total_demand = 0;
  for (const auto& [mask, d] : demand) {
    type_node.emplace(mask, net.add_node());
    total_demand += d;
  }

  std::vector<int> source_arc(static_cast<std::size_t>(class_count));
  std::int64_t forced = 0;
  for (std::int64_t i = 0; i < class_count; ++i) {
    const bool full = deficiency[i] == remaining;
    forced += full ? 1 : 0;
    source_arc[i] = net.add_arc(source, 2 + static_cast<int>(i), full ? 1 : 0);
  }
  struct ClassArc {
    std::int64_t cls;
    std::uint64_t mask;
    int arc;
  };
  std::vector<ClassArc> class_arcs;
  for (std::int64_t i = 0; i < class_count; ++i)
    for (const auto& [mask, mult] : state.classes[i]) {
      const auto it = type_node.find(mask);
      if (it == type_node.end()) continue;
      class_arcs.push_back({i, mask, net.add_arc(2 + static_cast<int>(i), it->second, mult)});
    }
  for (const auto& [mask, d] : demand) net.add_arc(type_node.at(mask), sink, d);

  std::int64_t value = net.augment(source, sink);
  detail::ensure(value == forced, "extend_stage: a class that must grow was starved");
  for (std::int64_t i = 0; i < class_count; ++i)
    if (deficiency[i] != remaining) net.raise_capacity(source_arc[i], 1);
  value += net.augment(source, sink);
  detail::ensure(value == total_demand, "extend_stage: flow below the stage demand");

  StageState next = state;
  for (const auto& ca : class_arcs) {
    const std::int64_t f = net.flow_on(ca.arc);
    if (f == 0) continue;
    detail::ensure(f == 1, "extend_stage: class grew more than one member");
    auto& cls = next.classes[static_cast<std::size_t>(ca.cls)];
    auto member = cls.find(ca.mask);
    detail::ensure(member != cls.end() && member->second >= 1, "extend_stage: lost member");
    if (--member->second == 0) cls.erase(member);
    cls[ca.mask | new_bit] += 1;
  }
  next.level += 1;
  return next;
}

bool check_stage_invariants(const StageState& state, std::string* diagnostic) {
  const auto fail = [&](const std::string& msg) {
    if (diagnostic != nullptr) *diagnostic = msg;
    return false;
  };
  const int n = state.n;
  const int k = state.k;
  const int level = state.level;
  if (level < 0 || level > n) return fail("level outside [0, n]");
  if (state.sizes.size() != state.classes.size()) return fail("sizes and classes disagree");

  const std::uint64_t placed = full_mask(level);
  for (std::size_t i = 0; i < state.classes.size(); ++i) {
    int members = 0;
    int need = 0;
    std::uint64_t used = 0;
    for (const auto& [mask, mult] : state.classes[i]) {
      std::ostringstream at;
      at << "class " << i << " member mask " << mask;
      if (mult < 1) return fail(at.str() + ": multiplicity below 1");
      if ((mask & ~placed) != 0) return fail(at.str() + ": element beyond the level");
      if (std::popcount(mask) > k) return fail(at.str() + ": larger than k");
      if (mask != 0 && mult > 1) return fail(at.str() + ": nonempty member repeats");
      if ((used & mask) != 0) return fail(at.str() + ": element reused in its class");
      used |= mask;
      members += mult;
      need += mult * (k - std::popcount(mask));
    }
    if (members != state.sizes[i]) {
      std::ostringstream msg;
      msg << "class " << i << " holds " << members << " members, expected " << state.sizes[i];
      return fail(msg.str());
    }
    if (need > n - level) {
      std::ostringstream msg;
      msg << "class " << i << " needs " << need << " elements, only " << (n - level) << " left";
      return fail(msg.str());
    }
  }

  std::map<std::uint64_t, std::int64_t> total;
  for (const auto& cls : state.classes)
    for (const auto& [mask, mult] : cls) total[mask] += mult;
  for (int s = 0; s <= std::min(k, level); ++s)
    for (std::uint64_t mask : k_subset_masks(level, s)) {
      const auto it = total.find(mask);
      const std::int64_t have = it == total.end() ? 0 : it->second;
      const auto want = static_cast<std::int64_t>(binomial(n - level, k - s));
      if (have != want) {
        std::ostringstream msg;
        msg << "mask " << mask << " appears " << have << " times, expected " << want;
        return fail(msg.str());
      }
    }
  return true;
}

MatchingPartition baranyai_partition(const SizePlan& plan, const StageObserver& on_stage) {
  StageState state = initial_stage_state(plan);
  if (on_stage) on_stage(state);
  for (int stage = 0; stage < plan.n; ++stage) {
    state = extend_stage(state);
    if (on_stage) on_stage(state);
  }

  MatchingPartition out{plan, {}};
  const GroundParams g{plan.n, plan.k};
  out.classes.reserve(state.classes.size());
  for (std::size_t i = 0; i < state.classes.size(); ++i) {
    std::vector<Subset> members;
    members.reserve(state.classes[i].size());
    for (const auto& [mask, mult] : state.classes[i]) {
      detail::ensure(std::popcount(mask) == plan.k, "partition: member below full size");
      detail::ensure(mult == 1, "partition: repeated full member");
      members.emplace_back(mask, g);  // map order keeps members in colex order
    }
    detail::ensure(members.size() == static_cast<std::size_t>(plan.sizes[i]),
                   "partition: class size drifted from the plan");
    out.classes.push_back(std::move(members));
  }
  return out;
}

}  // namespace kneser
