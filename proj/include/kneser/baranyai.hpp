#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "kneser/subsets.hpp"

namespace kneser {

// Which shape of size plan is in use. Standard keeps every class size at
// least 4, padding the last class at the expense of up to three others.
// SpliceLast applies when the maximum class size is exactly 4 and the last
// class would end up smaller than 4: that class keeps its small size and its
// vertices are later spliced into the cycle built from the other classes.
enum class PlanPath { kStandard, kSpliceLast };

// Class sizes for a partition of all k-subsets of [n] into pairwise-disjoint
// families (cliques of the Kneser graph). Every size is at most floor(n/k).
struct SizePlan {
  int n = 0;
  int k = 0;
  int max_size = 0;             // floor(n/k)
  int div_remainder = 0;        // n - k * max_size
  std::int64_t class_count = 0;
  int residue = 0;              // C(n,k) - (class_count - 1) * max_size, in [1, max_size]
  int demoted = 0;              // classes shrunk by one to pad the last class to 4
  PlanPath path = PlanPath::kStandard;
  std::vector<int> sizes;

  // Wraps an arbitrary size list; requires every entry in [1, floor(n/k)]
  // and the total equal to C(n,k).
  static SizePlan from_sizes(int n, int k, std::vector<int> sizes);
};

// The size plan used by the cycle construction; requires n >= 4k.
SizePlan compute_size_plan(int n, int k);

// A partition of all k-subsets of [n] into classes of pairwise-disjoint
// subsets, class i holding exactly plan.sizes[i] members in colex order.
struct MatchingPartition {
  SizePlan plan;
  std::vector<std::vector<Subset>> classes;
};

// State after stage `level` of the partition construction: every class holds
// a multiset of partial subsets of [level], each of size at most k.
// Invariants, with L = level:
//   (I1) every S subseteq [L] with |S| <= k appears C(n-L, k-|S|) times in total;
//   (I2) within one class, each element of [L] lies in at most one member;
//   (I3) class i holds exactly sizes[i] members;
//   (I4) per class, sum over members of (k - |S|) is at most n - L.
// Only the empty set can repeat within a class, so a counted map suffices.
struct StageState {
  int n = 0;
  int k = 0;
  int level = 0;
  std::vector<int> sizes;
  std::vector<std::map<std::uint64_t, int>> classes;  // member mask -> multiplicity
};

StageState initial_stage_state(const SizePlan& plan);

// One stage: element level+1 is added to exactly C(n-L-1, k-|S|-1) copies of
// each member type S, at most one member per class. Realized by an integral
// max-flow; classes whose members must all still grow (deficiency equal to
// the number of unplaced elements) are saturated first, otherwise (I4) could
// break even though the total flow value is met.
StageState extend_stage(const StageState& state);

bool check_stage_invariants(const StageState& state, std::string* diagnostic = nullptr);

using StageObserver = std::function<void(const StageState&)>;

// Runs all n stages and projects the final state to a partition. The
// observer, when given, sees the state after stage 0 and after every
// extension.
MatchingPartition baranyai_partition(const SizePlan& plan,
                                     const StageObserver& on_stage = {});

}  // namespace kneser
