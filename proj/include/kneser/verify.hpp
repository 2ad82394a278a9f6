#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kneser/baranyai.hpp"
#include "kneser/hamilton.hpp"
#include "kneser/subsets.hpp"

namespace kneser {

// The checkers below work from the definitions alone; they share nothing
// with the construction code beyond the subset primitives.

enum class ViolationKind {
  kDuplicate,
  kMissing,
  kNotDisjoint,
  kWrongSize,
  kAdjacency,
  kCoverage,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string location;
  std::string detail;
};

struct VerifyReport {
  bool ok = true;
  std::vector<Violation> violations;  // capped at 100 entries

  void add(ViolationKind kind, std::string location, std::string detail);
  // One line per violation: "KIND location detail".
  std::string to_text() const;
};

// Hamiltonian cycle of K(n,k): C(n,k) distinct vertices, consecutive ones
// disjoint, the wrap-around pair included. Invariant under rotation and
// reversal of the order.
VerifyReport verify_cycle(const HamCycle& cycle);

// Class sizes match the plan, members of one class are pairwise disjoint,
// and every k-subset of [n] appears exactly once overall.
VerifyReport verify_partition(const MatchingPartition& partition);

// Every marking vertex appears exactly once and cyclically consecutive stops
// differ in at most two elements.
VerifyReport verify_tour(const MarkingTour& tour, const MarkingAssignment& assignment);

// Exhaustive backtracking over all assignments of k-subsets to classes, in
// colex order; returns a partition matching the size list or nothing if none
// exists. Only for C(n,k) <= 30.
std::optional<MatchingPartition> brute_force_partition_oracle(int n, int k,
                                                              std::vector<int> sizes);

}  // namespace kneser
