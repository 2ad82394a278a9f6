#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "kneser/baranyai.hpp"
#include "kneser/graycode.hpp"
#include "kneser/subsets.hpp"

namespace kneser {

// One marking vertex per marked clique: every clique on the standard path,
// all but the last on the splice-last path. A vertex containing the special
// element is always the marking vertex of its clique (no two such vertices
// can share a clique); a clique without one falls back to its colex minimum.
struct MarkingAssignment {
  GroundParams ground;
  int special_element = 0;
  std::vector<std::optional<Subset>> marking;  // by class index
};

struct TourStop {
  Subset vertex;
  std::int64_t clique = 0;  // class index of the vertex
};

// Cyclic order on all marking vertices; consecutive stops, wrap-around
// included, differ in at most two elements.
struct MarkingTour {
  std::vector<TourStop> stops;
};

// Enumeration of one clique: starts at its marking vertex, ends at its exit
// vertex, required pair kept adjacent, the rest in colex order.
struct CliqueOrdering {
  std::int64_t clique = 0;
  std::vector<Subset> order;
  std::optional<std::pair<Subset, Subset>> required_pair;
};

struct HamCycle {
  GroundParams ground;
  std::vector<Subset> order;  // cyclic; the first vertex is not repeated
};

// Standard path: the largest element n. Splice-last path: the smallest
// element of [n] touched by no vertex of the last class.
int choose_special_element(const MatchingPartition& partition);

MarkingAssignment assign_marking_vertices(const MatchingPartition& partition,
                                          int special_element);

// Replaces the smallest element of x by the special element; x must not
// already contain it. Moves any marking vertex without the special element
// to one with it, one element away.
Subset attach_special(const Subset& x, int special_element);

// Orders the marking vertices that contain the special element by the cyclic
// minimal-change order of their remaining k-1 elements, each followed by the
// marking vertices mapping to it under attach_special, in colex order.
// Consecutive stops then differ in at most two elements.
MarkingTour build_marking_tour(const MarkingAssignment& assignment);

// Colex-smallest member of the clique, other than y, disjoint from y_next.
// Exists whenever the clique has at least 4 members and y_next differs from
// y in at most two elements: those elements exclude at most two members.
Subset select_exit_vertex(const std::vector<Subset>& clique, const Subset& y,
                          const Subset& y_next);

CliqueOrdering order_clique(const std::vector<Subset>& clique, std::int64_t clique_index,
                            const Subset& y, const Subset& z,
                            const std::vector<std::pair<Subset, Subset>>& required_pairs);

// Concatenates the clique orderings and splices every leftover vertex
// between the required pair of its host clique. With no leftovers this is
// plain concatenation.
HamCycle insert_leftovers(const std::vector<CliqueOrdering>& parts,
                          const std::vector<Subset>& leftover,
                          const MarkingAssignment& assignment,
                          const MatchingPartition& partition);

// All intermediate certificates of one build, for verification.
struct BuildTrace {
  SizePlan plan;
  MatchingPartition partition;
  MarkingAssignment assignment;
  MarkingTour tour;
  std::vector<CliqueOrdering> parts;
  std::vector<Subset> leftover;
  HamCycle cycle;
};

BuildTrace build_pipeline(int n, int k);

// Hamiltonian cycle of the Kneser graph K(n,k); requires n >= 4k.
HamCycle build_hamiltonian(int n, int k);

}  // namespace kneser
