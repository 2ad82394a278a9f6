#include "kneser/hamilton.hpp"

#include <algorithm>
#include <map>

namespace kneser {

namespace {

std::uint64_t bit_of(int element) { return std::uint64_t{1} << (element - 1); }

std::map<std::uint64_t, std::int64_t> marking_index(const MarkingAssignment& assignment) {
  std::map<std::uint64_t, std::int64_t> index;
  for (std::size_t i = 0; i < assignment.marking.size(); ++i)
    if (assignment.marking[i].has_value())
      index.emplace(assignment.marking[i]->bits(), static_cast<std::int64_t>(i));
  return index;
}

}  // namespace

int choose_special_element(const MatchingPartition& partition) {
  if (partition.plan.path == PlanPath::kStandard) return partition.plan.n;
  detail::require(!partition.classes.empty(), "special element: no classes");
  std::uint64_t used = 0;
  for (const Subset& v : partition.classes.back()) used |= v.bits();
  for (int e = 1; e <= partition.plan.n; ++e)
    if ((used & bit_of(e)) == 0) return e;
  detail::throw_internal("special element: the last class touches every element");
}

MarkingAssignment assign_marking_vertices(const MatchingPartition& partition,
                                          int special_element) {
  const GroundParams g{partition.plan.n, partition.plan.k};
  validate_ground(g);
  detail::require(1 <= special_element && special_element <= g.n,
                  "marking: special element outside the ground set");

  MarkingAssignment assignment{g, special_element, {}};
  const std::size_t class_count = partition.classes.size();
  const std::size_t marked = partition.plan.path == PlanPath::kStandard
                                 ? class_count
                                 : class_count - 1;
  assignment.marking.resize(class_count);
  for (std::size_t i = 0; i < marked; ++i) {
    const auto& clique = partition.classes[i];
    detail::require(!clique.empty(), "marking: empty class");
    const Subset* with_special = nullptr;
    for (const Subset& v : clique)
      if (v.contains(special_element)) {
        detail::ensure(with_special == nullptr, "marking: special element repeats in a class");
        with_special = &v;
      }
    assignment.marking[i] = with_special != nullptr ? *with_special : clique.front();
  }
  if (partition.plan.path == PlanPath::kSpliceLast)
    for (const Subset& v : partition.classes.back())
      detail::require(!v.contains(special_element),
                      "marking: special element appears in the unmarked class");
  return assignment;
}

Subset attach_special(const Subset& x, int special_element) {
  detail::require(1 <= special_element && special_element <= x.ground().n,
                  "attach_special: element outside the ground set");
  detail::require(!x.contains(special_element), "attach_special: x already holds the element");
  const std::uint64_t low = std::uint64_t{1} << (x.min_element() - 1);
  return Subset((x.bits() & ~low) | bit_of(special_element), x.ground());
}

MarkingTour build_marking_tour(const MarkingAssignment& assignment) {
  const GroundParams g = assignment.ground;
  validate_ground(g);
  const int e = assignment.special_element;
  const std::uint64_t ebit = bit_of(e);

  const auto clique_of = marking_index(assignment);

  // Group the marking vertices without the special element under their
  // attach_special image, which is itself a marking vertex.
  std::map<std::uint64_t, std::vector<Subset>> arrivals;
  for (const auto& entry : assignment.marking) {
    if (!entry.has_value() || entry->contains(e)) continue;
    arrivals[attach_special(*entry, e).bits()].push_back(*entry);
  }
  for (auto& [image, group] : arrivals)
    std::sort(group.begin(), group.end(),
              [](const Subset& a, const Subset& b) { return a.bits() < b.bits(); });

  std::vector<int> rest;
  rest.reserve(static_cast<std::size_t>(g.n - 1));
  for (int v = 1; v <= g.n; ++v)
    if (v != e) rest.push_back(v);
  const GraySequence seq = gray_code(rest, g.k - 1);
  std::string diag;
  if (!verify_graycode(seq, &diag))
    detail::throw_internal("tour: gray sequence rejected: " + diag);

  MarkingTour tour;
  for (std::uint64_t partial : seq.order) {
    const std::uint64_t anchor = partial | ebit;
    const auto host = clique_of.find(anchor);
    detail::ensure(host != clique_of.end(), "tour: vertex with the special element unmarked");
    tour.stops.push_back({Subset(anchor, g), host->second});
    const auto group = arrivals.find(anchor);
    if (group == arrivals.end()) continue;
    for (const Subset& x : group->second)
      tour.stops.push_back({x, clique_of.at(x.bits())});
  }
  detail::ensure(tour.stops.size() == clique_of.size(), "tour: some marking vertex missing");
  return tour;
}

Subset select_exit_vertex(const std::vector<Subset>& clique, const Subset& y,
                          const Subset& y_next) {
  detail::require(diff_size(y, y_next) <= 2, "exit vertex: successor too far from y");
  for (const Subset& candidate : clique) {
    if (candidate == y) continue;
    if (is_disjoint(candidate, y_next)) return candidate;
  }
  detail::throw_internal("exit vertex: no member clears the next marking vertex");
}

CliqueOrdering order_clique(const std::vector<Subset>& clique, std::int64_t clique_index,
                            const Subset& y, const Subset& z,
                            const std::vector<std::pair<Subset, Subset>>& required_pairs) {
  detail::require(!(y == z), "order_clique: entry and exit coincide");
  const auto member_of = [&clique](const Subset& v) {
    return std::find(clique.begin(), clique.end(), v) != clique.end();
  };
  detail::require(member_of(y) && member_of(z), "order_clique: endpoint outside the clique");
  detail::require(required_pairs.size() <= 1, "order_clique: at most one pair per clique");

  std::vector<Subset> interior;
  interior.reserve(clique.size());
  for (const Subset& v : clique)
    if (!(v == y) && !(v == z)) interior.push_back(v);

  CliqueOrdering out{clique_index, {}, std::nullopt};
  out.order.reserve(clique.size());
  out.order.push_back(y);
  if (required_pairs.empty()) {
    out.order.insert(out.order.end(), interior.begin(), interior.end());
    out.order.push_back(z);
  } else {
    auto [u1, u2] = required_pairs.front();
    detail::require(member_of(u1) && member_of(u2), "order_clique: pair outside the clique");
    detail::require(!(u1 == u2), "order_clique: degenerate pair");
    detail::require(!(u1 == y) && !(u2 == y), "order_clique: pair may not use the entry");
    const auto drop = [&interior](const Subset& v) {
      interior.erase(std::remove(interior.begin(), interior.end(), v), interior.end());
    };
    if (u1 == z || u2 == z) {
      // The pair may use the exit vertex; it then sits at the last two slots.
      const Subset other = u1 == z ? u2 : u1;
      drop(other);
      out.order.insert(out.order.end(), interior.begin(), interior.end());
      out.order.push_back(other);
      out.order.push_back(z);
      out.required_pair = {{other, z}};
    } else {
      drop(u1);
      drop(u2);
      out.order.insert(out.order.end(), interior.begin(), interior.end());
      out.order.push_back(u1);
      out.order.push_back(u2);
      out.order.push_back(z);
      out.required_pair = {{u1, u2}};
    }
  }
  detail::ensure(out.order.size() == clique.size(), "order_clique: dropped a member");
  return out;
}

HamCycle insert_leftovers(const std::vector<CliqueOrdering>& parts,
                          const std::vector<Subset>& leftover,
                          const MarkingAssignment& assignment,
                          const MatchingPartition& partition) {
  const GroundParams g{partition.plan.n, partition.plan.k};
  const auto clique_of = marking_index(assignment);

  // Host clique of a leftover: the clique of its attach_special image. The
  // leftovers are pairwise disjoint, so their images are distinct and no
  // clique hosts two of them.
  std::map<std::int64_t, Subset> pending;
  for (const Subset& v : leftover) {
    const Subset anchor = attach_special(v, assignment.special_element);
    const auto host = clique_of.find(anchor.bits());
    detail::ensure(host != clique_of.end(), "leftovers: anchor is not a marking vertex");
    detail::ensure(pending.emplace(host->second, v).second, "leftovers: shared host clique");
  }

  HamCycle cycle{g, {}};
  std::size_t spliced = 0;
  for (const CliqueOrdering& part : parts) {
    const auto here = pending.find(part.clique);
    detail::ensure((here != pending.end()) == part.required_pair.has_value(),
                   "leftovers: pair request and host clique disagree");
    for (std::size_t j = 0; j < part.order.size(); ++j) {
      cycle.order.push_back(part.order[j]);
      if (here != pending.end() && part.order[j] == part.required_pair->first) {
        detail::ensure(j + 1 < part.order.size() && part.order[j + 1] == part.required_pair->second,
                       "leftovers: required pair not adjacent");
        cycle.order.push_back(here->second);
        ++spliced;
      }
    }
  }
  detail::ensure(spliced == leftover.size(), "leftovers: vertex left out");
  return cycle;
}

BuildTrace build_pipeline(int n, int k) {
  BuildTrace trace;
  trace.plan = compute_size_plan(n, k);
  trace.partition = baranyai_partition(trace.plan);
  const int e = choose_special_element(trace.partition);
  trace.assignment = assign_marking_vertices(trace.partition, e);
  trace.tour = build_marking_tour(trace.assignment);

  std::map<std::int64_t, std::pair<Subset, Subset>> pair_for;
  if (trace.plan.path == PlanPath::kSpliceLast) {
    trace.leftover = trace.partition.classes.back();
    const auto clique_of = marking_index(trace.assignment);
    for (const Subset& v : trace.leftover) {
      const Subset anchor = attach_special(v, e);
      const auto host = clique_of.find(anchor.bits());
      detail::ensure(host != clique_of.end(), "pipeline: leftover anchor unmarked");
      const auto& clique = trace.partition.classes[static_cast<std::size_t>(host->second)];
      // Two colex-smallest members clear of v; v meets the anchor and at
      // most one further member, so at least two of the >= 4 remain.
      std::vector<Subset> clear;
      for (const Subset& u : clique)
        if (is_disjoint(u, v)) clear.push_back(u);
      detail::ensure(clear.size() >= 2, "pipeline: no room to splice a leftover");
      detail::ensure(pair_for.emplace(host->second, std::make_pair(clear[0], clear[1])).second,
                     "pipeline: two leftovers in one clique");
    }
  }

  const std::size_t stops = trace.tour.stops.size();
  trace.parts.reserve(stops);
  for (std::size_t i = 0; i < stops; ++i) {
    const TourStop& stop = trace.tour.stops[i];
    const TourStop& next = trace.tour.stops[(i + 1) % stops];
    const auto& clique = trace.partition.classes[static_cast<std::size_t>(stop.clique)];
    const Subset exit = select_exit_vertex(clique, stop.vertex, next.vertex);
    std::vector<std::pair<Subset, Subset>> pairs;
    const auto pair = pair_for.find(stop.clique);
    if (pair != pair_for.end()) pairs.push_back(pair->second);
    trace.parts.push_back(order_clique(clique, stop.clique, stop.vertex, exit, pairs));
  }
  trace.cycle = insert_leftovers(trace.parts, trace.leftover, trace.assignment, trace.partition);
  return trace;
}

HamCycle build_hamiltonian(int n, int k) { return build_pipeline(n, k).cycle; }

}  // namespace kneser
