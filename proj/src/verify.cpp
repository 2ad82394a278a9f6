#include "kneser/verify.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>
#include <sstream>

namespace kneser {

namespace {

constexpr std::size_t kViolationCap = 100;

std::string mask_text(std::uint64_t mask) {
  std::ostringstream out;
  bool first = true;
  for (int e : elements_from_mask(mask)) {
    if (!first) out << ' ';
    out << e;
    first = false;
  }
  return out.str();
}

}  // namespace

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kDuplicate: return "duplicate";
    case ViolationKind::kMissing: return "missing";
    case ViolationKind::kNotDisjoint: return "not-disjoint";
    case ViolationKind::kWrongSize: return "wrong-size";
    case ViolationKind::kAdjacency: return "adjacency";
    case ViolationKind::kCoverage: return "coverage";
  }
  return "unknown";
}

void VerifyReport::add(ViolationKind kind, std::string location, std::string detail) {
  ok = false;
  if (violations.size() < kViolationCap)
    violations.push_back({kind, std::move(location), std::move(detail)});
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  for (const Violation& v : violations)
    out << to_string(v.kind) << ' ' << v.location << ' ' << v.detail << '\n';
  return out.str();
}

VerifyReport verify_cycle(const HamCycle& cycle) {
  VerifyReport report;
  const GroundParams g = cycle.ground;
  if (g.k < 1 || g.k > g.n || g.n > 64) {
    report.add(ViolationKind::kWrongSize, "cycle", "invalid ground parameters");
    return report;
  }
  const std::uint64_t expected = binomial(g.n, g.k);
  const std::size_t count = cycle.order.size();
  if (count != expected) {
    std::ostringstream msg;
    msg << "has " << count << " vertices, expected " << expected;
    report.add(ViolationKind::kWrongSize, "cycle", msg.str());
  }

  std::vector<std::pair<std::uint64_t, std::size_t>> entries;
  entries.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (!(cycle.order[i].ground() == g)) {
      std::ostringstream loc;
      loc << "cycle[" << i << "]";
      report.add(ViolationKind::kWrongSize, loc.str(), "vertex from a different ground set");
    }
    entries.emplace_back(cycle.order[i].bits(), i);
  }
  std::sort(entries.begin(), entries.end());
  bool distinct = true;
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (entries[i].first == entries[i - 1].first) {
      distinct = false;
      std::ostringstream loc, msg;
      loc << "cycle[" << entries[i].second << "]";
      msg << "vertex '" << mask_text(entries[i].first) << "' repeats position "
          << entries[i - 1].second;
      report.add(ViolationKind::kDuplicate, loc.str(), msg.str());
    }

  if ((count != expected || !distinct) && expected <= 1'000'000) {
    std::size_t at = 0;
    for (std::uint64_t mask : k_subset_masks(g.n, g.k)) {
      while (at < entries.size() && entries[at].first < mask) ++at;
      if (at >= entries.size() || entries[at].first != mask) {
        report.add(ViolationKind::kMissing, "cycle", "vertex '" + mask_text(mask) + "' never visited");
        if (!report.ok && report.violations.size() >= kViolationCap) break;
      }
    }
  }

  if (count >= 2)
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t j = (i + 1) % count;
      const std::uint64_t meet = cycle.order[i].bits() & cycle.order[j].bits();
      if (meet != 0) {
        std::ostringstream loc, msg;
        loc << "cycle[" << i << "]";
        msg << "meets its successor in '" << mask_text(meet) << "'";
        report.add(ViolationKind::kNotDisjoint, loc.str(), msg.str());
      }
    }
  return report;
}

VerifyReport verify_partition(const MatchingPartition& partition) {
  VerifyReport report;
  const GroundParams g{partition.plan.n, partition.plan.k};
  if (g.k < 1 || g.k > g.n || g.n > 64) {
    report.add(ViolationKind::kWrongSize, "partition", "invalid ground parameters");
    return report;
  }
  if (partition.classes.size() != partition.plan.sizes.size()) {
    std::ostringstream msg;
    msg << "has " << partition.classes.size() << " classes, plan lists "
        << partition.plan.sizes.size();
    report.add(ViolationKind::kWrongSize, "partition", msg.str());
  }

  std::vector<std::pair<std::uint64_t, std::string>> seen;
  std::size_t covered = 0;
  const std::size_t classes = partition.classes.size();
  for (std::size_t i = 0; i < classes; ++i) {
    const auto& clique = partition.classes[i];
    if (i < partition.plan.sizes.size() &&
        clique.size() != static_cast<std::size_t>(partition.plan.sizes[i])) {
      std::ostringstream loc, msg;
      loc << "class[" << i << "]";
      msg << "holds " << clique.size() << " members, plan says " << partition.plan.sizes[i];
      report.add(ViolationKind::kWrongSize, loc.str(), msg.str());
    }
    covered += clique.size();
    for (std::size_t j = 0; j < clique.size(); ++j) {
      std::ostringstream loc;
      loc << "class[" << i << "][" << j << "]";
      if (!(clique[j].ground() == g)) {
        report.add(ViolationKind::kWrongSize, loc.str(), "member from a different ground set");
        continue;
      }
      for (std::size_t l = 0; l < j; ++l) {
        const std::uint64_t meet = clique[j].bits() & clique[l].bits();
        if (meet != 0) {
          std::ostringstream msg;
          msg << "meets member " << l << " in '" << mask_text(meet) << "'";
          report.add(ViolationKind::kNotDisjoint, loc.str(), msg.str());
        }
      }
      seen.emplace_back(clique[j].bits(), loc.str());
    }
  }

  std::sort(seen.begin(), seen.end());
  bool distinct = true;
  for (std::size_t i = 1; i < seen.size(); ++i)
    if (seen[i].first == seen[i - 1].first) {
      distinct = false;
      std::ostringstream msg;
      msg << "subset '" << mask_text(seen[i].first) << "' also placed at " << seen[i - 1].second;
      report.add(ViolationKind::kDuplicate, seen[i].second, msg.str());
    }

  const std::uint64_t expected = binomial(g.n, g.k);
  if (covered != expected) {
    std::ostringstream msg;
    msg << "covers " << covered << " member slots, expected " << expected;
    report.add(ViolationKind::kCoverage, "partition", msg.str());
  }
  if ((covered != expected || !distinct) && expected <= 1'000'000) {
    std::size_t at = 0;
    for (std::uint64_t mask : k_subset_masks(g.n, g.k)) {
      while (at < seen.size() && seen[at].first < mask) ++at;
      if (at >= seen.size() || seen[at].first != mask) {
        report.add(ViolationKind::kMissing, "partition",
                   "subset '" + mask_text(mask) + "' placed nowhere");
        if (report.violations.size() >= kViolationCap) break;
      }
    }
  }
  return report;
}

VerifyReport verify_tour(const MarkingTour& tour, const MarkingAssignment& assignment) {
  VerifyReport report;
  std::map<std::uint64_t, std::int64_t> expected;
  for (std::size_t i = 0; i < assignment.marking.size(); ++i)
    if (assignment.marking[i].has_value())
      expected.emplace(assignment.marking[i]->bits(), static_cast<std::int64_t>(i));

  if (tour.stops.size() != expected.size()) {
    std::ostringstream msg;
    msg << "has " << tour.stops.size() << " stops, expected " << expected.size();
    report.add(ViolationKind::kWrongSize, "tour", msg.str());
  }

  std::map<std::uint64_t, std::size_t> seen;
  for (std::size_t i = 0; i < tour.stops.size(); ++i) {
    std::ostringstream loc;
    loc << "tour[" << i << "]";
    const std::uint64_t bits = tour.stops[i].vertex.bits();
    const auto want = expected.find(bits);
    if (want == expected.end()) {
      report.add(ViolationKind::kCoverage, loc.str(),
                 "stop '" + mask_text(bits) + "' is not a marking vertex");
    } else if (want->second != tour.stops[i].clique) {
      std::ostringstream msg;
      msg << "stop tagged with clique " << tour.stops[i].clique << ", expected " << want->second;
      report.add(ViolationKind::kCoverage, loc.str(), msg.str());
    }
    const auto [first, fresh] = seen.emplace(bits, i);
    if (!fresh) {
      std::ostringstream msg;
      msg << "stop '" << mask_text(bits) << "' repeats position " << first->second;
      report.add(ViolationKind::kDuplicate, loc.str(), msg.str());
    }
  }
  for (const auto& [bits, clique] : expected)
    if (seen.find(bits) == seen.end())
      report.add(ViolationKind::kMissing, "tour",
                 "marking vertex '" + mask_text(bits) + "' never visited");

  if (tour.stops.size() >= 2)
    for (std::size_t i = 0; i < tour.stops.size(); ++i) {
      const std::size_t j = (i + 1) % tour.stops.size();
      const int moved =
          std::popcount(tour.stops[i].vertex.bits() & ~tour.stops[j].vertex.bits());
      if (moved > 2) {
        std::ostringstream loc, msg;
        loc << "tour[" << i << "]";
        msg << "differs from its successor in " << moved << " elements, allowed 2";
        report.add(ViolationKind::kAdjacency, loc.str(), msg.str());
      }
    }
  return report;
}

std::optional<MatchingPartition> brute_force_partition_oracle(int n, int k,
                                                              std::vector<int> sizes) {
  validate_ground({n, k});
  const std::uint64_t total = binomial(n, k);
  detail::require(total <= 30, "oracle: only for C(n,k) <= 30");
  detail::require(!sizes.empty(), "oracle: empty size list");
  std::uint64_t claimed = 0;
  for (int a : sizes) {
    detail::require(a >= 1, "oracle: class size below 1");
    claimed += static_cast<std::uint64_t>(a);
  }
  if (claimed != total) return std::nullopt;

  const auto masks = k_subset_masks(n, k);
  const int class_count = static_cast<int>(sizes.size());
  std::vector<int> used(sizes.size(), 0);
  std::vector<std::uint64_t> cover(sizes.size(), 0);
  std::vector<int> placed_in(masks.size(), -1);

  // Classes are tried in order; among empty classes of equal target size only
  // the first is tried, since they are interchangeable.
  const std::function<bool(std::size_t)> place = [&](std::size_t idx) -> bool {
    if (idx == masks.size()) return true;
    const std::uint64_t v = masks[idx];
    std::array<bool, 65> tried_empty{};
    for (int c = 0; c < class_count; ++c) {
      if (used[c] == sizes[c]) continue;
      if ((cover[c] & v) != 0) continue;
      if (used[c] == 0) {
        if (tried_empty[sizes[c]]) continue;
        tried_empty[sizes[c]] = true;
      }
      const int still = sizes[c] - used[c] - 1;
      if (k * still > n - std::popcount(cover[c] | v)) continue;  // not enough elements left
      used[c] += 1;
      cover[c] |= v;
      placed_in[idx] = c;
      if (place(idx + 1)) return true;
      used[c] -= 1;
      cover[c] &= ~v;
      placed_in[idx] = -1;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;

  MatchingPartition out;
  out.plan.n = n;
  out.plan.k = k;
  out.plan.max_size = n / k;
  out.plan.div_remainder = n % k;
  out.plan.class_count = class_count;
  out.plan.residue = sizes.back();
  out.plan.demoted = 0;
  out.plan.path = PlanPath::kStandard;
  out.plan.sizes = sizes;
  out.classes.assign(sizes.size(), {});
  const GroundParams g{n, k};
  for (std::size_t idx = 0; idx < masks.size(); ++idx)
    out.classes[static_cast<std::size_t>(placed_in[idx])].emplace_back(masks[idx], g);
  return out;
}

}  // namespace kneser
