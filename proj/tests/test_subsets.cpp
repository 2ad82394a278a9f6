#include <algorithm>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "kneser/subsets.hpp"

using namespace kneser;

TEST_CASE("binomial matches frozen values") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 5) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(8, 2) == 28);
  CHECK(binomial(13, 3) == 286);
  CHECK(binomial(19, 3) == 969);
  CHECK(binomial(21, 5) == 20349);
  CHECK(binomial(64, 32) == 1832624140942590534ULL);
}

TEST_CASE("binomial satisfies the Pascal recurrence") {
  for (int n = 1; n <= 64; ++n)
    for (int r = 1; r < n; ++r)
      CHECK(binomial(n, r) == binomial(n - 1, r - 1) + binomial(n - 1, r));
}

TEST_CASE("mask helpers round trip") {
  const std::vector<int> elems{1, 4, 7};
  const std::uint64_t mask = mask_from_elements(elems);
  CHECK(mask == 0b1001001);
  CHECK(elements_from_mask(mask) == elems);
  CHECK(min_element_of(mask) == 1);
  CHECK(full_mask(3) == 0b111);
  CHECK(full_mask(0) == 0);
}

TEST_CASE("k-subset masks come out in colex order") {
  const auto masks = k_subset_masks(5, 2);
  REQUIRE(masks.size() == 10);
  CHECK(std::is_sorted(masks.begin(), masks.end()));
  const GroundParams g{5, 2};
  CHECK(to_text(Subset(masks[0], g)) == "1 2");
  CHECK(to_text(Subset(masks[1], g)) == "1 3");
  CHECK(to_text(Subset(masks[2], g)) == "2 3");
  CHECK(to_text(Subset(masks[9], g)) == "4 5");
  for (std::size_t i = 0; i < masks.size(); ++i)
    CHECK(rank_colex(Subset(masks[i], g)) == i);
}

TEST_CASE("colex rank follows the combinatorial number system") {
  const GroundParams g{8, 3};
  CHECK(rank_colex(Subset::from_elements({1, 2, 3}, g)) == 0);
  CHECK(rank_colex(Subset::from_elements({2, 4, 7}, g)) == 1 + 3 + 20);
  CHECK(rank_colex(Subset::from_elements({6, 7, 8}, g)) == binomial(8, 3) - 1);
}

TEST_CASE("unrank inverts rank on every 3-subset of [7]") {
  const GroundParams g{7, 3};
  const auto all = all_k_subsets(g);
  REQUIRE(all.size() == binomial(7, 3));
  for (std::uint64_t r = 0; r < all.size(); ++r) {
    CHECK(unrank_colex(r, g) == all[static_cast<std::size_t>(r)]);
    CHECK(rank_colex(all[static_cast<std::size_t>(r)]) == r);
  }
  CHECK_THROWS_AS(unrank_colex(all.size(), g), std::invalid_argument);
}

TEST_CASE("subset construction rejects bad input") {
  const GroundParams g{6, 2};
  CHECK_THROWS_AS(Subset(0b111, g), std::invalid_argument);
  CHECK_THROWS_AS(Subset(std::uint64_t{1} << 6, g), std::invalid_argument);
  CHECK_THROWS_AS(Subset::from_elements({2, 2}, g), std::invalid_argument);
  CHECK_THROWS_AS(validate_ground({5, 6}), std::invalid_argument);
  CHECK_THROWS_AS(validate_ground({65, 1}), std::invalid_argument);
  CHECK_THROWS_AS(validate_ground({0, 0}), std::invalid_argument);
}

TEST_CASE("disjointness, difference size, colex comparison") {
  const GroundParams g{9, 3};
  const Subset a = Subset::from_elements({1, 2, 3}, g);
  const Subset b = Subset::from_elements({4, 5, 6}, g);
  const Subset c = Subset::from_elements({3, 4, 5}, g);
  CHECK(is_disjoint(a, b));
  CHECK(!is_disjoint(a, c));
  CHECK(diff_size(a, a) == 0);
  CHECK(diff_size(a, b) == 3);
  CHECK(diff_size(a, c) == 2);
  CHECK(colex_less(a, b));
  CHECK(colex_less(a, c));
  CHECK(!colex_less(b, a));
  CHECK(a.contains(2));
  CHECK(!a.contains(4));
  CHECK(a.min_element() == 1);
}

TEST_CASE("textual subset format round trips") {
  const GroundParams g{8, 3};
  const Subset s = Subset::from_elements({1, 4, 7}, g);
  CHECK(to_text(s) == "1 4 7");
  CHECK(subset_from_text("1 4 7", g) == s);
  CHECK_THROWS_AS(subset_from_text("4 1 7", g), std::invalid_argument);
  CHECK_THROWS_AS(subset_from_text("1 4", g), std::invalid_argument);
  CHECK_THROWS_AS(subset_from_text("1 4 7 8", g), std::invalid_argument);
  CHECK_THROWS_AS(subset_from_text("1 4 x", g), std::invalid_argument);
  CHECK_THROWS_AS(subset_from_text("1 4 9", g), std::invalid_argument);
}
