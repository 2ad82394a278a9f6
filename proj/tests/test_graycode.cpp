#include <numeric>
#include <string>
#include <vector>

#include "doctest.h"
#include "kneser/graycode.hpp"
#include "kneser/subsets.hpp"

using namespace kneser;

TEST_CASE("revolving door order on pairs from [4]") {
  const GraySequence seq = gray_code({1, 2, 3, 4}, 2);
  const std::vector<std::uint64_t> expected{
      mask_from_elements({1, 2}), mask_from_elements({2, 3}), mask_from_elements({1, 3}),
      mask_from_elements({3, 4}), mask_from_elements({2, 4}), mask_from_elements({1, 4})};
  CHECK(seq.order == expected);
  CHECK(verify_graycode(seq));
}

TEST_CASE("first entry is the colex minimum") {
  const GraySequence seq = gray_code({1, 2, 3, 4, 5, 6, 7}, 3);
  CHECK(seq.order.front() == mask_from_elements({1, 2, 3}));
  CHECK(verify_graycode(seq));
}

TEST_CASE("singletons enumerate the ground list") {
  const GraySequence seq = gray_code({1, 2, 3}, 1);
  CHECK(seq.order == std::vector<std::uint64_t>{1, 2, 4});
  CHECK(verify_graycode(seq));
}

TEST_CASE("arbitrary ground elements are respected") {
  const GraySequence seq = gray_code({2, 5, 9}, 2);
  const std::vector<std::uint64_t> expected{
      mask_from_elements({2, 5}), mask_from_elements({5, 9}), mask_from_elements({2, 9})};
  CHECK(seq.order == expected);
  CHECK(verify_graycode(seq));
}

TEST_CASE("degenerate lengths pass the checker") {
  const GraySequence empty = gray_code({}, 0);
  CHECK(empty.order == std::vector<std::uint64_t>{0});
  CHECK(verify_graycode(empty));
  const GraySequence whole = gray_code({1, 2, 3}, 3);
  CHECK(whole.order == std::vector<std::uint64_t>{0b111});
  CHECK(verify_graycode(whole));
  const GraySequence pair = gray_code({4, 7}, 1);
  CHECK(pair.order.size() == 2);
  CHECK(verify_graycode(pair));
}

TEST_CASE("checker sweep over all small parameters") {
  for (int n = 0; n <= 10; ++n) {
    std::vector<int> elems(static_cast<std::size_t>(n));
    std::iota(elems.begin(), elems.end(), 1);
    for (int k = 0; k <= n; ++k) {
      const GraySequence seq = gray_code(elems, k);
      CHECK(seq.order.size() == binomial(n, k));
      std::string diag;
      CHECK_MESSAGE(verify_graycode(seq, &diag), diag);
    }
  }
}

TEST_CASE("checker rejects tampered sequences") {
  GraySequence seq = gray_code({1, 2, 3, 4, 5}, 2);
  REQUIRE(verify_graycode(seq));
  SUBCASE("swapped entries break adjacency") {
    std::swap(seq.order[0], seq.order[6]);
    CHECK(!verify_graycode(seq));
  }
  SUBCASE("dropped entry breaks completeness") {
    seq.order.pop_back();
    CHECK(!verify_graycode(seq));
  }
  SUBCASE("repeated entry breaks distinctness") {
    seq.order[0] = seq.order[1];
    std::string diag;
    CHECK(!verify_graycode(seq, &diag));
    CHECK(!diag.empty());
  }
  SUBCASE("entry outside the ground set") {
    seq.order[0] = mask_from_elements({6, 7});
    CHECK(!verify_graycode(seq));
  }
  SUBCASE("entry of the wrong size") {
    seq.order[0] = mask_from_elements({1});
    CHECK(!verify_graycode(seq));
  }
}
