#include "kneser/graycode.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "kneser/subsets.hpp"

namespace kneser {

namespace {

std::uint64_t bit_of(int element) { return std::uint64_t{1} << (element - 1); }

// Subsets of size `choose` from the first `count` ground elements. The list
// for (count, choose) is the list for (count-1, choose) followed by the list
// for (count-1, choose-1) reversed with the last element added to each entry;
// both seams and the wrap-around are single exchanges.
std::vector<std::uint64_t> gray_masks(const std::vector<int>& elems, int count, int choose) {
  if (choose == 0) return {0};
  if (choose == count) {
    std::uint64_t all = 0;
    for (int i = 0; i < count; ++i) all |= bit_of(elems[i]);
    return {all};
  }
  auto head = gray_masks(elems, count - 1, choose);
  const auto tail = gray_masks(elems, count - 1, choose - 1);
  const std::uint64_t top = bit_of(elems[count - 1]);
  head.reserve(head.size() + tail.size());
  for (auto it = tail.rbegin(); it != tail.rend(); ++it) head.push_back(*it | top);
  return head;
}

}  // namespace

GraySequence gray_code(std::vector<int> ground_elements, int subset_size) {
  const int count = static_cast<int>(ground_elements.size());
  detail::require(0 <= subset_size && subset_size <= count,
                  "gray_code: subset size outside [0, element count]");
  std::uint64_t seen = 0;
  for (int e : ground_elements) {
    detail::require(1 <= e && e <= 64, "gray_code: element outside [1, 64]");
    detail::require((seen & bit_of(e)) == 0, "gray_code: repeated ground element");
    seen |= bit_of(e);
  }
  GraySequence seq{std::move(ground_elements), subset_size, {}};
  seq.order = gray_masks(seq.ground_elements, count, subset_size);
  return seq;
}

bool verify_graycode(const GraySequence& seq, std::string* diagnostic) {
  const auto fail = [&](const std::string& msg) {
    if (diagnostic != nullptr) *diagnostic = msg;
    return false;
  };

  const int count = static_cast<int>(seq.ground_elements.size());
  if (count > 64) return fail("more than 64 ground elements");
  std::uint64_t ground = 0;
  for (int e : seq.ground_elements) {
    if (e < 1 || e > 64) return fail("ground element outside [1, 64]");
    if ((ground & bit_of(e)) != 0) return fail("repeated ground element");
    ground |= bit_of(e);
  }
  if (seq.subset_size < 0 || seq.subset_size > count)
    return fail("subset size outside [0, element count]");

  const std::uint64_t expected = binomial(count, seq.subset_size);
  if (seq.order.size() != expected) {
    std::ostringstream msg;
    msg << "length " << seq.order.size() << ", expected " << expected;
    return fail(msg.str());
  }
  for (std::size_t i = 0; i < seq.order.size(); ++i) {
    const std::uint64_t m = seq.order[i];
    if ((m & ~ground) != 0 || std::popcount(m) != seq.subset_size) {
      std::ostringstream msg;
      msg << "entry " << i << " is not a valid subset of the ground elements";
      return fail(msg.str());
    }
  }

  auto sorted = seq.order;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return fail("duplicate entry");

  if (seq.order.size() >= 2) {
    for (std::size_t i = 0; i < seq.order.size(); ++i) {
      const std::size_t j = (i + 1) % seq.order.size();
      const int moved = std::popcount(seq.order[i] & ~seq.order[j]);
      if (moved != 1) {
        std::ostringstream msg;
        msg << "entries " << i << " and " << j << " differ by " << moved
            << " elements, expected 1";
        return fail(msg.str());
      }
    }
  }
  return true;
}

}  // namespace kneser
