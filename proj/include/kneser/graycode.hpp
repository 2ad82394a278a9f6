#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kneser {

// Cyclic minimal-change enumeration of all subsets of a fixed size drawn from
// an ordered list of ground elements: consecutive entries, wrap-around
// included, differ by exchanging a single element.
struct GraySequence {
  std::vector<int> ground_elements;   // distinct values in [1, 64]
  int subset_size = 0;
  std::vector<std::uint64_t> order;   // element-value masks
};

// Revolving-door construction, recursing on the last ground element. The
// first entry is the colex minimum (the first subset_size ground elements).
GraySequence gray_code(std::vector<int> ground_elements, int subset_size);

// Checks completeness, distinctness and the cyclic one-exchange property.
// On failure, *diagnostic (when given) describes the first violation found.
bool verify_graycode(const GraySequence& seq, std::string* diagnostic = nullptr);

}  // namespace kneser
