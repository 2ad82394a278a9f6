#pragma once

#include <vector>

#include "kneser/subsets.hpp"

namespace kneser {

// The standard battery of instances exercised by the bench tool and the
// acceptance suite. Sorted by (n, k), every entry satisfies n >= 4k.
std::vector<GroundParams> reference_grid();

}  // namespace kneser
