#include "kneser/instances.hpp"

#include <algorithm>

namespace kneser {

std::vector<GroundParams> reference_grid() {
  std::vector<GroundParams> grid;
  for (int n = 4; n <= 20; ++n) grid.push_back({n, 1});
  for (int n = 8; n <= 16; ++n) grid.push_back({n, 2});
  for (int n = 12; n <= 16; ++n) grid.push_back({n, 3});
  grid.push_back({19, 3});
  grid.push_back({16, 4});
  grid.push_back({17, 4});
  grid.push_back({20, 5});
  grid.push_back({21, 5});
  std::sort(grid.begin(), grid.end(), [](GroundParams a, GroundParams b) {
    return a.n != b.n ? a.n < b.n : a.k < b.k;
  });
  return grid;
}

}  // namespace kneser
