#pragma once

#include <vector>

#include "ordkit/psl2z.hpp"

namespace ordkit {

// Circular configuration rebuilt by pure symbol pushing, with no boundary
// geometry: start from the pinned ten-point order, then for `depth` rounds
// map the round-start points lying outside each source arc into the matching
// target arc, order-preservingly. Points already present in a target arc
// must reappear as a subsequence of the mapped list (std::logic_error
// otherwise), which pins the merge uniquely.
struct Generations {
  std::vector<PSL2ZElement> order; // counterclockwise from the identity
  std::vector<int> born;           // parallel: round of first appearance, 0 = initial
};

Generations reconstruct_by_generations(int depth);

} // namespace ordkit
