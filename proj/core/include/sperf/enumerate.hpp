#pragma once

#include <vector>

#include "sperf/graph.hpp"

namespace sperf {

inline constexpr int kMaxEnumerationOrder = 8;

// One representative per isomorphism class of simple graphs on `order`
// vertices, each in canonical labeling, sorted by canonical key.
std::vector<Graph> enumerate_nonisomorphic(int order);

}  // namespace sperf
