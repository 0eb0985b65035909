#pragma once

#include <cstdint>
#include <vector>

#include "maniplex/group.hpp"

namespace maniplex::testing {

// Straight-line oracle for the census: loops over all involution tuples,
// keeps the ones that satisfy the string conditions and generate the whole
// group, with no symmetry reduction, no variable reordering and its own
// closure routine. Returns the raw generator tuples.
std::vector<std::vector<uint32_t>> naive_search(const GroupContext& G, uint32_t rank);

}  // namespace maniplex::testing
