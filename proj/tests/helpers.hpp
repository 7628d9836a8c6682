#pragma once

#include <vector>

#include "crossfree/triple_system.hpp"

namespace crossfree::testing {

/// The Fano plane as listed block by block: 013,124,235,346,450,561,602.
inline TripleSystem fano() {
    return TripleSystem::make(7, {make_block(0, 1, 3), make_block(1, 2, 4), make_block(2, 3, 5),
                                  make_block(3, 4, 6), make_block(4, 5, 0), make_block(5, 6, 1),
                                  make_block(6, 0, 2)});
}

/// Blocks through each point, for replication-number checks.
inline std::vector<int> replication_numbers(const TripleSystem& ts) {
    std::vector<int> reps(ts.n, 0);
    for (const auto& b : ts.blocks)
        for (Point p : b) ++reps[p];
    return reps;
}

}  // namespace crossfree::testing
