#pragma once

#include <array>
#include <cstdint>

#include "crossfree/components.hpp"
#include "crossfree/triple_system.hpp"

namespace crossfree {

/// Three pairwise disjoint point sets of equal size m. Cross-freeness
/// (no block meeting all three parts) is a property checked against a
/// system, not an invariant of the partition itself.
struct CrossFreePartition {
    std::array<std::vector<Point>, 3> parts;
    int m = 0;

    static CrossFreePartition make(std::array<std::vector<Point>, 3> parts);
    static CrossFreePartition make(std::vector<Point> x0, std::vector<Point> x1,
                                   std::vector<Point> x2);
};

/// Throws unless parts are disjoint, equal-size and within 0..n-1.
void check_partition(const TripleSystem& ts, const CrossFreePartition& p);

/// Blocks with exactly one point in each part. Empty result means the
/// partition is cross-free for ts.
std::vector<Block> transversal_blocks(const TripleSystem& ts, const CrossFreePartition& p);

/// Thrown by lemma_gn_coloring when a transversal block exists.
struct TransversalBlockError : DesignError {
    Block witness;
    explicit TransversalBlockError(const Block& b);
};

/// 3-coloring obtained by giving each block the smallest i with
/// block ∩ X_i = ∅. Requires p cross-free for ts; each color class then
/// lives inside the complement of its part.
BlockColoring lemma_gn_coloring(const TripleSystem& ts, const CrossFreePartition& p);

enum class SharpnessVariant { n6k3, n6k1 };

/// Counting inequalities showing the conjectured cross-free sizes are
/// extremal: a cross-free set one larger would force fewer blocks than an
/// STS of that order has. Also checks the bound showing three parts of
/// size 6k+1 cannot be cross-free in an STS(18k+3). Exact integer
/// arithmetic; holds for every k >= 1.
bool sharpness_arithmetic(long long k, SharpnessVariant variant);

}  // namespace crossfree
