#include "crossfree/cross_free.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace crossfree {

CrossFreePartition CrossFreePartition::make(std::array<std::vector<Point>, 3> parts) {
    for (auto& part : parts) std::sort(part.begin(), part.end());
    CrossFreePartition p{std::move(parts), 0};
    p.m = static_cast<int>(p.parts[0].size());
    return p;
}

CrossFreePartition CrossFreePartition::make(std::vector<Point> x0, std::vector<Point> x1,
                                            std::vector<Point> x2) {
    return make(std::array<std::vector<Point>, 3>{std::move(x0), std::move(x1), std::move(x2)});
}

void check_partition(const TripleSystem& ts, const CrossFreePartition& p) {
    std::vector<int> owner(ts.n, -1);
    for (int i = 0; i < 3; ++i) {
        if (static_cast<int>(p.parts[i].size()) != p.m)
            throw DesignError(fmt::format("part X{} has size {}, expected {}", i,
                                          p.parts[i].size(), p.m));
        for (Point pt : p.parts[i]) {
            if (pt < 0 || pt >= ts.n)
                throw DesignError(fmt::format("part X{} point {} out of range", i, pt));
            if (owner[pt] != -1)
                throw DesignError(fmt::format("point {} in both X{} and X{}", pt, owner[pt], i));
            owner[pt] = i;
        }
    }
}

namespace {

// -1 when the block misses the part indexing, else part id per point.
inline void part_ids(const Block& b, const std::vector<int>& owner, int out[3]) {
    out[0] = owner[b[0]];
    out[1] = owner[b[1]];
    out[2] = owner[b[2]];
}

std::vector<int> owner_map(const TripleSystem& ts, const CrossFreePartition& p) {
    std::vector<int> owner(ts.n, -1);
    for (int i = 0; i < 3; ++i)
        for (Point pt : p.parts[i]) owner[pt] = i;
    return owner;
}

}  // namespace

std::vector<Block> transversal_blocks(const TripleSystem& ts, const CrossFreePartition& p) {
    check_partition(ts, p);
    auto owner = owner_map(ts, p);
    std::vector<Block> result;
    for (const Block& b : ts.blocks) {
        int ids[3];
        part_ids(b, owner, ids);
        if (ids[0] < 0 || ids[1] < 0 || ids[2] < 0) continue;
        if (ids[0] != ids[1] && ids[0] != ids[2] && ids[1] != ids[2]) result.push_back(b);
    }
    return result;
}

TransversalBlockError::TransversalBlockError(const Block& b)
    : DesignError(fmt::format("block ({},{},{}) meets all three parts", b[0], b[1], b[2])),
      witness(b) {}

BlockColoring lemma_gn_coloring(const TripleSystem& ts, const CrossFreePartition& p) {
    check_partition(ts, p);
    auto owner = owner_map(ts, p);
    BlockColoring coloring{3, {}};
    coloring.colors.reserve(ts.blocks.size());
    for (const Block& b : ts.blocks) {
        int ids[3];
        part_ids(b, owner, ids);
        int color = -1;
        for (int i = 0; i < 3 && color < 0; ++i)
            if (ids[0] != i && ids[1] != i && ids[2] != i) color = i;
        if (color < 0) throw TransversalBlockError(b);
        coloring.colors.push_back(color);
    }
    return coloring;
}

namespace {
long long choose2(long long x) { return x * (x - 1) / 2; }
}

bool sharpness_arithmetic(long long k, SharpnessVariant variant) {
    if (k < 1) throw DesignError("k must be >= 1");
    bool variant_ok = false;
    switch (variant) {
        case SharpnessVariant::n6k3:
            // a cross-free set of size 2k+1 would cap the block count of an
            // STS(6k+3) below its actual n(n-1)/6
            variant_ok = 3 * choose2(2 * k + 1) < choose2(6 * k + 3) / 3;
            break;
        case SharpnessVariant::n6k1:
            variant_ok = 3 * k + 3 * choose2(2 * k) < choose2(6 * k + 1) / 3;
            break;
    }
    // parts of size 6k+1 cannot be cross-free in an STS(18k+3)
    bool g_bound_ok = 3 * choose2(6 * k + 1) < (18 * k + 3) * (18 * k + 2) / 6;
    return variant_ok && g_bound_ok;
}

}  // namespace crossfree
