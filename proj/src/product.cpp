#include <fmt/format.h>

#include <algorithm>
#include <map>

#include "crossfree/colorings.hpp"

namespace crossfree {

TripleSystem direct_product(const TripleSystem& ts1, const TripleSystem& ts2) {
    if (!validate_sts(ts1).ok || !validate_sts(ts2).ok)
        throw DesignError("direct product requires two valid systems");
    const int n2 = ts2.n;
    auto pt = [&](Point a, Point x) { return a * n2 + x; };
    std::vector<Block> blocks;
    blocks.reserve(ts1.blocks.size() * n2 + ts2.blocks.size() * ts1.n +
                   6 * ts1.blocks.size() * ts2.blocks.size());
    for (const Block& b : ts1.blocks)
        for (Point x = 0; x < n2; ++x)
            blocks.push_back(make_block(pt(b[0], x), pt(b[1], x), pt(b[2], x)));
    for (Point a = 0; a < ts1.n; ++a)
        for (const Block& b : ts2.blocks)
            blocks.push_back(make_block(pt(a, b[0]), pt(a, b[1]), pt(a, b[2])));
    for (const Block& b1 : ts1.blocks) {
        for (const Block& b2 : ts2.blocks) {
            std::array<int, 3> perm{0, 1, 2};
            do {
                blocks.push_back(make_block(pt(b1[0], b2[perm[0]]), pt(b1[1], b2[perm[1]]),
                                            pt(b1[2], b2[perm[2]])));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
    return TripleSystem::make(ts1.n * ts2.n, std::move(blocks));
}

namespace {

// one product-with-T step that carries the coloring along: blocks projecting
// into a component C of color c (lifted copies and transversals) keep color
// c; a fiber block over point a takes the smallest color in which a sits in
// a nontrivial component
ColoredSTS product_with_t_step(const ColoredSTS& base) {
    const auto t_block = sts_of_order(3);
    auto prod = direct_product(base.ts, t_block);

    std::map<Block, int> base_color;
    for (std::size_t i = 0; i < base.ts.blocks.size(); ++i)
        base_color[base.ts.blocks[i]] = base.coloring.colors[i];

    const auto report = color_components(base.ts, base.coloring);
    std::vector<int> claim(base.ts.n, -1);
    for (int c = base.coloring.r - 1; c >= 0; --c)
        for (const auto& comp : report.per_color[c])
            if (comp.size() > 1)
                for (Point p : comp) claim[p] = c;

    BlockColoring coloring{base.coloring.r, {}};
    coloring.colors.reserve(prod.blocks.size());
    for (const Block& b : prod.blocks) {
        const std::array<Point, 3> a{b[0] / 3, b[1] / 3, b[2] / 3};
        if (a[0] == a[2]) {  // fiber block {(a,0),(a,1),(a,2)}
            if (claim[a[0]] < 0) throw DesignError("point outside every nontrivial component");
            coloring.colors.push_back(claim[a[0]]);
        } else {
            coloring.colors.push_back(base_color.at(make_block(a[0], a[1], a[2])));
        }
    }
    return ColoredSTS{std::move(prod), std::move(coloring)};
}

}  // namespace

ColoredSTS iterated_product_coloring(int q, int t) {
    if (t < 0) throw DesignError("t must be >= 0");
    auto colored = plane_substitution_coloring(q);
    for (int step = 0; step < t; ++step) colored = product_with_t_step(colored);
    return colored;
}

}  // namespace crossfree
