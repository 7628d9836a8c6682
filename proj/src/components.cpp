#include "crossfree/components.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>

namespace crossfree {

DisjointSets::DisjointSets(int n) : parent_(n), rank_(n, 0) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
}

int DisjointSets::find(int x) {
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x = parent_[x];
    }
    return x;
}

bool DisjointSets::unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (rank_[x] < rank_[y]) std::swap(x, y);
    parent_[y] = x;
    if (rank_[x] == rank_[y]) ++rank_[x];
    return true;
}

void check_coloring(const TripleSystem& ts, const BlockColoring& c) {
    if (c.colors.size() != ts.blocks.size())
        throw DesignError(fmt::format("coloring covers {} blocks, system has {}",
                                      c.colors.size(), ts.blocks.size()));
    for (int col : c.colors)
        if (col < 0 || col >= c.r)
            throw DesignError(fmt::format("color {} out of range 0..{}", col, c.r - 1));
}

ComponentReport color_components(const TripleSystem& ts, const BlockColoring& c) {
    check_coloring(ts, c);
    ComponentReport rep;
    rep.per_color.resize(c.r);
    std::vector<char> touched(ts.n);
    for (int color = 0; color < c.r; ++color) {
        DisjointSets dsu(ts.n);
        std::fill(touched.begin(), touched.end(), 0);
        for (std::size_t b = 0; b < ts.blocks.size(); ++b) {
            if (c.colors[b] != color) continue;
            const Block& blk = ts.blocks[b];
            dsu.unite(blk[0], blk[1]);
            dsu.unite(blk[1], blk[2]);
            touched[blk[0]] = touched[blk[1]] = touched[blk[2]] = 1;
        }
        std::map<int, std::vector<Point>> groups;
        for (Point p = 0; p < ts.n; ++p) groups[dsu.find(p)].push_back(p);
        auto& comps = rep.per_color[color];
        for (auto& [root, pts] : groups) {
            bool nontrivial = pts.size() > 1 || touched[pts.front()];
            int size = static_cast<int>(pts.size());
            rep.largest = std::max(rep.largest, size);
            if (nontrivial) rep.largest_nontrivial = std::max(rep.largest_nontrivial, size);
            comps.push_back(std::move(pts));
        }
    }
    return rep;
}

std::vector<int> ComponentReport::nontrivial_sizes(int color) const {
    std::vector<int> sizes;
    for (const auto& comp : per_color[color])
        if (comp.size() > 1) sizes.push_back(static_cast<int>(comp.size()));
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

int ComponentReport::nontrivial_count(int color) const {
    int count = 0;
    for (const auto& comp : per_color[color])
        if (comp.size() > 1) ++count;
    return count;
}

int component_lower_bound(int n, int r) {
    if (r <= 1) return n;
    return (n + r - 2) / (r - 1);
}

bool audit_lower_bound(const TripleSystem& ts, const BlockColoring& c) {
    auto rep = color_components(ts, c);
    return rep.largest >= component_lower_bound(ts.n, c.r);
}

}  // namespace crossfree
