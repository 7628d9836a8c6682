#pragma once

#include <vector>

#include "crossfree/triple_system.hpp"

namespace crossfree {

/// Total coloring of a block list with colors 0..r-1, aligned by index.
struct BlockColoring {
    int r = 0;
    std::vector<int> colors;

    bool operator==(const BlockColoring&) const = default;
};

/// Throws unless the coloring is total over ts.blocks with colors in range.
void check_coloring(const TripleSystem& ts, const BlockColoring& c);

/// Connected components of the subhypergraph formed by each color class.
/// Points touched by no block of a color appear as trivial one-point
/// components, matching the convention that an uncovered vertex is a
/// component of its own.
struct ComponentReport {
    /// per_color[c] = components of color c, each a sorted point set;
    /// components ordered by smallest point.
    std::vector<std::vector<std::vector<Point>>> per_color;
    /// Largest component over all colors, trivial ones included.
    int largest = 0;
    /// Largest component containing at least one block; 0 if none.
    int largest_nontrivial = 0;

    /// Sizes of the nontrivial components of one color, descending.
    std::vector<int> nontrivial_sizes(int color) const;
    int nontrivial_count(int color) const;
};

ComponentReport color_components(const TripleSystem& ts, const BlockColoring& c);

/// The monochromatic-component lower bound: some color must contain a
/// component with at least ceil(n/(r-1)) points (n for r <= 1). Holds for
/// every coloring of a valid STS, so `false` signals a bug upstream.
bool audit_lower_bound(const TripleSystem& ts, const BlockColoring& c);

/// ceil(n/(r-1)) guard used by the audit; exposed for tests.
int component_lower_bound(int n, int r);

/// Small union-find over 0..n-1.
class DisjointSets {
public:
    explicit DisjointSets(int n);
    int find(int x);
    bool unite(int x, int y);

private:
    std::vector<int> parent_;
    std::vector<int> rank_;
};

}  // namespace crossfree
