#include "crossfree/search.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace crossfree {

namespace {

// exact number of leaves the canonical enumeration will visit: sequences
// c_0..c_{b-1} with c_i <= min(r-1, 1 + max of previous); saturates at `cap`
long long canonical_leaf_count(int b, int r, long long cap) {
    // ways[m] = sequences so far whose max used color is m
    std::vector<long long> ways(r, 0);
    if (b == 0) return 1;
    ways[0] = 1;
    for (int i = 1; i < b; ++i) {
        std::vector<long long> next(r, 0);
        for (int m = 0; m < r; ++m) {
            if (ways[m] == 0) continue;
            // reuse any color <= m
            next[m] += ways[m] * (m + 1);
            if (m + 1 < r) next[m + 1] += ways[m];
            if (next[m] > cap) next[m] = cap + 1;
        }
        ways = std::move(next);
    }
    long long total = 0;
    for (long long w : ways) total = std::min(total + w, cap + 1);
    return total;
}

int max_nontrivial_component(const TripleSystem& ts, const std::vector<int>& colors, int r) {
    int best = 0;
    std::vector<int> parent(ts.n), size(ts.n);
    for (int color = 0; color < r; ++color) {
        for (int i = 0; i < ts.n; ++i) {
            parent[i] = i;
            size[i] = 1;
        }
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        bool any = false;
        for (std::size_t b = 0; b < ts.blocks.size(); ++b) {
            if (colors[b] != color) continue;
            any = true;
            const Block& blk = ts.blocks[b];
            for (int e = 0; e < 2; ++e) {
                int x = find(blk[e]), y = find(blk[e + 1]);
                if (x != y) {
                    if (size[x] < size[y]) std::swap(x, y);
                    parent[y] = x;
                    size[x] += size[y];
                }
            }
        }
        if (!any) continue;
        for (std::size_t b = 0; b < ts.blocks.size(); ++b)
            if (colors[b] == color) best = std::max(best, size[find(ts.blocks[b][0])]);
    }
    return best;
}

}  // namespace

FSearchResult exhaustive_f(const TripleSystem& ts, int r, long long budget, bool prune_colors) {
    auto validity = validate_sts(ts);
    if (!validity.ok) throw DesignError("exhaustive_f requires a valid STS");
    const int b = static_cast<int>(ts.blocks.size());
    long long leaves = prune_colors ? canonical_leaf_count(b, r, budget) : 0;
    if (!prune_colors) {
        leaves = 1;
        for (int i = 0; i < b && leaves <= budget; ++i) leaves *= r;
    }
    if (leaves > budget)
        throw DesignError(fmt::format(
            "exhaustive_f needs more than {} leaf evaluations (budget {})", leaves - 1, budget));

    FSearchResult result;
    result.value = ts.n + 1;
    std::vector<int> colors(b, 0);

    // iterative odometer over color sequences, canonical when pruning
    long long explored = 0;
    while (true) {
        ++explored;
        int value = max_nontrivial_component(ts, colors, r);
        if (value < result.value) {
            result.value = value;
            result.witness = BlockColoring{r, colors};
        }
        int i = b - 1;
        for (; i >= 0; --i) {
            int limit = r - 1;
            if (prune_colors) {
                int max_prev = -1;
                for (int j = 0; j < i; ++j) max_prev = std::max(max_prev, colors[j]);
                limit = std::min(limit, max_prev + 1);
            }
            if (colors[i] < limit) {
                ++colors[i];
                std::fill(colors.begin() + i + 1, colors.end(), 0);
                break;
            }
        }
        if (i < 0) break;
    }
    result.explored = explored;
    return result;
}

CrossFreeSearchResult cross_free_search(const TripleSystem& ts, int m, long long budget) {
    if (m < 1 || 3 * m > ts.n) throw DesignError(fmt::format("part size {} infeasible", m));
    const int n = ts.n;
    // blocks through each point, for incremental transversal checks
    std::vector<std::vector<int>> blocks_at(n);
    for (std::size_t b = 0; b < ts.blocks.size(); ++b)
        for (Point p : ts.blocks[b]) blocks_at[p].push_back(static_cast<int>(b));

    std::vector<int> assign(n, -1);  // -1 unassigned, 0..2 part, 3 none
    std::array<int, 3> part_size{0, 0, 0};
    int none_count = 0;
    const int max_none = n - 3 * m;
    long long explored = 0;
    CrossFreeSearchResult result;

    auto transversal_at = [&](int point, int part) {
        for (int b : blocks_at[point]) {
            const Block& blk = ts.blocks[b];
            int mask = 1 << part;
            bool full = true;
            for (Point p : blk) {
                if (p == point) continue;
                int a = assign[p];
                if (a < 0 || a == 3) {
                    full = false;
                    break;
                }
                mask |= 1 << a;
            }
            if (full && mask == 0b111) return true;
        }
        return false;
    };

    auto dfs = [&](auto&& self, int point) -> bool {
        if (++explored > budget)
            throw DesignError(fmt::format("cross_free_search exceeded budget {}", budget));
        if (point == n) {
            std::array<std::vector<Point>, 3> parts;
            for (Point p = 0; p < n; ++p)
                if (assign[p] < 3) parts[assign[p]].push_back(p);
            result.found = true;
            result.witness = CrossFreePartition::make(std::move(parts));
            return true;
        }
        // remaining capacity pruning
        int deficit = 3 * m - part_size[0] - part_size[1] - part_size[2];
        if (deficit > n - point) return false;

        // canonical order: a part may open only if all earlier parts opened
        for (int part = 0; part < 3; ++part) {
            if (part_size[part] >= m) continue;
            if (part > 0 && part_size[part - 1] == 0) break;
            if (transversal_at(point, part)) continue;
            assign[point] = part;
            ++part_size[part];
            if (self(self, point + 1)) return true;
            --part_size[part];
            assign[point] = -1;
        }
        if (none_count < max_none) {
            assign[point] = 3;
            ++none_count;
            if (self(self, point + 1)) return true;
            --none_count;
            assign[point] = -1;
        }
        return false;
    };
    dfs(dfs, 0);
    result.explored = explored;
    return result;
}

std::vector<int> pasch_vector(const TripleSystem& ts) {
    std::map<PointPair, int> third;  // pair -> third point of its block
    for (const Block& b : ts.blocks) {
        third[{b[0], b[1]}] = b[2];
        third[{b[0], b[2]}] = b[1];
        third[{b[1], b[2]}] = b[0];
    }
    auto completes = [&](Point u, Point v) {
        auto it = third.find(make_pair_sorted(u, v));
        return it == third.end() ? -1 : it->second;
    };
    std::vector<int> per_point(ts.n, 0);
    const auto& blocks = ts.blocks;
    // Pasch: blocks {a,b,c},{a,d,e},{f,b,d},{f,c,e}; enumerate over the two
    // blocks through a, then check the two cross blocks. Each configuration
    // is detected once per block pair (six times total), a fixed scale that
    // does not matter for an invariant.
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (std::size_t j = i + 1; j < blocks.size(); ++j) {
            // shared point
            Point shared = -1;
            for (Point p : blocks[i])
                for (Point q : blocks[j])
                    if (p == q) shared = p;
            if (shared < 0) continue;
            std::array<Point, 2> rest_i, rest_j;
            int ri = 0, rj = 0;
            for (Point p : blocks[i])
                if (p != shared) rest_i[ri++] = p;
            for (Point p : blocks[j])
                if (p != shared) rest_j[rj++] = p;
            // two ways to pair the legs
            for (int flip = 0; flip < 2; ++flip) {
                Point b1 = rest_i[0], c1 = rest_i[1];
                Point d1 = rest_j[flip], e1 = rest_j[1 - flip];
                Point f1 = completes(b1, d1);
                if (f1 < 0 || f1 == shared) continue;
                Point f2 = completes(c1, e1);
                if (f1 != f2) continue;
                // found a Pasch on {shared, b1, c1, d1, e1, f1}
                ++per_point[shared];
                ++per_point[b1];
                ++per_point[c1];
                ++per_point[d1];
                ++per_point[e1];
                ++per_point[f1];
            }
        }
    }
    return per_point;
}

bool isomorphic(const TripleSystem& a, const TripleSystem& b) {
    if (a.n != b.n || a.blocks.size() != b.blocks.size()) return false;
    const int n = a.n;
    std::set<Block> b_blocks(b.blocks.begin(), b.blocks.end());
    auto inv_a = pasch_vector(a);
    auto inv_b = pasch_vector(b);
    {
        auto sa = inv_a;
        auto sb = inv_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<std::vector<int>> blocks_at(n);
    for (std::size_t i = 0; i < a.blocks.size(); ++i)
        for (Point p : a.blocks[i]) blocks_at[p].push_back(static_cast<int>(i));

    std::vector<int> image(n, -1);
    std::vector<char> used(n, 0);
    auto consistent = [&](int p) {
        // every fully mapped block through p must land on a block of b
        for (int bi : blocks_at[p]) {
            const Block& blk = a.blocks[bi];
            int u = image[blk[0]], v = image[blk[1]], w = image[blk[2]];
            if (u < 0 || v < 0 || w < 0) continue;
            if (!b_blocks.contains(make_block(u, v, w))) return false;
        }
        return true;
    };
    auto dfs = [&](auto&& self, int p) -> bool {
        if (p == n) return true;
        for (int q = 0; q < n; ++q) {
            if (used[q] || inv_a[p] != inv_b[q]) continue;
            image[p] = q;
            used[q] = 1;
            if (consistent(p) && self(self, p + 1)) return true;
            used[q] = 0;
            image[p] = -1;
        }
        return false;
    };
    return dfs(dfs, 0);
}

namespace {

void complete_partial(int n, std::vector<Block>& partial, PairCoverage& cov,
                      const std::function<void(const std::vector<Block>&)>& emit) {
    // branch on the lexicographically smallest uncovered pair; the third
    // point must exceed both, or a smaller pair would still be uncovered
    Point a = -1, b = -1;
    for (Point u = 0; u < n && a < 0; ++u)
        for (Point v = u + 1; v < n; ++v)
            if (cov.count(u, v) == 0) {
                a = u;
                b = v;
                break;
            }
    if (a < 0) {
        emit(partial);
        return;
    }
    for (Point c = b + 1; c < n; ++c) {
        if (cov.count(a, c) != 0 || cov.count(b, c) != 0) continue;
        Block blk{a, b, c};
        partial.push_back(blk);
        cov.add_block(blk);
        complete_partial(n, partial, cov, emit);
        cov.remove_block(blk);
        partial.pop_back();
    }
}

}  // namespace

std::vector<TripleSystem> enumerate_sts(int n) {
    if (n != 3 && n != 7 && n != 9 && n != 13)
        throw DesignError(fmt::format("enumeration supports n in {{3,7,9,13}}, got {}", n));

    std::vector<Block> partial;
    PairCoverage cov(n);
    // Normalization: relabel any STS so the blocks through 0 are
    // {0,1,2},{0,3,4},... and the block through (1,3) is {1,3,5}. The star
    // stabilizer can always move third(1,3) onto 5, so every isomorphism
    // class still appears among the completions.
    for (Point v = 1; v + 1 < n; v += 2) {
        Block blk{0, v, v + 1};
        partial.push_back(blk);
        cov.add_block(blk);
    }
    if (n >= 7) {
        Block blk{1, 3, 5};
        partial.push_back(blk);
        cov.add_block(blk);
    }

    std::vector<TripleSystem> reps;
    std::vector<std::vector<int>> rep_inv;
    auto emit = [&](const std::vector<Block>& blocks) {
        auto ts = TripleSystem::make(n, blocks);
        auto inv = pasch_vector(ts);
        std::sort(inv.begin(), inv.end());
        for (std::size_t i = 0; i < reps.size(); ++i)
            if (rep_inv[i] == inv && isomorphic(reps[i], ts)) return;
        reps.push_back(std::move(ts));
        rep_inv.push_back(std::move(inv));
    };
    std::function<void(const std::vector<Block>&)> emit_fn = emit;
    complete_partial(n, partial, cov, emit_fn);
    return reps;
}

}  // namespace crossfree
