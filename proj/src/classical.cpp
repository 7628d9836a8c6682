#include <fmt/format.h>

#include "crossfree/colorings.hpp"

namespace crossfree {

TripleSystem bose_sts(int n) {
    if (n < 3 || n % 6 != 3) throw DesignError(fmt::format("Bose needs n = 3 (mod 6), got {}", n));
    const int q = n / 3;  // odd group order 2k+1
    const int inv2 = (q + 1) / 2;
    auto pt = [&](int x, int level) { return level * q + x; };
    std::vector<Block> blocks;
    for (int x = 0; x < q; ++x) blocks.push_back(make_block(pt(x, 0), pt(x, 1), pt(x, 2)));
    for (int x = 0; x < q; ++x) {
        for (int y = x + 1; y < q; ++y) {
            int z = static_cast<int>(static_cast<long long>(x + y) * inv2 % q);
            for (int level = 0; level < 3; ++level)
                blocks.push_back(make_block(pt(x, level), pt(y, level), pt(z, (level + 1) % 3)));
        }
    }
    return TripleSystem::make(n, std::move(blocks));
}

namespace {

// Half-idempotent commutative quasigroup on 0..2m-1: a Latin square L with
// L(i,i) = i for i < m, built by relabeling the symbols of (Z_2m, +).
class HalfIdempotentQuasigroup {
public:
    explicit HalfIdempotentQuasigroup(int m) : m_(m), relabel_(2 * m) {
        // even symbol 2i (the diagonal value at i) becomes i; odd symbols
        // fill m..2m-1
        for (int i = 0; i < m; ++i) relabel_[(2 * i) % (2 * m)] = i;
        for (int i = 0; i < m; ++i) relabel_[2 * i + 1] = m + i;
    }
    int op(int a, int b) const { return relabel_[(a + b) % (2 * m_)]; }

private:
    int m_;
    std::vector<int> relabel_;
};

}  // namespace

TripleSystem skolem_sts(int n) {
    if (n < 7 || n % 6 != 1)
        throw DesignError(fmt::format("Skolem needs n = 1 (mod 6), got {}", n));
    const int m = n / 6;          // quasigroup order 2m
    const int infinity = n - 1;   // the extra point, numbered last
    const HalfIdempotentQuasigroup qg(m);
    auto pt = [&](int x, int level) { return level * 2 * m + x; };
    std::vector<Block> blocks;
    for (int i = 0; i < m; ++i) blocks.push_back(make_block(pt(i, 0), pt(i, 1), pt(i, 2)));
    for (int i = 0; i < m; ++i)
        for (int level = 0; level < 3; ++level)
            blocks.push_back(make_block(infinity, pt(m + i, level), pt(i, (level + 1) % 3)));
    for (int x = 0; x < 2 * m; ++x)
        for (int y = x + 1; y < 2 * m; ++y)
            for (int level = 0; level < 3; ++level)
                blocks.push_back(make_block(pt(x, level), pt(y, level),
                                            pt(qg.op(x, y), (level + 1) % 3)));
    return TripleSystem::make(n, std::move(blocks));
}

TripleSystem sts_of_order(int n) {
    if (n == 3) return TripleSystem::make(3, {make_block(0, 1, 2)});
    if (n % 6 == 3) return bose_sts(n);
    if (n % 6 == 1 && n >= 7) return skolem_sts(n);
    throw DesignError(fmt::format("no STS of order {} (need n = 1 or 3 mod 6)", n));
}

}  // namespace crossfree
