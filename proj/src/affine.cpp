#include <fmt/format.h>

#include <algorithm>
#include <map>

#include "crossfree/colorings.hpp"

namespace crossfree {

namespace {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

// monic irreducible polynomials for the supported prime-power orders,
// low-degree coefficients first (x^m = -poly[0] - poly[1] x - ...)
const std::map<int, std::pair<int, std::vector<int>>> kIrreducible = {
    {4, {2, {1, 1}}},        // x^2 + x + 1 over GF(2)
    {8, {2, {1, 1, 0}}},     // x^3 + x + 1
    {9, {3, {1, 0}}},        // x^2 + 1 over GF(3)
    {25, {5, {1, 1}}},       // x^2 + x + 1 over GF(5)
    {27, {3, {1, 2, 0}}},    // x^3 + 2x + 1
    {49, {7, {3, 1}}},       // x^2 + x + 3 over GF(7)
};

}  // namespace

bool FieldTable::supported(int q) { return is_prime(q) || kIrreducible.contains(q); }

FieldTable FieldTable::make(int q) {
    std::vector<int> add(q * q), mul(q * q);
    if (is_prime(q)) {
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                add[a * q + b] = (a + b) % q;
                mul[a * q + b] = static_cast<int>(static_cast<long long>(a) * b % q);
            }
        return FieldTable(q, std::move(add), std::move(mul));
    }
    auto it = kIrreducible.find(q);
    if (it == kIrreducible.end())
        throw DesignError(fmt::format("no field table for order {}", q));
    const int p = it->second.first;
    const auto& reduction = it->second.second;  // x^m = -reduction (mod p)
    const int m = static_cast<int>(reduction.size());

    auto digits = [&](int value) {
        std::vector<int> d(m);
        for (int i = 0; i < m; ++i) {
            d[i] = value % p;
            value /= p;
        }
        return d;
    };
    auto encode = [&](const std::vector<int>& d) {
        int value = 0;
        for (int i = m - 1; i >= 0; --i) value = value * p + d[i];
        return value;
    };

    for (int a = 0; a < q; ++a) {
        auto da = digits(a);
        for (int b = 0; b < q; ++b) {
            auto db = digits(b);
            std::vector<int> sum(m);
            for (int i = 0; i < m; ++i) sum[i] = (da[i] + db[i]) % p;
            add[a * q + b] = encode(sum);

            std::vector<int> prod(2 * m - 1, 0);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            for (int d = 2 * m - 2; d >= m; --d) {
                int coeff = prod[d];
                if (coeff == 0) continue;
                prod[d] = 0;
                for (int i = 0; i < m; ++i)
                    prod[d - m + i] = (prod[d - m + i] + (p - reduction[i]) * coeff) % p;
            }
            prod.resize(m);
            mul[a * q + b] = encode(prod);
        }
    }
    return FieldTable(q, std::move(add), std::move(mul));
}

AffinePlane affine_plane(int q) {
    if (!FieldTable::supported(q))
        throw DesignError(fmt::format("order {} is not a supported prime power", q));
    const auto field = FieldTable::make(q);
    AffinePlane plane;
    plane.q = q;
    auto pt = [&](int x, int y) { return x * q + y; };
    // slope classes: lines y = a x + b
    for (int a = 0; a < q; ++a) {
        std::vector<int> cls;
        for (int b = 0; b < q; ++b) {
            std::vector<Point> line;
            for (int x = 0; x < q; ++x) line.push_back(pt(x, field.add(field.mul(a, x), b)));
            std::sort(line.begin(), line.end());
            cls.push_back(static_cast<int>(plane.lines.size()));
            plane.lines.push_back(std::move(line));
        }
        plane.parallel_classes.push_back(std::move(cls));
    }
    // vertical class: lines x = c
    std::vector<int> vertical;
    for (int c = 0; c < q; ++c) {
        std::vector<Point> line;
        for (int y = 0; y < q; ++y) line.push_back(pt(c, y));
        vertical.push_back(static_cast<int>(plane.lines.size()));
        plane.lines.push_back(std::move(line));
    }
    plane.parallel_classes.push_back(std::move(vertical));
    return plane;
}

ColoredSTS plane_substitution_coloring(int q) {
    if (q % 6 != 1 && q % 6 != 3)
        throw DesignError(fmt::format("q = {} admits no STS(q) to substitute", q));
    const auto plane = affine_plane(q);
    const auto cell = sts_of_order(q);

    std::vector<std::pair<Block, int>> colored;
    for (std::size_t cls = 0; cls < plane.parallel_classes.size(); ++cls) {
        for (int line_idx : plane.parallel_classes[cls]) {
            const auto& line = plane.lines[line_idx];
            for (const Block& b : cell.blocks)
                colored.emplace_back(make_block(line[b[0]], line[b[1]], line[b[2]]),
                                     static_cast<int>(cls));
        }
    }
    std::sort(colored.begin(), colored.end());
    std::vector<Block> blocks;
    BlockColoring coloring{q + 1, {}};
    for (auto& [block, color] : colored) {
        blocks.push_back(block);
        coloring.colors.push_back(color);
    }
    return ColoredSTS{TripleSystem::make(q * q, std::move(blocks)), std::move(coloring)};
}

}  // namespace crossfree
