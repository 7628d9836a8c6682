#include "crossfree/triple_system.hpp"

#include <algorithm>
#include <fmt/format.h>

namespace crossfree {

Block make_block(Point a, Point b, Point c) {
    Block blk{a, b, c};
    std::sort(blk.begin(), blk.end());
    if (blk[0] == blk[1] || blk[1] == blk[2])
        throw DesignError(fmt::format("block ({},{},{}) has repeated points", a, b, c));
    return blk;
}

TripleSystem TripleSystem::make(int n, std::vector<Block> blocks) {
    if (n < 0) throw DesignError("negative point count");
    for (auto& b : blocks) {
        std::sort(b.begin(), b.end());
        if (b[0] < 0 || b[2] >= n)
            throw DesignError(fmt::format("block ({},{},{}) out of range 0..{}", b[0], b[1], b[2], n - 1));
        if (b[0] == b[1] || b[1] == b[2])
            throw DesignError(fmt::format("block ({},{},{}) has repeated points", b[0], b[1], b[2]));
    }
    std::sort(blocks.begin(), blocks.end());
    if (std::adjacent_find(blocks.begin(), blocks.end()) != blocks.end())
        throw DesignError("duplicate block in system");
    return TripleSystem{n, std::move(blocks)};
}

long long sts_block_count(long long n) { return n * (n - 1) / 6; }

bool sts_admissible(int n) { return n >= 3 && (n % 6 == 1 || n % 6 == 3); }

PairCoverage::PairCoverage(int n) : n_(n), counts_(static_cast<std::size_t>(n) * (n - 1) / 2, 0) {}

std::size_t PairCoverage::index(Point u, Point v) const {
    if (u > v) std::swap(u, v);
    // pairs (u,v), u<v, laid out row by row
    return static_cast<std::size_t>(u) * (2 * n_ - u - 1) / 2 + (v - u - 1);
}

void PairCoverage::add_block(const Block& b) {
    add(b[0], b[1]);
    add(b[0], b[2]);
    add(b[1], b[2]);
}

void PairCoverage::remove_block(const Block& b) {
    remove(b[0], b[1]);
    remove(b[0], b[2]);
    remove(b[1], b[2]);
}

PairCoverage PairCoverage::of(const TripleSystem& ts) {
    PairCoverage cov(ts.n);
    for (const auto& b : ts.blocks) cov.add_block(b);
    return cov;
}

std::optional<PointPair> PairCoverage::first_mismatch(int expected) const {
    for (Point u = 0; u < n_; ++u)
        for (Point v = u + 1; v < n_; ++v)
            if (count(u, v) != expected) return PointPair{u, v};
    return std::nullopt;
}

long long PairCoverage::total() const {
    long long s = 0;
    for (auto c : counts_) s += c;
    return s;
}

ValidityReport validate_sts(const TripleSystem& ts) {
    ValidityReport rep;
    rep.block_count_ok =
        static_cast<long long>(ts.blocks.size()) == sts_block_count(ts.n);
    auto cov = PairCoverage::of(ts);
    for (Point u = 0; u < ts.n; ++u) {
        for (Point v = u + 1; v < ts.n; ++v) {
            int c = cov.count(u, v);
            if (c == 1) continue;
            if (c == 0) ++rep.uncovered_pairs;
            else ++rep.overcovered_pairs;
            if (!rep.first_violation) {
                rep.first_violation = PointPair{u, v};
                rep.first_violation_count = c;
            }
        }
    }
    rep.ok = rep.block_count_ok && rep.uncovered_pairs == 0 && rep.overcovered_pairs == 0;
    if (rep.ok) {
        rep.message = "valid STS";
    } else if (rep.first_violation) {
        rep.message = fmt::format("pair ({},{}) covered {} times ({} uncovered, {} overcovered)",
                                  rep.first_violation->first, rep.first_violation->second,
                                  rep.first_violation_count, rep.uncovered_pairs,
                                  rep.overcovered_pairs);
    } else {
        rep.message = fmt::format("block count {} != {}", ts.blocks.size(), sts_block_count(ts.n));
    }
    return rep;
}

void PartialTripleSystem::add_block(const Block& b) {
    const PointPair pairs[3] = {{b[0], b[1]}, {b[0], b[2]}, {b[1], b[2]}};
    for (auto [u, v] : pairs) {
        if (u == v || u < 0 || v >= n_)
            throw DesignError(fmt::format("bad block ({},{},{})", b[0], b[1], b[2]));
        if (coverage_.count(u, v) > 0)
            throw DesignError(fmt::format("pair ({},{}) would be covered twice", u, v));
    }
    Block sorted = b;
    std::sort(sorted.begin(), sorted.end());
    blocks_.push_back(sorted);
    coverage_.add_block(sorted);
}

TripleSystem PartialTripleSystem::to_triple_system() const {
    return TripleSystem::make(n_, blocks_);
}

}  // namespace crossfree
