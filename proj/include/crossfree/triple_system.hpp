#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace crossfree {

using Point = int;
using Block = std::array<Point, 3>;
using PointPair = std::pair<Point, Point>;

/// Thrown when a construction or check hits inconsistent input.
struct DesignError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Sorted triple; throws if the points are not distinct.
Block make_block(Point a, Point b, Point c);

inline PointPair make_pair_sorted(Point u, Point v) {
    return u < v ? PointPair{u, v} : PointPair{v, u};
}

/// A triple system on points 0..n-1. Blocks are stored as sorted triples
/// and the block list is kept in lexicographic order, so equal systems
/// compare and serialize identically.
struct TripleSystem {
    int n = 0;
    std::vector<Block> blocks;

    /// Normalizes (sorts points within blocks, sorts the list) and checks
    /// structural invariants: points in range, distinct, no duplicate blocks.
    static TripleSystem make(int n, std::vector<Block> blocks);

    bool operator==(const TripleSystem&) const = default;
};

/// Number of blocks a valid STS(n) must have, n(n-1)/6.
long long sts_block_count(long long n);

/// n admits an STS iff n == 1 or 3 (mod 6); n >= 3 here (n=1 is degenerate).
bool sts_admissible(int n);

/// Pair coverage counts for a block multiset. Index space is the upper
/// triangle of n x n; a valid STS has every count equal to 1.
class PairCoverage {
public:
    explicit PairCoverage(int n);
    static PairCoverage of(const TripleSystem& ts);

    int n() const { return n_; }
    int count(Point u, Point v) const { return counts_[index(u, v)]; }
    void add(Point u, Point v) { ++counts_[index(u, v)]; }
    void remove(Point u, Point v) { --counts_[index(u, v)]; }
    void add_block(const Block& b);
    void remove_block(const Block& b);

    /// First pair (lexicographic) whose count differs from `expected`.
    std::optional<PointPair> first_mismatch(int expected) const;
    long long total() const;

private:
    std::size_t index(Point u, Point v) const;
    int n_;
    std::vector<std::int32_t> counts_;
};

/// Outcome of validate_sts. `first_violation` is the lexicographically
/// smallest badly covered pair, when one exists.
struct ValidityReport {
    bool ok = false;
    bool block_count_ok = false;
    long long uncovered_pairs = 0;
    long long overcovered_pairs = 0;
    std::optional<PointPair> first_violation;
    int first_violation_count = 0;
    std::string message;
};

/// Checks the STS axioms: every pair covered exactly once and
/// |blocks| == n(n-1)/6. Reports, never throws.
ValidityReport validate_sts(const TripleSystem& ts);

/// Partial system builder: rejects any doubly covered pair at insertion.
class PartialTripleSystem {
public:
    explicit PartialTripleSystem(int n) : n_(n), coverage_(n) {}

    int n() const { return n_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    const PairCoverage& coverage() const { return coverage_; }
    bool covered(Point u, Point v) const { return coverage_.count(u, v) > 0; }

    /// Throws DesignError naming the pair if any pair of `b` is already covered.
    void add_block(const Block& b);

    /// Finalize into a normalized TripleSystem (does not validate coverage).
    TripleSystem to_triple_system() const;

private:
    int n_;
    std::vector<Block> blocks_;
    PairCoverage coverage_;
};

}  // namespace crossfree
