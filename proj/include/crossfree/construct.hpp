#pragma once

#include "crossfree/cross_free.hpp"
#include "crossfree/factorization.hpp"
#include "crossfree/triple_system.hpp"

namespace crossfree {

/// Global point layout for the STS(18k+3) construction: copy i of the
/// factorization ground set occupies [6k*i, 6k*(i+1)), ordered by abstract label,
/// and the three closure points take the top indices 18k, 18k+1, 18k+2.
/// Everything is recoverable from n and k alone.
struct CopyLabeling {
    int k;

    Point global(int copy, int abstract_label_1based) const {
        return 6 * k * ((copy % 3 + 3) % 3) + abstract_label_1based - 1;
    }
    Point closure_point(int t) const { return 18 * k + t; }
};

/// The bundle's matchings rewritten in abstract coordinates 0..6k-1
/// (vertex t-1 for label a_t), ready to be offset into any copy.
struct RelabeledLemma {
    int k = 0;
    std::vector<std::vector<PointPair>> factors;       // 2k
    std::vector<std::vector<PointPair>> near_factors;  // 4k
};

RelabeledLemma relabel_to_abstract(const LemmaPartition& lp);

/// Adds the blocks with two points in copy `source_copy` and apex in the
/// next copy: per group j the four near factors hang off the labels
/// a_{6j+4}, a_{6j+1}, a_{6j+6}, a_{6j+5} and the two factors off
/// a_{6j+2}, a_{6j+3}. Throws on any double-covered pair.
void extend_copy(PartialTripleSystem& pts, const RelabeledLemma& rl, int source_copy);

/// Pairs of the three copies still uncovered after the cyclic extension.
/// Checks the census: k middle edges per copy plus 24k cross edges, every
/// vertex of degree 3. Throws on mismatch.
std::vector<PointPair> build_leave_graph(const PartialTripleSystem& pts, int k);

struct LeaveFactors {
    std::array<std::vector<PointPair>, 3> factors;
    bool used_fallback = false;
};

/// Splits the leave graph into three perfect matchings. Primary path:
/// the closed-form rows of the construction; they are validated and, if
/// they fail, a backtracking 1-factorization takes over (and the result
/// records that it did).
LeaveFactors factor_u(const std::vector<PointPair>& leave, int k);

/// Generic 1-factorization of a d-regular graph by backtracking perfect
/// matching extraction; throws if none exists. Exposed for tests.
std::vector<std::vector<PointPair>> one_factorize(const std::vector<PointPair>& edges, int n,
                                                  int degree);

/// Extends each leave factor to blocks through one of the three closure
/// points, appends the closure block itself, and returns the finished
/// system (not yet validated).
TripleSystem close_with_abc(PartialTripleSystem& pts, const LeaveFactors& lf, int k);

/// The partition the construction guarantees cross-free: X_i = copy i.
CrossFreePartition canonical_partition(int k);

struct ConstructionResult {
    TripleSystem ts;
    CrossFreePartition partition;
    int k = 0;
    bool used_fallback = false;
};

/// Builds the STS(18k+3) with a cross-free partition of part size 6k.
/// Every stage validates its own postcondition; the returned system passes
/// validate_sts and has no transversal blocks.
ConstructionResult construct_cross_free_sts(int k);

}  // namespace crossfree
