#pragma once

#include "crossfree/components.hpp"
#include "crossfree/cross_free.hpp"
#include "crossfree/triple_system.hpp"

namespace crossfree {

/// Result of the exhaustive block-coloring search. `value` is the smallest
/// achievable maximum nontrivial monochromatic component size over all
/// r-colorings; `witness` attains it.
struct FSearchResult {
    int value = 0;
    BlockColoring witness;
    long long explored = 0;
};

/// Exact f_r for one system by exhaustive coloring. Color-symmetry pruning
/// (canonical first-use order of colors) is applied when `prune_colors` is
/// set; the minimum is invariant under color permutation, so the result is
/// unchanged. Throws when the enumeration would exceed `budget` leaves,
/// naming the required budget.
FSearchResult exhaustive_f(const TripleSystem& ts, int r = 3, long long budget = 50'000'000,
                           bool prune_colors = true);

struct CrossFreeSearchResult {
    bool found = false;
    CrossFreePartition witness;
    long long explored = 0;
};

/// Finds three disjoint m-sets with no transversal block, or proves none
/// exists by exhausted backtracking (parts in canonical first-use order,
/// transversal pruning on partial assignments). Throws on budget exhaustion.
CrossFreeSearchResult cross_free_search(const TripleSystem& ts, int m,
                                        long long budget = 500'000'000);

/// All Steiner triple systems on n labeled points up to isomorphism, for
/// n in {3, 7, 9, 13}. The first point's star is normalized and completions
/// are deduplicated by invariant fingerprint plus explicit isomorphism
/// search.
std::vector<TripleSystem> enumerate_sts(int n);

/// True when some bijection of points maps the blocks of a onto those of b.
bool isomorphic(const TripleSystem& a, const TripleSystem& b);

/// Number of Pasch configurations (quadrilaterals) through each point;
/// sorted, this is the cheap isomorphism invariant used by enumerate_sts.
std::vector<int> pasch_vector(const TripleSystem& ts);

}  // namespace crossfree
