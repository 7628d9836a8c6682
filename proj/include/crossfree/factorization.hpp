#pragma once

#include <string>
#include <vector>

#include "crossfree/triple_system.hpp"

namespace crossfree {

/// The wheel vertex of the standard factorization of K_{6k} is encoded as 0;
/// finite labels 1..6k-1 keep their values, so the mod-(6k-1) arithmetic in
/// the factor formulas stays literal.
inline constexpr Point kInfinityVertex = 0;

/// A set of pairwise disjoint edges. A factor on 6k vertices has 3k edges;
/// a near factor has 3k-1 and misses exactly two vertices.
struct Matching {
    std::vector<PointPair> edges;

    /// Vertices of 0..n-1 not covered by any edge, ascending.
    std::vector<Point> missed_vertices(int n) const;
    bool pairwise_disjoint() const;
};

/// The 6k-1 factors of the round-robin factorization of K_{6k} on
/// {1..6k-1} u {inf}: F_i = {(i,inf)} u {(i-j, i+j) : 1 <= j <= 3k-1}
/// mod 6k-1. Index 0 of the result is F_1.
std::vector<Matching> standard_factorization(int k);

/// Factor index i in 1..6k-1 of an edge of K_{6k}: for finite (u,v) the
/// unique i with u+v = 2i (mod 6k-1); for (u,inf), i = u.
int classify_edge_factor(PointPair edge, int k);

/// One component group of Z_k (and of H_k): a P_4 in path order plus a
/// pendant edge.
struct ZkGroup {
    std::array<Point, 4> path;
    std::array<Point, 2> pendant;

    std::vector<PointPair> edges() const;
    PointPair middle() const { return make_pair_sorted(path[1], path[2]); }
};

/// The groups of Z_k in canonical order: the W gadget first, then the
/// A/B gadgets (odd k) or C/D gadgets (even k) ascending by base vertex.
std::vector<ZkGroup> zk_groups(int k);

/// The 4k edges of Z_k, flattened from zk_groups. Isomorphic to H_k with
/// every edge in a distinct standard factor.
std::vector<PointPair> build_zk(int k);

/// The abstract target graph H_k on vertices 0..6k-1 (vertex t-1 plays the
/// role of the label a_t): group j carries the path 6j..6j+3 and the
/// pendant edge (6j+4, 6j+5).
struct HkPattern {
    int k;

    std::vector<PointPair> path_edges() const;
    std::vector<PointPair> pendant_edges() const;
    std::vector<PointPair> middle_edges() const;
    std::vector<PointPair> all_edges() const;
};

/// The factor/near-factor bundle on K_{6k}: 2k factors (kept standard factors first,
/// the recombined factor F* last), 4k near factors E_1..E_4k whose uncovered
/// pairs form a copy of H_k, the leave matching T (image of the middle of
/// H_k), and the labeling realizing the isomorphism.
struct LemmaPartition {
    int k = 0;
    std::vector<Matching> factors;
    std::vector<Matching> near_factors;
    /// uncovered[i] is the pair missed by near_factors[i].
    std::vector<PointPair> uncovered;
    /// T: the k middle edges, left uncovered by the whole partition.
    std::vector<PointPair> leave;
    /// labeling[t] = concrete vertex playing abstract vertex t (0-based).
    std::vector<Point> labeling;
};

/// Builds the partition: deletes each Z_k edge from its host factor to make
/// the near factors, keeps the 2k-1 untouched factors, and appends
/// F* = Z_k minus its middle. Near factors are indexed so that group j
/// contributes, in order, the factors missing the middle, the pendant, the
/// first path edge and the last path edge of its gadget.
LemmaPartition lemma_part_partition(int k);

struct LemmaPartReport {
    bool pairs_partitioned = false;   // factors u near factors u T = all pairs, once
    bool factors_perfect = false;     // each factor covers all 6k vertices
    bool near_factors_ok = false;     // sizes, disjointness, recorded uncovered pair
    bool hk_isomorphic = false;       // uncovered graph = k P_4's + k K_2's, labeling-consistent
    bool middle_matches_leave = false;
    std::string detail;

    bool ok() const {
        return pairs_partitioned && factors_perfect && near_factors_ok && hk_isomorphic &&
               middle_matches_leave;
    }
};

LemmaPartReport verify_lemma_part(const LemmaPartition& lp);

/// Debug dump: one matching per line ("F<i>:" / "E<i>:", edges "u-v",
/// infinity printed as "inf"), then T and the labeling.
std::string dump_lemma_partition(const LemmaPartition& lp);

}  // namespace crossfree
