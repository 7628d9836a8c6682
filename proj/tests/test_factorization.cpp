#include "crossfree/factorization.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"

using namespace crossfree;

namespace {

std::set<PointPair> edge_set(const std::vector<PointPair>& edges) {
    std::set<PointPair> s;
    for (auto e : edges) s.insert(make_pair_sorted(e.first, e.second));
    return s;
}

}  // namespace

TEST_CASE("standard factorization k=1: F_1 = {(1,inf),(5,2),(4,3)}") {
    auto factors = standard_factorization(1);
    REQUIRE(factors.size() == 5);
    CHECK(edge_set(factors[0].edges) ==
          std::set<PointPair>{{kInfinityVertex, 1}, {2, 5}, {3, 4}});
}

TEST_CASE("standard factorization k=2: F_3 expands mod 11") {
    auto factors = standard_factorization(2);
    REQUIRE(factors.size() == 11);
    CHECK(edge_set(factors[2].edges) ==
          std::set<PointPair>{{kInfinityVertex, 3}, {2, 4}, {1, 5}, {6, 11}, {7, 10}, {8, 9}});
}

TEST_CASE("standard factorization partitions all pairs of K_6k") {
    for (int k : {1, 2, 3, 5, 8}) {
        auto factors = standard_factorization(k);
        PairCoverage cov(6 * k);
        for (const auto& f : factors) {
            CHECK(static_cast<int>(f.edges.size()) == 3 * k);
            CHECK(f.pairwise_disjoint());
            CHECK(f.missed_vertices(6 * k).empty());
            for (auto [u, v] : f.edges) cov.add(u, v);
        }
        CHECK_FALSE(cov.first_mismatch(1).has_value());
    }
}

TEST_CASE("classify_edge_factor matches the factor lists") {
    SUBCASE("jumping pair (j,j+2) lies in F_{j+1}") {
        for (int k : {2, 3, 4})
            for (int j = 1; j + 2 <= 6 * k - 1; ++j)
                if (j + 1 <= 6 * k - 1)
                    CHECK(classify_edge_factor({j, j + 2}, k) == j + 1);
    }
    SUBCASE("(5,inf) lies in F_5") {
        CHECK(classify_edge_factor({kInfinityVertex, 5}, 1) == 5);
        CHECK(classify_edge_factor({kInfinityVertex, 5}, 4) == 5);
    }
    SUBCASE("k=2: consecutive pair (6,7) of C_6 lands in F_1 (3k+m = 12 = 1 mod 11)") {
        CHECK(classify_edge_factor({6, 7}, 2) == 1);
    }
    SUBCASE("exhaustive against the factor lists") {
        for (int k : {1, 2, 3}) {
            auto factors = standard_factorization(k);
            for (int i = 1; i <= 6 * k - 1; ++i)
                for (auto e : factors[i - 1].edges) CHECK(classify_edge_factor(e, k) == i);
        }
    }
}

TEST_CASE("Z_1 is the W gadget") {
    CHECK(edge_set(build_zk(1)) ==
          std::set<PointPair>{{1, 3}, {2, 4}, {3, 5}, {kInfinityVertex, 5}});
}

TEST_CASE("Z_2 = W u C_6") {
    CHECK(edge_set(build_zk(2)) == std::set<PointPair>{{1, 3},
                                                       {2, 4},
                                                       {3, 5},
                                                       {kInfinityVertex, 5},
                                                       {6, 7},
                                                       {6, 8},
                                                       {8, 10},
                                                       {9, 11}});
}

TEST_CASE("Z_3 = W u A_6 u B_6") {
    CHECK(edge_set(build_zk(3)) == std::set<PointPair>{{1, 3},
                                                       {2, 4},
                                                       {3, 5},
                                                       {kInfinityVertex, 5},
                                                       {6, 8},
                                                       {8, 10},
                                                       {10, 12},
                                                       {7, 9},
                                                       {11, 13},
                                                       {13, 15},
                                                       {15, 17},
                                                       {14, 16}});
}

TEST_CASE("Z_k has 4k edges in 4k distinct factors, shaped k P_4 + k K_2") {
    for (int k = 1; k <= 30; ++k) {
        auto groups = zk_groups(k);
        CHECK(static_cast<int>(groups.size()) == k);
        auto edges = build_zk(k);
        CHECK(static_cast<int>(edges.size()) == 4 * k);
        CHECK(edge_set(edges).size() == edges.size());
        std::set<int> hosts;
        for (auto e : edges) CHECK(hosts.insert(classify_edge_factor(e, k)).second);
        // all vertices distinct across groups: exactly 6k of them
        std::set<Point> vertices;
        for (const auto& g : groups) {
            for (Point v : g.path) vertices.insert(v);
            for (Point v : g.pendant) vertices.insert(v);
        }
        CHECK(static_cast<int>(vertices.size()) == 6 * k);
    }
}

TEST_CASE("lemma partition k=1: frozen bundle") {
    auto lp = lemma_part_partition(1);
    CHECK(lp.leave == std::vector<PointPair>{{3, 5}});
    CHECK(edge_set(lp.factors[1].edges) ==
          std::set<PointPair>{{1, 3}, {kInfinityVertex, 5}, {2, 4}});  // F*
    CHECK(edge_set(lp.factors[0].edges) ==
          std::set<PointPair>{{kInfinityVertex, 1}, {2, 5}, {3, 4}});  // kept F_1
    CHECK(lp.uncovered ==
          std::vector<PointPair>{{3, 5}, {2, 4}, {1, 3}, {kInfinityVertex, 5}});
    CHECK(lp.labeling == std::vector<Point>{1, 3, 5, kInfinityVertex, 2, 4});
    CHECK(verify_lemma_part(lp).ok());
}

TEST_CASE("lemma partition k=2: 8 factors lose an edge, 3 kept plus F*") {
    auto lp = lemma_part_partition(2);
    CHECK(lp.factors.size() == 4);
    CHECK(lp.near_factors.size() == 8);
    for (const auto& nf : lp.near_factors) CHECK(nf.edges.size() == 5);
    for (const auto& f : lp.factors) CHECK(f.edges.size() == 6);
    CHECK(verify_lemma_part(lp).ok());
}

TEST_CASE("verify_lemma_part passes for k = 1..30") {
    for (int k = 1; k <= 30; ++k) {
        auto rep = verify_lemma_part(lemma_part_partition(k));
        INFO("k = ", k, ": ", rep.detail);
        CHECK(rep.ok());
    }
}

TEST_CASE("F* u T = Z_k and F* is edge-disjoint from everything else") {
    for (int k : {1, 2, 3, 4}) {
        auto lp = lemma_part_partition(k);
        auto f_star = edge_set(lp.factors.back().edges);
        auto t = edge_set(lp.leave);
        auto zk = edge_set(build_zk(k));
        std::set<PointPair> joined = f_star;
        joined.insert(t.begin(), t.end());
        CHECK(joined == zk);
        CHECK(f_star.size() + t.size() == zk.size());
        for (std::size_t i = 0; i + 1 < lp.factors.size(); ++i)
            for (auto e : lp.factors[i].edges) CHECK_FALSE(f_star.contains(e));
        for (const auto& nf : lp.near_factors)
            for (auto e : nf.edges) CHECK_FALSE(f_star.contains(e));
    }
}

TEST_CASE("mutated partitions fail the right checks") {
    SUBCASE("copying an edge into another factor double-covers a pair") {
        auto lp = lemma_part_partition(2);
        lp.factors[1].edges.push_back(lp.factors[0].edges.back());
        auto rep = verify_lemma_part(lp);
        CHECK_FALSE(rep.pairs_partitioned);
        CHECK_FALSE(rep.ok());
    }
    SUBCASE("moving an edge between factors breaks the matching shapes") {
        auto lp = lemma_part_partition(2);
        auto edge = lp.factors[0].edges.back();
        lp.factors[0].edges.pop_back();
        lp.factors[1].edges.push_back(edge);
        auto rep = verify_lemma_part(lp);
        CHECK_FALSE(rep.factors_perfect);
        CHECK_FALSE(rep.ok());
    }
    SUBCASE("replacing T by a non-middle Z_k edge breaks the middle check") {
        auto lp = lemma_part_partition(1);
        lp.leave = {{1, 3}};  // outer path edge instead of the middle (3,5)
        auto rep = verify_lemma_part(lp);
        CHECK_FALSE(rep.middle_matches_leave);
        CHECK_FALSE(rep.ok());
    }
}

TEST_CASE("golden dump for k=1") {
    auto lp = lemma_part_partition(1);
    CHECK(dump_lemma_partition(lp) ==
          "F1: 1-inf 2-5 3-4\n"
          "F2: 5-inf 1-3 2-4\n"
          "E1: 4-inf 1-2\n"
          "E2: 3-inf 1-5\n"
          "E3: 2-inf 4-5\n"
          "E4: 1-4 2-3\n"
          "T: 3-5\n"
          "labels: 1 3 5 inf 2 4\n");
}

TEST_CASE("HkPattern shape") {
    HkPattern hk{3};
    CHECK(hk.all_edges().size() == 12);
    CHECK(hk.middle_edges() == std::vector<PointPair>{{1, 2}, {7, 8}, {13, 14}});
}
