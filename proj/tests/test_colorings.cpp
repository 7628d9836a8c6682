#include "crossfree/colorings.hpp"

#include <set>

#include "crossfree/search.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace crossfree;

TEST_CASE("Bose systems validate at small orders") {
    CHECK(bose_sts(9).blocks.size() == 12);
    CHECK(bose_sts(15).blocks.size() == 35);
    for (int n : {9, 15, 21, 27}) CHECK(validate_sts(bose_sts(n)).ok);
    CHECK_THROWS_AS(bose_sts(7), DesignError);
}

TEST_CASE("Skolem systems validate and STS(7) is the Fano plane") {
    CHECK(skolem_sts(7).blocks.size() == 7);
    CHECK(skolem_sts(13).blocks.size() == 26);
    for (int n : {7, 13, 19, 25}) CHECK(validate_sts(skolem_sts(n)).ok);
    CHECK(isomorphic(skolem_sts(7), testing::fano()));
    CHECK_THROWS_AS(skolem_sts(9), DesignError);
}

TEST_CASE("field tables satisfy the field axioms") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 25, 27, 49}) {
        REQUIRE(FieldTable::supported(q));
        auto f = FieldTable::make(q);
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.mul(a, 0) == 0);
            for (int b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
            }
        }
        // additive and multiplicative inverses exist
        for (int a = 0; a < q; ++a) {
            bool add_inv = false, mul_inv = a == 0;
            for (int b = 0; b < q; ++b) {
                add_inv = add_inv || f.add(a, b) == 0;
                mul_inv = mul_inv || f.mul(a, b) == 1;
            }
            CHECK(add_inv);
            CHECK(mul_inv);
        }
        // associativity and distributivity, full sweep
        bool assoc = true, distrib = true;
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                for (int c = 0; c < q; ++c) {
                    assoc = assoc && f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c);
                    distrib = distrib && f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
                }
        CHECK(assoc);
        CHECK(distrib);
    }
    CHECK_FALSE(FieldTable::supported(6));
}

TEST_CASE("affine plane AG(2,q) incidence") {
    SUBCASE("q=3: 9 points, 12 lines, 4 classes") {
        auto p = affine_plane(3);
        CHECK(p.lines.size() == 12);
        CHECK(p.parallel_classes.size() == 4);
    }
    SUBCASE("q=7: 49 points, 56 lines, 8 classes") {
        auto p = affine_plane(7);
        CHECK(p.lines.size() == 56);
        CHECK(p.parallel_classes.size() == 8);
    }
    SUBCASE("every pair of points on exactly one line") {
        for (int q : {3, 4, 5, 7, 9}) {
            auto p = affine_plane(q);
            PairCoverage cov(q * q);
            for (const auto& line : p.lines)
                for (std::size_t i = 0; i < line.size(); ++i)
                    for (std::size_t j = i + 1; j < line.size(); ++j) cov.add(line[i], line[j]);
            CHECK_FALSE(cov.first_mismatch(1).has_value());
        }
    }
    SUBCASE("each class partitions the points; crossing lines meet once") {
        for (int q : {3, 4, 5}) {
            auto p = affine_plane(q);
            for (const auto& cls : p.parallel_classes) {
                std::set<Point> seen;
                for (int li : cls)
                    for (Point pt : p.lines[li]) CHECK(seen.insert(pt).second);
                CHECK(static_cast<int>(seen.size()) == q * q);
            }
            for (std::size_t c1 = 0; c1 < p.parallel_classes.size(); ++c1)
                for (std::size_t c2 = c1 + 1; c2 < p.parallel_classes.size(); ++c2)
                    for (int l1 : p.parallel_classes[c1])
                        for (int l2 : p.parallel_classes[c2]) {
                            std::set<Point> a(p.lines[l1].begin(), p.lines[l1].end());
                            int hits = 0;
                            for (Point pt : p.lines[l2]) hits += a.contains(pt);
                            CHECK(hits == 1);
                        }
        }
    }
}

TEST_CASE("plane substitution: components of size q, bound met with equality") {
    SUBCASE("q=3") {
        auto c = plane_substitution_coloring(3);
        CHECK(c.ts.n == 9);
        CHECK(c.coloring.r == 4);
        CHECK(validate_sts(c.ts).ok);
        auto rep = color_components(c.ts, c.coloring);
        CHECK(rep.largest_nontrivial == 3);
        CHECK(rep.largest == component_lower_bound(9, 4));
    }
    SUBCASE("q=7") {
        auto c = plane_substitution_coloring(7);
        CHECK(c.ts.n == 49);
        CHECK(c.coloring.r == 8);
        CHECK(validate_sts(c.ts).ok);
        auto rep = color_components(c.ts, c.coloring);
        for (int col = 0; col < 8; ++col) {
            CHECK(rep.nontrivial_count(col) == 7);
            for (int s : rep.nontrivial_sizes(col)) CHECK(s == 7);
        }
    }
    SUBCASE("q=4 has no STS(4) to substitute") {
        CHECK_THROWS_AS(plane_substitution_coloring(4), DesignError);
    }
}

TEST_CASE("direct product: small products validate with the census identity") {
    auto sts3 = sts_of_order(3);
    auto p9 = direct_product(sts3, sts3);
    CHECK(p9.n == 9);
    CHECK(p9.blocks.size() == 12);
    CHECK(validate_sts(p9).ok);

    auto p21 = direct_product(skolem_sts(7), sts3);
    CHECK(p21.n == 21);
    CHECK(validate_sts(p21).ok);

    for (auto [n1, n2] : {std::pair{7, 7}, {9, 7}, {9, 9}, {13, 3}}) {
        auto a = sts_of_order(n1);
        auto b = sts_of_order(n2);
        auto prod = direct_product(a, b);
        long long census = static_cast<long long>(a.blocks.size()) * n2 +
                           static_cast<long long>(b.blocks.size()) * n1 +
                           6LL * a.blocks.size() * b.blocks.size();
        CHECK(static_cast<long long>(prod.blocks.size()) == census);
        CHECK(census == sts_block_count(static_cast<long long>(n1) * n2));
        CHECK(validate_sts(prod).ok);
    }

    auto invalid = TripleSystem::make(7, {make_block(0, 1, 2)});
    CHECK_THROWS_AS(direct_product(invalid, sts3), DesignError);
}

TEST_CASE("iterated product keeps q components per class, size 3^t * q, up to t=3") {
    for (int q : {3, 7}) {
        int expected_size = q;
        for (int t = 0; t <= 3; ++t, expected_size *= 3) {
            auto c = iterated_product_coloring(q, t);
            CHECK(c.ts.n == expected_size * q);
            CHECK(validate_sts(c.ts).ok);
            auto rep = color_components(c.ts, c.coloring);
            for (int col = 0; col < c.coloring.r; ++col) {
                auto sizes = rep.nontrivial_sizes(col);
                CHECK(static_cast<int>(sizes.size()) == q);
                for (int s : sizes) CHECK(s == expected_size);
            }
            CHECK(audit_lower_bound(c.ts, c.coloring));
        }
    }
}
