// Acceptance suite: runs every criterion the toolkit promises and prints
// one PASS/FAIL line per criterion. Exit status is nonzero if any fail.

#include <fmt/format.h>

#include <string>
#include <vector>

#include "crossfree/colorings.hpp"
#include "crossfree/construct.hpp"
#include "crossfree/search.hpp"

namespace cf = crossfree;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    fmt::print("{} criterion {}: {}\n", ok ? "PASS" : "FAIL", criterion, detail);
    if (!ok) ++failures;
}

constexpr int kMax = 30;

}  // namespace

int main() {
    std::vector<cf::ConstructionResult> constructions;
    constructions.reserve(kMax);

    // 1. construction validity for k = 1..30: valid STS(18k+3), exact block
    //    count, cross-free canonical partition of part size 6k
    {
        bool ok = true;
        std::string detail;
        for (int k = 1; k <= kMax && ok; ++k) {
            try {
                auto res = cf::construct_cross_free_sts(k);
                auto validity = cf::validate_sts(res.ts);
                long long want_blocks = (18LL * k + 3) * (18 * k + 2) / 6;
                bool this_ok = validity.ok && res.ts.n == 18 * k + 3 &&
                               static_cast<long long>(res.ts.blocks.size()) == want_blocks &&
                               res.partition.m == 6 * k &&
                               cf::transversal_blocks(res.ts, res.partition).empty();
                if (!this_ok) {
                    ok = false;
                    detail = fmt::format("k={}: {}", k, validity.message);
                }
                constructions.push_back(std::move(res));
            } catch (const std::exception& e) {
                ok = false;
                detail = fmt::format("k={}: {}", k, e.what());
            }
        }
        report(1, ok,
               ok ? fmt::format("construction valid and cross-free for k=1..{}", kMax) : detail);
    }

    // 2. Lemma 4 witness: exactly one nontrivial component per color, each of
    //    size 12k+3 = n - 6k
    {
        bool ok = constructions.size() == kMax;
        std::string detail = "constructions missing";
        for (std::size_t i = 0; ok && i < constructions.size(); ++i) {
            const auto& res = constructions[i];
            int k = res.k;
            auto coloring = cf::lemma_gn_coloring(res.ts, res.partition);
            auto rep = cf::color_components(res.ts, coloring);
            for (int c = 0; c < 3 && ok; ++c) {
                auto sizes = rep.nontrivial_sizes(c);
                if (sizes.size() != 1 || sizes[0] != 12 * k + 3) {
                    ok = false;
                    detail = fmt::format("k={} color {}: {} components, largest {}", k, c,
                                         sizes.size(), sizes.empty() ? 0 : sizes[0]);
                }
            }
            if (ok && !cf::audit_lower_bound(res.ts, coloring)) {
                ok = false;
                detail = fmt::format("k={}: component bound audit failed", k);
            }
        }
        report(2, ok,
               ok ? fmt::format("one monochromatic component of size 12k+3 per color, k=1..{}",
                                kMax)
                  : detail);
    }

    // 3. Lemma 8 partition verifies for k = 1..30 (both parities included)
    {
        bool ok = true;
        std::string detail;
        bool saw_odd = false, saw_even = false;
        for (int k = 1; k <= kMax && ok; ++k) {
            auto rep = cf::verify_lemma_part(cf::lemma_part_partition(k));
            (k % 2 ? saw_odd : saw_even) = true;
            if (!rep.ok()) {
                ok = false;
                detail = fmt::format("k={}: {}", k, rep.detail);
            }
        }
        ok = ok && saw_odd && saw_even;
        report(3, ok,
               ok ? fmt::format("factor/near-factor partition verified for k=1..{}", kMax)
                  : detail);
    }

    // 4. small-n extremal numbers by exhaustive coloring
    {
        bool ok = true;
        std::string detail;
        try {
            auto f7 = cf::exhaustive_f(cf::enumerate_sts(7).at(0), 3);
            auto f9 = cf::exhaustive_f(cf::enumerate_sts(9).at(0), 3);
            ok = f7.value == 6 && f9.value == 7;
            detail = fmt::format("f(7)={}, f(9)={}", f7.value, f9.value);
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        report(4, ok, detail);
    }

    // 5. r-coloring equality family
    {
        bool ok = true;
        std::string detail = "q=3 t=0..2 and q=7 t=0 profiles as predicted";
        auto check_profile = [&](const cf::ColoredSTS& colored, int comp_count, int comp_size,
                                 const std::string& label) {
            if (!cf::validate_sts(colored.ts).ok) {
                ok = false;
                detail = label + ": invalid system";
                return;
            }
            auto rep = cf::color_components(colored.ts, colored.coloring);
            for (int c = 0; c < colored.coloring.r; ++c) {
                auto sizes = rep.nontrivial_sizes(c);
                if (static_cast<int>(sizes.size()) != comp_count) {
                    ok = false;
                    detail = fmt::format("{}: color {} has {} components", label, c, sizes.size());
                    return;
                }
                for (int s : sizes)
                    if (s != comp_size) {
                        ok = false;
                        detail = fmt::format("{}: component of size {} != {}", label, s, comp_size);
                        return;
                    }
            }
        };
        try {
            auto base = cf::plane_substitution_coloring(3);
            check_profile(base, 3, 3, "q=3 t=0");
            auto rep = cf::color_components(base.ts, base.coloring);
            if (rep.largest != 3 || cf::component_lower_bound(9, 4) != 3) {
                ok = false;
                detail = "q=3: max component differs from ceil(9/3)";
            }
            check_profile(cf::iterated_product_coloring(3, 1), 3, 9, "q=3 t=1");
            check_profile(cf::iterated_product_coloring(3, 2), 3, 27, "q=3 t=2");
            check_profile(cf::plane_substitution_coloring(7), 7, 7, "q=7 t=0");
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        report(5, ok, detail);
    }

    // 6. counting sharpness for k = 1..1000, both variants
    {
        bool ok = true;
        std::string detail;
        for (long long k = 1; k <= 1000 && ok; ++k) {
            if (!cf::sharpness_arithmetic(k, cf::SharpnessVariant::n6k3) ||
                !cf::sharpness_arithmetic(k, cf::SharpnessVariant::n6k1)) {
                ok = false;
                detail = fmt::format("violated at k={}", k);
            }
        }
        report(6, ok, ok ? "counting inequalities hold for k=1..1000" : detail);
    }

    // 7. oracle concordance on the constructed STS(21)
    {
        bool ok = true;
        std::string detail;
        try {
            const auto& res = constructions.at(0);
            auto found6 = cf::cross_free_search(res.ts, 6);
            auto found7 = cf::cross_free_search(res.ts, 7);
            bool witness_clean =
                found6.found && cf::transversal_blocks(res.ts, found6.witness).empty();
            ok = witness_clean && !found7.found &&
                 cf::sharpness_arithmetic(1, cf::SharpnessVariant::n6k3);
            detail = fmt::format("size 6 {}, size 7 {}", found6.found ? "found" : "missing",
                                 found7.found ? "FOUND (unexpected)" : "impossible");
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        report(7, ok, detail);
    }

    // 8. fallback accounting: which k used the algorithmic 1-factorization
    {
        std::vector<int> fell_back;
        for (const auto& res : constructions)
            if (res.used_fallback) fell_back.push_back(res.k);
        std::string detail;
        if (fell_back.empty()) {
            detail = fmt::format("closed-form leave factors valid for every k=1..{}", kMax);
        } else {
            detail = "fallback 1-factorization used for k =";
            for (int k : fell_back) detail += fmt::format(" {}", k);
        }
        report(8, constructions.size() == kMax, detail);
    }

    fmt::print("{}\n", failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED");
    return failures == 0 ? 0 : 1;
}
