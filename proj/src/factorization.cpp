#include "crossfree/factorization.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>
#include <set>

namespace crossfree {

namespace {

// representative of x in 1..6k-1
int wrap(long long x, int modulus) {
    long long r = x % modulus;
    if (r <= 0) r += modulus;
    return static_cast<int>(r);
}

std::string edge_str(PointPair e) {
    auto name = [](Point v) {
        return v == kInfinityVertex ? std::string("inf") : std::to_string(v);
    };
    if (e.first == kInfinityVertex) return fmt::format("{}-inf", name(e.second));
    return fmt::format("{}-{}", name(e.first), name(e.second));
}

}  // namespace

std::vector<Point> Matching::missed_vertices(int n) const {
    std::vector<char> hit(n, 0);
    for (auto [u, v] : edges) {
        hit[u] = 1;
        hit[v] = 1;
    }
    std::vector<Point> missed;
    for (Point p = 0; p < n; ++p)
        if (!hit[p]) missed.push_back(p);
    return missed;
}

bool Matching::pairwise_disjoint() const {
    std::set<Point> seen;
    for (auto [u, v] : edges) {
        if (u == v || !seen.insert(u).second || !seen.insert(v).second) return false;
    }
    return true;
}

std::vector<Matching> standard_factorization(int k) {
    if (k < 1) throw DesignError("k must be >= 1");
    const int mod = 6 * k - 1;
    std::vector<Matching> factors;
    factors.reserve(mod);
    for (int i = 1; i <= mod; ++i) {
        Matching f;
        f.edges.push_back(make_pair_sorted(i, kInfinityVertex));
        for (int j = 1; j <= 3 * k - 1; ++j)
            f.edges.push_back(make_pair_sorted(wrap(i - j, mod), wrap(i + j, mod)));
        std::sort(f.edges.begin(), f.edges.end());
        factors.push_back(std::move(f));
    }
    return factors;
}

int classify_edge_factor(PointPair edge, int k) {
    const int mod = 6 * k - 1;
    auto [u, v] = edge;
    if (u == kInfinityVertex) return v;
    if (v == kInfinityVertex) return u;
    // 2i = u+v (mod 6k-1); 2 is invertible since the modulus is odd
    const long long inv2 = (mod + 1) / 2;
    return wrap((u + v) * inv2, mod);
}

std::vector<PointPair> ZkGroup::edges() const {
    return {make_pair_sorted(path[0], path[1]), make_pair_sorted(path[1], path[2]),
            make_pair_sorted(path[2], path[3]), make_pair_sorted(pendant[0], pendant[1])};
}

std::vector<ZkGroup> zk_groups(int k) {
    if (k < 1) throw DesignError("k must be >= 1");
    std::vector<ZkGroup> groups;
    groups.reserve(k);
    // W: path 1-3-5-inf, pendant (2,4)
    groups.push_back(ZkGroup{{1, 3, 5, kInfinityVertex}, {2, 4}});
    if (k % 2 == 1) {
        // L_m = A_m u B_m sits on the twelve consecutive vertices m..m+11
        for (int m = 6; m <= 6 * (k - 2); m += 12) {
            groups.push_back(ZkGroup{{m, m + 2, m + 4, m + 6}, {m + 1, m + 3}});
            groups.push_back(ZkGroup{{m + 5, m + 7, m + 9, m + 11}, {m + 8, m + 10}});
        }
    } else {
        for (int m = 6; m <= 3 * k; m += 6)
            groups.push_back(ZkGroup{{m + 1, m, m + 2, m + 4}, {m + 3, m + 5}});
        for (int m = 3 * k + 6; m <= 6 * (k - 1); m += 6)
            groups.push_back(ZkGroup{{m, m + 2, m + 1, m + 3}, {m + 4, m + 5}});
    }
    if (static_cast<int>(groups.size()) != k)
        throw DesignError(fmt::format("Z_{} gadget count {} != k", k, groups.size()));
    return groups;
}

std::vector<PointPair> build_zk(int k) {
    std::vector<PointPair> edges;
    for (const auto& g : zk_groups(k))
        for (auto e : g.edges()) edges.push_back(e);
    return edges;
}

std::vector<PointPair> HkPattern::path_edges() const {
    std::vector<PointPair> edges;
    for (int j = 0; j < k; ++j) {
        edges.emplace_back(6 * j, 6 * j + 1);
        edges.emplace_back(6 * j + 1, 6 * j + 2);
        edges.emplace_back(6 * j + 2, 6 * j + 3);
    }
    return edges;
}

std::vector<PointPair> HkPattern::pendant_edges() const {
    std::vector<PointPair> edges;
    for (int j = 0; j < k; ++j) edges.emplace_back(6 * j + 4, 6 * j + 5);
    return edges;
}

std::vector<PointPair> HkPattern::middle_edges() const {
    std::vector<PointPair> edges;
    for (int j = 0; j < k; ++j) edges.emplace_back(6 * j + 1, 6 * j + 2);
    return edges;
}

std::vector<PointPair> HkPattern::all_edges() const {
    auto edges = path_edges();
    for (auto e : pendant_edges()) edges.push_back(e);
    return edges;
}

LemmaPartition lemma_part_partition(int k) {
    const auto groups = zk_groups(k);
    auto factors = standard_factorization(k);

    // host factor of each Z_k edge; any collision is a transcription bug
    std::map<int, PointPair> host_of;
    for (const auto& g : groups) {
        for (auto e : g.edges()) {
            int i = classify_edge_factor(e, k);
            auto [it, fresh] = host_of.emplace(i, e);
            if (!fresh)
                throw DesignError(fmt::format("edges {} and {} of Z_{} share factor F{}",
                                              edge_str(it->second), edge_str(e), k, i));
        }
    }

    auto factor_minus = [&](int i, PointPair e) {
        Matching m = factors[i - 1];
        std::erase(m.edges, e);
        return m;
    };

    LemmaPartition lp;
    lp.k = k;
    for (const auto& g : groups) {
        const PointPair deleted[4] = {g.middle(), make_pair_sorted(g.pendant[0], g.pendant[1]),
                                      make_pair_sorted(g.path[0], g.path[1]),
                                      make_pair_sorted(g.path[2], g.path[3])};
        for (auto e : deleted) {
            lp.near_factors.push_back(factor_minus(classify_edge_factor(e, k), e));
            lp.uncovered.push_back(e);
        }
        lp.leave.push_back(g.middle());
        for (Point v : g.path) lp.labeling.push_back(v);
        for (Point v : g.pendant) lp.labeling.push_back(v);
    }

    for (int i = 1; i <= 6 * k - 1; ++i)
        if (!host_of.contains(i)) lp.factors.push_back(factors[i - 1]);
    if (static_cast<int>(lp.factors.size()) != 2 * k - 1)
        throw DesignError(fmt::format("kept {} factors, expected {}", lp.factors.size(), 2 * k - 1));

    Matching f_star;  // Z_k minus its middle: outer path edges plus pendants
    for (const auto& g : groups) {
        f_star.edges.push_back(make_pair_sorted(g.path[0], g.path[1]));
        f_star.edges.push_back(make_pair_sorted(g.path[2], g.path[3]));
        f_star.edges.push_back(make_pair_sorted(g.pendant[0], g.pendant[1]));
    }
    std::sort(f_star.edges.begin(), f_star.edges.end());
    lp.factors.push_back(std::move(f_star));
    return lp;
}

LemmaPartReport verify_lemma_part(const LemmaPartition& lp) {
    const int k = lp.k;
    const int n = 6 * k;
    LemmaPartReport rep;
    auto fail = [&](std::string msg) {
        if (rep.detail.empty()) rep.detail = std::move(msg);
    };

    // (1) factors u near factors u T cover every pair exactly once
    PairCoverage cov(n);
    auto add_all = [&](const std::vector<PointPair>& edges) {
        for (auto [u, v] : edges) cov.add(u, v);
    };
    for (const auto& f : lp.factors) add_all(f.edges);
    for (const auto& e : lp.near_factors) add_all(e.edges);
    add_all(lp.leave);
    auto mismatch = cov.first_mismatch(1);
    rep.pairs_partitioned = static_cast<int>(lp.factors.size()) == 2 * k &&
                            static_cast<int>(lp.near_factors.size()) == 4 * k &&
                            static_cast<int>(lp.leave.size()) == k && !mismatch;
    if (!rep.pairs_partitioned) {
        if (mismatch)
            fail(fmt::format("pair ({},{}) covered {} times", mismatch->first, mismatch->second,
                             cov.count(mismatch->first, mismatch->second)));
        else
            fail("wrong factor/near-factor/leave counts");
    }

    // (2) factor and near-factor shapes
    rep.factors_perfect = true;
    for (const auto& f : lp.factors) {
        if (static_cast<int>(f.edges.size()) != 3 * k || !f.pairwise_disjoint() ||
            !f.missed_vertices(n).empty()) {
            rep.factors_perfect = false;
            fail("factor is not a perfect matching");
            break;
        }
    }
    rep.near_factors_ok = lp.uncovered.size() == lp.near_factors.size();
    for (std::size_t i = 0; rep.near_factors_ok && i < lp.near_factors.size(); ++i) {
        const auto& nf = lp.near_factors[i];
        auto missed = nf.missed_vertices(n);
        if (static_cast<int>(nf.edges.size()) != 3 * k - 1 || !nf.pairwise_disjoint() ||
            missed.size() != 2 ||
            make_pair_sorted(missed[0], missed[1]) != make_pair_sorted(lp.uncovered[i].first,
                                                                       lp.uncovered[i].second)) {
            rep.near_factors_ok = false;
            fail(fmt::format("near factor E{} does not miss its recorded pair", i + 1));
        }
    }

    // (3) the uncovered pairs form k P_4's and k K_2's, and they are exactly
    // the image of H_k under the stored labeling
    const HkPattern hk{k};
    bool structure_ok = lp.labeling.size() == static_cast<std::size_t>(n);
    if (structure_ok) {
        std::set<PointPair> uncovered_set;
        for (auto e : lp.uncovered)
            uncovered_set.insert(make_pair_sorted(e.first, e.second));
        std::set<PointPair> image;
        for (auto [a, b] : hk.all_edges())
            image.insert(make_pair_sorted(lp.labeling[a], lp.labeling[b]));
        structure_ok = uncovered_set.size() == 4u * k && uncovered_set == image;
        if (structure_ok) {
            // component shape check, independent of the labeling
            std::map<Point, std::vector<Point>> adj;
            for (auto [u, v] : uncovered_set) {
                adj[u].push_back(v);
                adj[v].push_back(u);
            }
            int paths = 0, singles = 0;
            std::set<Point> visited;
            for (auto& [start, _] : adj) {
                if (visited.contains(start)) continue;
                std::vector<Point> stack{start};
                std::vector<Point> comp;
                visited.insert(start);
                while (!stack.empty()) {
                    Point v = stack.back();
                    stack.pop_back();
                    comp.push_back(v);
                    for (Point w : adj[v])
                        if (visited.insert(w).second) stack.push_back(w);
                }
                std::vector<int> degs;
                for (Point v : comp) degs.push_back(static_cast<int>(adj[v].size()));
                std::sort(degs.begin(), degs.end());
                if (degs == std::vector<int>{1, 1}) ++singles;
                else if (degs == std::vector<int>{1, 1, 2, 2}) ++paths;
                else {
                    structure_ok = false;
                    break;
                }
            }
            structure_ok = structure_ok && paths == k && singles == k;
        }
    }
    rep.hk_isomorphic = structure_ok;
    if (!structure_ok) fail("uncovered pairs are not an H_k copy under the labeling");

    // (4) T is the image of the middle of H_k
    std::set<PointPair> leave_set;
    for (auto e : lp.leave) leave_set.insert(make_pair_sorted(e.first, e.second));
    std::set<PointPair> middle_image;
    if (lp.labeling.size() == static_cast<std::size_t>(n))
        for (auto [a, b] : hk.middle_edges())
            middle_image.insert(make_pair_sorted(lp.labeling[a], lp.labeling[b]));
    rep.middle_matches_leave = !leave_set.empty() && leave_set == middle_image;
    if (!rep.middle_matches_leave) fail("leave T differs from the middle image");

    if (rep.ok()) rep.detail = "ok";
    return rep;
}

std::string dump_lemma_partition(const LemmaPartition& lp) {
    std::string out;
    auto line = [&](const std::string& prefix, const std::vector<PointPair>& edges) {
        out += prefix + ":";
        for (auto e : edges) out += " " + edge_str(e);
        out += "\n";
    };
    for (std::size_t i = 0; i < lp.factors.size(); ++i)
        line(fmt::format("F{}", i + 1), lp.factors[i].edges);
    for (std::size_t i = 0; i < lp.near_factors.size(); ++i)
        line(fmt::format("E{}", i + 1), lp.near_factors[i].edges);
    line("T", lp.leave);
    out += "labels:";
    for (Point v : lp.labeling)
        out += " " + (v == kInfinityVertex ? std::string("inf") : std::to_string(v));
    out += "\n";
    return out;
}

}  // namespace crossfree
