#include "crossfree/construct.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <numeric>
#include <set>

namespace crossfree {

RelabeledLemma relabel_to_abstract(const LemmaPartition& lp) {
    const int n = 6 * lp.k;
    std::vector<int> abstract_of(n, -1);
    for (int t = 0; t < n; ++t) abstract_of[lp.labeling[t]] = t;
    auto relabel = [&](const Matching& m) {
        std::vector<PointPair> edges;
        edges.reserve(m.edges.size());
        for (auto [u, v] : m.edges)
            edges.push_back(make_pair_sorted(abstract_of[u], abstract_of[v]));
        std::sort(edges.begin(), edges.end());
        return edges;
    };
    RelabeledLemma rl;
    rl.k = lp.k;
    for (const auto& f : lp.factors) rl.factors.push_back(relabel(f));
    for (const auto& e : lp.near_factors) rl.near_factors.push_back(relabel(e));
    return rl;
}

void extend_copy(PartialTripleSystem& pts, const RelabeledLemma& rl, int source_copy) {
    const int k = rl.k;
    const CopyLabeling lab{k};
    const int apex_copy = source_copy + 1;
    auto add_star = [&](int apex_label, const std::vector<PointPair>& matching) {
        const Point apex = lab.global(apex_copy, apex_label);
        for (auto [a, b] : matching)
            pts.add_block(make_block(apex, lab.global(source_copy, a + 1),
                                     lab.global(source_copy, b + 1)));
    };
    for (int j = 0; j < k; ++j) {
        add_star(6 * j + 4, rl.near_factors[4 * j + 0]);
        add_star(6 * j + 1, rl.near_factors[4 * j + 1]);
        add_star(6 * j + 6, rl.near_factors[4 * j + 2]);
        add_star(6 * j + 5, rl.near_factors[4 * j + 3]);
        add_star(6 * j + 2, rl.factors[2 * j + 0]);
        add_star(6 * j + 3, rl.factors[2 * j + 1]);
    }
}

std::vector<PointPair> build_leave_graph(const PartialTripleSystem& pts, int k) {
    const int covered_points = 18 * k;
    std::vector<PointPair> leave;
    std::vector<int> degree(covered_points, 0);
    const auto& cov = pts.coverage();
    for (Point u = 0; u < covered_points; ++u) {
        for (Point v = u + 1; v < covered_points; ++v) {
            if (cov.count(u, v) != 0) continue;
            leave.emplace_back(u, v);
            ++degree[u];
            ++degree[v];
        }
    }
    if (static_cast<int>(leave.size()) != 27 * k)
        throw DesignError(fmt::format("leave graph has {} edges, expected {}", leave.size(), 27 * k));
    for (Point v = 0; v < covered_points; ++v)
        if (degree[v] != 3)
            throw DesignError(fmt::format("leave graph degree {} at vertex {}", degree[v], v));
    // census: the k middle edges inside each copy, everything else crossing
    const CopyLabeling lab{k};
    int middles = 0, cross = 0;
    std::set<PointPair> leave_set(leave.begin(), leave.end());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < k; ++j)
            if (leave_set.contains(make_pair_sorted(lab.global(i, 6 * j + 2),
                                                    lab.global(i, 6 * j + 3))))
                ++middles;
    for (auto [u, v] : leave)
        if (u / (6 * k) != v / (6 * k)) ++cross;
    if (middles != 3 * k || cross != 24 * k)
        throw DesignError(fmt::format("leave census {} middles / {} cross, expected {} / {}",
                                      middles, cross, 3 * k, 24 * k));
    return leave;
}

namespace {

// the three closed-form leave factors, one row per closure point
std::array<std::vector<PointPair>, 3> closed_form_leave_factors(int k) {
    const CopyLabeling lab{k};
    std::array<std::vector<PointPair>, 3> rows;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < k; ++j) {
            auto at = [&](int copy, int t) { return lab.global(copy, 6 * j + t); };
            rows[0].push_back(make_pair_sorted(at(i, 2), at(i, 3)));
            rows[0].push_back(make_pair_sorted(at(i, 1), at(i - 1 + 3, 6)));
            rows[0].push_back(make_pair_sorted(at(i, 5), at(i - 1 + 3, 4)));
            rows[1].push_back(make_pair_sorted(at(i, 4), at(i - 1 + 3, 2)));
            rows[1].push_back(make_pair_sorted(at(i, 5), at(i - 1 + 3, 3)));
            rows[1].push_back(make_pair_sorted(at(i, 6), at(i - 1 + 3, 1)));
            rows[2].push_back(make_pair_sorted(at(i, 1), at(i - 1 + 3, 5)));
            rows[2].push_back(make_pair_sorted(at(i, 4), at(i - 1 + 3, 3)));
            rows[2].push_back(make_pair_sorted(at(i, 6), at(i - 1 + 3, 2)));
        }
    }
    for (auto& row : rows) std::sort(row.begin(), row.end());
    return rows;
}

bool is_perfect_matching(const std::vector<PointPair>& edges, int n) {
    std::vector<char> hit(n, 0);
    for (auto [u, v] : edges) {
        if (hit[u] || hit[v]) return false;
        hit[u] = hit[v] = 1;
    }
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

// backtracking over nested perfect matchings; `removed` marks consumed edges
bool factorize_rec(const std::vector<PointPair>& edges, const std::vector<std::vector<int>>& adj,
                   std::vector<char>& removed, int n, int remaining_factors,
                   std::vector<std::vector<int>>& out) {
    if (remaining_factors == 0)
        return std::count(removed.begin(), removed.end(), 0) == 0;
    // enumerate perfect matchings of the remaining graph, lexicographically
    std::vector<int> picked;
    std::vector<char> vertex_used(n, 0);
    std::vector<char> used = removed;

    // recursive enumeration with continuation: try each matching until the
    // rest of the graph factorizes
    struct Enumerator {
        const std::vector<PointPair>& edges;
        const std::vector<std::vector<int>>& adj;
        std::vector<char>& removed;
        int n;
        int remaining_factors;
        std::vector<std::vector<int>>& out;

        bool extend(std::vector<char>& used, std::vector<char>& vertex_used,
                    std::vector<int>& picked) {
            int v = 0;
            while (v < n && vertex_used[v]) ++v;
            if (v == n) {
                for (int e : picked) removed[e] = 1;
                out.push_back(picked);
                if (factorize_rec(edges, adj, removed, n, remaining_factors - 1, out)) return true;
                out.pop_back();
                for (int e : picked) removed[e] = 0;
                return false;
            }
            for (int e : adj[v]) {
                if (used[e]) continue;
                auto [a, b] = edges[e];
                int w = a == v ? b : a;
                if (vertex_used[w]) continue;
                used[e] = 1;
                vertex_used[v] = vertex_used[w] = 1;
                picked.push_back(e);
                if (extend(used, vertex_used, picked)) return true;
                picked.pop_back();
                vertex_used[v] = vertex_used[w] = 0;
                used[e] = 0;
            }
            return false;
        }
    } enumerator{edges, adj, removed, n, remaining_factors, out};
    return enumerator.extend(used, vertex_used, picked);
}

}  // namespace

std::vector<std::vector<PointPair>> one_factorize(const std::vector<PointPair>& edges, int n,
                                                  int degree) {
    std::vector<std::vector<int>> adj(n);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        adj[edges[e].first].push_back(static_cast<int>(e));
        adj[edges[e].second].push_back(static_cast<int>(e));
    }
    for (int v = 0; v < n; ++v)
        if (static_cast<int>(adj[v].size()) != degree)
            throw DesignError(fmt::format("vertex {} has degree {}, expected {}", v,
                                          adj[v].size(), degree));
    std::vector<char> removed(edges.size(), 0);
    std::vector<std::vector<int>> picked_factors;
    if (!factorize_rec(edges, adj, removed, n, degree, picked_factors))
        throw DesignError("graph admits no 1-factorization");
    std::vector<std::vector<PointPair>> result;
    for (const auto& factor : picked_factors) {
        std::vector<PointPair> f;
        for (int e : factor) f.push_back(edges[e]);
        std::sort(f.begin(), f.end());
        result.push_back(std::move(f));
    }
    return result;
}

LeaveFactors factor_u(const std::vector<PointPair>& leave, int k) {
    const int n = 18 * k;
    std::set<PointPair> leave_set(leave.begin(), leave.end());
    auto rows = closed_form_leave_factors(k);

    bool rows_ok = true;
    std::size_t covered = 0;
    for (const auto& row : rows) {
        rows_ok = rows_ok && is_perfect_matching(row, n);
        for (auto e : row) rows_ok = rows_ok && leave_set.contains(e);
        covered += row.size();
    }
    std::set<PointPair> all_rows;
    for (const auto& row : rows) all_rows.insert(row.begin(), row.end());
    rows_ok = rows_ok && all_rows.size() == covered && all_rows == leave_set;

    if (rows_ok) return LeaveFactors{std::move(rows), false};

    auto factors = one_factorize(leave, n, 3);
    return LeaveFactors{{factors[0], factors[1], factors[2]}, true};
}

TripleSystem close_with_abc(PartialTripleSystem& pts, const LeaveFactors& lf, int k) {
    const CopyLabeling lab{k};
    for (int t = 0; t < 3; ++t)
        for (auto [u, v] : lf.factors[t]) pts.add_block(make_block(lab.closure_point(t), u, v));
    pts.add_block(make_block(lab.closure_point(0), lab.closure_point(1), lab.closure_point(2)));
    return pts.to_triple_system();
}

CrossFreePartition canonical_partition(int k) {
    std::array<std::vector<Point>, 3> parts;
    for (int i = 0; i < 3; ++i) {
        parts[i].resize(6 * k);
        std::iota(parts[i].begin(), parts[i].end(), 6 * k * i);
    }
    return CrossFreePartition::make(std::move(parts));
}

ConstructionResult construct_cross_free_sts(int k) {
    if (k < 1) throw DesignError("k must be >= 1");
    auto lp = lemma_part_partition(k);
    auto lemma_report = verify_lemma_part(lp);
    if (!lemma_report.ok())
        throw DesignError(fmt::format("lemma partition invalid for k={}: {}", k,
                                      lemma_report.detail));
    auto rl = relabel_to_abstract(lp);

    PartialTripleSystem pts(18 * k + 3);
    for (int copy = 0; copy < 3; ++copy) extend_copy(pts, rl, copy);

    auto leave = build_leave_graph(pts, k);
    auto lf = factor_u(leave, k);
    auto ts = close_with_abc(pts, lf, k);

    auto validity = validate_sts(ts);
    if (!validity.ok)
        throw DesignError(fmt::format("constructed system invalid for k={}: {}", k,
                                      validity.message));
    auto partition = canonical_partition(k);
    if (!transversal_blocks(ts, partition).empty())
        throw DesignError(fmt::format("canonical partition not cross-free for k={}", k));
    return ConstructionResult{std::move(ts), std::move(partition), k, lf.used_fallback};
}

}  // namespace crossfree
