// stsx: construct, verify, color and search Steiner triple systems with
// large cross-free sets.

#include <fmt/format.h>

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "crossfree/colorings.hpp"
#include "crossfree/construct.hpp"
#include "crossfree/io.hpp"
#include "crossfree/search.hpp"

namespace cf = crossfree;

namespace {

cf::Bundle load_bundle(const std::string& path) {
    auto text = cf::read_file(path);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return cf::read_json(text);
    return cf::read_plain(text);
}

void emit_bundle(const cf::Bundle& bundle, const std::string& out, const std::string& format) {
    auto text = format == "json" ? cf::write_json(bundle) : cf::write_plain(bundle);
    if (out.empty() || out == "-")
        std::cout << text;
    else
        cf::write_file(out, text);
}

void print_profile(const cf::TripleSystem& ts, const cf::BlockColoring& coloring) {
    auto rep = cf::color_components(ts, coloring);
    for (int c = 0; c < coloring.r; ++c) {
        auto sizes = rep.nontrivial_sizes(c);
        fmt::print("color {}: {} nontrivial component(s), sizes:", c, sizes.size());
        for (int s : sizes) fmt::print(" {}", s);
        fmt::print("\n");
    }
    fmt::print("largest component: {}\n", rep.largest);
    fmt::print("component bound >= ceil(n/(r-1)) = {}: {}\n",
               cf::component_lower_bound(ts.n, coloring.r),
               cf::audit_lower_bound(ts, coloring) ? "ok" : "VIOLATED");
}

int cmd_construct(int k, const std::string& out, const std::string& format) {
    auto result = cf::construct_cross_free_sts(k);
    cf::Bundle bundle{result.ts, result.partition, std::nullopt,
                      cf::Provenance{k, result.used_fallback}};
    emit_bundle(bundle, out, format);
    fmt::print(stderr, "constructed STS({}) with {} blocks, cross-free parts of size {} ({})\n",
               result.ts.n, result.ts.blocks.size(), 6 * k,
               result.used_fallback ? "fallback leave factors" : "closed-form leave factors");
    return 0;
}

int cmd_verify(const std::string& in, const std::string& coloring_path) {
    auto bundle = load_bundle(in);
    bool all_ok = true;

    auto validity = cf::validate_sts(bundle.ts);
    fmt::print("system: n={} blocks={} -> {}\n", bundle.ts.n, bundle.ts.blocks.size(),
               validity.message);
    all_ok = all_ok && validity.ok;

    if (bundle.partition) {
        auto tv = cf::transversal_blocks(bundle.ts, *bundle.partition);
        if (tv.empty()) {
            fmt::print("partition: cross-free (part size {})\n", bundle.partition->m);
        } else {
            fmt::print("partition: {} transversal block(s), first ({},{},{})\n", tv.size(),
                       tv[0][0], tv[0][1], tv[0][2]);
            all_ok = false;
        }
    }

    std::optional<cf::BlockColoring> coloring = bundle.coloring;
    if (!coloring_path.empty()) coloring = cf::read_plain_coloring(cf::read_file(coloring_path));
    if (coloring) {
        cf::check_coloring(bundle.ts, *coloring);
        print_profile(bundle.ts, *coloring);
        all_ok = all_ok && cf::audit_lower_bound(bundle.ts, *coloring);
    }
    fmt::print("{}\n", all_ok ? "OK" : "FAILED");
    return all_ok ? 0 : 1;
}

int cmd_color_lemma(const std::string& in, const std::string& out, const std::string& format,
                    bool profile) {
    auto bundle = load_bundle(in);
    if (!bundle.partition) throw cf::DesignError("input carries no partition");
    auto coloring = cf::lemma_gn_coloring(bundle.ts, *bundle.partition);
    if (format == "json") {
        bundle.coloring = coloring;
        emit_bundle(bundle, out, format);
    } else if (!out.empty()) {
        cf::write_file(out, cf::write_plain_coloring(coloring));
    } else {
        std::cout << cf::write_plain_coloring(coloring);
    }
    if (profile) print_profile(bundle.ts, coloring);
    return 0;
}

int cmd_color_rcolor(int q, int t, const std::string& out, const std::string& format,
                     bool profile) {
    auto colored = cf::iterated_product_coloring(q, t);
    cf::Bundle bundle{colored.ts, std::nullopt, colored.coloring, std::nullopt};
    if (!out.empty()) emit_bundle(bundle, out, format);
    fmt::print(stderr, "STS({}) with {} colors\n", colored.ts.n, colored.coloring.r);
    if (profile) print_profile(colored.ts, colored.coloring);
    return 0;
}

int cmd_search_f(const std::string& in, int n, int r, long long budget,
                 const std::string& out) {
    cf::TripleSystem ts;
    if (!in.empty()) {
        ts = load_bundle(in).ts;
    } else {
        auto systems = cf::enumerate_sts(n);
        ts = systems.at(0);
    }
    auto result = cf::exhaustive_f(ts, r, budget);
    fmt::print("f_{}({}) = {}\n", r, ts.n, result.value);
    fmt::print("explored: {} colorings\n", result.explored);
    if (!out.empty())
        cf::write_file(out, cf::write_plain_coloring(result.witness));
    else
        fmt::print("witness: {}", cf::write_plain_coloring(result.witness));
    return 0;
}

int cmd_search_crossfree(const std::string& in, int m, long long budget,
                         const std::string& out) {
    auto ts = load_bundle(in).ts;
    auto result = cf::cross_free_search(ts, m, budget);
    if (result.found) {
        fmt::print("cross-free set of size {} found\n", m);
        for (int i = 0; i < 3; ++i) {
            fmt::print("X{}:", i);
            for (cf::Point p : result.witness.parts[i]) fmt::print(" {}", p);
            fmt::print("\n");
        }
        if (!out.empty())
            emit_bundle(cf::Bundle{ts, result.witness, std::nullopt, std::nullopt}, out, "plain");
    } else {
        fmt::print("none: no cross-free set of size {}\n", m);
    }
    fmt::print("explored: {} nodes\n", result.explored);
    return 0;
}

int cmd_search_enumerate(int n) {
    auto systems = cf::enumerate_sts(n);
    fmt::print("{} system(s) of order {} up to isomorphism\n", systems.size(), n);
    for (std::size_t i = 0; i < systems.size(); ++i) {
        fmt::print("system {}:\n", i);
        std::cout << cf::write_plain(cf::Bundle{systems[i], {}, {}, {}});
    }
    return 0;
}

int cmd_rcolor_demo(int q, int tmax) {
    bool ok = true;
    for (int t = 0; t <= tmax; ++t) {
        auto colored = cf::iterated_product_coloring(q, t);
        auto rep = cf::color_components(colored.ts, colored.coloring);
        long long size_expected = colored.ts.n / q;  // 3^t * q
        fmt::print("q={} t={}: STS({}), {} colors\n", q, t, colored.ts.n, colored.coloring.r);
        for (int c = 0; c < colored.coloring.r; ++c) {
            auto sizes = rep.nontrivial_sizes(c);
            bool class_ok = static_cast<int>(sizes.size()) == q &&
                            std::all_of(sizes.begin(), sizes.end(),
                                        [&](int s) { return s == size_expected; });
            ok = ok && class_ok;
            fmt::print("  color {}: {} component(s) of size {}{}\n", c, sizes.size(),
                       sizes.empty() ? 0 : sizes[0], class_ok ? "" : "  <- unexpected");
        }
    }
    fmt::print("{}\n", ok ? "OK" : "FAILED");
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steiner triple systems with large cross-free sets"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "worker hint; results never depend on it")
        ->check(CLI::PositiveNumber);

    // construct
    auto* construct = app.add_subcommand("construct", "build the STS(18k+3) with cross-free parts of size 6k");
    int k = 1;
    std::string out, format = "plain";
    construct->add_option("--k", k, "family parameter (n = 18k+3)")->required()->check(CLI::PositiveNumber);
    construct->add_option("--out,-o", out, "output path (stdout when omitted)");
    construct->add_option("--format", format, "plain | json")
        ->check(CLI::IsMember({"plain", "json"}));

    // verify
    auto* verify = app.add_subcommand("verify", "validate a system file and its optional partition/coloring");
    std::string vin, vcoloring;
    verify->add_option("--in,-i", vin, "system file (plain or json)")->required();
    verify->add_option("--coloring", vcoloring, "plain coloring file");

    // color
    auto* color = app.add_subcommand("color", "produce block colorings");
    color->require_subcommand(1);
    auto* lemma = color->add_subcommand("lemma-gn", "3-coloring from a cross-free partition");
    std::string cin_path, cout_path, cformat = "plain";
    bool profile = false;
    lemma->add_option("--in,-i", cin_path, "system file with partition")->required();
    lemma->add_option("--out,-o", cout_path, "coloring output path");
    lemma->add_option("--format", cformat, "plain | json")->check(CLI::IsMember({"plain", "json"}));
    lemma->add_flag("--profile", profile, "print the per-color component census");
    auto* rcolor = color->add_subcommand("rcolor", "(q+1)-coloring of STS(3^t q^2) from the affine plane");
    int rq = 3, rt = 0;
    std::string rout, rformat = "plain";
    bool rprofile = false;
    rcolor->add_option("--q", rq, "plane order (prime power, 1 or 3 mod 6)")->required();
    rcolor->add_option("--t", rt, "product iterations")->check(CLI::NonNegativeNumber);
    rcolor->add_option("--out,-o", rout, "bundle output path");
    rcolor->add_option("--format", rformat, "plain | json")->check(CLI::IsMember({"plain", "json"}));
    rcolor->add_flag("--profile", rprofile, "print the per-color component census");

    // search
    auto* search = app.add_subcommand("search", "brute-force oracles");
    search->require_subcommand(1);
    auto* sf = search->add_subcommand("f", "exact extremal component size over all colorings");
    std::string fin;
    int fn = 7, fr = 3;
    long long fbudget = 50'000'000;
    sf->add_option("--n", fn, "order of the (unique small) system to color");
    sf->add_option("--in,-i", fin, "system file (overrides --n)");
    sf->add_option("--r", fr, "number of colors")->check(CLI::PositiveNumber);
    sf->add_option("--budget", fbudget, "max colorings to examine");
    std::string fout;
    sf->add_option("--out,-o", fout, "write the witness coloring here");
    auto* sc = search->add_subcommand("crossfree", "search for a cross-free set of size m");
    std::string scin;
    int sm = 1;
    long long scbudget = 500'000'000;
    sc->add_option("--in,-i", scin, "system file")->required();
    sc->add_option("--m", sm, "part size")->required()->check(CLI::PositiveNumber);
    sc->add_option("--budget", scbudget, "max search nodes");
    std::string scout;
    sc->add_option("--out,-o", scout, "write system plus witness partition here");
    auto* se = search->add_subcommand("enumerate", "all systems of order n up to isomorphism");
    int en = 7;
    se->add_option("--n", en, "order (3, 7, 9 or 13)")->required();

    // rcolor-demo
    auto* demo = app.add_subcommand("rcolor-demo", "component profiles of the affine-plane coloring family");
    int dq = 3, dtmax = 2;
    demo->add_option("--q", dq, "plane order");
    demo->add_option("--tmax", dtmax, "largest product iteration")->check(CLI::NonNegativeNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*construct) return cmd_construct(k, out, format);
        if (*verify) return cmd_verify(vin, vcoloring);
        if (*lemma) return cmd_color_lemma(cin_path, cout_path, cformat, profile);
        if (*rcolor) return cmd_color_rcolor(rq, rt, rout, rformat, rprofile);
        if (*sf) return cmd_search_f(fin, fn, fr, fbudget, fout);
        if (*sc) return cmd_search_crossfree(scin, sm, scbudget, scout);
        if (*se) return cmd_search_enumerate(en);
        if (*demo) return cmd_rcolor_demo(dq, dtmax);
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 1;
    }
    return 0;
}
