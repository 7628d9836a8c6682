#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "crossfree/colorings.hpp"
#include "crossfree/construct.hpp"
#include "crossfree/factorization.hpp"
#include "crossfree/io.hpp"
#include "crossfree/search.hpp"

namespace py = pybind11;
using namespace crossfree;

namespace {

CrossFreePartition partition_from_lists(const std::array<std::vector<Point>, 3>& parts) {
    return CrossFreePartition::make(parts);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Steiner triple systems with large cross-free sets";

    py::register_exception<DesignError>(m, "DesignError");

    py::class_<TripleSystem>(m, "TripleSystem")
        .def(py::init([](int n, const std::vector<Block>& blocks) {
                 return TripleSystem::make(n, blocks);
             }),
             py::arg("n"), py::arg("blocks"))
        .def_readonly("n", &TripleSystem::n)
        .def_readonly("blocks", &TripleSystem::blocks)
        .def("__len__", [](const TripleSystem& ts) { return ts.blocks.size(); })
        .def("__eq__", [](const TripleSystem& a, const TripleSystem& b) { return a == b; })
        .def("__repr__", [](const TripleSystem& ts) {
            return "TripleSystem(n=" + std::to_string(ts.n) +
                   ", blocks=" + std::to_string(ts.blocks.size()) + ")";
        });

    py::class_<ValidityReport>(m, "ValidityReport")
        .def_readonly("ok", &ValidityReport::ok)
        .def_readonly("block_count_ok", &ValidityReport::block_count_ok)
        .def_readonly("uncovered_pairs", &ValidityReport::uncovered_pairs)
        .def_readonly("overcovered_pairs", &ValidityReport::overcovered_pairs)
        .def_readonly("first_violation", &ValidityReport::first_violation)
        .def_readonly("message", &ValidityReport::message)
        .def("__bool__", [](const ValidityReport& r) { return r.ok; });

    py::class_<CrossFreePartition>(m, "CrossFreePartition")
        .def(py::init(&partition_from_lists), py::arg("parts"))
        .def_readonly("parts", &CrossFreePartition::parts)
        .def_readonly("m", &CrossFreePartition::m);

    py::class_<BlockColoring>(m, "BlockColoring")
        .def(py::init<int, std::vector<int>>(), py::arg("r"), py::arg("colors"))
        .def_readonly("r", &BlockColoring::r)
        .def_readonly("colors", &BlockColoring::colors);

    py::class_<ComponentReport>(m, "ComponentReport")
        .def_readonly("per_color", &ComponentReport::per_color)
        .def_readonly("largest", &ComponentReport::largest)
        .def_readonly("largest_nontrivial", &ComponentReport::largest_nontrivial)
        .def("nontrivial_sizes", &ComponentReport::nontrivial_sizes, py::arg("color"))
        .def("nontrivial_count", &ComponentReport::nontrivial_count, py::arg("color"));

    py::class_<ConstructionResult>(m, "ConstructionResult")
        .def_readonly("ts", &ConstructionResult::ts)
        .def_readonly("partition", &ConstructionResult::partition)
        .def_readonly("k", &ConstructionResult::k)
        .def_readonly("used_fallback", &ConstructionResult::used_fallback);

    py::class_<ColoredSTS>(m, "ColoredSTS")
        .def_readonly("ts", &ColoredSTS::ts)
        .def_readonly("coloring", &ColoredSTS::coloring);

    py::class_<AffinePlane>(m, "AffinePlane")
        .def_readonly("q", &AffinePlane::q)
        .def_readonly("lines", &AffinePlane::lines)
        .def_readonly("parallel_classes", &AffinePlane::parallel_classes);

    py::class_<Matching>(m, "Matching").def_readonly("edges", &Matching::edges);

    py::class_<LemmaPartition>(m, "LemmaPartition")
        .def_readonly("k", &LemmaPartition::k)
        .def_readonly("factors", &LemmaPartition::factors)
        .def_readonly("near_factors", &LemmaPartition::near_factors)
        .def_readonly("uncovered", &LemmaPartition::uncovered)
        .def_readonly("leave", &LemmaPartition::leave)
        .def_readonly("labeling", &LemmaPartition::labeling);

    py::class_<LemmaPartReport>(m, "LemmaPartReport")
        .def_readonly("pairs_partitioned", &LemmaPartReport::pairs_partitioned)
        .def_readonly("factors_perfect", &LemmaPartReport::factors_perfect)
        .def_readonly("near_factors_ok", &LemmaPartReport::near_factors_ok)
        .def_readonly("hk_isomorphic", &LemmaPartReport::hk_isomorphic)
        .def_readonly("middle_matches_leave", &LemmaPartReport::middle_matches_leave)
        .def_readonly("detail", &LemmaPartReport::detail)
        .def("__bool__", [](const LemmaPartReport& r) { return r.ok(); });

    py::class_<FSearchResult>(m, "FSearchResult")
        .def_readonly("value", &FSearchResult::value)
        .def_readonly("witness", &FSearchResult::witness)
        .def_readonly("explored", &FSearchResult::explored);

    py::class_<CrossFreeSearchResult>(m, "CrossFreeSearchResult")
        .def_readonly("found", &CrossFreeSearchResult::found)
        .def_readonly("witness", &CrossFreeSearchResult::witness)
        .def_readonly("explored", &CrossFreeSearchResult::explored);

    m.def("validate_sts", &validate_sts, py::arg("ts"));
    m.def("transversal_blocks", &transversal_blocks, py::arg("ts"), py::arg("partition"));
    m.def("lemma_gn_coloring", &lemma_gn_coloring, py::arg("ts"), py::arg("partition"));
    m.def("color_components", &color_components, py::arg("ts"), py::arg("coloring"));
    m.def("audit_lower_bound", &audit_lower_bound, py::arg("ts"), py::arg("coloring"));
    m.def(
        "sharpness_arithmetic",
        [](long long k, const std::string& variant) {
            if (variant == "6k+3") return sharpness_arithmetic(k, SharpnessVariant::n6k3);
            if (variant == "6k+1") return sharpness_arithmetic(k, SharpnessVariant::n6k1);
            throw DesignError("variant must be '6k+3' or '6k+1'");
        },
        py::arg("k"), py::arg("variant"));

    m.def("standard_factorization", &standard_factorization, py::arg("k"));
    m.def("build_zk", &build_zk, py::arg("k"));
    m.def("classify_edge_factor", &classify_edge_factor, py::arg("edge"), py::arg("k"));
    m.def("lemma_part_partition", &lemma_part_partition, py::arg("k"));
    m.def("verify_lemma_part", &verify_lemma_part, py::arg("lp"));

    m.def("construct_cross_free_sts", &construct_cross_free_sts, py::arg("k"));
    m.def("canonical_partition", &canonical_partition, py::arg("k"));

    m.def("bose_sts", &bose_sts, py::arg("n"));
    m.def("skolem_sts", &skolem_sts, py::arg("n"));
    m.def("sts_of_order", &sts_of_order, py::arg("n"));
    m.def("affine_plane", &affine_plane, py::arg("q"));
    m.def("plane_substitution_coloring", &plane_substitution_coloring, py::arg("q"));
    m.def("direct_product", &direct_product, py::arg("ts1"), py::arg("ts2"));
    m.def("iterated_product_coloring", &iterated_product_coloring, py::arg("q"), py::arg("t"));

    m.def("exhaustive_f", &exhaustive_f, py::arg("ts"), py::arg("r") = 3,
          py::arg("budget") = 50'000'000LL, py::arg("prune_colors") = true);
    m.def("cross_free_search", &cross_free_search, py::arg("ts"), py::arg("m"),
          py::arg("budget") = 500'000'000LL);
    m.def("enumerate_sts", &enumerate_sts, py::arg("n"));
    m.def("isomorphic", &isomorphic, py::arg("a"), py::arg("b"));

    m.def(
        "write_plain",
        [](const TripleSystem& ts, std::optional<CrossFreePartition> partition,
           std::optional<BlockColoring> coloring) {
            return write_plain(Bundle{ts, std::move(partition), std::move(coloring), {}});
        },
        py::arg("ts"), py::arg("partition") = std::nullopt, py::arg("coloring") = std::nullopt);
    m.def("read_plain", [](const std::string& text) {
        auto bundle = read_plain(text);
        return py::make_tuple(bundle.ts, bundle.partition, bundle.coloring);
    });
}
