"""Steiner triple systems with large cross-free sets.

Construction of STS(18k+3) with a cross-free partition of part size 6k,
block colorings witnessing extremal monochromatic-component sizes, and
brute-force oracles for small orders.
"""

from crossfree._core import (
    AffinePlane,
    BlockColoring,
    ColoredSTS,
    ComponentReport,
    ConstructionResult,
    CrossFreePartition,
    CrossFreeSearchResult,
    DesignError,
    FSearchResult,
    LemmaPartReport,
    LemmaPartition,
    Matching,
    TripleSystem,
    ValidityReport,
    affine_plane,
    audit_lower_bound,
    bose_sts,
    build_zk,
    canonical_partition,
    classify_edge_factor,
    color_components,
    construct_cross_free_sts,
    cross_free_search,
    direct_product,
    enumerate_sts,
    exhaustive_f,
    isomorphic,
    iterated_product_coloring,
    lemma_gn_coloring,
    lemma_part_partition,
    plane_substitution_coloring,
    read_plain,
    sharpness_arithmetic,
    skolem_sts,
    standard_factorization,
    sts_of_order,
    transversal_blocks,
    validate_sts,
    verify_lemma_part,
    write_plain,
)

__all__ = [
    "AffinePlane",
    "BlockColoring",
    "ColoredSTS",
    "ComponentReport",
    "ConstructionResult",
    "CrossFreePartition",
    "CrossFreeSearchResult",
    "DesignError",
    "FSearchResult",
    "LemmaPartReport",
    "LemmaPartition",
    "Matching",
    "TripleSystem",
    "ValidityReport",
    "affine_plane",
    "audit_lower_bound",
    "bose_sts",
    "build_zk",
    "canonical_partition",
    "classify_edge_factor",
    "color_components",
    "construct_cross_free_sts",
    "cross_free_search",
    "direct_product",
    "enumerate_sts",
    "exhaustive_f",
    "isomorphic",
    "iterated_product_coloring",
    "lemma_gn_coloring",
    "lemma_part_partition",
    "plane_substitution_coloring",
    "read_plain",
    "sharpness_arithmetic",
    "skolem_sts",
    "standard_factorization",
    "sts_of_order",
    "transversal_blocks",
    "validate_sts",
    "verify_lemma_part",
    "write_plain",
]

__version__ = "0.1.0"
