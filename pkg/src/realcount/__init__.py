"""Combinatorial counting of planar realisations for minimally rigid graphs."""

from .graphs import (
    EdgeOrder,
    GraphError,
    LabelledGraph,
    ParseError,
    UnsupportedError,
    canonical_form,
    canonical_graph,
    encode_graph6,
    format_edge_list,
    henneberg_generate,
    is_minimally_rigid_2d,
    is_sparse,
    is_sparse_bruteforce,
    is_tight,
    is_tight_bruteforce,
    parse_edge_list,
    parse_graph6,
)
from .matroids import (
    GraphicMatroid,
    LoopError,
    Matroid,
    MatroidError,
    MaximalChain,
    UniformMatroid,
    broken_circuits,
    chain_of_basis,
    circuits,
    enumerate_maximal_chains,
    enumerate_nbc_bases,
    flats_by_rank,
)
from .pairs import (
    IntersectionGraph,
    PairCountReport,
    PairDecision,
    RankConditionError,
    Witness,
    bigraph_laman_number,
    build_intersection_graph,
    count_intersecting_pairs,
    is_intersecting_arboreal_pair,
    nbc_via_uniform_pairs,
    realisation_number,
    verify_pair_naive,
)
from .polynomials import (
    CharChromReport,
    OneVar,
    TwoVar,
    characteristic_and_chromatic,
    tutte_polynomial,
    tutte_polynomial_subset,
)

__version__ = "0.1.0"

__all__ = [
    "EdgeOrder", "GraphError", "LabelledGraph", "ParseError", "UnsupportedError",
    "canonical_form", "canonical_graph", "encode_graph6", "format_edge_list",
    "henneberg_generate", "is_minimally_rigid_2d", "is_sparse",
    "is_sparse_bruteforce", "is_tight", "is_tight_bruteforce",
    "parse_edge_list", "parse_graph6",
    "GraphicMatroid", "LoopError", "Matroid", "MatroidError", "MaximalChain",
    "UniformMatroid", "broken_circuits", "chain_of_basis", "circuits",
    "enumerate_maximal_chains", "enumerate_nbc_bases", "flats_by_rank",
    "IntersectionGraph", "PairCountReport", "PairDecision",
    "RankConditionError", "Witness", "bigraph_laman_number",
    "build_intersection_graph", "count_intersecting_pairs",
    "is_intersecting_arboreal_pair", "nbc_via_uniform_pairs",
    "realisation_number", "verify_pair_naive",
    "CharChromReport", "OneVar", "TwoVar", "characteristic_and_chromatic",
    "tutte_polynomial", "tutte_polynomial_subset",
    "__version__",
]
