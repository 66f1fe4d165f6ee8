"""Deciders and exhaustive verification suites for well-covered graph
structure: W_p membership, criticality, the W-index, and the clique-side
mirror of all three on the complement."""

from .bitset import VertexSet
from .graphs import (
    Blowup,
    Edge,
    EmptySubgraphError,
    Graph,
    Subgraph,
    UnionGraph,
    closed_neighborhood,
    complement,
    connected_components,
    delete_edge,
    disjoint_union,
    edge_localization,
    induced_subgraph,
    lexicographic_product,
    localization,
    open_neighborhood,
)
from .graph6 import Graph6Error, decode, encode, iter_stream
from .families import FamilyGraph, FamilySpec, FAMILY_NAMES, generate
from .independence import (
    IndependenceProfile,
    Ridge,
    fiber,
    independence_number,
    is_well_covered,
    maximal_independent_sets,
    profile,
)
from .wp import (
    EdgeLocalizationEntry,
    GorensteinReport,
    OracleSizeError,
    TheoremReport,
    edge_localization_scan,
    gorenstein_combinatorial_check,
    is_alpha_critical_direct,
    is_alpha_critical_fibers,
    is_edge_alpha_critical,
    is_in_wp_localization,
    is_in_wp_oracle,
    is_in_wp_ridge,
    main_theorem_report,
    non_critical_edge,
    w_index,
    wp_oracle_counterexample,
)
from .saturation import (
    HOLDS,
    HYPOTHESIS_UNMET,
    VIOLATION,
    BoundReport,
    RigidityReport,
    alpha2_check,
    alpha3_check,
    bound_report,
    clique_codegree,
    clique_union_shape,
    dense_rigidity_check,
    is_kt_free,
    is_kt_saturated,
    maximal_clique_sizes_uniform,
    min_clique_codegree,
)
from .verify import (
    SUITE_NAMES,
    CatalogSweep,
    SuiteLine,
    SuiteResult,
    catalog_suite,
    codec_suite,
    corollary_discrepancies,
    equivalence_discrepancies,
    examples_suite,
    run_suite,
    sweep_catalog,
)

__version__ = "0.1.0"
