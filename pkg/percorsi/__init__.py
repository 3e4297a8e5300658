from ._algebra import (
    EdgeVector,
    NotAPath,
    PathCombination,
    add_edge,
    as_path,
    evaluate,
    graph_add_path,
    graph_remove_path,
    path_edges,
    remove_edge,
    swap_edge,
)
from ._hbps import HbpsResult, RejectedSharedEdges, SubstructureBasis, hbps
from ._linalg import RowSpace, rank
from ._netgraph import (
    EdgeRef,
    LayerBlock,
    NetworkGraph,
    NetworkSpec,
    NodeRef,
    Path,
    build_network,
    count_paths,
    enumerate_paths,
    sample_paths,
    skip_degree,
)
from ._subroutine import (
    BasisPathSet,
    LayerState,
    cross_paths,
    direct_paths,
    extend_layer,
    initial_state,
    prefix_counts,
    subroutine_basis,
    subroutine_trace,
)
from ._substructure import (
    AlphaVector,
    InducedGraph,
    ReducedGraph,
    SharedEdges,
    SubstructurePath,
    SubstructureSet,
    check_pairwise_edge_disjoint,
    enumerate_substructure_paths,
    induced_subgraph,
    is_homogeneous,
    maximal_independent_subset,
    reduced_graph,
    structure_path,
    substructure_set,
    vectorize,
)
from ._tiebreak import TieBreak
from ._verify import (
    Representation,
    SpanChecker,
    VerificationReport,
    brute_force_reachable,
    check_coverage,
    expected_cardinality,
    in_span,
    independence_rank,
    verify_basis,
)

__all__ = [
    "NodeRef",
    "EdgeRef",
    "Path",
    "LayerBlock",
    "NetworkSpec",
    "NetworkGraph",
    "build_network",
    "skip_degree",
    "count_paths",
    "enumerate_paths",
    "sample_paths",
    "EdgeVector",
    "PathCombination",
    "NotAPath",
    "path_edges",
    "evaluate",
    "graph_add_path",
    "graph_remove_path",
    "add_edge",
    "remove_edge",
    "swap_edge",
    "as_path",
    "RowSpace",
    "rank",
    "TieBreak",
    "BasisPathSet",
    "LayerState",
    "direct_paths",
    "cross_paths",
    "initial_state",
    "extend_layer",
    "subroutine_trace",
    "subroutine_basis",
    "prefix_counts",
    "ReducedGraph",
    "SubstructurePath",
    "AlphaVector",
    "SubstructureSet",
    "SharedEdges",
    "InducedGraph",
    "reduced_graph",
    "enumerate_substructure_paths",
    "vectorize",
    "maximal_independent_subset",
    "check_pairwise_edge_disjoint",
    "induced_subgraph",
    "substructure_set",
    "structure_path",
    "is_homogeneous",
    "SubstructureBasis",
    "HbpsResult",
    "RejectedSharedEdges",
    "hbps",
    "Representation",
    "SpanChecker",
    "VerificationReport",
    "check_coverage",
    "independence_rank",
    "in_span",
    "brute_force_reachable",
    "expected_cardinality",
    "verify_basis",
]
