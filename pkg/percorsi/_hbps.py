"""Hierarchical basis construction for networks with layer-skip blocks."""

import logging
from concurrent.futures import ThreadPoolExecutor

from basicco import basic_data
from tippo import Any, Iterable

from ._bases import BaseRecord
from ._netgraph import NetworkGraph, count_paths
from ._subroutine import BasisPathSet, subroutine_basis
from ._substructure import (
    InducedGraph,
    SharedEdges,
    SubstructurePath,
    SubstructureSet,
    check_pairwise_edge_disjoint,
    induced_subgraph,
    reduced_graph,
    substructure_set,
)
from ._tiebreak import TieBreak
from .constants import DEFAULT_MAX_PATHS, SHARED_EDGES_MESSAGE
from .exceptions import PathCountExceedsLimitError, SharedEdgesError

__all__ = ["SubstructureBasis", "HbpsResult", "RejectedSharedEdges", "hbps"]

_logger = logging.getLogger(__name__)


class SubstructureBasis(BaseRecord):
    """Basis built for one independent substructure, in host coordinates."""

    __slots__ = ("_substructure_id", "_path", "_edge_count", "_hidden_count", "_basis")

    def __init__(self, substructure_id, path, edge_count, hidden_count, basis):
        # type: (int, SubstructurePath, int, int, BasisPathSet) -> None
        """
        :param substructure_id: Position among the independent substructure paths.
        :param path: Substructure path.
        :param edge_count: Edges of the induced network (m_r).
        :param hidden_count: Hidden nodes of the induced network (H_r).
        :param basis: Basis paths, in host coordinates.
        """
        self._substructure_id = substructure_id
        self._path = path
        self._edge_count = edge_count
        self._hidden_count = hidden_count
        self._basis = basis

    def to_items(self, usecase=None):
        # type: (basic_data.ItemUsecase | None) -> list[tuple[str, Any]]
        """
        Convert to items.

        :param usecase: Usecase.
        :return: Items.
        """
        return [
            ("substructure_id", self._substructure_id),
            ("path", self._path),
            ("edge_count", self._edge_count),
            ("hidden_count", self._hidden_count),
            ("basis", self._basis),
        ]

    def serialize(self):
        # type: () -> dict[str, Any]
        """
        Serialize.

        :return: Serialized.
        """
        return {
            "path": self._path.serialize(),
            "m": self._edge_count,
            "h": self._hidden_count,
            "basis": self._basis.serialize(),
        }

    @property
    def substructure_id(self):
        # type: () -> int
        """Position among the independent substructure paths."""
        return self._substructure_id

    @property
    def path(self):
        # type: () -> SubstructurePath
        """Substructure path."""
        return self._path

    @property
    def edge_count(self):
        # type: () -> int
        """Edges of the induced network (m_r)."""
        return self._edge_count

    @property
    def hidden_count(self):
        # type: () -> int
        """Hidden nodes of the induced network (H_r)."""
        return self._hidden_count

    @property
    def basis(self):
        # type: () -> BasisPathSet
        """Basis paths, in host coordinates."""
        return self._basis


class HbpsResult(BaseRecord):
    """Union of the per-substructure bases."""

    __slots__ = ("_basis", "_substructures", "_per_substructure")

    def __init__(self, basis, substructures, per_substructure):
        # type: (BasisPathSet, SubstructureSet, Iterable[SubstructureBasis]) -> None
        """
        :param basis: Union of the per-substructure bases, canonically ordered.
        :param substructures: Substructure decomposition.
        :param per_substructure: Basis per independent substructure.
        """
        self._basis = basis
        self._substructures = substructures
        self._per_substructure = tuple(per_substructure)

    def to_items(self, usecase=None):
        # type: (basic_data.ItemUsecase | None) -> list[tuple[str, Any]]
        """
        Convert to items.

        :param usecase: Usecase.
        :return: Items.
        """
        return [
            ("basis", self._basis),
            ("substructures", self._substructures),
            ("per_substructure", self._per_substructure),
        ]

    def serialize(self):
        # type: () -> dict[str, Any]
        """
        Serialize.

        :return: Serialized.
        """
        return {
            "cardinality": self._basis.cardinality,
            "substructures": self._substructures.serialize(),
            "per_substructure": [s.serialize() for s in self._per_substructure],
            "basis": self._basis.serialize(),
        }

    @property
    def basis(self):
        # type: () -> BasisPathSet
        """Union of the per-substructure bases."""
        return self._basis

    @property
    def substructures(self):
        # type: () -> SubstructureSet
        """Substructure decomposition."""
        return self._substructures

    @property
    def per_substructure(self):
        # type: () -> tuple[SubstructureBasis, ...]
        """Basis per independent substructure."""
        return self._per_substructure

    @property
    def cardinality(self):
        # type: () -> int
        """Number of basis paths."""
        return self._basis.cardinality

    @property
    def expected_cardinality(self):
        # type: () -> int
        """Sum of `m_r - H_r` over the independent substructures."""
        return sum(s.edge_count - s.hidden_count for s in self._per_substructure)


class RejectedSharedEdges(BaseRecord):
    """Independent substructure paths that share a layer transition."""

    __slots__ = ("_shared", "_substructures")

    def __init__(self, shared, substructures):
        # type: (SharedEdges, SubstructureSet) -> None
        """
        :param shared: Offending pair.
        :param substructures: Substructure decomposition.
        """
        self._shared = shared
        self._substructures = substructures

    def to_items(self, usecase=None):
        # type: (basic_data.ItemUsecase | None) -> list[tuple[str, Any]]
        """
        Convert to items.

        :param usecase: Usecase.
        :return: Items.
        """
        return [("shared", self._shared), ("substructures", self._substructures)]

    def serialize(self):
        # type: () -> dict[str, Any]
        """
        Serialize.

        :return: Serialized.
        """
        return {
            "message": SHARED_EDGES_MESSAGE,
            "shared": self._shared.serialize(),
            "substructures": self._substructures.serialize(),
        }

    @property
    def shared(self):
        # type: () -> SharedEdges
        """Offending pair."""
        return self._shared

    @property
    def substructures(self):
        # type: () -> SubstructureSet
        """Substructure decomposition."""
        return self._substructures

    @property
    def message(self):
        # type: () -> str
        """Diagnostic."""
        return SHARED_EDGES_MESSAGE


def _substructure_basis(substructure_id, induced, tie_break, max_paths):
    # type: (int, InducedGraph, TieBreak, int | None) -> SubstructureBasis
    graph = induced.graph
    if max_paths is not None:
        total = count_paths(graph)
        if total > max_paths:
            raise PathCountExceedsLimitError(total, max_paths)
    local = subroutine_basis(graph, tie_break.relabel(induced.from_original, stream=substructure_id))
    basis = BasisPathSet(
        [induced.original_path(p) for p in local.paths],
        local.origins,
        [substructure_id] * local.cardinality,
    )
    _logger.debug(
        "substructure %d %s: m=%d, H=%d, %d basis paths",
        substructure_id,
        list(induced.path.layers),
        graph.edge_count,
        graph.hidden_count,
        basis.cardinality,
    )
    return SubstructureBasis(substructure_id, induced.path, graph.edge_count, graph.hidden_count, basis)


def hbps(graph, tie_break=None, jobs=1, max_paths=DEFAULT_MAX_PATHS):
    # type: (NetworkGraph, TieBreak | None, int, int | None) -> HbpsResult | RejectedSharedEdges
    """
    Decompose a network into independent substructures and build a basis for each.

    :param graph: Graph.
    :param tie_break: Tie break, in host coordinates (deterministic by default).
    :param jobs: Number of substructures processed concurrently.
    :param max_paths: Cap on the path count of every induced network (None for no cap).
    :return: Result, or the rejection when independent substructure paths share a transition.
    :raises UnreachableError: Output layer cannot be reached.
    :raises PathCountExceedsLimitError: Some induced network has too many paths.
    :raises InvalidTieBreakError: Overrides name something outside an induced network.
    """
    if jobs < 1:
        error = "jobs must be at least 1, got {}".format(jobs)
        raise ValueError(error)
    tie_break = tie_break if tie_break is not None else TieBreak.deterministic()

    substructures = substructure_set(reduced_graph(graph))
    independent = substructures.independent_paths
    try:
        check_pairwise_edge_disjoint(independent)
    except SharedEdgesError as e:
        shared = e.shared
        _logger.info(
            "rejected: substructures %s and %s share transitions %s",
            list(shared.paths[0].layers),
            list(shared.paths[1].layers),
            [list(t) for t in shared.transitions],
        )
        return RejectedSharedEdges(shared, substructures)

    induced = [induced_subgraph(graph, p) for p in independent]
    tasks = [(i, g, tie_break, max_paths) for i, g in enumerate(induced)]
    if jobs > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            per_substructure = list(executor.map(lambda t: _substructure_basis(*t), tasks))
    else:
        per_substructure = [_substructure_basis(*t) for t in tasks]

    basis = BasisPathSet()
    for item in per_substructure:
        basis = basis.union(item.basis)
    result = HbpsResult(basis.canonical(), substructures, per_substructure)
    _logger.info(
        "built basis of %d paths over %d substructures", result.cardinality, len(per_substructure)
    )
    return result
