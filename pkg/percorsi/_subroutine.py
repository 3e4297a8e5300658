"""Layer-by-layer basis construction for networks without layer-skip edges."""

import logging

import six
from basicco import basic_data
from pyrsistent import pmap, pvector
from tippo import Any, Iterable, Mapping, Type, TypeVar

from ._bases import BaseRecord
from ._netgraph import NetworkGraph, NodeRef, Path
from ._tiebreak import TieBreak
from .constants import INTEGER_TYPES, Origin
from .exceptions import EmptyReachError, HasSkipEdgesError, MissingBlockError, SerializationError

__all__ = [
    "BasisPathSet",
    "LayerState",
    "direct_paths",
    "cross_paths",
    "initial_state",
    "extend_layer",
    "subroutine_trace",
    "subroutine_basis",
    "prefix_counts",
]

_logger = logging.getLogger(__name__)

_ORIGIN_RANK = {Origin.DIRECT: 0, Origin.CROSS: 1}


class BasisPathSet(BaseRecord):
    """
    Ordered paths, each tagged with how it was built and which substructure it belongs to.

    Duplicates are representable so that a verifier can reject them.
    """

    __slots__ = ("_paths", "_origins", "_substructure_ids")

    def __init__(self, paths=(), origins=None, substructure_ids=None):
        # type: (Iterable[Path], Iterable[Origin] | None, Iterable[int] | None) -> None
        """
        :param paths: Paths.
        :param origins: Origin per path (defaults to direct).
        :param substructure_ids: Substructure per path (defaults to 0).
        :raises ValueError: Lengths do not match.
        """
        self._paths = pvector(paths)
        self._origins = pvector(origins if origins is not None else [Origin.DIRECT] * len(self._paths))
        self._substructure_ids = pvector(
            substructure_ids if substructure_ids is not None else [0] * len(self._paths)
        )
        if not len(self._paths) == len(self._origins) == len(self._substructure_ids):
            error = "got {} paths, {} origins and {} substructure ids".format(
                len(self._paths), len(self._origins), len(self._substructure_ids)
            )
            raise ValueError(error)

    def to_items(self, usecase=None):
        # type: (basic_data.ItemUsecase | None) -> list[tuple[str, Any]]
        """
        Convert to items.

        :param usecase: Usecase.
        :return: Items.
        """
        return [
            ("paths", tuple(self._paths)),
            ("origins", tuple(self._origins)),
            ("substructure_ids", tuple(self._substructure_ids)),
        ]

    def __len__(self):
        # type: () -> int
        return len(self._paths)

    def __iter__(self):
        return iter(self._paths)

    def __contains__(self, path):
        # type: (object) -> bool
        return path in self._paths

    def entries(self):
        # type: () -> list[tuple[Path, Origin, int]]
        """
        Get `(path, origin, substructure id)` triples, in order.

        :return: Entries.
        """
        return list(zip(self._paths, self._origins, self._substructure_ids))

    def canonical(self):
        # type: (BPS) -> BPS
        """
        Sort by substructure, then direct before cross, then lexicographic path order.

        :return: Sorted basis path set.
        """
        entries = sorted(self.entries(), key=lambda e: (e[2], _ORIGIN_RANK[e[1]], e[0].key))
        return type(self)([e[0] for e in entries], [e[1] for e in entries], [e[2] for e in entries])

    def union(self, other):
        # type: (BPS, BasisPathSet) -> BPS
        """
        Concatenate with another basis path set.

        :param other: Other.
        :return: Combined basis path set.
        """
        entries = self.entries() + other.entries()
        return type(self)([e[0] for e in entries], [e[1] for e in entries], [e[2] for e in entries])

    def discard(self, index):
        # type: (BPS, int) -> BPS
        """
        Drop the path at a position.

        :param index: Position.
        :return: Basis path set without it.
        """
        entries = self.entries()
        del entries[index]
        return type(self)([e[0] for e in entries], [e[1] for e in entries], [e[2] for e in entries])

    def with_substructure(self, substructure_id):
        # type: (BPS, int) -> BPS
        """
        Tag every path with a substructure.

        :param substructure_id: Substructure id.
        :return: Retagged basis path set.
        """
        return type(self)(self._paths, self._origins, [substructure_id] * len(self._paths))

    def serialize(self):
        # type: () -> dict[str, Any]
        """
        Serialize.

        :return: Serialized.
        """
        return {
            "cardinality": len(self._paths),
            "paths": [
                {"path": p.serialize(), "origin": o.value, "substructure": s} for p, o, s in self.entries()
            ],
        }

    @classmethod
    def deserialize(cls, serialized):
        # type: (Type[BPS], Any) -> BPS
        """
        Deserialize (accepts both basis documents and hbps result documents).

        :param serialized: Serialized.
        :return: Basis path set.
        :raises SerializationError: Error while deserializing.
        """
        if isinstance(serialized, Mapping) and isinstance(serialized.get("basis"), Mapping):
            serialized = serialized["basis"]
        if not isinstance(serialized, Mapping) or not isinstance(serialized.get("paths"), list):
            error = "basis document needs a 'paths' list"
            raise SerializationError(error)
        paths, origins, substructure_ids = [], [], []
        for record in serialized["paths"]:
            try:
                if isinstance(record, Mapping):
                    path = Path.deserialize(record["path"])
                    origin = Origin(record.get("origin", Origin.DIRECT.value))
                    substructure_id = record.get("substructure", 0)
                else:
                    path, origin, substructure_id = Path.deserialize(record), Origin.DIRECT, 0
            except (TypeError, KeyError, ValueError) as e:
                exc = SerializationError("invalid basis record {!r}; {}".format(record, e))
                six.raise_from(exc, None)
                raise exc
            if not isinstance(substructure_id, INTEGER_TYPES) or isinstance(substructure_id, bool):
                error = "substructure id must be an integer, got {!r}".format(substructure_id)
                raise SerializationError(error)
            paths.append(path)
            origins.append(origin)
            substructure_ids.append(substructure_id)
        return cls(paths, origins, substructure_ids)

    @property
    def paths(self):
        # type: () -> tuple[Path, ...]
        """Paths."""
        return tuple(self._paths)

    @property
    def origins(self):
        # type: () -> tuple[Origin, ...]
        """Origin per path."""
        return tuple(self._origins)

    @property
    def substructure_ids(self):
        # type: () -> tuple[int, ...]
        """Substructure per path."""
        return tuple(self._substructure_ids)

    @property
    def cardinality(self):
        # type: () -> int
        """Number of paths."""
        return len(self._paths)


BPS = TypeVar("BPS", bound=BasisPathSet)


class LayerState(BaseRecord):
    """Paths constructed up to layer `k + 1`, grouped by the node they reach."""

    __slots__ = ("_k", "_p_dir", "_p_cross", "_reach")

    def __init__(self, k, p_dir, p_cross, reach=None):
        # type: (int, Iterable[Path], Iterable[Path], Mapping[NodeRef, Iterable[Path]] | None) -> None
        """
        :param k: Layer the last stubs left from.
        :param p_dir: Direct paths.
        :param p_cross: Cross paths.
        :param reach: Paths per reached node (derived from the paths when omitted).
        """
        self._k = k
        self._p_dir = pvector(p_dir)
        self._p_cross = pvector(p_cross)
        if reach is None:
            grouped = {}  # type: dict[NodeRef, list[Path]]
            for path in list(self._p_dir) + list(self._p_cross):
                grouped.setdefault(path.end, []).append(path)
            reach = grouped
        self._reach = pmap(
            dict((n, tuple(sorted(ps, key=lambda p: p.key))) for n, ps in six.iteritems(dict(reach)))
        )

    def to_items(self, usecase=None):
        # type: (basic_data.ItemUsecase | None) -> list[tuple[str, Any]]
        """
        Convert to items.

        :param usecase: Usecase.
        :return: Items.
        """
        return [
            ("k", self._k),
            ("p_dir", tuple(self._p_dir)),
            ("p_cross", tuple(self._p_cross)),
            ("reach", self._reach),
        ]

    def reach_of(self, node):
        # type: (NodeRef) -> tuple[Path, ...]
        """
        Get the constructed paths ending at a node.

        :param node: Node in layer `k + 1`.
        :return: Paths, lexicographically sorted (empty if none).
        """
        return self._reach.get(node, ())

    def reach_sizes(self):
        # type: () -> dict[tuple[int, int], int]
        """
        Get how many constructed paths end at each reached node.

        :return: Count per node key.
        """
        return dict((n.key, len(ps)) for n, ps in six.iteritems(self._reach))

    @property
    def k(self):
        # type: () -> int
        """Layer the last stubs left from."""
        return self._k

    @property
    def p_dir(self):
        # type: () -> tuple[Path, ...]
        """Direct paths."""
        return tuple(self._p_dir)

    @property
    def p_cross(self):
        # type: () -> tuple[Path, ...]
        """Cross paths."""
        return tuple(self._p_cross)

    @property
    def reach(self):
        # type: () -> Mapping[NodeRef, tuple[Path, ...]]
        """Paths per reached node."""
        return self._reach

    @property
    def size(self):
        # type: () -> int
        """Number of constructed paths."""
        return len(self._p_dir) + len(self._p_cross)


def _require_block(graph, k):
    # type: (NetworkGraph, int) -> None
    if not graph.has_block(k, k + 1):
        error = "layers {} and {} are not joined by a block".format(k, k + 1)
        raise MissingBlockError(error)


def direct_paths(graph, k, tie_break=None):
    # type: (NetworkGraph, int, TieBreak | None) -> list[Path]
    """
    Build the direct single-edge paths between layers `k` and `k + 1`.

    Blocks are complete bipartite, so vertex-disjoint paths are found by matching equal indices. Tails left over
    when layer `k` is the larger one attach to a head chosen by the tie break.

    :param graph: Graph without layer-skip edges.
    :param k: Lower layer.
    :param tie_break: Tie break (deterministic by default).
    :return: One path per node of layer `k`, sorted.
    :raises MissingBlockError: Layers are not joined by a block.
    """
    _require_block(graph, k)
    tie_break = tie_break if tie_break is not None else TieBreak.deterministic()
    tails = graph.nodes_in_layer(k)
    heads = graph.nodes_in_layer(k + 1)
    paths = [Path((tail, head)) for tail, head in zip(tails, heads)]
    for tail in tails[len(heads) :]:
        paths.append(Path((tail, tie_break.choose_head(tail, heads))))
    return sorted(paths, key=lambda p: p.key)


def cross_paths(graph, k, direct):
    # type: (NetworkGraph, int, Iterable[Path]) -> list[Path]
    """
    Build the cross single-edge paths: every edge between layers `k` and `k + 1` that is not direct.

    :param graph: Graph without layer-skip edges.
    :param k: Lower layer.
    :param direct: Direct paths for the same layer pair.
    :return: Paths, sorted.
    :raises MissingBlockError: Layers are not joined by a block.
    """
    _require_block(graph, k)
    used = set(p.edges[0] for p in direct)
    return [Path((e.tail, e.head)) for e in graph.block_edges(k, k + 1) if e not in used]


def initial_state(graph, tie_break=None):
    # type: (NetworkGraph, TieBreak | None) -> LayerState
    """
    Build the single-edge paths leaving the input layer.

    :param graph: Graph without layer-skip edges.
    :param tie_break: Tie break (deterministic by default).
    :return: State for `k = 0`.
    """
    direct = direct_paths(graph, 0, tie_break)
    return LayerState(0, direct, cross_paths(graph, 0, direct))


def extend_layer(state, graph, k, tie_break=None):
    # type: (LayerState, NetworkGraph, int, TieBreak | None) -> LayerState
    """
    Extend the constructed paths across layers `k` and `k + 1`.

    Every direct stub is concatenated with every path reaching its tail. Every cross stub is concatenated with
    exactly one of them, chosen by the tie break.

    :param state: State holding the paths that reach layer `k`.
    :param graph: Graph without layer-skip edges.
    :param k: Lower layer (at least 1).
    :param tie_break: Tie break (deterministic by default).
    :return: State for `k`.
    :raises ValueError: State does not reach layer `k`.
    :raises EmptyReachError: Some node of layer `k` is reached by no constructed path.
    """
    if k < 1 or state.k != k - 1:
        error = "cannot extend a state for k={} across layer {}".format(state.k, k)
        raise ValueError(error)
    tie_break = tie_break if tie_break is not None else TieBreak.deterministic()
    for node in graph.nodes_in_layer(k):
        if not state.reach_of(node):
            error = "no constructed path reaches {!r}".format(node)
            raise EmptyReachError(error)

    direct = direct_paths(graph, k, tie_break)
    cross = cross_paths(graph, k, direct)
    p_dir = [lower.concatenate(stub) for stub in direct for lower in state.reach_of(stub.start)]
    p_cross = [tie_break.choose_reach(stub.edges[0], state.reach_of(stub.start)).concatenate(stub) for stub in cross]
    new_state = LayerState(k, p_dir, p_cross)
    _logger.debug(
        "layer %d: %d direct and %d cross stubs, %d paths reach layer %d",
        k,
        len(direct),
        len(cross),
        new_state.size,
        k + 1,
    )
    return new_state


def _check_skip_free(graph):
    # type: (NetworkGraph) -> None
    if graph.has_skip_edges:
        error = "network has layer-skip edges; decompose it with hbps instead"
        raise HasSkipEdgesError(error)
    for k in range(graph.last_layer):
        _require_block(graph, k)


def subroutine_trace(graph, tie_break=None):
    # type: (NetworkGraph, TieBreak | None) -> list[LayerState]
    """
    Run the construction and keep every intermediate state.

    :param graph: Graph without layer-skip edges.
    :param tie_break: Tie break (deterministic by default).
    :return: States for `k = 0 .. L - 1`.
    :raises HasSkipEdgesError: Graph has layer-skip edges.
    :raises MissingBlockError: Some consecutive layers are not joined.
    :raises InvalidTieBreakError: Overrides name something outside the graph.
    """
    _check_skip_free(graph)
    tie_break = tie_break if tie_break is not None else TieBreak.deterministic()
    tie_break.check(graph)
    states = [initial_state(graph, tie_break)]
    for k in range(1, graph.last_layer):
        states.append(extend_layer(states[-1], graph, k, tie_break))
    return states


def subroutine_basis(graph, tie_break=None):
    # type: (NetworkGraph, TieBreak | None) -> BasisPathSet
    """
    Build a basis path set of a network without layer-skip edges.

    :param graph: Graph without layer-skip edges.
    :param tie_break: Tie break (deterministic by default).
    :return: Basis path set of `m - H` paths, canonically ordered.
    :raises HasSkipEdgesError: Graph has layer-skip edges.
    :raises MissingBlockError: Some consecutive layers are not joined.
    :raises InvalidTieBreakError: Overrides name something outside the graph.
    """
    final = subroutine_trace(graph, tie_break)[-1]
    basis = BasisPathSet(
        final.p_dir + final.p_cross,
        [Origin.DIRECT] * len(final.p_dir) + [Origin.CROSS] * len(final.p_cross),
    ).canonical()
    _logger.debug("built basis of %d paths (m=%d, H=%d)", basis.cardinality, graph.edge_count, graph.hidden_count)
    return basis


def prefix_counts(graph, k):
    # type: (NetworkGraph, int) -> tuple[int, int]
    """
    Count edges and hidden nodes of the sub-graph spanning layers `0 .. k + 1`.

    :param graph: Graph without layer-skip edges.
    :param k: Layer.
    :return: `(m(k), H(k))`.
    """
    sizes = graph.layer_sizes
    return sum(sizes[l] * sizes[l + 1] for l in range(k + 1)), sum(sizes[1 : k + 1])
