"""Decomposition of a network into substructures by their layer-transition patterns."""

import logging
from collections import deque
from fractions import Fraction

import six
from basicco import basic_data
from pyrsistent import pmap
from tippo import Any, Iterable, Mapping, Sequence, Type, TypeVar

from ._bases import BaseRecord
from ._linalg import RowSpace
from ._netgraph import NetworkGraph, NetworkSpec, NodeRef, Path, build_network
from .constants import INTEGER_TYPES
from .exceptions import (
    InvalidPathError,
    MissingBlockError,
    SerializationError,
    SharedEdgesError,
    UnreachableError,
)

__all__ = [
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
]

_logger = logging.getLogger(__name__)


class ReducedGraph(BaseRecord):
    """One node per layer, one edge per block."""

    __slots__ = ("_last_layer", "_edges")

    def __init__(self, last_layer, edges):
        # type: (int, Iterable[tuple[int, int]]) -> None
        """
        :param last_layer: Index of the output layer.
        :param edges: `(from_layer, to_layer)` pairs.
        :raises ValueError: Edge out of range.
        """
        self._last_layer = last_layer
        self._edges = frozenset(tuple(e) for e in edges)
        for j, l in self._edges:
            if not 0 <= j < l <= last_layer:
                error = "reduced edge ({}, {}) out of range for last layer {}".format(j, l, last_layer)
                raise ValueError(error)

    def to_items(self, usecase=None):
        # type: (basic_data.ItemUsecase | None) -> list[tuple[str, Any]]
        """
        Convert to items.

        :param usecase: Usecase.
        :return: Items.
        """
        return [("last_layer", self._last_layer), ("edges", tuple(sorted(self._edges)))]

    def successors(self, layer):
        # type: (int) -> tuple[int, ...]
        """
        Get the layers reachable in one step.

        :param layer: Layer.
        :return: Layers, ascending.
        """
        return tuple(sorted(l for j, l in self._edges if j == layer))

    @property
    def last_layer(self):
        # type: () -> int
        """Index of the output layer."""
        return self._last_layer

    @property
    def edges(self):
        # type: () -> frozenset[tuple[int, int]]
        """`(from_layer, to_layer)` pairs."""
        return self._edges


class SubstructurePath(BaseRecord):
    """Layer sequence of a path in the reduced graph."""

    __slots__ = ("_layers",)

    def __init__(self, layers):
        # type: (Iterable[int]) -> None
        """
        :param layers: Strictly increasing layers, at least two.
        :raises InvalidPathError: Fewer than two layers or not strictly increasing.
        """
        self._layers = tuple(layers)
        if len(self._layers) < 2 or any(b <= a for a, b in zip(self._layers, self._layers[1:])):
            error = "substructure path needs at least two strictly increasing layers, got {!r}".format(self._layers)
            raise InvalidPathError(error)

    def to_items(self, usecase=None):
        # type: (basic_data.ItemUsecase | None) -> list[tuple[str, Any]]
        """
        Convert to items.

        :param usecase: Usecase.
        :return: Items.
        """
        return [("layers", self._layers)]

    def serialize(self):
        # type: () -> list[int]
        """
        Serialize as the list of layers.

        :return: Serialized.
        """
        return list(self._layers)

    @classmethod
    def deserialize(cls, serialized):
        # type: (Type[SP], Any) -> SP
        """
        Deserialize.

        :param serialized: Serialized.
        :return: Substructure path.
        :raises SerializationError: Error while deserializing.
        """
        if not isinstance(serialized, list) or not all(
            isinstance(l, INTEGER_TYPES) and not isinstance(l, bool) for l in serialized
        ):
            error = "substructure path must be a list of layers, got {!r}".format(serialized)
            raise SerializationError(error)
        try:
            return cls(serialized)
        except InvalidPathError as e:
            exc = SerializationError(str(e))
            six.raise_from(exc, None)
            raise exc

    @property
    def layers(self):
        # type: () -> tuple[int, ...]
        """Layers."""
        return self._layers

    @property
    def transitions(self):
        # type: () -> tuple[tuple[int, int], ...]
        """Consecutive layer pairs."""
        return tuple(zip(self._layers, self._layers[1:]))

    @property
    def key(self):
        # type: () -> tuple[int, tuple[int, ...]]
        """Breadth-first order key: shorter first, then lexicographic."""
        return len(self._layers), self._layers


SP = TypeVar("SP", bound=SubstructurePath)


class AlphaVector(BaseRecord):
    """Row-major reshape of a substructure path's layer adjacency matrix."""

    __slots__ = ("_last_layer", "_bits")

    def __init__(self, last_layer, bits):
        # type: (int, Iterable[int]) -> None
        """
        :param last_layer: Index of the output layer.
        :param bits: 0-1 entries, `(last_layer + 1) ** 2` of them.
        :raises ValueError: Wrong length or non 0-1 entries.
        """
        self._last_layer = last_layer
        self._bits = tuple(bits)
        if len(self._bits) != (last_layer + 1) ** 2 or any(b not in (0, 1) for b in self._bits):
            error = "alpha vector for last layer {} needs {} 0-1 entries".format(last_layer, (last_layer + 1) ** 2)
            raise ValueError(error)

    def to_items(self, usecase=None):
        # type: (basic_data.ItemUsecase | None) -> list[tuple[str, Any]]
        """
        Convert to items.

        :param usecase: Usecase.
        :return: Items.
        """
        return [("last_layer", self._last_layer), ("bits", self._bits)]

    def support(self):
        # type: () -> dict[int, int]
        """
        Get the non-zero positions.

        :return: Sparse vector.
        """
        return dict((i, 1) for i, b in enumerate(self._bits) if b)

    def to_path(self):
        # type: () -> SubstructurePath
        """
        Recover the layer sequence.

        :return: Substructure path.
        :raises ValueError: Bits do not encode a single chain from layer 0.
        """
        width = self._last_layer + 1
        successors = {}  # type: dict[int, int]
        for position in self.support():
            j, l = divmod(position, width)
            if j >= l or j in successors:
                error = "alpha vector does not encode a chain of increasing layers"
                raise ValueError(error)
            successors[j] = l
        layers = [0]
        while layers[-1] in successors:
            layers.append(successors[layers[-1]])
        if len(layers) - 1 != len(successors):
            error = "alpha vector does not encode a single chain from layer 0"
            raise ValueError(error)
        return SubstructurePath(layers)

    @property
    def last_layer(self):
        # type: () -> int
        """Index of the output layer."""
        return self._last_layer

    @property
    def bits(self):
        # type: () -> tuple[int, ...]
        """Entries, position `j * (last_layer + 1) + l` holding the `(j, l)` transition."""
        return self._bits


class SubstructureSet(BaseRecord):
    """Every substructure path, their vectors and the maximal independent subset selected from them."""

    __slots__ = ("_all_paths", "_independent", "_vectors")

    def __init__(self, all_paths, independent, vectors):
        # type: (Iterable[SubstructurePath], Iterable[int], Iterable[AlphaVector]) -> None
        """
        :param all_paths: Substructure paths, in breadth-first order.
        :param independent: Positions of the selected paths.
        :param vectors: Vector per path.
        """
        self._all_paths = tuple(all_paths)
        self._independent = tuple(independent)
        self._vectors = tuple(vectors)

    def to_items(self, usecase=None):
        # type: (basic_data.ItemUsecase | None) -> list[tuple[str, Any]]
        """
        Convert to items.

        :param usecase: Usecase.
        :return: Items.
        """
        return [("all_paths", self._all_paths), ("independent", self._independent), ("vectors", self._vectors)]

    def coefficients(self, index):
        # type: (int) -> dict[int, Fraction]
        """
        Express a path's vector over the independent subset.

        :param index: Position in :attr:`all_paths`.
        :return: Non-zero coefficient per position in :attr:`all_paths`.
        """
        space = RowSpace()  # type: RowSpace[int, int]
        for i in self._independent:
            space.insert(self._vectors[i].support(), i)
        solution = space.solve(self._vectors[index].support())
        assert solution is not None, "independent subset is not maximal"
        return solution

    def serialize(self):
        # type: () -> dict[str, Any]
        """
        Serialize.

        :return: Serialized.
        """
        return {
            "paths": [p.serialize() for p in self._all_paths],
            "alpha_vectors": [list(v.bits) for v in self._vectors],
            "independent": list(self._independent),
        }

    @property
    def all_paths(self):
        # type: () -> tuple[SubstructurePath, ...]
        """Substructure paths, in breadth-first order."""
        return self._all_paths

    @property
    def independent(self):
        # type: () -> tuple[int, ...]
        """Positions of the selected paths."""
        return self._independent

    @property
    def independent_paths(self):
        # type: () -> tuple[SubstructurePath, ...]
        """Selected paths."""
        return tuple(self._all_paths[i] for i in self._independent)

    @property
    def vectors(self):
        # type: () -> tuple[AlphaVector, ...]
        """Vector per path."""
        return self._vectors


class SharedEdges(BaseRecord):
    """Two substructure paths using a common layer transition."""

    __slots__ = ("_first", "_second", "_paths", "_transitions")

    def __init__(self, first, second, paths, transitions):
        # type: (int, int, tuple[SubstructurePath, SubstructurePath], Iterable[tuple[int, int]]) -> None
        """
        :param first: Position of the first path.
        :param second: Position of the second path.
        :param paths: Both paths.
        :param transitions: Shared transitions.
        """
        self._first = first
        self._second = second
        self._paths = tuple(paths)
        self._transitions = tuple(sorted(transitions))

    def to_items(self, usecase=None):
        # type: (basic_data.ItemUsecase | None) -> list[tuple[str, Any]]
        """
        Convert to items.

        :param usecase: Usecase.
        :return: Items.
        """
        return [
            ("first", self._first),
            ("second", self._second),
            ("paths", self._paths),
            ("transitions", self._transitions),
        ]

    def serialize(self):
        # type: () -> dict[str, Any]
        """
        Serialize.

        :return: Serialized.
        """
        return {
            "pair": [self._first, self._second],
            "paths": [p.serialize() for p in self._paths],
            "transitions": [list(t) for t in self._transitions],
        }

    @property
    def first(self):
        # type: () -> int
        """Position of the first path."""
        return self._first

    @property
    def second(self):
        # type: () -> int
        """Position of the second path."""
        return self._second

    @property
    def paths(self):
        # type: () -> tuple[SubstructurePath, ...]
        """Both paths."""
        return self._paths

    @property
    def transitions(self):
        # type: () -> tuple[tuple[int, int], ...]
        """Shared transitions."""
        return self._transitions


class InducedGraph(BaseRecord):
    """Skip-free network following one substructure path, plus the way back to the host's nodes."""

    __slots__ = ("_graph", "_path", "_to_original", "_from_original")

    def __init__(self, graph, path, to_original):
        # type: (NetworkGraph, SubstructurePath, Mapping[NodeRef, NodeRef]) -> None
        """
        :param graph: Relabeled network.
        :param path: Substructure path it follows.
        :param to_original: Host node for each relabeled node.
        """
        self._graph = graph
        self._path = path
        self._to_original = pmap(to_original)
        self._from_original = pmap(dict((o, n) for n, o in six.iteritems(to_original)))

    def to_items(self, usecase=None):
        # type: (basic_data.ItemUsecase | None) -> list[tuple[str, Any]]
        """
        Convert to items.

        :param usecase: Usecase.
        :return: Items.
        """
        return [("graph", self._graph), ("path", self._path), ("to_original", self._to_original)]

    def original_node(self, node):
        # type: (NodeRef) -> NodeRef
        """
        Translate a relabeled node to the host.

        :param node: Relabeled node.
        :return: Host node.
        """
        return self._to_original[node]

    def original_path(self, path):
        # type: (Path) -> Path
        """
        Translate a relabeled path to the host.

        :param path: Relabeled path.
        :return: Host path.
        """
        return Path(self._to_original[n] for n in path)

    def induced_path(self, path):
        # type: (Path) -> Path
        """
        Translate a host path into the relabeled network.

        :param path: Host path following the substructure path.
        :return: Relabeled path.
        :raises InvalidPathError: Path leaves the substructure.
        """
        try:
            return Path(self._from_original[n] for n in path)
        except KeyError as e:
            exc = InvalidPathError("{!r} is outside the substructure".format(e.args[0]))
            six.raise_from(exc, None)
            raise exc

    @property
    def graph(self):
        # type: () -> NetworkGraph
        """Relabeled network."""
        return self._graph

    @property
    def path(self):
        # type: () -> SubstructurePath
        """Substructure path it follows."""
        return self._path

    @property
    def to_original(self):
        # type: () -> Mapping[NodeRef, NodeRef]
        """Host node for each relabeled node."""
        return self._to_original

    @property
    def from_original(self):
        # type: () -> Mapping[NodeRef, NodeRef]
        """Relabeled node for each host node in the substructure."""
        return self._from_original


def reduced_graph(graph):
    # type: (NetworkGraph) -> ReducedGraph
    """
    Collapse every layer to a single node.

    Blocks are complete bipartite, so the result depends only on the block list.

    :param graph: Graph.
    :return: Reduced graph.
    """
    return ReducedGraph(graph.last_layer, (b.key for b in graph.blocks))


def enumerate_substructure_paths(reduced):
    # type: (ReducedGraph) -> list[SubstructurePath]
    """
    Enumerate every path from layer 0 to the output layer by breadth-first search.

    :param reduced: Reduced graph.
    :return: Paths, shorter first, then lexicographic.
    :raises UnreachableError: Output layer cannot be reached.
    """
    found = []  # type: list[SubstructurePath]
    queue = deque([(0,)])
    while queue:
        layers = queue.popleft()
        if layers[-1] == reduced.last_layer:
            found.append(SubstructurePath(layers))
            continue
        for layer in reduced.successors(layers[-1]):
            queue.append(layers + (layer,))
    if not found:
        error = "layer {} cannot be reached from layer 0".format(reduced.last_layer)
        raise UnreachableError(error)
    return sorted(found, key=lambda p: p.key)


def vectorize(path, last_layer):
    # type: (SubstructurePath, int) -> AlphaVector
    """
    Encode a substructure path as a 0-1 vector of its layer transitions.

    :param path: Substructure path.
    :param last_layer: Index of the output layer.
    :return: Vector with a 1 at `j * (last_layer + 1) + l` for every `(j, l)` transition.
    """
    width = last_layer + 1
    bits = [0] * width * width
    for j, l in path.transitions:
        bits[j * width + l] = 1
    return AlphaVector(last_layer, bits)


def maximal_independent_subset(vectors):
    # type: (Sequence[AlphaVector]) -> list[int]
    """
    Greedily keep each vector that is independent of the ones kept before it (exact rational elimination).

    :param vectors: Vectors, non-empty.
    :return: Kept positions, ascending.
    :raises ValueError: No vectors.
    """
    if not vectors:
        error = "need at least one vector"
        raise ValueError(error)
    space = RowSpace()  # type: RowSpace[int, int]
    return [i for i, v in enumerate(vectors) if space.insert(v.support(), i)]


def check_pairwise_edge_disjoint(paths):
    # type: (Sequence[SubstructurePath]) -> None
    """
    Check that no two substructure paths use the same layer transition.

    :param paths: Substructure paths.
    :raises SharedEdgesError: Some pair shares a transition (the first such pair is carried).
    """
    transitions = [set(p.transitions) for p in paths]
    for i in range(len(paths)):
        for r in range(i + 1, len(paths)):
            shared = transitions[i] & transitions[r]
            if shared:
                raise SharedEdgesError(SharedEdges(i, r, (paths[i], paths[r]), shared))


def induced_subgraph(graph, path):
    # type: (NetworkGraph, SubstructurePath) -> InducedGraph
    """
    Build the skip-free network made of the host's layers and blocks along a substructure path.

    :param graph: Host graph.
    :param path: Substructure path.
    :return: Induced graph, layer `r` being host layer `path.layers[r]`.
    :raises MissingBlockError: Some transition has no block in the host.
    """
    for j, l in path.transitions:
        if not graph.has_block(j, l):
            error = "transition ({}, {}) has no block in the network".format(j, l)
            raise MissingBlockError(error)
    if path.layers[0] != 0 or path.layers[-1] != graph.last_layer:
        error = "substructure path {!r} does not run from layer 0 to layer {}".format(
            list(path.layers), graph.last_layer
        )
        raise MissingBlockError(error)
    induced = build_network(NetworkSpec([graph.layer_size(l) for l in path.layers]))
    to_original = dict(
        (node, NodeRef(path.layers[node.layer], node.index)) for node in induced.nodes
    )  # type: dict[NodeRef, NodeRef]
    return InducedGraph(induced, path, to_original)


def substructure_set(reduced):
    # type: (ReducedGraph) -> SubstructureSet
    """
    Enumerate, vectorize and select a maximal independent subset of substructure paths.

    :param reduced: Reduced graph.
    :return: Substructure set.
    :raises UnreachableError: Output layer cannot be reached.
    """
    paths = enumerate_substructure_paths(reduced)
    vectors = [vectorize(p, reduced.last_layer) for p in paths]
    independent = maximal_independent_subset(vectors)
    _logger.info(
        "found %d substructure paths, %d independent: %s",
        len(paths),
        len(independent),
        [list(paths[i].layers) for i in independent],
    )
    return SubstructureSet(paths, independent, vectors)


def structure_path(graph):
    # type: (NetworkGraph) -> SubstructurePath | None
    """
    Get the layer sequence shared by every input-to-output path, if there is one.

    :param graph: Graph.
    :return: Structure path, or None if paths pass through different layers.
    :raises UnreachableError: Output layer cannot be reached.
    """
    paths = enumerate_substructure_paths(reduced_graph(graph))
    return paths[0] if len(paths) == 1 else None


def is_homogeneous(graph):
    # type: (NetworkGraph) -> bool
    """
    Get whether every input-to-output path passes through the same layers.

    :param graph: Graph.
    :return: True if it does.
    :raises UnreachableError: Output layer cannot be reached.
    """
    return structure_path(graph) is not None
