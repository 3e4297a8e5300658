"""Signed edge vectors and the path operations on them."""

import six
import slotted
from basicco import SlottedBase, basic_data, custom_repr, recursive_repr, safe_repr
from pyrsistent import pmap, pvector
from tippo import Any, Iterable, Iterator, Mapping, Type, TypeVar, cast

from ._bases import BaseRecord
from ._netgraph import EdgeRef, NetworkGraph, Path
from .constants import INTEGER_TYPES, NotAPathReason
from .exceptions import EdgeNotPresentError, PathNotSubgraphError, SerializationError

__all__ = [
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
]


class EdgeVector(SlottedBase, slotted.SlottedHashable, slotted.SlottedMapping[EdgeRef, int]):
    """
    Signed integer multiplicity per edge.

    Zero entries are never stored. A multigraph with parallel edges is an edge vector with positive entries.
    """

    __slots__ = ("_coefficients", "_key")

    def __init__(self, coefficients=None):
        # type: (Mapping[EdgeRef, int] | Iterable[tuple[EdgeRef, int]] | None) -> None
        """
        :param coefficients: Multiplicity per edge (zeros are dropped).
        :raises TypeError: Non-integer multiplicity.
        """
        cleaned = {}  # type: dict[EdgeRef, int]
        items = six.iteritems(coefficients) if isinstance(coefficients, Mapping) else (coefficients or ())
        for edge, value in items:
            if not isinstance(value, INTEGER_TYPES) or isinstance(value, bool):
                error = "edge multiplicity must be an integer, got {!r}".format(value)
                raise TypeError(error)
            if value:
                cleaned[edge] = cleaned.get(edge, 0) + int(value)
        self._coefficients = pmap(dict((e, v) for e, v in six.iteritems(cleaned) if v))
        self._key = tuple(sorted((e.key, v) for e, v in six.iteritems(self._coefficients)))

    @safe_repr.safe_repr
    @recursive_repr.recursive_repr
    def __repr__(self):
        # type: () -> str
        return custom_repr.iterable_repr(self._key, prefix="{}([".format(type(self).__name__), suffix="])")

    def __hash__(self):
        # type: () -> int
        return hash(self._key)

    def __eq__(self, other):
        # type: (object) -> bool
        return type(other) is type(self) and self._key == cast(EdgeVector, other)._key

    def __getitem__(self, edge):
        # type: (EdgeRef) -> int
        return self._coefficients[edge]

    def __len__(self):
        # type: () -> int
        return len(self._coefficients)

    def __iter__(self):
        # type: () -> Iterator[EdgeRef]
        for edge_key, _ in self._key:
            yield EdgeRef.from_key(edge_key)

    def __add__(self, other):
        # type: (EV, EdgeVector) -> EV
        if not isinstance(other, EdgeVector):
            return NotImplemented
        coefficients = dict(self._coefficients)
        for edge, value in six.iteritems(other._coefficients):
            coefficients[edge] = coefficients.get(edge, 0) + value
        return type(self)(coefficients)

    def __neg__(self):
        # type: (EV) -> EV
        return type(self)((e, -v) for e, v in six.iteritems(self._coefficients))

    def __sub__(self, other):
        # type: (EV, EdgeVector) -> EV
        if not isinstance(other, EdgeVector):
            return NotImplemented
        return self + -other

    @classmethod
    def from_edges(cls, edges):
        # type: (Type[EV], Iterable[EdgeRef]) -> EV
        """
        Make an indicator vector (repeated edges accumulate).

        :param edges: Edges.
        :return: Edge vector.
        """
        return cls((e, 1) for e in edges)

    def get(self, edge, default=0):
        # type: (EdgeRef, int) -> int
        """
        Get the multiplicity of an edge.

        :param edge: Edge.
        :param default: Value for absent edges.
        :return: Multiplicity.
        """
        return self._coefficients.get(edge, default)

    def serialize(self):
        # type: () -> list[dict[str, Any]]
        """
        Serialize as records sorted by edge.

        :return: Serialized.
        """
        return [
            {"tail": list(tail), "head": list(head), "value": value} for (tail, head), value in self._key
        ]

    @classmethod
    def deserialize(cls, serialized):
        # type: (Type[EV], Any) -> EV
        """
        Deserialize.

        :param serialized: Serialized.
        :return: Edge vector.
        :raises SerializationError: Error while deserializing.
        """
        try:
            return cls((EdgeRef.deserialize(r), r["value"]) for r in serialized)
        except (TypeError, KeyError) as e:
            exc = SerializationError("invalid edge vector {!r}; {}".format(serialized, e))
            six.raise_from(exc, None)
            raise exc

    @property
    def is_zero(self):
        # type: () -> bool
        """Whether every multiplicity is zero."""
        return not self._coefficients

    @property
    def is_binary(self):
        # type: () -> bool
        """Whether every stored multiplicity is 1."""
        return all(v == 1 for v in six.itervalues(self._coefficients))

    @property
    def key(self):
        # type: () -> tuple[tuple[tuple[tuple[int, int], tuple[int, int]], int], ...]
        """Sorted `(edge key, multiplicity)` pairs."""
        return self._key


EV = TypeVar("EV", bound=EdgeVector)


class PathCombination(BaseRecord):
    """Ordered signed terms `(sign, path)`."""

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        # type: (Iterable[tuple[int, Path]]) -> None
        """
        :param terms: Pairs of sign (+1 or -1) and path.
        :raises ValueError: Sign other than +1 or -1.
        """
        checked = []
        for sign, path in terms:
            if sign not in (1, -1) or isinstance(sign, bool):
                error = "term sign must be +1 or -1, got {!r}".format(sign)
                raise ValueError(error)
            checked.append((int(sign), path))
        self._terms = pvector(checked)

    def to_items(self, usecase=None):
        # type: (basic_data.ItemUsecase | None) -> list[tuple[str, Any]]
        """
        Convert to items.

        :param usecase: Usecase.
        :return: Items.
        """
        return [("terms", tuple(self._terms))]

    def __add__(self, other):
        # type: (PC, PathCombination) -> PC
        if not isinstance(other, PathCombination):
            return NotImplemented
        return type(self)(tuple(self._terms) + tuple(other.terms))

    def serialize(self):
        # type: () -> list[dict[str, Any]]
        """
        Serialize as `{sign, path}` records.

        :return: Serialized.
        """
        return [{"sign": s, "path": p.serialize()} for s, p in self._terms]

    @classmethod
    def deserialize(cls, serialized):
        # type: (Type[PC], Any) -> PC
        """
        Deserialize.

        :param serialized: Serialized.
        :return: Path combination.
        :raises SerializationError: Error while deserializing.
        """
        try:
            return cls((r["sign"], Path.deserialize(r["path"])) for r in serialized)
        except (TypeError, KeyError, ValueError) as e:
            exc = SerializationError("invalid path combination {!r}; {}".format(serialized, e))
            six.raise_from(exc, None)
            raise exc

    @property
    def terms(self):
        # type: () -> tuple[tuple[int, Path], ...]
        """Signed terms."""
        return tuple(self._terms)


PC = TypeVar("PC", bound=PathCombination)


class NotAPath(BaseRecord):
    """Edge vector that does not describe a single input-to-output path."""

    __slots__ = ("_reason", "_detail")

    def __init__(self, reason, detail=""):
        # type: (NotAPathReason, str) -> None
        """
        :param reason: Why.
        :param detail: Human readable detail.
        """
        self._reason = reason
        self._detail = detail

    def to_items(self, usecase=None):
        # type: (basic_data.ItemUsecase | None) -> list[tuple[str, Any]]
        """
        Convert to items.

        :param usecase: Usecase.
        :return: Items.
        """
        return [("reason", self._reason), ("detail", self._detail)]

    def __bool__(self):
        # type: () -> bool
        return False

    __nonzero__ = __bool__

    @property
    def reason(self):
        # type: () -> NotAPathReason
        """Why."""
        return self._reason

    @property
    def detail(self):
        # type: () -> str
        """Human readable detail."""
        return self._detail


def path_edges(path):
    # type: (Path) -> EdgeVector
    """
    Get the edge indicator of a path.

    :param path: Path.
    :return: 0-1 edge vector with one entry per edge of the path.
    """
    return EdgeVector.from_edges(path.edges)


def evaluate(combination):
    # type: (PathCombination) -> EdgeVector
    """
    Evaluate a signed sum of path indicators.

    :param combination: Path combination.
    :return: Edge vector (shared edges accumulate).
    """
    coefficients = {}  # type: dict[EdgeRef, int]
    for sign, path in combination.terms:
        for edge in path.edges:
            coefficients[edge] = coefficients.get(edge, 0) + sign
    return EdgeVector(coefficients)


def graph_add_path(vector, path):
    # type: (EdgeVector, Path) -> EdgeVector
    """
    Add a path to a multigraph (as a disjoint union of edges).

    :param vector: Multigraph.
    :param path: Path.
    :return: New multigraph.
    """
    return vector + path_edges(path)


def graph_remove_path(vector, path):
    # type: (EdgeVector, Path) -> EdgeVector
    """
    Remove a path from a multigraph that contains it.

    :param vector: Multigraph.
    :param path: Path.
    :return: New multigraph.
    :raises PathNotSubgraphError: Some edge of the path is missing from the multigraph.
    """
    for edge in path.edges:
        if vector.get(edge) < 1:
            error = "cannot remove {!r}; {!r} is not in the graph".format(path, edge)
            raise PathNotSubgraphError(error)
    return vector - path_edges(path)


def add_edge(vector, edge):
    # type: (EdgeVector, EdgeRef) -> EdgeVector
    """
    Add one copy of an edge.

    :param vector: Multigraph.
    :param edge: Edge.
    :return: New multigraph.
    """
    return vector + EdgeVector({edge: 1})


def remove_edge(vector, edge):
    # type: (EdgeVector, EdgeRef) -> EdgeVector
    """
    Remove one copy of an edge.

    :param vector: Multigraph.
    :param edge: Edge.
    :return: New multigraph.
    :raises EdgeNotPresentError: Edge is not in the multigraph.
    """
    if vector.get(edge) < 1:
        error = "cannot remove {!r}; it is not in the graph".format(edge)
        raise EdgeNotPresentError(error)
    return vector - EdgeVector({edge: 1})


def swap_edge(vector, old, new):
    # type: (EdgeVector, EdgeRef, EdgeRef) -> EdgeVector
    """
    Replace one copy of an edge with another edge.

    :param vector: Multigraph.
    :param old: Edge to remove.
    :param new: Edge to add.
    :return: New multigraph.
    :raises EdgeNotPresentError: Edge to remove is not in the multigraph.
    """
    return add_edge(remove_edge(vector, old), new)


def as_path(vector, graph=None):
    # type: (EdgeVector, NetworkGraph | None) -> Path | NotAPath
    """
    Read an edge vector back as a single input-to-output path.

    :param vector: Edge vector.
    :param graph: Host graph (when given, foreign edges and endpoints are checked against it).
    :return: Path, or a falsy :class:`NotAPath` describing why there is none.
    """
    if vector.is_zero:
        return NotAPath(NotAPathReason.ZERO, "empty edge vector")
    if not vector.is_binary:
        bad = next(e for e in vector if vector[e] != 1)
        return NotAPath(NotAPathReason.NON_BINARY, "{!r} has multiplicity {}".format(bad, vector[bad]))
    edges = list(vector)
    if graph is not None:
        for edge in edges:
            if not graph.has_edge(edge):
                return NotAPath(NotAPathReason.FOREIGN_EDGE, "{!r} is not an edge of the network".format(edge))

    successors = {}
    predecessors = {}
    for edge in edges:
        if edge.tail in successors:
            return NotAPath(NotAPathReason.BRANCHING, "{!r} has more than one outgoing edge".format(edge.tail))
        if edge.head in predecessors:
            return NotAPath(NotAPathReason.BRANCHING, "{!r} has more than one incoming edge".format(edge.head))
        successors[edge.tail] = edge.head
        predecessors[edge.head] = edge.tail

    starts = sorted((n for n in successors if n not in predecessors), key=lambda n: n.key)
    if len(starts) != 1:
        return NotAPath(NotAPathReason.DISCONNECTED, "edges form {} separate chains".format(len(starts)))
    nodes = [starts[0]]
    while nodes[-1] in successors:
        nodes.append(successors[nodes[-1]])
    if len(nodes) - 1 != len(edges):
        return NotAPath(NotAPathReason.DISCONNECTED, "edges do not form one chain")

    path = Path(nodes)
    last_layer = graph.last_layer if graph is not None else None
    if path.start.layer != 0 or (last_layer is not None and path.end.layer != last_layer):
        return NotAPath(
            NotAPathReason.WRONG_ENDPOINTS,
            "chain runs from layer {} to layer {}".format(path.start.layer, path.end.layer),
        )
    return path
