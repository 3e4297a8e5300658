"""Layered fully connected networks as directed acyclic graphs."""

import logging

import six
import slotted
from basicco import SlottedBase, basic_data, custom_repr, recursive_repr, safe_repr
from pyrsistent import pmap, pvector
from tippo import Any, Iterable, Iterator, Mapping, Type, TypeVar, cast

from ._bases import BaseRecord
from .constants import DEFAULT_MAX_PATHS, INTEGER_TYPES
from .exceptions import (
    InvalidPathError,
    InvalidSpecError,
    PathCountExceedsLimitError,
    SerializationError,
    UnreachableError,
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
]

_logger = logging.getLogger(__name__)


def _is_integer(value):
    # type: (Any) -> bool
    return isinstance(value, INTEGER_TYPES) and not isinstance(value, bool)


class NodeRef(SlottedBase, slotted.SlottedHashable):
    """Reference to the `index`-th node (1-based) of a layer."""

    __slots__ = ("_layer", "_index", "_key")

    def __init__(self, layer, index):
        # type: (int, int) -> None
        """
        :param layer: Layer, 0 being the input layer.
        :param index: Position within the layer, starting at 1.
        :raises ValueError: Negative layer or index smaller than 1.
        """
        if not _is_integer(layer) or not _is_integer(index) or layer < 0 or index < 1:
            error = "invalid node reference ({!r}, {!r})".format(layer, index)
            raise ValueError(error)
        self._layer = int(layer)
        self._index = int(index)
        self._key = (self._layer, self._index)

    def __repr__(self):
        # type: () -> str
        return "{}({}, {})".format(type(self).__name__, self._layer, self._index)

    def __hash__(self):
        # type: () -> int
        return hash(self._key)

    def __eq__(self, other):
        # type: (object) -> bool
        return type(other) is type(self) and self._key == cast(NodeRef, other)._key

    def serialize(self):
        # type: () -> list[int]
        """
        Serialize as a `[layer, index]` pair.

        :return: Serialized.
        """
        return [self._layer, self._index]

    @classmethod
    def deserialize(cls, serialized):
        # type: (Type[NR], Any) -> NR
        """
        Deserialize from a `[layer, index]` pair.

        :param serialized: Serialized.
        :return: Node reference.
        :raises SerializationError: Error while deserializing.
        """
        try:
            layer, index = serialized
            return cls(layer, index)
        except (TypeError, ValueError) as e:
            exc = SerializationError("invalid node {!r}; {}".format(serialized, e))
            six.raise_from(exc, None)
            raise exc

    @property
    def layer(self):
        # type: () -> int
        """Layer."""
        return self._layer

    @property
    def index(self):
        # type: () -> int
        """Position within the layer (1-based)."""
        return self._index

    @property
    def key(self):
        # type: () -> tuple[int, int]
        """Sort key."""
        return self._key


NR = TypeVar("NR", bound=NodeRef)


class EdgeRef(SlottedBase, slotted.SlottedHashable):
    """Directed edge from a lower layer to a higher one."""

    __slots__ = ("_tail", "_head", "_key")

    def __init__(self, tail, head):
        # type: (NodeRef, NodeRef) -> None
        """
        :param tail: Node the edge leaves.
        :param head: Node the edge enters.
        :raises ValueError: Edge does not point toward a higher layer.
        """
        if tail.layer >= head.layer:
            error = "edge {!r} -> {!r} does not point toward a higher layer".format(tail, head)
            raise ValueError(error)
        self._tail = tail
        self._head = head
        self._key = (tail.key, head.key)

    def __repr__(self):
        # type: () -> str
        return "{}({!r}, {!r})".format(type(self).__name__, self._tail, self._head)

    def __hash__(self):
        # type: () -> int
        return hash(self._key)

    def __eq__(self, other):
        # type: (object) -> bool
        return type(other) is type(self) and self._key == cast(EdgeRef, other)._key

    @classmethod
    def from_key(cls, key):
        # type: (Type[ER], tuple[tuple[int, int], tuple[int, int]]) -> ER
        """
        Make an edge from a `((layer, index), (layer, index))` key.

        :param key: Key.
        :return: Edge.
        """
        (tail_layer, tail_index), (head_layer, head_index) = key
        return cls(NodeRef(tail_layer, tail_index), NodeRef(head_layer, head_index))

    def serialize(self):
        # type: () -> dict[str, list[int]]
        """
        Serialize.

        :return: Serialized.
        """
        return {"tail": self._tail.serialize(), "head": self._head.serialize()}

    @classmethod
    def deserialize(cls, serialized):
        # type: (Type[ER], Any) -> ER
        """
        Deserialize.

        :param serialized: Serialized.
        :return: Edge.
        :raises SerializationError: Error while deserializing.
        """
        try:
            return cls(NodeRef.deserialize(serialized["tail"]), NodeRef.deserialize(serialized["head"]))
        except (TypeError, KeyError, ValueError) as e:
            exc = SerializationError("invalid edge {!r}; {}".format(serialized, e))
            six.raise_from(exc, None)
            raise exc

    @property
    def tail(self):
        # type: () -> NodeRef
        """Node the edge leaves."""
        return self._tail

    @property
    def head(self):
        # type: () -> NodeRef
        """Node the edge enters."""
        return self._head

    @property
    def key(self):
        # type: () -> tuple[tuple[int, int], tuple[int, int]]
        """Sort key."""
        return self._key

    @property
    def skip_degree(self):
        # type: () -> int
        """Number of layers skipped over."""
        return self._head.layer - self._tail.layer - 1


ER = TypeVar("ER", bound=EdgeRef)


def skip_degree(edge):
    # type: (EdgeRef) -> int
    """
    Get the number of layers an edge skips over (0 for consecutive layers).

    :param edge: Edge.
    :return: Skip degree.
    """
    return edge.skip_degree


class Path(SlottedBase, slotted.SlottedHashable, slotted.SlottedSequence[NodeRef]):
    """Sequence of nodes with strictly increasing layers."""

    __slots__ = ("_nodes", "_key")

    def __init__(self, nodes):
        # type: (Iterable[NodeRef]) -> None
        """
        :param nodes: Nodes, at least two.
        :raises InvalidPathError: Fewer than two nodes or layers not strictly increasing.
        """
        self._nodes = tuple(nodes)
        if len(self._nodes) < 2:
            error = "a path needs at least two nodes, got {}".format(len(self._nodes))
            raise InvalidPathError(error)
        for previous, node in zip(self._nodes, self._nodes[1:]):
            if node.layer <= previous.layer:
                error = "layers must strictly increase along a path, got {!r} then {!r}".format(previous, node)
                raise InvalidPathError(error)
        self._key = tuple(n.key for n in self._nodes)

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
        return type(other) is type(self) and self._key == cast(Path, other)._key

    def __getitem__(self, index):
        return self._nodes[index]

    def __len__(self):
        # type: () -> int
        return len(self._nodes)

    def __iter__(self):
        # type: () -> Iterator[NodeRef]
        return iter(self._nodes)

    @classmethod
    def from_keys(cls, keys):
        # type: (Type[P], Iterable[tuple[int, int]]) -> P
        """
        Make a path from `(layer, index)` pairs.

        :param keys: Node keys.
        :return: Path.
        """
        return cls(NodeRef(layer, index) for layer, index in keys)

    def concatenate(self, other):
        # type: (P, Path) -> P
        """
        Join with a path that starts where this one ends.

        :param other: Continuation.
        :return: Concatenated path.
        :raises InvalidPathError: Paths do not meet.
        """
        if other.start != self.end:
            error = "cannot concatenate {!r} with {!r}; they do not meet".format(self, other)
            raise InvalidPathError(error)
        return type(self)(self._nodes + other.nodes[1:])

    def serialize(self):
        # type: () -> list[list[int]]
        """
        Serialize as a list of `[layer, index]` pairs.

        :return: Serialized.
        """
        return [n.serialize() for n in self._nodes]

    @classmethod
    def deserialize(cls, serialized):
        # type: (Type[P], Any) -> P
        """
        Deserialize.

        :param serialized: Serialized.
        :return: Path.
        :raises SerializationError: Error while deserializing.
        """
        if not isinstance(serialized, (list, tuple)):
            error = "a path is a list of [layer, index] pairs, got {!r}".format(serialized)
            raise SerializationError(error)
        nodes = [NodeRef.deserialize(n) for n in serialized]
        try:
            return cls(nodes)
        except InvalidPathError as e:
            exc = SerializationError(str(e))
            six.raise_from(exc, None)
            raise exc

    @property
    def nodes(self):
        # type: () -> tuple[NodeRef, ...]
        """Nodes."""
        return self._nodes

    @property
    def key(self):
        # type: () -> tuple[tuple[int, int], ...]
        """Sort key (lexicographic node order)."""
        return self._key

    @property
    def start(self):
        # type: () -> NodeRef
        """First node."""
        return self._nodes[0]

    @property
    def end(self):
        # type: () -> NodeRef
        """Last node."""
        return self._nodes[-1]

    @property
    def layers(self):
        # type: () -> tuple[int, ...]
        """Layers visited."""
        return tuple(n.layer for n in self._nodes)

    @property
    def edges(self):
        # type: () -> tuple[EdgeRef, ...]
        """Edges, in order."""
        return tuple(EdgeRef(t, h) for t, h in zip(self._nodes, self._nodes[1:]))

    @property
    def edge_keys(self):
        # type: () -> tuple[tuple[tuple[int, int], tuple[int, int]], ...]
        """Edge keys, in order."""
        return tuple(zip(self._key, self._key[1:]))


P = TypeVar("P", bound=Path)


class LayerBlock(BaseRecord):
    """Complete bipartite edge set between two layers."""

    __slots__ = ("_from_layer", "_to_layer")

    def __init__(self, from_layer, to_layer):
        # type: (int, int) -> None
        """
        :param from_layer: Lower layer.
        :param to_layer: Higher layer.
        :raises InvalidSpecError: Layers are not integers or are not increasing.
        """
        if not _is_integer(from_layer) or not _is_integer(to_layer):
            error = "block layers must be integers, got ({!r}, {!r})".format(from_layer, to_layer)
            raise InvalidSpecError(error)
        if not 0 <= from_layer < to_layer:
            error = "block ({}, {}) must satisfy 0 <= from < to".format(from_layer, to_layer)
            raise InvalidSpecError(error)
        self._from_layer = int(from_layer)
        self._to_layer = int(to_layer)

    def to_items(self, usecase=None):
        # type: (basic_data.ItemUsecase | None) -> list[tuple[str, Any]]
        """
        Convert to items.

        :param usecase: Usecase.
        :return: Items.
        """
        return [("from_layer", self._from_layer), ("to_layer", self._to_layer)]

    def serialize(self):
        # type: () -> dict[str, int]
        """
        Serialize.

        :return: Serialized.
        """
        return {"from": self._from_layer, "to": self._to_layer}

    @classmethod
    def deserialize(cls, serialized):
        # type: (Type[LB], Any) -> LB
        """
        Deserialize.

        :param serialized: Serialized.
        :return: Block.
        :raises SerializationError: Error while deserializing.
        """
        try:
            return cls(serialized["from"], serialized["to"])
        except (TypeError, KeyError, InvalidSpecError) as e:
            exc = SerializationError("invalid block {!r}; {}".format(serialized, e))
            six.raise_from(exc, None)
            raise exc

    @property
    def from_layer(self):
        # type: () -> int
        """Lower layer."""
        return self._from_layer

    @property
    def to_layer(self):
        # type: () -> int
        """Higher layer."""
        return self._to_layer

    @property
    def key(self):
        # type: () -> tuple[int, int]
        """Sort key."""
        return self._from_layer, self._to_layer


LB = TypeVar("LB", bound=LayerBlock)


class NetworkSpec(BaseRecord):
    """Layer sizes plus the blocks of complete bipartite edges between layer pairs."""

    __slots__ = ("_layer_sizes", "_blocks", "_weights")

    def __init__(self, layer_sizes, blocks=None, weights=None):
        # type: (Iterable[int], Iterable[LayerBlock | tuple[int, int]] | None, Mapping[EdgeRef, float] | None) -> None
        """
        :param layer_sizes: Number of nodes per layer, input layer first.
        :param blocks: Layer blocks (defaults to all consecutive pairs).
        :param weights: Optional per-edge weights, carried but never used by the algorithms.
        :raises InvalidSpecError: Empty layer, block out of range, duplicate block or unknown weighted edge.
        """
        self._layer_sizes = tuple(layer_sizes)
        if len(self._layer_sizes) < 2:
            error = "a network needs at least two layers, got {}".format(len(self._layer_sizes))
            raise InvalidSpecError(error)
        for layer, size in enumerate(self._layer_sizes):
            if not _is_integer(size) or size < 1:
                error = "layer {} must have a positive integer size, got {!r}".format(layer, size)
                raise InvalidSpecError(error)
        last_layer = len(self._layer_sizes) - 1

        if blocks is None:
            resolved = [LayerBlock(layer, layer + 1) for layer in range(last_layer)]
        else:
            resolved = [b if isinstance(b, LayerBlock) else LayerBlock(*b) for b in blocks]
        if not resolved:
            error = "a network needs at least one block"
            raise InvalidSpecError(error)
        seen = set()  # type: set[tuple[int, int]]
        for block in resolved:
            if block.to_layer > last_layer:
                error = "block {} out of range for last layer {}".format(block.key, last_layer)
                raise InvalidSpecError(error)
            if block.key in seen:
                error = "duplicate block {}".format(block.key)
                raise InvalidSpecError(error)
            seen.add(block.key)
        self._blocks = tuple(sorted(resolved, key=lambda b: b.key))

        weights = dict(weights or {})
        for edge, value in six.iteritems(weights):
            tail, head = edge.tail, edge.head
            if (
                (tail.layer, head.layer) not in seen
                or tail.index > self._layer_sizes[tail.layer]
                or head.index > self._layer_sizes[head.layer]
            ):
                error = "weight given for {!r}, which is not an edge of the network".format(edge)
                raise InvalidSpecError(error)
            weights[edge] = float(value)
        self._weights = pmap(weights)

    def to_items(self, usecase=None):
        # type: (basic_data.ItemUsecase | None) -> list[tuple[str, Any]]
        """
        Convert to items.

        :param usecase: Usecase.
        :return: Items.
        """
        return [("layer_sizes", self._layer_sizes), ("blocks", self._blocks), ("weights", self._weights)]

    def serialize(self):
        # type: () -> dict[str, Any]
        """
        Serialize (blocks are always written out).

        :return: Serialized.
        """
        serialized = {
            "layers": list(self._layer_sizes),
            "blocks": [b.serialize() for b in self._blocks],
        }  # type: dict[str, Any]
        if self._weights:
            serialized["weights"] = [
                dict(e.serialize(), value=self._weights[e]) for e in sorted(self._weights, key=lambda e: e.key)
            ]
        return serialized

    @classmethod
    def deserialize(cls, serialized):
        # type: (Type[NS], Any) -> NS
        """
        Deserialize.

        :param serialized: Serialized.
        :return: Network spec.
        :raises SerializationError: Malformed document.
        :raises InvalidSpecError: Document is well formed but describes an invalid network.
        """
        if not isinstance(serialized, Mapping):
            error = "network spec must be a mapping, got {!r}".format(type(serialized).__name__)
            raise SerializationError(error)
        unknown = set(serialized) - {"format_version", "layers", "blocks", "weights"}
        if unknown:
            error = "unknown network spec fields {}".format(", ".join(sorted(repr(k) for k in unknown)))
            raise SerializationError(error)
        if "layers" not in serialized:
            error = "network spec is missing the 'layers' field"
            raise SerializationError(error)
        layers = serialized["layers"]
        if not isinstance(layers, list):
            error = "'layers' must be a list of integers, got {!r}".format(layers)
            raise SerializationError(error)
        blocks = None
        if serialized.get("blocks") is not None:
            if not isinstance(serialized["blocks"], list):
                error = "'blocks' must be a list of {{from, to}} records, got {!r}".format(serialized["blocks"])
                raise SerializationError(error)
            blocks = [LayerBlock.deserialize(b) for b in serialized["blocks"]]
        weights = {}  # type: dict[EdgeRef, float]
        records = serialized.get("weights")
        if records is not None and not isinstance(records, list):
            error = "'weights' must be a list of {{tail, head, value}} records, got {!r}".format(records)
            raise SerializationError(error)
        for record in records or ():
            try:
                value = record["value"]
            except (TypeError, KeyError) as e:
                exc = SerializationError("invalid weight record {!r}; {}".format(record, e))
                six.raise_from(exc, None)
                raise exc
            if not isinstance(value, INTEGER_TYPES + (float,)) or isinstance(value, bool):
                error = "weight value must be a number, got {!r}".format(value)
                raise SerializationError(error)
            weights[EdgeRef.deserialize(record)] = value
        return cls(layers, blocks=blocks, weights=weights)

    @property
    def layer_sizes(self):
        # type: () -> tuple[int, ...]
        """Number of nodes per layer."""
        return self._layer_sizes

    @property
    def blocks(self):
        # type: () -> tuple[LayerBlock, ...]
        """Blocks, sorted by `(from_layer, to_layer)`."""
        return self._blocks

    @property
    def weights(self):
        # type: () -> Mapping[EdgeRef, float]
        """Per-edge weights."""
        return self._weights


NS = TypeVar("NS", bound=NetworkSpec)


class NetworkGraph(BaseRecord):
    """Immutable layered directed acyclic graph built from a :class:`NetworkSpec`."""

    __slots__ = ("_spec", "_nodes", "_edges", "_edge_indexes", "_out_edges", "_in_edges", "_block_keys")

    def __init__(self, spec):
        # type: (NetworkSpec) -> None
        """
        :param spec: Network spec.
        """
        self._spec = spec
        self._nodes = tuple(
            tuple(NodeRef(layer, index) for index in range(1, size + 1))
            for layer, size in enumerate(spec.layer_sizes)
        )
        self._block_keys = frozenset(b.key for b in spec.blocks)

        edges = []
        out_edges = dict((n, []) for layer in self._nodes for n in layer)  # type: dict[NodeRef, list[EdgeRef]]
        in_edges = dict((n, []) for layer in self._nodes for n in layer)  # type: dict[NodeRef, list[EdgeRef]]
        for block in spec.blocks:
            for tail in self._nodes[block.from_layer]:
                for head in self._nodes[block.to_layer]:
                    edge = EdgeRef(tail, head)
                    edges.append(edge)
                    out_edges[tail].append(edge)
                    in_edges[head].append(edge)

        # Per-node edge lists follow the canonical order, which makes depth-first walks lexicographic.
        self._edges = pvector(edges)
        self._edge_indexes = pmap(dict((e, i) for i, e in enumerate(edges)))
        self._out_edges = pmap(dict((n, tuple(sorted(es, key=lambda e: e.key))) for n, es in out_edges.items()))
        self._in_edges = pmap(dict((n, tuple(sorted(es, key=lambda e: e.key))) for n, es in in_edges.items()))

    def to_items(self, usecase=None):
        # type: (basic_data.ItemUsecase | None) -> list[tuple[str, Any]]
        """
        Convert to items.

        :param usecase: Usecase.
        :return: Items.
        """
        return [("spec", self._spec)]

    def layer_size(self, layer):
        # type: (int) -> int
        """
        Get the number of nodes in a layer.

        :param layer: Layer.
        :return: Size.
        """
        return self._spec.layer_sizes[layer]

    def nodes_in_layer(self, layer):
        # type: (int) -> tuple[NodeRef, ...]
        """
        Get the nodes of a layer, by ascending index.

        :param layer: Layer.
        :return: Nodes.
        """
        return self._nodes[layer]

    def has_node(self, node):
        # type: (NodeRef) -> bool
        """
        Get whether a node belongs to this graph.

        :param node: Node.
        :return: True if it does.
        """
        return node.layer <= self.last_layer and node.index <= self._spec.layer_sizes[node.layer]

    def has_edge(self, edge):
        # type: (EdgeRef) -> bool
        """
        Get whether an edge belongs to this graph.

        :param edge: Edge.
        :return: True if it does.
        """
        return edge in self._edge_indexes

    def has_block(self, from_layer, to_layer):
        # type: (int, int) -> bool
        """
        Get whether two layers are joined by a block.

        :param from_layer: Lower layer.
        :param to_layer: Higher layer.
        :return: True if they are.
        """
        return (from_layer, to_layer) in self._block_keys

    def edge_index(self, edge):
        # type: (EdgeRef) -> int
        """
        Get the canonical position of an edge.

        :param edge: Edge.
        :return: Index into :attr:`edges`.
        :raises InvalidPathError: Edge does not belong to this graph.
        """
        try:
            return self._edge_indexes[edge]
        except KeyError:
            exc = InvalidPathError("{!r} is not an edge of the network".format(edge))
            six.raise_from(exc, None)
            raise exc

    def out_edges(self, node):
        # type: (NodeRef) -> tuple[EdgeRef, ...]
        """
        Get the edges leaving a node, in canonical order.

        :param node: Node.
        :return: Edges.
        """
        return self._out_edges[node]

    def in_edges(self, node):
        # type: (NodeRef) -> tuple[EdgeRef, ...]
        """
        Get the edges entering a node, in canonical order.

        :param node: Node.
        :return: Edges.
        """
        return self._in_edges[node]

    def block_edges(self, from_layer, to_layer):
        # type: (int, int) -> tuple[EdgeRef, ...]
        """
        Get the edges of a block, in canonical order.

        :param from_layer: Lower layer.
        :param to_layer: Higher layer.
        :return: Edges (empty if there is no such block).
        """
        return tuple(
            e for n in self._nodes[from_layer] for e in self._out_edges[n] if e.head.layer == to_layer
        )

    def validate_path(self, path):
        # type: (Path) -> None
        """
        Check that a path runs from the input layer to the output layer along edges of this graph.

        :param path: Path.
        :raises InvalidPathError: Path is not an input-to-output path of this graph.
        """
        if path.start.layer != 0 or path.end.layer != self.last_layer:
            error = "{!r} does not run from layer 0 to layer {}".format(path, self.last_layer)
            raise InvalidPathError(error)
        for node in path:
            if not self.has_node(node):
                error = "{!r} is not a node of the network".format(node)
                raise InvalidPathError(error)
        for edge in path.edges:
            if edge not in self._edge_indexes:
                error = "{!r} is not an edge of the network".format(edge)
                raise InvalidPathError(error)

    def path_edge_indexes(self, path):
        # type: (Path) -> tuple[int, ...]
        """
        Get the canonical positions of the edges of a path.

        :param path: Path.
        :return: Edge indexes.
        :raises InvalidPathError: Some edge does not belong to this graph.
        """
        return tuple(self.edge_index(e) for e in path.edges)

    def weight(self, edge):
        # type: (EdgeRef) -> float | None
        """
        Get the weight annotation of an edge, if any.

        :param edge: Edge.
        :return: Weight or None.
        """
        return self._spec.weights.get(edge)

    @property
    def spec(self):
        # type: () -> NetworkSpec
        """Spec the graph was built from."""
        return self._spec

    @property
    def last_layer(self):
        # type: () -> int
        """Index of the output layer (L)."""
        return len(self._nodes) - 1

    @property
    def layer_sizes(self):
        # type: () -> tuple[int, ...]
        """Number of nodes per layer."""
        return self._spec.layer_sizes

    @property
    def blocks(self):
        # type: () -> tuple[LayerBlock, ...]
        """Blocks, sorted."""
        return self._spec.blocks

    @property
    def nodes(self):
        # type: () -> tuple[NodeRef, ...]
        """All nodes, by layer then index."""
        return tuple(n for layer in self._nodes for n in layer)

    @property
    def edges(self):
        # type: () -> tuple[EdgeRef, ...]
        """All edges, by `(from_layer, to_layer, tail index, head index)`."""
        return tuple(self._edges)

    @property
    def edge_count(self):
        # type: () -> int
        """Number of edges (m)."""
        return len(self._edges)

    @property
    def hidden_count(self):
        # type: () -> int
        """Number of hidden nodes (H)."""
        return sum(self._spec.layer_sizes[1:-1])

    @property
    def has_skip_edges(self):
        # type: () -> bool
        """Whether some block skips over at least one layer."""
        return any(b.to_layer - b.from_layer > 1 for b in self._spec.blocks)

    @property
    def is_consecutive(self):
        # type: () -> bool
        """Whether the blocks are exactly the consecutive layer pairs."""
        return self._block_keys == frozenset((l, l + 1) for l in range(self.last_layer))

    @property
    def weights(self):
        # type: () -> Mapping[EdgeRef, float]
        """Per-edge weights."""
        return self._spec.weights


def build_network(spec):
    # type: (NetworkSpec) -> NetworkGraph
    """
    Build the graph described by a spec.

    :param spec: Network spec.
    :return: Graph.
    """
    graph = NetworkGraph(spec)
    _logger.debug(
        "built network with layers %s, m=%d, H=%d",
        list(spec.layer_sizes),
        graph.edge_count,
        graph.hidden_count,
    )
    return graph


def _paths_to_outputs(graph):
    # type: (NetworkGraph) -> dict[NodeRef, int]
    counts = {}  # type: dict[NodeRef, int]
    for layer in range(graph.last_layer, -1, -1):
        for node in graph.nodes_in_layer(layer):
            if layer == graph.last_layer:
                counts[node] = 1
            else:
                counts[node] = sum(counts[e.head] for e in graph.out_edges(node))
    return counts


def count_paths(graph):
    # type: (NetworkGraph) -> int
    """
    Count input-to-output paths by dynamic programming over the layers.

    :param graph: Graph.
    :return: Number of paths.
    """
    counts = _paths_to_outputs(graph)
    return sum(counts[n] for n in graph.nodes_in_layer(0))


def enumerate_paths(graph, limit=DEFAULT_MAX_PATHS):
    # type: (NetworkGraph, int | None) -> list[Path]
    """
    Enumerate every input-to-output path, in lexicographic node order.

    :param graph: Graph.
    :param limit: Maximum number of paths (None for no cap).
    :return: Paths.
    :raises PathCountExceedsLimitError: Graph has more paths than the limit.
    """
    counts = _paths_to_outputs(graph)
    total = sum(counts[n] for n in graph.nodes_in_layer(0))
    if limit is not None and total > limit:
        raise PathCountExceedsLimitError(total, limit)

    paths = []  # type: list[Path]
    last_layer = graph.last_layer

    def _extend(prefix):
        # type: (list[NodeRef]) -> None
        node = prefix[-1]
        if node.layer == last_layer:
            paths.append(Path(prefix))
            return
        for edge in graph.out_edges(node):
            if counts[edge.head]:
                prefix.append(edge.head)
                _extend(prefix)
                prefix.pop()

    for start in graph.nodes_in_layer(0):
        if counts[start]:
            _extend([start])

    assert len(paths) == total, "enumeration disagrees with path count"
    return paths


def _weighted_choice(rng, candidates, weights):
    # type: (Any, tuple[NodeRef, ...], dict[NodeRef, int]) -> NodeRef
    position = rng.randrange(sum(weights[c] for c in candidates))
    for candidate in candidates:
        position -= weights[candidate]
        if position < 0:
            return candidate
    raise AssertionError("weighted choice fell through")


def sample_paths(graph, count, rng):
    # type: (NetworkGraph, int, Any) -> list[Path]
    """
    Draw input-to-output paths uniformly at random (with replacement).

    :param graph: Graph.
    :param count: Number of paths to draw.
    :param rng: Random number generator (:class:`random.Random`).
    :return: Paths.
    :raises UnreachableError: Graph has no input-to-output path.
    """
    counts = _paths_to_outputs(graph)
    starts = tuple(n for n in graph.nodes_in_layer(0) if counts[n])
    if not starts:
        error = "layer {} cannot be reached from layer 0".format(graph.last_layer)
        raise UnreachableError(error)

    paths = []
    for _ in range(count):
        node = _weighted_choice(rng, starts, counts)
        nodes = [node]
        while node.layer != graph.last_layer:
            heads = tuple(e.head for e in graph.out_edges(node) if counts[e.head])
            node = _weighted_choice(rng, heads, counts)
            nodes.append(node)
        paths.append(Path(nodes))
    return paths
