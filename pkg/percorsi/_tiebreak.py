"""Reproducible resolution of the free choices made while building a basis."""

import random

import six
from basicco import basic_data
from pyrsistent import pmap
from tippo import Any, Mapping, Sequence, Type, TypeVar

from ._bases import BaseRecord
from ._netgraph import EdgeRef, NetworkGraph, NodeRef, Path
from .constants import INTEGER_TYPES, TieBreakMode
from .exceptions import InvalidPathError, InvalidTieBreakError, SerializationError

__all__ = ["TieBreak"]


class TieBreak(BaseRecord):
    """
    Decides which head a leftover direct tail attaches to and which lower path a cross stub extends.

    Deterministic mode picks the lowest head index and the lexicographically least path. Seeded mode draws
    every decision from its own generator, seeded from `(seed, stream, decision)`, so results do not depend
    on evaluation order. Override mode reads explicit choices and falls back to the deterministic rule for
    anything it does not name.
    """

    __slots__ = ("_mode", "_seed", "_direct", "_cross", "_stream")

    def __init__(self, mode=TieBreakMode.DETERMINISTIC, seed=None, direct=None, cross=None, stream=0):
        # type: (TieBreakMode, int | None, Mapping[NodeRef, NodeRef] | None, Mapping[NodeRef, Path] | None, int) -> None
        """
        :param mode: Mode.
        :param seed: Seed (seeded mode only).
        :param direct: Head chosen for each leftover direct tail (override mode only).
        :param cross: Lower path chosen for the cross stubs leaving a node (override mode only).
        :param stream: Decision stream, so independent sub-graphs draw independent choices.
        :raises ValueError: Inconsistent arguments.
        """
        if mode is TieBreakMode.SEEDED:
            if not isinstance(seed, INTEGER_TYPES) or isinstance(seed, bool):
                error = "seeded mode needs an integer seed, got {!r}".format(seed)
                raise ValueError(error)
        elif seed is not None:
            error = "a seed is only accepted in seeded mode"
            raise ValueError(error)
        if mode is not TieBreakMode.OVERRIDES and (direct or cross):
            error = "overrides are only accepted in override mode"
            raise ValueError(error)
        for tail, head in six.iteritems(dict(direct or {})):
            if head.layer != tail.layer + 1:
                error = "direct override {!r} -> {!r} must join consecutive layers".format(tail, head)
                raise ValueError(error)
        for node, path in six.iteritems(dict(cross or {})):
            if path.end != node:
                error = "cross override path {!r} must end at {!r}".format(path, node)
                raise ValueError(error)
        self._mode = mode
        self._seed = seed
        self._direct = pmap(direct or {})
        self._cross = pmap(cross or {})
        self._stream = stream

    def to_items(self, usecase=None):
        # type: (basic_data.ItemUsecase | None) -> list[tuple[str, Any]]
        """
        Convert to items.

        :param usecase: Usecase.
        :return: Items.
        """
        return [
            ("mode", self._mode),
            ("seed", self._seed),
            ("direct", self._direct),
            ("cross", self._cross),
            ("stream", self._stream),
        ]

    @classmethod
    def deterministic(cls):
        # type: (Type[TB]) -> TB
        """
        Lowest index / lexicographically least choices.

        :return: Tie break.
        """
        return cls()

    @classmethod
    def seeded(cls, seed):
        # type: (Type[TB], int) -> TB
        """
        Pseudo-random choices reproducible from a seed.

        :param seed: Seed.
        :return: Tie break.
        """
        return cls(TieBreakMode.SEEDED, seed=seed)

    @classmethod
    def overrides(cls, direct=None, cross=None):
        # type: (Type[TB], Mapping[NodeRef, NodeRef] | None, Mapping[NodeRef, Path] | None) -> TB
        """
        Explicit choices, falling back to the deterministic rule.

        :param direct: Head chosen for each leftover direct tail.
        :param cross: Lower path chosen for the cross stubs leaving a node.
        :return: Tie break.
        """
        return cls(TieBreakMode.OVERRIDES, direct=direct, cross=cross)

    def _rng(self, kind, key):
        # type: (str, Any) -> random.Random
        return random.Random("{}:{}:{}:{!r}".format(self._seed, self._stream, kind, key))

    def check(self, graph):
        # type: (NetworkGraph) -> None
        """
        Check that every override names nodes of a graph.

        :param graph: Graph the choices will be made on.
        :raises InvalidTieBreakError: Some override names something outside the graph.
        """
        for tail, head in sorted(six.iteritems(self._direct), key=lambda i: i[0].key):
            if not graph.has_edge(EdgeRef(tail, head)):
                error = "direct override {!r} -> {!r} is not an edge of the network".format(tail, head)
                raise InvalidTieBreakError(error)
        for node, path in sorted(six.iteritems(self._cross), key=lambda i: i[0].key):
            if not graph.has_node(node) or path.start.layer != 0:
                error = "cross override for {!r} is not a path from the input layer".format(node)
                raise InvalidTieBreakError(error)
            if not all(graph.has_edge(e) for e in path.edges):
                error = "cross override {!r} is not a path of the network".format(path)
                raise InvalidTieBreakError(error)

    def choose_head(self, tail, heads):
        # type: (NodeRef, Sequence[NodeRef]) -> NodeRef
        """
        Choose the head a leftover direct tail attaches to.

        :param tail: Leftover tail.
        :param heads: Candidate heads, by ascending index.
        :return: Chosen head.
        :raises InvalidTieBreakError: Override names a head that is not a candidate.
        """
        if self._mode is TieBreakMode.SEEDED:
            return heads[self._rng("direct", tail.key).randrange(len(heads))]
        if self._mode is TieBreakMode.OVERRIDES and tail in self._direct:
            head = self._direct[tail]
            if head not in heads:
                error = "direct override {!r} -> {!r} is not one of the candidate heads".format(tail, head)
                raise InvalidTieBreakError(error)
            return head
        return min(heads, key=lambda n: n.key)

    def choose_reach(self, stub, paths):
        # type: (EdgeRef, Sequence[Path]) -> Path
        """
        Choose the lower path a cross stub extends.

        :param stub: Cross stub.
        :param paths: Constructed paths ending at the stub's tail.
        :return: Chosen path.
        :raises InvalidTieBreakError: Override names a path that is not a candidate.
        """
        if self._mode is TieBreakMode.SEEDED:
            ordered = sorted(paths, key=lambda p: p.key)
            return ordered[self._rng("cross", stub.key).randrange(len(ordered))]
        if self._mode is TieBreakMode.OVERRIDES and stub.tail in self._cross:
            path = self._cross[stub.tail]
            if path not in paths:
                error = "cross override {!r} is not among the paths constructed up to {!r}".format(path, stub.tail)
                raise InvalidTieBreakError(error)
            return path
        return min(paths, key=lambda p: p.key)

    def relabel(self, mapping, stream=None):
        # type: (TB, Mapping[NodeRef, NodeRef], int | None) -> TB
        """
        Translate overrides into another coordinate system, dropping those that do not map.

        :param mapping: Node translation.
        :param stream: New decision stream (defaults to the current one).
        :return: Relabeled tie break.
        """
        direct = {}
        for tail, head in six.iteritems(self._direct):
            if tail in mapping and head in mapping and mapping[head].layer == mapping[tail].layer + 1:
                direct[mapping[tail]] = mapping[head]
        cross = {}
        for node, path in six.iteritems(self._cross):
            if node in mapping and all(n in mapping for n in path):
                try:
                    relabeled = Path(mapping[n] for n in path)
                except InvalidPathError:
                    continue
                if all(b.layer == a.layer + 1 for a, b in zip(relabeled, relabeled[1:])):
                    cross[mapping[node]] = relabeled
        return self.update(direct=direct, cross=cross, stream=self._stream if stream is None else stream)

    def serialize(self):
        # type: () -> dict[str, Any]
        """
        Serialize the overrides.

        :return: Serialized.
        """
        return {
            "direct": [
                {"tail": t.serialize(), "head": h.serialize()}
                for t, h in sorted(six.iteritems(self._direct), key=lambda i: i[0].key)
            ],
            "cross": [
                {"node": n.serialize(), "path": p.serialize()}
                for n, p in sorted(six.iteritems(self._cross), key=lambda i: i[0].key)
            ],
        }

    @classmethod
    def deserialize(cls, serialized):
        # type: (Type[TB], Any) -> TB
        """
        Deserialize an override document.

        :param serialized: Serialized.
        :return: Tie break in override mode.
        :raises SerializationError: Error while deserializing.
        """
        if not isinstance(serialized, Mapping):
            error = "override document must be a mapping, got {!r}".format(type(serialized).__name__)
            raise SerializationError(error)
        unknown = set(serialized) - {"format_version", "direct", "cross"}
        if unknown:
            error = "unknown override fields {}".format(", ".join(sorted(repr(k) for k in unknown)))
            raise SerializationError(error)
        try:
            direct = dict(
                (NodeRef.deserialize(r["tail"]), NodeRef.deserialize(r["head"])) for r in serialized.get("direct", ())
            )
            cross = dict(
                (NodeRef.deserialize(r["node"]), Path.deserialize(r["path"])) for r in serialized.get("cross", ())
            )
            return cls.overrides(direct=direct, cross=cross)
        except (TypeError, KeyError, ValueError) as e:
            exc = SerializationError("invalid override document; {}".format(e))
            six.raise_from(exc, None)
            raise exc

    @property
    def mode(self):
        # type: () -> TieBreakMode
        """Mode."""
        return self._mode

    @property
    def seed(self):
        # type: () -> int | None
        """Seed."""
        return self._seed

    @property
    def direct(self):
        # type: () -> Mapping[NodeRef, NodeRef]
        """Direct overrides."""
        return self._direct

    @property
    def cross(self):
        # type: () -> Mapping[NodeRef, Path]
        """Cross overrides."""
        return self._cross

    @property
    def stream(self):
        # type: () -> int
        """Decision stream."""
        return self._stream


TB = TypeVar("TB", bound=TieBreak)
