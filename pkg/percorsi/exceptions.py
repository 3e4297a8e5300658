"""Percorsi exceptions."""

from tippo import Any

from .constants import SHARED_EDGES_MESSAGE

__all__ = [
    "PercorsiError",
    "InvalidSpecError",
    "InvalidPathError",
    "PathCountExceedsLimitError",
    "PathNotSubgraphError",
    "EdgeNotPresentError",
    "InvalidTieBreakError",
    "EmptyReachError",
    "HasSkipEdgesError",
    "UnreachableError",
    "SharedEdgesError",
    "MissingBlockError",
    "InstanceTooLargeError",
    "SerializationError",
]


class PercorsiError(Exception):
    """Base class for all errors raised by this package."""


class InvalidSpecError(PercorsiError):
    """Network spec is malformed (empty layer, block out of range, duplicate block)."""


class InvalidPathError(PercorsiError):
    """Path is malformed or does not live on the host graph."""


class PathCountExceedsLimitError(PercorsiError):
    """Too many input-to-output paths to enumerate."""

    def __init__(self, count, limit, *args):
        # type: (int, int, *Any) -> None
        """
        :param count: Number of paths in the graph.
        :param limit: Enumeration cap that was exceeded.
        """
        if not args:
            args = ("graph has {} input-to-output paths, more than the limit of {}".format(count, limit),)
        super(PathCountExceedsLimitError, self).__init__(*args)
        self.count = count
        self.limit = limit


class PathNotSubgraphError(PercorsiError):
    """Path cannot be removed because some of its edges are missing from the graph."""


class EdgeNotPresentError(PercorsiError):
    """Edge cannot be removed because it is missing from the graph."""


class InvalidTieBreakError(PercorsiError):
    """Tie-break override names a node or path that is not a valid choice."""


class EmptyReachError(PercorsiError):
    """A node has no constructed path reaching it."""


class HasSkipEdgesError(PercorsiError):
    """Graph has layer-skip edges where a skip-free graph is required."""


class UnreachableError(PercorsiError):
    """The output layer cannot be reached from the input layer."""


class SharedEdgesError(PercorsiError):
    """Two independent substructure paths use the same layer transition."""

    def __init__(self, shared, *args):
        # type: (Any, *Any) -> None
        """
        :param shared: The offending pair and the transitions they share.
        """
        if not args:
            args = (SHARED_EDGES_MESSAGE,)
        super(SharedEdgesError, self).__init__(*args)
        self.shared = shared


class MissingBlockError(PercorsiError):
    """A required layer block is missing from the graph."""


class InstanceTooLargeError(PercorsiError):
    """Instance is too large for an exhaustive search."""


class SerializationError(PercorsiError):
    """Could not serialize/deserialize value."""
