"""Example networks."""

from tippo import Iterable

from ._netgraph import NetworkGraph, NetworkSpec, Path, build_network

__all__ = ["network", "path", "bowtie_network", "bowtie_paths", "skip_network", "shared_network"]


def network(layer_sizes, blocks=None):
    # type: (Iterable[int], Iterable[tuple[int, int]] | None) -> NetworkGraph
    """
    Build a network graph from layer sizes and optional blocks.

    :param layer_sizes: Number of nodes per layer.
    :param blocks: `(from_layer, to_layer)` pairs (defaults to all consecutive pairs).
    :return: Graph.
    """
    return build_network(NetworkSpec(layer_sizes, blocks=blocks))


def path(*keys):
    # type: (*tuple[int, int]) -> Path
    """
    Build a path from `(layer, index)` keys.

    :param keys: Node keys.
    :return: Path.
    """
    return Path.from_keys(keys)


def bowtie_network():
    # type: () -> NetworkGraph
    """Two inputs and two outputs joined through a single hidden node."""
    return network([2, 1, 2])


def bowtie_paths():
    # type: () -> tuple[Path, Path, Path, Path]
    """
    The four paths of :func:`bowtie_network`.

    The fourth is the first plus the second minus the third.
    """
    p1 = path((0, 1), (1, 1), (2, 1))
    p2 = path((0, 2), (1, 1), (2, 2))
    p3 = path((0, 1), (1, 1), (2, 2))
    p4 = path((0, 2), (1, 1), (2, 1))
    return p1, p2, p3, p4


def skip_network():
    # type: () -> NetworkGraph
    """Four layers plus a block skipping straight from the input to the output layer."""
    return network([2, 3, 3, 2], blocks=[(0, 1), (1, 2), (2, 3), (0, 3)])


def shared_network():
    # type: () -> NetworkGraph
    """Four layers plus a skip block whose substructures share the last transition."""
    return network([2, 2, 2, 2], blocks=[(0, 1), (1, 2), (2, 3), (0, 2)])
