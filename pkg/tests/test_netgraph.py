import random

import networkx
import pytest

from percorsi import (
    EdgeRef,
    LayerBlock,
    NetworkSpec,
    NodeRef,
    Path,
    count_paths,
    enumerate_paths,
    sample_paths,
    skip_degree,
)
from percorsi.examples import network, path
from percorsi.exceptions import (
    InvalidPathError,
    InvalidSpecError,
    PathCountExceedsLimitError,
    SerializationError,
    UnreachableError,
)


def edge(tail, head):
    return EdgeRef(NodeRef(*tail), NodeRef(*head))


@pytest.mark.parametrize(
    "layers, blocks, m, h",
    [
        ([2, 1, 2], None, 4, 1),
        ([3, 2, 3], None, 12, 2),
        ([2, 3, 3, 2], [(0, 1), (1, 2), (2, 3), (0, 3)], 25, 6),
        ([2, 2], None, 4, 0),
    ],
)
def test_counts(layers, blocks, m, h):
    graph = network(layers, blocks)
    assert graph.edge_count == m
    assert graph.hidden_count == h
    assert len(graph.edges) == m
    assert all(e.tail.layer < e.head.layer for e in graph.edges)


def test_canonical_edge_order():
    graph = network([2, 3, 3, 2], blocks=[(0, 3), (2, 3), (1, 2), (0, 1)])
    keys = [(e.tail.layer, e.head.layer, e.tail.index, e.head.index) for e in graph.edges]
    assert keys == sorted(keys)
    assert [b.key for b in graph.blocks] == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert graph.edges == network([2, 3, 3, 2], blocks=[(0, 1), (1, 2), (2, 3), (0, 3)]).edges
    assert [graph.edge_index(e) for e in graph.edges] == list(range(graph.edge_count))


def test_queries():
    graph = network([2, 3, 3, 2], blocks=[(0, 1), (1, 2), (2, 3), (0, 3)])
    assert graph.last_layer == 3
    assert graph.has_skip_edges
    assert not graph.is_consecutive
    assert graph.nodes_in_layer(1) == (NodeRef(1, 1), NodeRef(1, 2), NodeRef(1, 3))
    assert graph.has_node(NodeRef(3, 2))
    assert not graph.has_node(NodeRef(3, 3))
    assert not graph.has_node(NodeRef(4, 1))
    assert graph.has_edge(edge((0, 1), (3, 2)))
    assert not graph.has_edge(edge((0, 1), (2, 2)))
    assert len(graph.out_edges(NodeRef(0, 1))) == 3 + 2
    assert len(graph.in_edges(NodeRef(3, 1))) == 3 + 2
    assert len(graph.block_edges(0, 3)) == 4
    assert graph.block_edges(0, 2) == ()
    assert graph.has_block(0, 3)
    assert not graph.has_block(0, 2)

    with pytest.raises(InvalidPathError):
        graph.edge_index(edge((0, 1), (2, 2)))

    consecutive = network([2, 2, 2])
    assert consecutive.is_consecutive
    assert not consecutive.has_skip_edges


@pytest.mark.parametrize(
    "layers, blocks",
    [
        ([2], None),
        ([], None),
        ([2, 0, 2], None),
        ([2, -1], None),
        ([2, True], None),
        ([2, 2.0], None),
        ([2, 2], [(0, 2)]),
        ([2, 2, 2], [(0, 1), (0, 1)]),
        ([2, 2, 2], [(1, 0)]),
        ([2, 2, 2], []),
    ],
)
def test_invalid_spec(layers, blocks):
    with pytest.raises(InvalidSpecError):
        NetworkSpec(layers, blocks=blocks)


def test_weights():
    spec = NetworkSpec([2, 2], weights={edge((0, 1), (1, 2)): 0.5})
    graph = network([2, 2])
    assert spec.weights[edge((0, 1), (1, 2))] == 0.5
    assert graph.weight(edge((0, 1), (1, 2))) is None

    with pytest.raises(InvalidSpecError):
        NetworkSpec([2, 2], weights={edge((0, 1), (1, 3)): 0.5})
    with pytest.raises(InvalidSpecError):
        NetworkSpec([2, 2, 2], weights={edge((0, 1), (2, 1)): 0.5})


def test_spec_serialization():
    spec = NetworkSpec([2, 3, 3, 2], blocks=[(0, 1), (1, 2), (2, 3), (0, 3)], weights={edge((0, 1), (3, 1)): 2})
    serialized = spec.serialize()
    assert serialized["layers"] == [2, 3, 3, 2]
    assert serialized["blocks"][1] == {"from": 0, "to": 3}
    assert serialized["weights"] == [{"tail": [0, 1], "head": [3, 1], "value": 2.0}]
    assert NetworkSpec.deserialize(serialized) == spec

    assert NetworkSpec.deserialize({"layers": [2, 1, 2]}).blocks == (LayerBlock(0, 1), LayerBlock(1, 2))

    with pytest.raises(SerializationError):
        NetworkSpec.deserialize({"sizes": [2, 2]})
    with pytest.raises(SerializationError):
        NetworkSpec.deserialize({"layers": "2, 2"})
    with pytest.raises(SerializationError):
        NetworkSpec.deserialize({"layers": [2, 2], "blocks": [{"from": 0}]})
    for weights in (5, {"value": 1.0}, ["x"], [{"tail": [0, 1], "head": [1, 1]}]):
        with pytest.raises(SerializationError):
            NetworkSpec.deserialize({"layers": [2, 2], "weights": weights})
    with pytest.raises(InvalidSpecError):
        NetworkSpec.deserialize({"layers": [2, 0]})


@pytest.mark.parametrize(
    "tail, head, degree",
    [((0, 1), (1, 2), 0), ((0, 1), (2, 1), 1), ((1, 1), (4, 2), 2)],
)
def test_skip_degree(tail, head, degree):
    assert skip_degree(edge(tail, head)) == degree


def test_refs():
    assert NodeRef(1, 2) == NodeRef(1, 2)
    assert hash(NodeRef(1, 2)) == hash(NodeRef(1, 2))
    assert NodeRef(1, 2) != NodeRef(2, 1)
    assert repr(NodeRef(1, 2)) == "NodeRef(1, 2)"
    assert NodeRef.deserialize([1, 2]) == NodeRef(1, 2)
    assert EdgeRef.deserialize(edge((0, 1), (2, 1)).serialize()) == edge((0, 1), (2, 1))

    with pytest.raises(ValueError):
        NodeRef(0, 0)
    with pytest.raises(ValueError):
        NodeRef(-1, 1)
    with pytest.raises(ValueError):
        edge((1, 1), (1, 2))
    with pytest.raises(SerializationError):
        NodeRef.deserialize([1])
    with pytest.raises(SerializationError):
        EdgeRef.deserialize({"tail": [1, 1]})


def test_path():
    p = path((0, 1), (1, 1), (3, 2))
    assert len(p) == 3
    assert p[0] == NodeRef(0, 1)
    assert p.start == NodeRef(0, 1)
    assert p.end == NodeRef(3, 2)
    assert p.layers == (0, 1, 3)
    assert p.edges == (edge((0, 1), (1, 1)), edge((1, 1), (3, 2)))
    assert NodeRef(1, 1) in p
    assert p == Path.deserialize(p.serialize())
    assert p.serialize() == [[0, 1], [1, 1], [3, 2]]
    assert path((0, 1), (1, 1)).concatenate(path((1, 1), (3, 2))) == p

    with pytest.raises(InvalidPathError):
        path((0, 1))
    with pytest.raises(InvalidPathError):
        path((0, 1), (1, 1), (1, 2))
    with pytest.raises(InvalidPathError):
        path((0, 1), (1, 1)).concatenate(path((1, 2), (2, 1)))
    with pytest.raises(SerializationError):
        Path.deserialize([[0, 1], [0, 2]])
    with pytest.raises(SerializationError):
        Path.deserialize("0,1")


def test_validate_path(bowtie_graph, bowtie_paths):
    for p in bowtie_paths:
        bowtie_graph.validate_path(p)
    with pytest.raises(InvalidPathError):
        bowtie_graph.validate_path(path((0, 1), (1, 1)))
    with pytest.raises(InvalidPathError):
        bowtie_graph.validate_path(path((0, 3), (1, 1), (2, 1)))
    with pytest.raises(InvalidPathError):
        bowtie_graph.validate_path(path((0, 1), (2, 1)))


@pytest.mark.parametrize(
    "layers, blocks, count",
    [
        ([2, 1, 2], None, 4),
        ([3, 2, 3], None, 18),
        ([2, 2], None, 4),
        ([2, 3, 3, 2], [(0, 1), (1, 2), (2, 3), (0, 3)], 40),
    ],
)
def test_enumerate_paths(layers, blocks, count):
    graph = network(layers, blocks)
    paths = enumerate_paths(graph)
    assert len(paths) == count == count_paths(graph)
    assert [p.key for p in paths] == sorted(p.key for p in paths)
    assert len(set(paths)) == count
    for p in paths:
        graph.validate_path(p)


@pytest.mark.parametrize(
    "layers, blocks",
    [
        ([2, 1, 2], None),
        ([2, 3, 3, 2], [(0, 1), (1, 2), (2, 3), (0, 3)]),
        ([1, 2, 2, 1], [(0, 1), (1, 2), (2, 3), (0, 2), (1, 3)]),
    ],
)
def test_enumerate_paths_against_networkx(layers, blocks):
    graph = network(layers, blocks)
    digraph = networkx.DiGraph()
    digraph.add_edges_from((e.tail.key, e.head.key) for e in graph.edges)
    expected = set()
    for source in graph.nodes_in_layer(0):
        for target in graph.nodes_in_layer(graph.last_layer):
            for nodes in networkx.all_simple_paths(digraph, source.key, target.key):
                expected.add(tuple(nodes))
    assert set(p.key for p in enumerate_paths(graph)) == expected


def test_enumerate_paths_limit():
    graph = network([3, 2, 3])
    with pytest.raises(PathCountExceedsLimitError) as info:
        enumerate_paths(graph, limit=10)
    assert info.value.count == 18
    assert info.value.limit == 10
    assert len(enumerate_paths(graph, limit=None)) == 18


def test_dead_ends_are_skipped():
    graph = network([2, 2, 2, 2], blocks=[(0, 1), (0, 2), (2, 3)])
    assert count_paths(graph) == 8
    assert all(p.layers == (0, 2, 3) for p in enumerate_paths(graph))


def test_sample_paths():
    graph = network([2, 3, 3, 2], blocks=[(0, 1), (1, 2), (2, 3), (0, 3)])
    everything = set(enumerate_paths(graph))
    first = sample_paths(graph, 50, random.Random(3))
    assert first == sample_paths(graph, 50, random.Random(3))
    assert len(first) == 50
    assert set(first) <= everything

    with pytest.raises(UnreachableError):
        sample_paths(network([2, 2, 2], blocks=[(0, 1)]), 1, random.Random(0))


if __name__ == "__main__":
    pytest.main()
