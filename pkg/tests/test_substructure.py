from fractions import Fraction

import numpy
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from percorsi import (
    AlphaVector,
    NodeRef,
    ReducedGraph,
    SubstructurePath,
    check_pairwise_edge_disjoint,
    enumerate_paths,
    enumerate_substructure_paths,
    induced_subgraph,
    is_homogeneous,
    maximal_independent_subset,
    reduced_graph,
    structure_path,
    substructure_set,
    vectorize,
)
from percorsi.constants import SHARED_EDGES_MESSAGE
from percorsi.examples import network
from percorsi.exceptions import (
    InvalidPathError,
    MissingBlockError,
    SerializationError,
    SharedEdgesError,
    UnreachableError,
)


def sp(*layers):
    return SubstructurePath(layers)


def alpha(last_layer, *transitions):
    width = last_layer + 1
    bits = [0] * width * width
    for j, l in transitions:
        bits[j * width + l] = 1
    return AlphaVector(last_layer, bits)


@pytest.mark.parametrize(
    "layers, blocks, edges",
    [
        ([2, 2, 2, 2], None, {(0, 1), (1, 2), (2, 3)}),
        ([2, 2, 2], [(0, 1), (1, 2), (0, 2)], {(0, 1), (1, 2), (0, 2)}),
        ([2, 3, 3, 2], [(0, 1), (1, 2), (2, 3), (0, 3)], {(0, 1), (1, 2), (2, 3), (0, 3)}),
    ],
)
def test_reduced_graph(layers, blocks, edges):
    assert reduced_graph(network(layers, blocks)).edges == frozenset(edges)


@pytest.mark.parametrize(
    "last_layer, edges, expected",
    [
        (2, [(0, 1), (1, 2)], [(0, 1, 2)]),
        (2, [(0, 1), (1, 2), (0, 2)], [(0, 2), (0, 1, 2)]),
        (3, [(0, 1), (1, 2), (2, 3), (0, 3)], [(0, 3), (0, 1, 2, 3)]),
        (3, [(0, 1), (1, 2), (2, 3), (0, 2), (1, 3)], [(0, 1, 3), (0, 2, 3), (0, 1, 2, 3)]),
    ],
)
def test_enumerate_substructure_paths(last_layer, edges, expected):
    paths = enumerate_substructure_paths(ReducedGraph(last_layer, edges))
    assert [p.layers for p in paths] == expected


def test_unreachable():
    with pytest.raises(UnreachableError):
        enumerate_substructure_paths(ReducedGraph(3, [(0, 1), (2, 3)]))
    with pytest.raises(ValueError):
        ReducedGraph(2, [(0, 3)])


def test_vectorize():
    assert vectorize(sp(0, 1, 2), 2).bits == (0, 1, 0, 0, 0, 1, 0, 0, 0)
    assert vectorize(sp(0, 2), 2).bits == (0, 0, 1, 0, 0, 0, 0, 0, 0)
    assert vectorize(sp(0, 1), 1).bits == (0, 1, 0, 0)


@given(layers=st.sets(st.integers(min_value=1, max_value=6), max_size=5))
@settings(deadline=None)
def test_vectorize_is_injective_and_upper_triangular(layers):
    last_layer = 7
    path = sp(*([0] + sorted(layers) + [last_layer]))
    vector = vectorize(path, last_layer)
    width = last_layer + 1
    assert all(divmod(i, width)[0] < divmod(i, width)[1] for i in vector.support())
    assert vector.to_path() == path


def test_alpha_vector():
    with pytest.raises(ValueError):
        AlphaVector(2, [0, 1])
    with pytest.raises(ValueError):
        AlphaVector(1, [0, 2, 0, 0])
    with pytest.raises(ValueError):
        alpha(2, (1, 2)).to_path()
    with pytest.raises(ValueError):
        alpha(2, (0, 1), (0, 2)).to_path()


def test_substructure_path():
    assert sp(0, 2, 3).transitions == ((0, 2), (2, 3))
    assert SubstructurePath.deserialize([0, 2, 3]) == sp(0, 2, 3)

    with pytest.raises(InvalidPathError):
        sp(0)
    with pytest.raises(InvalidPathError):
        sp(0, 2, 2)
    with pytest.raises(SerializationError):
        SubstructurePath.deserialize([0, 2, 1])
    with pytest.raises(SerializationError):
        SubstructurePath.deserialize("0,2")


def test_maximal_independent_subset():
    assert maximal_independent_subset([vectorize(sp(0, 2), 2), vectorize(sp(0, 1, 2), 2)]) == [0, 1]
    v = vectorize(sp(0, 1, 2), 2)
    assert maximal_independent_subset([v, v]) == [0]

    vectors = [
        alpha(4, (0, 1), (1, 2), (2, 3), (3, 4)),
        alpha(4, (0, 2), (2, 4)),
        alpha(4, (0, 1), (1, 2), (2, 4)),
        alpha(4, (0, 2), (2, 3), (3, 4)),
    ]
    assert maximal_independent_subset(vectors) == [0, 1, 2]

    with pytest.raises(ValueError):
        maximal_independent_subset([])


@given(
    rows=st.lists(
        st.lists(st.integers(0, 1), min_size=36, max_size=36),
        min_size=1,
        max_size=20,
    )
)
@settings(deadline=None, max_examples=100)
def test_maximal_independent_subset_is_maximal(rows):
    vectors = [AlphaVector(5, row) for row in rows]
    kept = maximal_independent_subset(vectors)
    matrix = numpy.array(rows, dtype=float)
    assert len(kept) == numpy.linalg.matrix_rank(matrix)
    if kept:
        assert numpy.linalg.matrix_rank(matrix[kept]) == len(kept)


def test_check_pairwise_edge_disjoint():
    check_pairwise_edge_disjoint([sp(0, 1, 2, 3, 4), sp(0, 2, 4)])
    check_pairwise_edge_disjoint([sp(0, 1)])
    check_pairwise_edge_disjoint([])

    with pytest.raises(SharedEdgesError) as excinfo:
        check_pairwise_edge_disjoint([sp(0, 3), sp(0, 2, 3), sp(0, 1, 2, 3)])
    assert str(excinfo.value) == SHARED_EDGES_MESSAGE
    shared = excinfo.value.shared
    assert (shared.first, shared.second) == (1, 2)
    assert shared.transitions == ((2, 3),)
    assert shared.serialize() == {"pair": [1, 2], "paths": [[0, 2, 3], [0, 1, 2, 3]], "transitions": [[2, 3]]}


def test_substructure_set():
    graph = network([2, 3, 3, 2], blocks=[(0, 1), (1, 2), (2, 3), (0, 3)])
    substructures = substructure_set(reduced_graph(graph))
    assert [p.layers for p in substructures.all_paths] == [(0, 3), (0, 1, 2, 3)]
    assert substructures.independent == (0, 1)
    assert substructures.serialize() == {
        "paths": [[0, 3], [0, 1, 2, 3]],
        "alpha_vectors": [list(v.bits) for v in substructures.vectors],
        "independent": [0, 1],
    }


def test_substructure_coefficients():
    reduced = ReducedGraph(4, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 2), (2, 4)])
    substructures = substructure_set(reduced)
    layers = [p.layers for p in substructures.all_paths]
    assert layers == [(0, 2, 4), (0, 1, 2, 4), (0, 2, 3, 4), (0, 1, 2, 3, 4)]
    assert substructures.independent == (0, 1, 2)
    assert substructures.coefficients(3) == {0: Fraction(-1), 1: Fraction(1), 2: Fraction(1)}
    assert substructures.coefficients(1) == {1: Fraction(1)}


def test_induced_subgraph():
    graph = network([2, 3, 3, 2], blocks=[(0, 1), (1, 2), (2, 3), (0, 3)])
    induced = induced_subgraph(graph, sp(0, 3))
    assert induced.graph.layer_sizes == (2, 2)
    assert induced.graph.edge_count == 4
    assert induced.graph.hidden_count == 0
    assert induced.original_node(NodeRef(1, 2)) == NodeRef(3, 2)
    assert induced.from_original[NodeRef(3, 2)] == NodeRef(1, 2)

    induced = induced_subgraph(graph, sp(0, 1, 2, 3))
    assert (induced.graph.edge_count, induced.graph.hidden_count) == (21, 6)
    assert not induced.graph.has_skip_edges
    for path in enumerate_paths(induced.graph):
        original = induced.original_path(path)
        graph.validate_path(original)
        assert original.layers == (0, 1, 2, 3)
        assert induced.induced_path(original) == path

    with pytest.raises(InvalidPathError):
        induced_subgraph(graph, sp(0, 3)).induced_path(enumerate_paths(graph)[0])
    with pytest.raises(MissingBlockError):
        induced_subgraph(graph, sp(0, 2, 3))


def test_induced_subgraph_identity():
    graph = network([2, 3, 2])
    induced = induced_subgraph(graph, sp(0, 1, 2))
    assert induced.graph == graph
    assert all(k == v for k, v in induced.to_original.items())


def test_structure_path():
    assert structure_path(network([2, 3, 2])) == sp(0, 1, 2)
    assert structure_path(network([2, 3, 2], blocks=[(0, 2)])) == sp(0, 2)
    assert is_homogeneous(network([2, 3, 2]))
    assert not is_homogeneous(network([2, 3, 2], blocks=[(0, 1), (1, 2), (0, 2)]))


if __name__ == "__main__":
    pytest.main()
