import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from percorsi import (
    HbpsResult,
    TieBreak,
    count_paths,
    enumerate_paths,
    expected_cardinality,
    hbps,
    subroutine_basis,
    verify_basis,
)
from percorsi.examples import network

layer_sizes = st.lists(st.integers(min_value=1, max_value=4), min_size=2, max_size=5)


@st.composite
def skip_networks(draw):
    sizes = draw(st.lists(st.integers(min_value=1, max_value=3), min_size=3, max_size=5))
    last_layer = len(sizes) - 1
    skips = [(j, l) for j in range(last_layer) for l in range(j + 2, last_layer + 1)]
    chosen = draw(st.lists(st.sampled_from(skips), unique=True, max_size=3))
    blocks = [(k, k + 1) for k in range(last_layer)] + chosen
    return network(sizes, blocks=blocks)


@given(sizes=layer_sizes)
@settings(deadline=None, max_examples=60)
def test_subroutine_basis_verifies(sizes):
    graph = network(sizes)
    basis = subroutine_basis(graph)
    assert basis.cardinality == graph.edge_count - graph.hidden_count
    assert verify_basis(graph, basis).ok


@given(sizes=layer_sizes, seed=st.integers(min_value=0, max_value=2 ** 32))
@settings(deadline=None, max_examples=40)
def test_seeded_basis_verifies(sizes, seed):
    graph = network(sizes)
    basis = subroutine_basis(graph, TieBreak.seeded(seed))
    assert basis == subroutine_basis(graph, TieBreak.seeded(seed))
    assert verify_basis(graph, basis).ok


@given(sizes=layer_sizes)
@settings(deadline=None, max_examples=60)
def test_path_count(sizes):
    graph = network(sizes)
    paths = enumerate_paths(graph)
    assert len(paths) == count_paths(graph)
    assert paths == sorted(paths, key=lambda p: p.key)


@given(graph=skip_networks())
@settings(deadline=None, max_examples=60)
def test_hbps_verifies_or_rejects(graph):
    result = hbps(graph)
    if isinstance(result, HbpsResult):
        assert result.cardinality == result.expected_cardinality == expected_cardinality(graph)
        assert verify_basis(graph, result.basis).ok
    else:
        assert result.shared.transitions
        assert set(result.shared.transitions) <= set(result.shared.paths[0].transitions)
        assert set(result.shared.transitions) <= set(result.shared.paths[1].transitions)


if __name__ == "__main__":
    pytest.main()
