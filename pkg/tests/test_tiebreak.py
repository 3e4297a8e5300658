import pytest

from percorsi import EdgeRef, NodeRef, TieBreak
from percorsi.constants import TieBreakMode
from percorsi.examples import network, path
from percorsi.exceptions import InvalidTieBreakError, SerializationError


def test_deterministic():
    tie_break = TieBreak.deterministic()
    heads = (NodeRef(1, 1), NodeRef(1, 2))
    assert tie_break.mode is TieBreakMode.DETERMINISTIC
    assert tie_break.choose_head(NodeRef(0, 3), heads) == NodeRef(1, 1)

    paths = (path((0, 2), (1, 1)), path((0, 1), (1, 1)))
    stub = EdgeRef(NodeRef(1, 1), NodeRef(2, 2))
    assert tie_break.choose_reach(stub, paths) == path((0, 1), (1, 1))


def test_seeded_is_reproducible():
    heads = tuple(NodeRef(1, i) for i in range(1, 6))
    tails = [NodeRef(0, i) for i in range(1, 20)]
    first = [TieBreak.seeded(7).choose_head(t, heads) for t in tails]
    assert first == [TieBreak.seeded(7).choose_head(t, heads) for t in tails]
    assert first == [TieBreak.seeded(7).choose_head(t, heads) for t in reversed(tails)][::-1]
    assert set(first) <= set(heads)
    assert len(set(first)) > 1

    other_stream = TieBreak.seeded(7).update(stream=1)
    assert first != [other_stream.choose_head(t, heads) for t in tails]


def test_overrides():
    tie_break = TieBreak.overrides(
        direct={NodeRef(0, 3): NodeRef(1, 2)},
        cross={NodeRef(1, 1): path((0, 2), (1, 1))},
    )
    heads = (NodeRef(1, 1), NodeRef(1, 2))
    assert tie_break.choose_head(NodeRef(0, 3), heads) == NodeRef(1, 2)
    assert tie_break.choose_head(NodeRef(0, 4), heads) == NodeRef(1, 1)

    paths = (path((0, 1), (1, 1)), path((0, 2), (1, 1)))
    assert tie_break.choose_reach(EdgeRef(NodeRef(1, 1), NodeRef(2, 2)), paths) == path((0, 2), (1, 1))

    with pytest.raises(InvalidTieBreakError):
        tie_break.choose_head(NodeRef(0, 3), (NodeRef(1, 1),))
    with pytest.raises(InvalidTieBreakError):
        tie_break.choose_reach(EdgeRef(NodeRef(1, 1), NodeRef(2, 2)), paths[:1])


def test_invalid_arguments():
    with pytest.raises(ValueError):
        TieBreak(TieBreakMode.SEEDED)
    with pytest.raises(ValueError):
        TieBreak(TieBreakMode.DETERMINISTIC, seed=3)
    with pytest.raises(ValueError):
        TieBreak(direct={NodeRef(0, 1): NodeRef(1, 1)})
    with pytest.raises(ValueError):
        TieBreak.overrides(direct={NodeRef(0, 1): NodeRef(2, 1)})
    with pytest.raises(ValueError):
        TieBreak.overrides(cross={NodeRef(1, 2): path((0, 1), (1, 1))})


def test_check():
    graph = network([3, 2, 3])
    TieBreak.overrides(direct={NodeRef(0, 3): NodeRef(1, 2)}).check(graph)

    with pytest.raises(InvalidTieBreakError):
        TieBreak.overrides(direct={NodeRef(0, 4): NodeRef(1, 2)}).check(graph)
    with pytest.raises(InvalidTieBreakError):
        TieBreak.overrides(cross={NodeRef(1, 1): path((0, 5), (1, 1))}).check(graph)


def test_relabel():
    tie_break = TieBreak.overrides(
        direct={NodeRef(0, 2): NodeRef(1, 1), NodeRef(2, 1): NodeRef(3, 1)},
        cross={NodeRef(3, 1): path((0, 1), (3, 1)), NodeRef(1, 1): path((0, 1), (1, 1))},
    )
    mapping = {NodeRef(0, 1): NodeRef(0, 1), NodeRef(0, 2): NodeRef(0, 2)}
    mapping.update({NodeRef(3, i): NodeRef(1, i) for i in (1, 2)})
    relabeled = tie_break.relabel(mapping, stream=1)
    assert relabeled.stream == 1
    assert dict(relabeled.direct) == {}
    assert dict(relabeled.cross) == {NodeRef(1, 1): path((0, 1), (1, 1))}


def test_serialization():
    tie_break = TieBreak.overrides(
        direct={NodeRef(0, 3): NodeRef(1, 2)},
        cross={NodeRef(1, 1): path((0, 2), (1, 1))},
    )
    serialized = tie_break.serialize()
    assert serialized == {
        "direct": [{"tail": [0, 3], "head": [1, 2]}],
        "cross": [{"node": [1, 1], "path": [[0, 2], [1, 1]]}],
    }
    assert TieBreak.deserialize(serialized) == tie_break
    assert TieBreak.deserialize({"direct": []}) == TieBreak.overrides()

    with pytest.raises(SerializationError):
        TieBreak.deserialize({"direct": [{"tail": [0, 3]}]})
    with pytest.raises(SerializationError):
        TieBreak.deserialize({"cross": [{"node": [1, 2], "path": [[0, 2], [1, 1]]}]})
    with pytest.raises(SerializationError):
        TieBreak.deserialize({"extra": []})


if __name__ == "__main__":
    pytest.main()
