import pytest

from percorsi.constants import (
    BRUTE_FORCE_MAX_DEPTH,
    BRUTE_FORCE_MAX_PATHS,
    DEFAULT_MAX_PATHS,
    FORMAT_VERSION,
    SHARED_EDGES_MESSAGE,
    NotAPathReason,
    Origin,
    SpanMode,
    TieBreakMode,
)


def test_values():
    assert Origin("direct") is Origin.DIRECT
    assert Origin("cross") is Origin.CROSS
    assert SpanMode("sampled") is SpanMode.SAMPLED
    assert TieBreakMode("overrides") is TieBreakMode.OVERRIDES
    assert NotAPathReason("branching") is NotAPathReason.BRANCHING


def test_defaults():
    assert DEFAULT_MAX_PATHS == 10**6
    assert BRUTE_FORCE_MAX_PATHS == 12
    assert BRUTE_FORCE_MAX_DEPTH == 6
    assert FORMAT_VERSION == 1
    assert SHARED_EDGES_MESSAGE == "There exist shared edges between two independent substructure paths"


if __name__ == "__main__":
    pytest.main()
