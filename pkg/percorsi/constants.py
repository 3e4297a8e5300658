"""Constants and defaults."""

from enum import Enum

import six
from basicco.type_checking import TEXT_TYPES
from tippo import Tuple, cast, final

__all__ = [
    "Origin",
    "TieBreakMode",
    "NotAPathReason",
    "SpanMode",
    "INTEGER_TYPES",
    "TEXT_TYPES",
    "DEFAULT_MAX_PATHS",
    "DEFAULT_SPAN_SAMPLE_SIZE",
    "BRUTE_FORCE_MAX_PATHS",
    "BRUTE_FORCE_MAX_DEPTH",
    "FORMAT_VERSION",
    "SHARED_EDGES_MESSAGE",
]


@final
class Origin(Enum):
    """How a basis path was produced by the layer-by-layer construction."""

    DIRECT = "direct"
    CROSS = "cross"


@final
class TieBreakMode(Enum):
    """How free choices of the construction are resolved."""

    DETERMINISTIC = "deterministic"
    SEEDED = "seeded"
    OVERRIDES = "overrides"


@final
class NotAPathReason(Enum):
    """Why an edge vector does not describe a single input-to-output path."""

    ZERO = "zero"
    NON_BINARY = "non_binary"
    FOREIGN_EDGE = "foreign_edge"
    BRANCHING = "branching"
    DISCONNECTED = "disconnected"
    WRONG_ENDPOINTS = "wrong_endpoints"


@final
class SpanMode(Enum):
    """Whether a span check covered every path or a seeded sample."""

    FULL = "full"
    SAMPLED = "sampled"


INTEGER_TYPES = cast(Tuple[type, ...], six.integer_types)
"""Accepted integer types (booleans are rejected separately)."""

DEFAULT_MAX_PATHS = 10**6
"""Default cap on the number of input-to-output paths enumerated at once."""

DEFAULT_SPAN_SAMPLE_SIZE = 1000
"""Number of paths sampled when a span check cannot enumerate every path."""

BRUTE_FORCE_MAX_PATHS = 12
"""Largest host graph (in total paths) accepted by the brute-force reachability search."""

BRUTE_FORCE_MAX_DEPTH = 6
"""Largest number of signed terms explored by the brute-force reachability search."""

FORMAT_VERSION = 1
"""Version stamped into every document."""

SHARED_EDGES_MESSAGE = "There exist shared edges between two independent substructure paths"
"""Diagnostic printed when two independent substructure paths share a layer transition."""
