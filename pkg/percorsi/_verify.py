"""Independent checks of coverage, independence, cardinality and spanning."""

import logging
import random
import time
from fractions import Fraction

from basicco import SlottedBase, basic_data
from pyrsistent import pmap
from tippo import Any, Iterable, Mapping, Sequence

from ._bases import BaseRecord
from ._algebra import PathCombination
from ._linalg import RowSpace, rank
from ._netgraph import EdgeRef, NetworkGraph, Path, count_paths, enumerate_paths, sample_paths
from ._subroutine import BasisPathSet
from ._substructure import induced_subgraph, reduced_graph, substructure_set
from .constants import (
    BRUTE_FORCE_MAX_DEPTH,
    BRUTE_FORCE_MAX_PATHS,
    DEFAULT_MAX_PATHS,
    DEFAULT_SPAN_SAMPLE_SIZE,
    SpanMode,
)
from .exceptions import InstanceTooLargeError, PathCountExceedsLimitError
from .serializers import encode_fraction

__all__ = [
    "Representation",
    "SpanChecker",
    "VerificationReport",
    "check_coverage",
    "independence_rank",
    "in_span",
    "brute_force_reachable",
    "expected_cardinality",
    "verify_basis",
]

_logger = logging.getLogger(__name__)


def _indicator(path):
    # type: (Path) -> dict[tuple[tuple[int, int], tuple[int, int]], int]
    return dict((k, 1) for k in path.edge_keys)


class Representation(BaseRecord):
    """Exact coefficients expressing a path over a basis."""

    __slots__ = ("_paths", "_coefficients")

    def __init__(self, paths, coefficients):
        # type: (Iterable[Path], Iterable[Fraction]) -> None
        """
        :param paths: Basis paths.
        :param coefficients: Coefficient per basis path.
        :raises ValueError: Lengths do not match.
        """
        self._paths = tuple(paths)
        self._coefficients = tuple(Fraction(c) for c in coefficients)
        if len(self._paths) != len(self._coefficients):
            error = "got {} paths but {} coefficients".format(len(self._paths), len(self._coefficients))
            raise ValueError(error)

    def to_items(self, usecase=None):
        # type: (basic_data.ItemUsecase | None) -> list[tuple[str, Any]]
        """
        Convert to items.

        :param usecase: Usecase.
        :return: Items.
        """
        return [("paths", self._paths), ("coefficients", self._coefficients)]

    def to_combination(self):
        # type: () -> PathCombination
        """
        Unroll integer coefficients into signed path terms.

        :return: Path combination.
        :raises ValueError: Some coefficient is not an integer.
        """
        if not self.integral:
            error = "cannot unroll non-integer coefficients into a path combination"
            raise ValueError(error)
        terms = []
        for path, coefficient in zip(self._paths, self._coefficients):
            sign = 1 if coefficient > 0 else -1
            terms.extend([(sign, path)] * abs(int(coefficient)))
        return PathCombination(terms)

    def serialize(self):
        # type: () -> dict[str, Any]
        """
        Serialize (fractions as integers or `"p/q"` strings).

        :return: Serialized.
        """
        return {
            "coefficients": [encode_fraction(c) for c in self._coefficients],
            "integral": self.integral,
            "terms": [
                {"coefficient": encode_fraction(c), "path": p.serialize()}
                for p, c in zip(self._paths, self._coefficients)
                if c
            ],
        }

    @property
    def paths(self):
        # type: () -> tuple[Path, ...]
        """Basis paths."""
        return self._paths

    @property
    def coefficients(self):
        # type: () -> tuple[Fraction, ...]
        """Coefficient per basis path."""
        return self._coefficients

    @property
    def integral(self):
        # type: () -> bool
        """Whether every coefficient is an integer."""
        return all(c.denominator == 1 for c in self._coefficients)


class SpanChecker(SlottedBase):
    """Elimination of a basis, reused across many span queries."""

    __slots__ = ("_paths", "_space")

    def __init__(self, paths):
        # type: (BasisPathSet | Sequence[Path]) -> None
        """
        :param paths: Basis paths.
        """
        self._paths = tuple(paths)
        self._space = RowSpace()  # type: RowSpace[Any, int]
        for i, path in enumerate(self._paths):
            self._space.insert(_indicator(path), i)

    def contains(self, path):
        # type: (Path) -> bool
        """
        Get whether a path lies in the span.

        :param path: Path.
        :return: True if it does.
        """
        return self._space.contains(_indicator(path))

    def represent(self, path):
        # type: (Path) -> Representation | None
        """
        Solve for the coefficients of a path (dependent basis paths get 0).

        :param path: Path.
        :return: Representation, or None if the path is outside the span.
        """
        solution = self._space.solve(_indicator(path))
        if solution is None:
            return None
        return Representation(self._paths, [solution.get(i, Fraction(0)) for i in range(len(self._paths))])

    @property
    def rank(self):
        # type: () -> int
        """Rank of the basis."""
        return self._space.rank


class VerificationReport(BaseRecord):
    """Outcome of every check run against a basis."""

    __slots__ = (
        "_coverage_ok",
        "_uncovered",
        "_expected_cardinality",
        "_actual_cardinality",
        "_rank",
        "_span_mode",
        "_span_checked",
        "_span_failures",
        "_timings",
    )

    def __init__(
        self,
        coverage_ok,  # type: bool
        uncovered,  # type: Iterable[EdgeRef]
        expected_cardinality,  # type: int
        actual_cardinality,  # type: int
        rank,  # type: int
        span_mode,  # type: SpanMode
        span_checked,  # type: int
        span_failures,  # type: Iterable[Path]
        timings=None,  # type: Mapping[str, float] | None
    ):
        # type: (...) -> None
        self._coverage_ok = coverage_ok
        self._uncovered = tuple(uncovered)
        self._expected_cardinality = expected_cardinality
        self._actual_cardinality = actual_cardinality
        self._rank = rank
        self._span_mode = span_mode
        self._span_checked = span_checked
        self._span_failures = tuple(span_failures)
        self._timings = pmap(timings or {})

    def to_items(self, usecase=None):
        # type: (basic_data.ItemUsecase | None) -> list[tuple[str, Any]]
        """
        Convert to items.

        :param usecase: Usecase.
        :return: Items.
        """
        return [
            ("coverage_ok", self._coverage_ok),
            ("uncovered", self._uncovered),
            ("expected_cardinality", self._expected_cardinality),
            ("actual_cardinality", self._actual_cardinality),
            ("rank", self._rank),
            ("span_mode", self._span_mode),
            ("span_checked", self._span_checked),
            ("span_failures", self._span_failures),
            ("timings", self._timings),
        ]

    def serialize(self, timings=False):
        # type: (bool) -> dict[str, Any]
        """
        Serialize as a flat record.

        :param timings: Whether to include timings (which differ between runs).
        :return: Serialized.
        """
        serialized = {
            "ok": self.ok,
            "coverage_ok": self._coverage_ok,
            "uncovered": [e.serialize() for e in self._uncovered],
            "expected_cardinality": self._expected_cardinality,
            "actual_cardinality": self._actual_cardinality,
            "cardinality_ok": self.cardinality_ok,
            "rank": self._rank,
            "independent_ok": self.independent_ok,
            "span_mode": self._span_mode.value,
            "span_checked": self._span_checked,
            "span_failures": [p.serialize() for p in self._span_failures],
        }  # type: dict[str, Any]
        if timings:
            serialized["timings"] = dict(self._timings)
        return serialized

    @property
    def coverage_ok(self):
        # type: () -> bool
        """Whether every edge lies on some basis path."""
        return self._coverage_ok

    @property
    def uncovered(self):
        # type: () -> tuple[EdgeRef, ...]
        """Edges on no basis path."""
        return self._uncovered

    @property
    def expected_cardinality(self):
        # type: () -> int
        """`m - H`, or its sum over the independent substructures."""
        return self._expected_cardinality

    @property
    def actual_cardinality(self):
        # type: () -> int
        """Number of basis paths."""
        return self._actual_cardinality

    @property
    def cardinality_ok(self):
        # type: () -> bool
        """Whether the cardinality is the expected one."""
        return self._expected_cardinality == self._actual_cardinality

    @property
    def rank(self):
        # type: () -> int
        """Exact rank of the basis path indicators."""
        return self._rank

    @property
    def independent_ok(self):
        # type: () -> bool
        """Whether the basis paths are linearly independent."""
        return self._rank == self._actual_cardinality

    @property
    def span_mode(self):
        # type: () -> SpanMode
        """Whether every path or a sample was checked."""
        return self._span_mode

    @property
    def span_checked(self):
        # type: () -> int
        """Number of paths checked."""
        return self._span_checked

    @property
    def span_failures(self):
        # type: () -> tuple[Path, ...]
        """Checked paths outside the span."""
        return self._span_failures

    @property
    def timings(self):
        # type: () -> Mapping[str, float]
        """Seconds spent per check."""
        return self._timings

    @property
    def ok(self):
        # type: () -> bool
        """Whether every check passed."""
        return self._coverage_ok and self.independent_ok and self.cardinality_ok and not self._span_failures


def check_coverage(basis, graph):
    # type: (Iterable[Path], NetworkGraph) -> tuple[bool, list[EdgeRef]]
    """
    Check that every edge of a graph lies on some basis path.

    :param basis: Basis paths.
    :param graph: Graph.
    :return: Whether it does, and the uncovered edges in canonical order.
    """
    covered = set()  # type: set[EdgeRef]
    for path in basis:
        covered.update(path.edges)
    uncovered = [e for e in graph.edges if e not in covered]
    return not uncovered, uncovered


def independence_rank(paths):
    # type: (Iterable[Path]) -> int
    """
    Get the exact rational rank of the edge indicators of some paths.

    :param paths: Paths.
    :return: Rank.
    """
    return rank(_indicator(p) for p in paths)


def in_span(basis, path):
    # type: (BasisPathSet | Sequence[Path], Path) -> Representation | None
    """
    Express a path's edge indicator over a basis, exactly.

    :param basis: Basis paths.
    :param path: Path.
    :return: Representation, or None if the path is outside the span.
    """
    return SpanChecker(basis).represent(path)


def brute_force_reachable(paths, target, depth, graph=None):
    # type: (Sequence[Path], Path, int, NetworkGraph | None) -> bool
    """
    Search every signed combination of at most `depth` terms for one that evaluates to a path.

    :param paths: Available paths.
    :param target: Path to reach.
    :param depth: Maximum number of terms.
    :param graph: Host graph, checked against the size limit when given.
    :return: Whether some combination reaches the target exactly.
    :raises InstanceTooLargeError: Too many paths or too deep a search.
    """
    if depth > BRUTE_FORCE_MAX_DEPTH:
        error = "search depth {} exceeds the limit of {}".format(depth, BRUTE_FORCE_MAX_DEPTH)
        raise InstanceTooLargeError(error)
    if len(paths) > BRUTE_FORCE_MAX_PATHS:
        error = "{} paths exceed the limit of {}".format(len(paths), BRUTE_FORCE_MAX_PATHS)
        raise InstanceTooLargeError(error)
    if graph is not None:
        total = count_paths(graph)
        if total > BRUTE_FORCE_MAX_PATHS:
            error = "network has {} paths, more than the limit of {}".format(total, BRUTE_FORCE_MAX_PATHS)
            raise InstanceTooLargeError(error)

    columns = sorted(set(k for p in list(paths) + [target] for k in p.edge_keys))
    position = dict((k, i) for i, k in enumerate(columns))

    def _dense(path):
        # type: (Path) -> tuple[int, ...]
        row = [0] * len(columns)
        for key in path.edge_keys:
            row[position[key]] = 1
        return tuple(row)

    goal = _dense(target)
    steps = []  # type: list[tuple[int, ...]]
    for path in paths:
        row = _dense(path)
        steps.append(row)
        steps.append(tuple(-v for v in row))

    frontier = {tuple([0] * len(columns))}
    seen = set(frontier)
    for _ in range(depth):
        reached = set()
        for vector in frontier:
            for step in steps:
                candidate = tuple(a + b for a, b in zip(vector, step))
                if candidate == goal:
                    return True
                if candidate not in seen:
                    seen.add(candidate)
                    reached.add(candidate)
        frontier = reached
        if not frontier:
            break
    return False


def expected_cardinality(graph):
    # type: (NetworkGraph) -> int
    """
    Get the expected basis size: `m - H`, or its sum over the independent substructures of a network with
    layer-skip blocks.

    :param graph: Graph.
    :return: Expected cardinality.
    :raises UnreachableError: Output layer cannot be reached.
    """
    if not graph.has_skip_edges:
        return graph.edge_count - graph.hidden_count
    substructures = substructure_set(reduced_graph(graph))
    total = 0
    for path in substructures.independent_paths:
        induced = induced_subgraph(graph, path).graph
        total += induced.edge_count - induced.hidden_count
    return total


def verify_basis(
    graph,  # type: NetworkGraph
    basis,  # type: BasisPathSet | Sequence[Path]
    max_paths=DEFAULT_MAX_PATHS,  # type: int | None
    sample_size=DEFAULT_SPAN_SAMPLE_SIZE,  # type: int
    seed=0,  # type: int
):
    # type: (...) -> VerificationReport
    """
    Run every check against a basis.

    :param graph: Graph.
    :param basis: Basis paths.
    :param max_paths: Cap on enumeration; above it the span check runs on a sample.
    :param sample_size: Number of paths sampled above the cap.
    :param seed: Sampling seed.
    :return: Report.
    :raises InvalidPathError: Some basis path is not an input-to-output path of the graph.
    """
    paths = tuple(basis)
    for path in paths:
        graph.validate_path(path)
    timings = {}  # type: dict[str, float]

    started = time.perf_counter()
    coverage_ok, uncovered = check_coverage(paths, graph)
    timings["coverage"] = time.perf_counter() - started

    started = time.perf_counter()
    checker = SpanChecker(paths)
    timings["rank"] = time.perf_counter() - started

    started = time.perf_counter()
    expected = expected_cardinality(graph)
    timings["cardinality"] = time.perf_counter() - started

    started = time.perf_counter()
    try:
        targets = enumerate_paths(graph, limit=max_paths)
        span_mode = SpanMode.FULL
    except PathCountExceedsLimitError as e:
        _logger.warning(
            "%d paths exceed the limit of %d; checking the span on %d sampled paths", e.count, e.limit, sample_size
        )
        targets = sample_paths(graph, sample_size, random.Random(seed))
        span_mode = SpanMode.SAMPLED
    failures = set(p for p in targets if not checker.contains(p))
    timings["span"] = time.perf_counter() - started

    report = VerificationReport(
        coverage_ok=coverage_ok,
        uncovered=uncovered,
        expected_cardinality=expected,
        actual_cardinality=len(paths),
        rank=checker.rank,
        span_mode=span_mode,
        span_checked=len(targets),
        span_failures=sorted(failures, key=lambda p: p.key),
        timings=timings,
    )
    _logger.info(
        "verified %d paths: coverage=%s rank=%d expected=%d span=%d/%d (%s)",
        len(paths),
        coverage_ok,
        checker.rank,
        expected,
        len(targets) - len(failures),
        len(targets),
        span_mode.value,
    )
    if not report.ok:
        _logger.debug("verification failed: %s", report.serialize())
    return report
