"""
Command line interface.

Structured (JSON) output is the default; ``--format summary`` prints a short human readable report instead.

Exit codes: 0 success, 1 usage or input error, 2 independent substructure paths share edges, 3 verification failed.
"""

import argparse
import io
import logging
import sys

import six
from tippo import Any, Sequence, TextIO

from ._hbps import RejectedSharedEdges, hbps
from ._netgraph import NetworkGraph, NetworkSpec, Path, build_network, count_paths, enumerate_paths
from ._subroutine import BasisPathSet, subroutine_basis
from ._tiebreak import TieBreak
from ._verify import SpanChecker, verify_basis
from .constants import DEFAULT_MAX_PATHS, DEFAULT_SPAN_SAMPLE_SIZE, SHARED_EDGES_MESSAGE
from .exceptions import HasSkipEdgesError, InvalidPathError, PercorsiError, SerializationError
from .serializers import dumps, envelope, load_document, load_json_or_file, open_envelope

__all__ = ["EXIT_OK", "EXIT_ERROR", "EXIT_SHARED_EDGES", "EXIT_VERIFICATION_FAILED", "build_parser", "run", "main"]

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_SHARED_EDGES = 2
EXIT_VERIFICATION_FAILED = 3

_logger = logging.getLogger(__name__)


class _ArgumentParser(argparse.ArgumentParser):
    """Exits with :data:`EXIT_ERROR` on usage errors."""

    def error(self, message):
        # type: (str) -> Any
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, "{}: error: {}\n".format(self.prog, message))


def _positive_int(text):
    # type: (str) -> int
    try:
        value = int(text)
    except ValueError:
        value = 0
    if value < 1:
        raise argparse.ArgumentTypeError("expected a positive integer, got {!r}".format(text))
    return value


def _int(text):
    # type: (str) -> int
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected an integer, got {!r}".format(text))


def build_parser():
    # type: () -> argparse.ArgumentParser
    """
    Build the argument parser.

    :return: Parser.
    """
    common = _ArgumentParser(add_help=False)
    common.add_argument("spec", help="network spec document (JSON)")
    common.add_argument("-o", "--output", help="write the result to this file instead of standard output")
    common.add_argument(
        "--format",
        choices=("structured", "summary"),
        default="structured",
        help="structured JSON (default) or a human readable summary",
    )
    common.add_argument(
        "--max-paths",
        type=_positive_int,
        default=DEFAULT_MAX_PATHS,
        help="cap on the number of paths enumerated at once (default: %(default)s)",
    )
    common.add_argument("--verbose", action="store_true", help="log progress to standard error")

    tie_break = _ArgumentParser(add_help=False)
    group = tie_break.add_mutually_exclusive_group()
    group.add_argument("--deterministic", action="store_true", help="lowest index choices (default)")
    group.add_argument("--seed", type=_int, help="pseudo-random choices reproducible from a seed")
    group.add_argument("--override", metavar="FILE", help="explicit choices read from an override document")
    tie_break.add_argument(
        "--jobs", type=_positive_int, default=1, help="substructures processed concurrently (default: 1)"
    )

    parser = _ArgumentParser(prog="percorsi", description="Basis path sets of layered fully connected networks.")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True

    subparsers.add_parser("build", parents=[common], help="validate a spec and report graph statistics")
    subparsers.add_parser("enumerate", parents=[common], help="list every input-to-output path")
    subparsers.add_parser(
        "basis", parents=[common, tie_break], help="build a basis path set (networks without skip blocks)"
    )
    subparsers.add_parser("hbps", parents=[common, tie_break], help="build a basis path set by decomposition")

    verify = subparsers.add_parser("verify", parents=[common, tie_break], help="check a basis path set")
    verify.add_argument("--basis", metavar="FILE", help="basis document (computed with hbps when omitted)")
    verify.add_argument(
        "--sample-size",
        type=_positive_int,
        default=DEFAULT_SPAN_SAMPLE_SIZE,
        help="paths sampled for the span check above --max-paths (default: %(default)s)",
    )
    verify.add_argument("--timings", action="store_true", help="include per-check timings in the report")

    represent = subparsers.add_parser(
        "represent", parents=[common, tie_break], help="express a path over a basis path set"
    )
    represent.add_argument("--path", required=True, help="path as inline JSON or a file holding it")
    represent.add_argument("--basis", metavar="FILE", help="basis document (computed with hbps when omitted)")

    return parser


def _tie_break(args):
    # type: (argparse.Namespace) -> TieBreak
    if args.seed is not None:
        return TieBreak.seeded(args.seed)
    if args.override is not None:
        return TieBreak.deserialize(load_document(args.override))
    return TieBreak.deterministic()


def _load_graph(filename):
    # type: (str) -> NetworkGraph
    return build_network(NetworkSpec.deserialize(load_document(filename)))


def _load_basis(filename, graph):
    # type: (str, NetworkGraph) -> BasisPathSet
    basis = BasisPathSet.deserialize(load_document(filename))
    for path in basis:
        graph.validate_path(path)
    return basis


def _format_path(path):
    # type: (Path) -> str
    return " -> ".join("({},{})".format(n.layer, n.index) for n in path)


def _compute_basis(graph, args):
    # type: (NetworkGraph, argparse.Namespace) -> BasisPathSet | RejectedSharedEdges
    result = hbps(graph, _tie_break(args), jobs=args.jobs, max_paths=None)
    if isinstance(result, RejectedSharedEdges):
        return result
    return result.basis


def _build(graph, args):
    # type: (NetworkGraph, argparse.Namespace) -> tuple[int, Any, list[str]]
    document = dict(
        graph.spec.serialize(),
        last_layer=graph.last_layer,
        m=graph.edge_count,
        h=graph.hidden_count,
        path_count=count_paths(graph),
        has_skip_edges=graph.has_skip_edges,
    )
    summary = [
        "layers: {}".format(list(graph.layer_sizes)),
        "blocks: {}".format(", ".join("({},{})".format(*b.key) for b in graph.blocks)),
        "m = {}, H = {}, paths = {}".format(graph.edge_count, graph.hidden_count, document["path_count"]),
    ]
    return EXIT_OK, document, summary


def _enumerate(graph, args):
    # type: (NetworkGraph, argparse.Namespace) -> tuple[int, Any, list[str]]
    paths = enumerate_paths(graph, limit=args.max_paths)
    document = {"count": len(paths), "paths": [p.serialize() for p in paths]}
    summary = ["{} paths".format(len(paths))] + [_format_path(p) for p in paths]
    return EXIT_OK, document, summary


def _basis_summary(basis):
    # type: (BasisPathSet) -> list[str]
    lines = ["cardinality: {}".format(basis.cardinality)]
    for path, origin, substructure_id in basis.entries():
        lines.append("[{}] {:<6} {}".format(substructure_id, origin.value, _format_path(path)))
    return lines


def _basis(graph, args):
    # type: (NetworkGraph, argparse.Namespace) -> tuple[int, Any, list[str]]
    try:
        basis = subroutine_basis(graph, _tie_break(args))
    except HasSkipEdgesError:
        exc = HasSkipEdgesError("network has layer-skip blocks; use 'percorsi hbps' instead")
        six.raise_from(exc, None)
        raise exc
    return EXIT_OK, basis.serialize(), _basis_summary(basis)


def _hbps(graph, args):
    # type: (NetworkGraph, argparse.Namespace) -> tuple[int, Any, list[str]]
    result = hbps(graph, _tie_break(args), jobs=args.jobs, max_paths=args.max_paths)
    if isinstance(result, RejectedSharedEdges):
        return EXIT_SHARED_EDGES, None, []
    summary = [
        "cardinality: {} (expected {})".format(result.cardinality, result.expected_cardinality),
    ]
    for item in result.per_substructure:
        summary.append(
            "substructure {} {}: m={}, H={}, {} paths".format(
                item.substructure_id, list(item.path.layers), item.edge_count, item.hidden_count, item.basis.cardinality
            )
        )
    summary.extend(_basis_summary(result.basis)[1:])
    return EXIT_OK, result.serialize(), summary


def _verify(graph, args):
    # type: (NetworkGraph, argparse.Namespace) -> tuple[int, Any, list[str]]
    if args.basis is not None:
        basis = _load_basis(args.basis, graph)
    else:
        computed = _compute_basis(graph, args)
        if isinstance(computed, RejectedSharedEdges):
            return EXIT_SHARED_EDGES, None, []
        basis = computed
    report = verify_basis(graph, basis, max_paths=args.max_paths, sample_size=args.sample_size)
    summary = [
        "coverage:    {}".format("ok" if report.coverage_ok else "{} uncovered edges".format(len(report.uncovered))),
        "cardinality: {} (expected {})".format(report.actual_cardinality, report.expected_cardinality),
        "rank:        {} ({})".format(report.rank, "independent" if report.independent_ok else "dependent"),
        "span:        {}/{} paths ({})".format(
            report.span_checked - len(report.span_failures), report.span_checked, report.span_mode.value
        ),
        "result:      {}".format("ok" if report.ok else "FAILED"),
    ]
    code = EXIT_OK if report.ok else EXIT_VERIFICATION_FAILED
    return code, report.serialize(timings=args.timings), summary


def _represent(graph, args):
    # type: (NetworkGraph, argparse.Namespace) -> tuple[int, Any, list[str]]
    raw = load_json_or_file(args.path)
    if isinstance(raw, dict):
        raw = open_envelope(raw).get("path")
    path = Path.deserialize(raw)
    graph.validate_path(path)
    if args.basis is not None:
        basis = _load_basis(args.basis, graph)
    else:
        computed = _compute_basis(graph, args)
        if isinstance(computed, RejectedSharedEdges):
            return EXIT_SHARED_EDGES, None, []
        basis = computed

    representation = SpanChecker(basis).represent(path)
    document = {"path": path.serialize(), "in_span": representation is not None}  # type: dict[str, Any]
    if representation is None:
        return EXIT_OK, document, ["{} is not in the span".format(_format_path(path))]
    document.update(representation.serialize())
    summary = ["{} =".format(_format_path(path))]
    for term in document["terms"]:
        summary.append("  {:>6} x {}".format(str(term["coefficient"]), _format_path(Path.deserialize(term["path"]))))
    return EXIT_OK, document, summary


_COMMANDS = {
    "build": _build,
    "enumerate": _enumerate,
    "basis": _basis,
    "hbps": _hbps,
    "verify": _verify,
    "represent": _represent,
}


def _write(args, text, stdout):
    # type: (argparse.Namespace, str, TextIO) -> None
    if args.output is None:
        stdout.write(text)
        return
    try:
        with io.open(args.output, "w", encoding="utf-8") as stream:
            stream.write(text)
    except (IOError, OSError) as e:
        exc = SerializationError("cannot write {!r}; {}".format(args.output, e))
        six.raise_from(exc, None)
        raise exc


def run(argv=None, stdout=None, stderr=None):
    # type: (Sequence[str] | None, TextIO | None, TextIO | None) -> int
    """
    Run a command.

    :param argv: Arguments (defaults to the process arguments).
    :param stdout: Output stream (defaults to standard output).
    :param stderr: Diagnostics stream (defaults to standard error).
    :return: Exit code.
    """
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_ERROR

    logging.basicConfig(stream=stderr, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger("percorsi").setLevel(logging.DEBUG if args.verbose else logging.WARNING)
    _logger.debug("running %r on %r", args.command, args.spec)

    try:
        graph = _load_graph(args.spec)
        code, document, summary = _COMMANDS[args.command](graph, args)
        if code == EXIT_SHARED_EDGES:
            stderr.write(SHARED_EDGES_MESSAGE + "\n")
            return code
        if args.format == "summary":
            _write(args, "\n".join(summary) + "\n", stdout)
        else:
            _write(args, dumps(envelope(document)), stdout)
        return code
    except InvalidPathError as e:
        stderr.write("error: invalid path: {}\n".format(e))
    except PercorsiError as e:
        stderr.write("error: {}\n".format(e))
    return EXIT_ERROR


def main():
    # type: () -> int
    """
    Entry point of the `percorsi` console script.

    :return: Exit code.
    """
    return run()


if __name__ == "__main__":
    raise SystemExit(main())
