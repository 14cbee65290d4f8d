"""Argument parsing and command dispatch.

Exit codes: 0 on success, 1 when a command fails on its input (a move that does not apply,
an exhausted search, an invalid tiling), 2 for unreadable input and usage errors.
"""

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from platcalc.braid import BraidError
from platcalc.cli.corpus import format_corpus_table, run_corpus
from platcalc.cli.errors import CliError, InputFileError
from platcalc.cli.render import render_ascii, render_svg
from platcalc.foliation import (
    FoliationError,
    TilingParseError,
    census,
    census_identity_holds,
    complexity,
    euler_characteristic,
    find_reducible_vertex,
    read_tiling,
    structural_violations,
    validate,
)
from platcalc.invariants import (
    DEFAULT_CROSSING_BUDGET,
    CrossingBudgetExceededError,
    InvariantError,
    oracle_value,
)
from platcalc.plat import (
    MoveParameterError,
    MoveSyntaxError,
    PlatError,
    PlatParseError,
    apply_move,
    component_count,
    format_plat,
    parse_move,
    read_plat,
)
from platcalc.simplifier import (
    DEFAULT_BEAM_WIDTH,
    DEFAULT_NODE_BUDGET,
    Outcome,
    SearchConfig,
    SimplifierError,
    TraceParseError,
    audit_trace,
    scramble,
    simplify,
    write_trace,
)

logger = logging.getLogger(__name__)

EXIT_OK: int = 0
EXIT_FAILURE: int = 1
EXIT_USAGE: int = 2

_USAGE_ERRORS = (
    CliError,
    PlatParseError,
    MoveSyntaxError,
    MoveParameterError,
    TilingParseError,
    TraceParseError,
)
_DOMAIN_ERRORS = (PlatError, BraidError, InvariantError, FoliationError, SimplifierError)

MOVE_HELP = """\
move DSL:
  flip(split=<i>,k=<k>,dir=in|out)
  microflip(start=<s>,k=<k>,gap=<j>,split=<i>,dir=in|out)
  dc(side=top|bottom,gen=<g>,inv=0|1)
  pocket(script=<side>:<gen>:<inv>.<side>:<gen>:<inv>...)
  stab | destab | isotopy
  rw(pos=<i>,rel=comm|braid,dir=fwd|rev)
"""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="platcalc",
        description="Moves, invariants and simplification of plat presentations of links.",
        epilog=MOVE_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG logging")
    commands = parser.add_subparsers(dest="command", required=True)

    info = commands.add_parser("info", help="strands, crossings, components and oracle value of a plat")
    info.add_argument("plat", type=Path)
    info.add_argument("--budget", type=_non_negative, default=DEFAULT_CROSSING_BUDGET, help="bracket crossing budget")
    info.set_defaults(handler=_info)

    apply = commands.add_parser(
        "apply", help="apply one move", epilog=MOVE_HELP, formatter_class=argparse.RawDescriptionHelpFormatter
    )
    apply.add_argument("plat", type=Path)
    apply.add_argument("--move", required=True, help="move in DSL syntax")
    apply.set_defaults(handler=_apply)

    simplify_cmd = commands.add_parser("simplify", help="search for the standard plat without raising the bridge index")
    simplify_cmd.add_argument("plat", type=Path)
    _add_search_arguments(simplify_cmd)
    simplify_cmd.add_argument("--seed", type=_non_negative, default=0)
    simplify_cmd.add_argument("--trace", type=Path, help="write the trace to this file")
    simplify_cmd.set_defaults(handler=_simplify)

    scramble_cmd = commands.add_parser("scramble", help="apply seeded random link-preserving moves")
    scramble_cmd.add_argument("plat", type=Path)
    scramble_cmd.add_argument("--seed", type=_non_negative, default=0)
    scramble_cmd.add_argument("--budget", type=_non_negative, default=8, help="number of moves")
    scramble_cmd.set_defaults(handler=_scramble)

    tiling = commands.add_parser("tiling-check", help="validate a tiling and report its counting lemmas")
    tiling.add_argument("tiling", type=Path)
    tiling.set_defaults(handler=_tiling_check)

    render = commands.add_parser("render", help="draw a plat as text or SVG")
    render.add_argument("plat", type=Path)
    render.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    render.add_argument("--out", type=Path, help="output file, stdout when omitted")
    render.set_defaults(handler=_render)

    corpus = commands.add_parser("corpus", help="evaluate and simplify every *.plat record of a directory")
    corpus.add_argument("directory", type=Path)
    _add_search_arguments(corpus)
    corpus.add_argument("--jobs", type=_positive, default=1, help="worker processes")
    corpus.set_defaults(handler=_corpus)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Run one command and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    level = logging.WARNING if args.verbose == 0 else (logging.INFO if args.verbose == 1 else logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")

    try:
        return args.handler(args)
    except OSError as exc:
        error = InputFileError(path=str(exc.filename), reason=exc.strerror or type(exc).__name__)
        print(f"error: {error}", file=sys.stderr)
        return EXIT_USAGE
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


def main() -> None:
    sys.exit(run())


def _info(args: argparse.Namespace) -> int:
    p = read_plat(args.plat)
    print(f"strands={p.strand_count}")
    print(f"bridges={p.bridge_index}")
    print(f"crossings={len(p.word)}")
    print(f"components={component_count(p)}")
    try:
        print(f"oracle={oracle_value(p, crossing_budget=args.budget).to_text()}")
    except CrossingBudgetExceededError as exc:
        print(f"oracle=skipped ({exc.crossings} crossings, budget {exc.budget})")
    return EXIT_OK


def _apply(args: argparse.Namespace) -> int:
    p = read_plat(args.plat)
    spec = parse_move(args.move)
    sys.stdout.write(format_plat(apply_move(p, spec)))
    return EXIT_OK


def _simplify(args: argparse.Namespace) -> int:
    p = read_plat(args.plat)
    config = SearchConfig(
        beam_width=args.beam,
        node_budget=args.budget,
        crossing_cap=args.crossing_cap,
        seed=args.seed,
        flip_slack=args.flip_slack,
    )
    trace = simplify(p, config)
    if args.trace is not None:
        write_trace(args.trace, trace)
    violations = audit_trace(trace)
    final = trace.final
    print(f"outcome={trace.outcome.value}")
    print(f"steps={len(trace.moves)}")
    print(f"crossings={len(p.word)}->{len(final.word)}")
    print(f"bridges={p.bridge_index}->{final.bridge_index}")
    print(f"certified={'no' if violations else 'yes'}")
    for violation in violations:
        print(f"violation step={violation.step} rule={violation.rule}: {violation.detail}")
    if trace.outcome is not Outcome.REACHED_STANDARD or violations:
        return EXIT_FAILURE
    return EXIT_OK


def _scramble(args: argparse.Namespace) -> int:
    p = read_plat(args.plat)
    sys.stdout.write(format_plat(scramble(p, args.seed, args.budget)))
    return EXIT_OK


def _tiling_check(args: argparse.Namespace) -> int:
    tiling = read_tiling(args.tiling)
    violations = validate(tiling)
    print(f"valid={'no' if violations else 'yes'}")
    for violation in violations:
        print(f"violation {violation.rule} {violation.subject}: {violation.detail}")
    if not structural_violations(tiling):
        print(f"euler={euler_characteristic(tiling)}")
    if violations:
        return EXIT_FAILURE

    counts = census(tiling)
    print("census=" + " ".join(f"{kind.value}:{count}" for kind, count in counts.items()))
    print(f"identity={'holds' if census_identity_holds(counts) else 'fails'}")
    c = complexity(tiling)
    print(f"complexity=({c.t440}, {c.t001})")
    vertex = find_reducible_vertex(tiling)
    if vertex is None:
        print("reducible=none")
    else:
        print(f"reducible={vertex.tile_id} condition={vertex.condition.value}")
    return EXIT_OK


def _render(args: argparse.Namespace) -> int:
    p = read_plat(args.plat)
    text = render_svg(p) if args.format == "svg" else render_ascii(p)
    if args.out is None:
        sys.stdout.write(text)
    else:
        args.out.write_text(text, encoding="utf-8")
        logger.info("Wrote %s drawing to %s", args.format, args.out)
    return EXIT_OK


def _corpus(args: argparse.Namespace) -> int:
    config = SearchConfig(beam_width=args.beam, node_budget=args.budget, crossing_cap=args.crossing_cap)
    rows = run_corpus(args.directory, config, jobs=args.jobs)
    sys.stdout.write(format_corpus_table(rows))
    return EXIT_OK


def _add_search_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--beam", type=_positive, default=DEFAULT_BEAM_WIDTH, help="beam width")
    parser.add_argument("--budget", type=_positive, default=DEFAULT_NODE_BUDGET, help="node expansion budget")
    parser.add_argument("--crossing-cap", type=_non_negative, default=None, help="prune states above this")
    parser.add_argument("--flip-slack", type=_non_negative, default=0, help="extra crossings a flip may add")


def _positive(text: str) -> int:
    value = _integer(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _non_negative(text: str) -> int:
    value = _integer(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    return value


def _integer(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
