"""The `flowpart` command line.

Every command reads a graph, or a clutter, from a file or from stdin, and writes
a JSON envelope to stdout. `gen` and `minor` write a graph in the text format
instead, so that commands can be chained through pipes::

    flowpart gen flow-star 3 | flowpart flows

Exit statuses: 0 when a result was computed, whatever the verdict; 2 on usage
or parse errors; 3 when a size cap or the deadline was exceeded; 4 when a
computation contradicted a known result, in which case the counterexample is
written to stderr.
"""
from __future__ import annotations

import argparse
import logging
import sys
import time
from dataclasses import replace
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from .analysis import (
    Checks,
    Falsified,
    detect_flow_split_k5,
    detect_odd_flow_circuit,
    detect_odd_flow_star,
    fat_core_pipeline,
    planar_experiment,
    run_check,
    terminal_path_clutter,
)
from .cluster import cc_brute_force, cc_exact, cycle_lp, is_flow_partitionable
from .clutter import Clutter, blocker, flow_clutter, known_family
from .enums import ClutterFamilies, GraphFamilies
from .exactlp import METHODS, is_ideal, is_mni, is_weakly_mni, lehman_verify
from .graph import (
    SignedGraph,
    apply_operations,
    enumerate_flows,
    generate,
    is_balanced,
    is_weakly_balanced,
    parse_operations,
)
from .limits import DEFAULT_LIMITS, Limits, SizeLimitExceeded
from .report import BaseJsonDict, compact_json, input_digest, to_jsonable

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_LIMIT = 3
EXIT_FALSIFIED = 4


class CommandResult(BaseJsonDict):
    """The JSON envelope written by every command.

    It holds the command name, the digest of its input, the payload, the wall
    time and the caps that were in effect.
    """

    @property
    def command(self) -> str:  # noqa: D102
        return str(self["command"])

    @property
    def payload(self) -> Any:  # noqa: D102
        return self["payload"]


class Context:
    """What a command handler gets: the parsed arguments, the limits and the raw input."""

    def __init__(self, args: argparse.Namespace, limits: Limits):
        self.args = args
        self.limits = limits
        self.raw = ""

    def read(self) -> str:
        """Read the input file, or stdin for `-`."""
        source = getattr(self.args, "input", "-")
        if source == "-":
            self.raw = sys.stdin.read()
        else:
            self.raw = Path(source).read_text()
        return self.raw

    def graph(self) -> SignedGraph:
        """Read the input graph."""
        return SignedGraph.parse(self.read())

    def weighted_graph(self) -> Tuple[SignedGraph, Optional[Dict[int, Fraction]]]:
        """Read the input graph and its optional weights."""
        return SignedGraph.parse_weighted(self.read())

    def clutter(self) -> Clutter:
        """Return the clutter given by `--family` or `--clutter`, or else the flow clutter of the input graph."""
        if self.args.family:
            name, *params = self.args.family
            self.raw = " ".join(self.args.family)
            return known_family(name, *_ints(params))
        if self.args.clutter:
            self.raw = Path(self.args.clutter).read_text()
            return Clutter.parse(self.raw)
        return flow_clutter(self.graph(), limits=self.limits)


def _ints(values: Sequence[str]) -> List[int]:
    try:
        return [int(value) for value in values]
    except ValueError:
        raise ValueError(f"Expected integer parameters, got {list(values)}.") from None


def _cmd_flows(ctx: Context) -> Any:
    flows = enumerate_flows(ctx.graph(), limits=ctx.limits)
    return {"count": len(flows), "flows": [flow.to_dict() for flow in flows]}


def _cmd_balance(ctx: Context) -> Any:
    g = ctx.graph()
    return {"balanced": is_balanced(g), "weakly_balanced": is_weakly_balanced(g)}


def _cmd_solve(ctx: Context) -> Any:
    g, weights = ctx.weighted_graph()
    solver = cc_brute_force if ctx.args.brute_force else cc_exact
    return solver(g, weights, limits=ctx.limits)


def _cmd_lp(ctx: Context) -> Any:
    g, weights = ctx.weighted_graph()
    return cycle_lp(g, weights, limits=ctx.limits)


def _cmd_partitionable(ctx: Context) -> Any:
    result = is_flow_partitionable(ctx.graph(), limits=ctx.limits)
    return {"partitionable": result.ideal, "witness": result.witness}


def _cmd_ideal(ctx: Context) -> Any:
    return is_ideal(ctx.clutter(), method=ctx.args.method, limits=ctx.limits)


def _cmd_mni(ctx: Context) -> Any:
    return {"mni": is_mni(ctx.clutter(), limits=ctx.limits)}


def _cmd_weakly_mni(ctx: Context) -> Any:
    result = is_weakly_mni(ctx.graph(), limits=ctx.limits)
    return {"verdict": result.weakly_mni, **result.to_dict()}


def _cmd_lehman(ctx: Context) -> Any:
    return lehman_verify(ctx.clutter(), limits=ctx.limits)


def _cmd_blocker(ctx: Context) -> Any:
    return {"blocker": blocker(ctx.clutter(), limits=ctx.limits)}


def _cmd_terminal_paths(ctx: Context) -> Any:
    paths = terminal_path_clutter(ctx.graph(), limits=ctx.limits)
    return {"clutter": paths, "core": paths.core() if not paths.is_trivial else None}


def _cmd_detect(ctx: Context) -> Any:
    g = ctx.graph()
    what = ctx.args.family
    if what == "star":
        witness = detect_odd_flow_star(g, limits=ctx.limits)
    elif what == "circuit":
        witness = detect_odd_flow_circuit(g, limits=ctx.limits)
    else:
        witness = detect_flow_split_k5(g, limits=ctx.limits)
    return {"found": witness is not None, "witness": witness}


def _cmd_fatcore(ctx: Context) -> Any:
    return fat_core_pipeline(ctx.graph(), limits=ctx.limits)


def _cmd_check(ctx: Context) -> Any:
    args = ctx.args
    return run_check(args.name, seed=args.seed, count=args.count, limits=ctx.limits)


def _cmd_experiment(ctx: Context) -> Any:
    args = ctx.args
    return planar_experiment(seed=args.seed, count=args.count, limits=ctx.limits)


def _cmd_gen(ctx: Context) -> str:
    return generate(ctx.args.family, *_ints(ctx.args.params)).dumps()


def _cmd_minor(ctx: Context) -> str:
    g = ctx.graph()
    return apply_operations(g, parse_operations(ctx.args.ops)).dumps()


Handler = Callable[[Context], Any]


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser, with one subcommand per operation."""
    common = argparse.ArgumentParser(add_help=False)
    output = common.add_mutually_exclusive_group()
    output.add_argument(
        "--format",
        dest="format",
        choices=["json", "pretty"],
        default="json",
        help="output format",
    )
    output.add_argument(
        "--json",
        dest="format",
        action="store_const",
        const="json",
        default="json",
        help="same as --format json",
    )
    output.add_argument(
        "--pretty",
        dest="format",
        action="store_const",
        const="pretty",
        default="json",
        help="same as --format pretty",
    )
    common.add_argument(
        "--verbose", "-v", action="store_true", help="log search progress to stderr"
    )
    common.add_argument(
        "--deadline-ms", type=int, help="abort searches after this many milliseconds"
    )
    common.add_argument(
        "--max-ground",
        type=int,
        help="cap on ground set sizes for vertex and blocker enumeration",
    )
    common.add_argument(
        "--max-minors", type=int, help="cap on candidate minors per search"
    )

    def graph_input(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "input", nargs="?", default="-", help="graph file, or - for stdin"
        )

    def clutter_input(p: argparse.ArgumentParser) -> None:
        graph_input(p)
        source = p.add_mutually_exclusive_group()
        source.add_argument(
            "--clutter", metavar="FILE", help="read a clutter instead of a graph"
        )
        source.add_argument(
            "--family",
            nargs="+",
            metavar="NAME",
            help=f"use a known clutter, one of {', '.join(ClutterFamilies.ALL)}, "
            "followed by its parameters",
        )

    def random_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--count", type=int, default=100)

    parser = argparse.ArgumentParser(
        prog="flowpart", description=__doc__.splitlines()[0]
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: Handler, summary: str) -> argparse.ArgumentParser:
        p = subparsers.add_parser(name, parents=[common], help=summary)
        p.set_defaults(handler=handler)
        return p

    graph_input(add("flows", _cmd_flows, "enumerate the flows of a graph"))
    graph_input(add("balance", _cmd_balance, "test balance and weak balance"))
    p = add("solve", _cmd_solve, "find an optimal correlation clustering")
    graph_input(p)
    p.add_argument(
        "--brute-force", action="store_true", help="enumerate every partition"
    )
    graph_input(add("lp", _cmd_lp, "solve the cycle relaxation"))
    graph_input(
        add("partitionable", _cmd_partitionable, "decide flow-partitionability")
    )
    p = add("ideal", _cmd_ideal, "decide idealness of a clutter")
    clutter_input(p)
    p.add_argument("--method", choices=METHODS, default="cdd")
    clutter_input(
        add("mni", _cmd_mni, "decide whether a clutter is minimally non-ideal")
    )
    graph_input(
        add("weakly-mni", _cmd_weakly_mni, "decide whether a graph is weakly MNI")
    )
    clutter_input(add("lehman", _cmd_lehman, "check the structure of an MNI clutter"))
    clutter_input(add("blocker", _cmd_blocker, "compute the blocker of a clutter"))
    p = add("minor", _cmd_minor, "apply minor operations and print the minor")
    graph_input(p)
    p.add_argument(
        "--ops", required=True, help="comma separated operations, like d3,c1"
    )
    p = add("detect", _cmd_detect, "look for a forbidden strong minor")
    p.add_argument("family", choices=["star", "circuit", "split-k5"])
    graph_input(p)
    p = add("gen", _cmd_gen, "generate a member of a graph family")
    p.add_argument("family", choices=GraphFamilies.ALL)
    p.add_argument("params", nargs="*")
    graph_input(
        add("terminal-paths", _cmd_terminal_paths, "compute the terminal path clutter")
    )
    graph_input(
        add("fatcore", _cmd_fatcore, "run the fat core pipeline on a weakly MNI graph")
    )
    p = add("check", _cmd_check, "run a seeded property check")
    p.add_argument("name", choices=Checks.ALL)
    random_input(p)
    p = add("experiment", _cmd_experiment, "run a seeded experiment")
    p.add_argument("name", choices=["planar"])
    random_input(p)
    return parser


def _limits(args: argparse.Namespace) -> Limits:
    limits = DEFAULT_LIMITS
    if args.max_ground is not None:
        limits = replace(
            limits,
            max_vertex_ground=args.max_ground,
            max_blocker_ground=args.max_ground,
        )
    if args.max_minors is not None:
        limits = replace(limits, max_minors=args.max_minors)
    return limits.with_deadline_ms(args.deadline_ms)


def _pretty(payload: Any) -> str:
    if not isinstance(payload, dict):
        return compact_json(payload)
    lines = []
    for key, value in payload.items():
        text = value if isinstance(value, str) else compact_json(value)
        lines.append(f"{key}: {text}")
    return "\n".join(lines)


def run(argv: Optional[Sequence[str]] = None) -> Tuple[int, str]:
    """Run a command and return its exit status and its standard output.

    Errors are reported on stderr.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), ""
    if args.verbose:
        logging.basicConfig(
            level=logging.DEBUG,
            stream=sys.stderr,
            format="%(name)s %(levelname)s %(message)s",
        )
    ctx = Context(args, _limits(args))
    started = time.monotonic()
    try:
        payload = args.handler(ctx)
    except SizeLimitExceeded as exc:
        print(f"flowpart: {exc}", file=sys.stderr)
        return EXIT_LIMIT, ""
    except Falsified as exc:
        print(f"flowpart: {exc}", file=sys.stderr)
        print(compact_json(to_jsonable(exc.counterexample)), file=sys.stderr)
        return EXIT_FALSIFIED, ""
    except (ValueError, OSError) as exc:
        print(f"flowpart: {exc}", file=sys.stderr)
        return EXIT_USAGE, ""
    if isinstance(payload, str):
        return EXIT_OK, payload
    result = CommandResult(
        command=args.command,
        input_digest=input_digest(ctx.raw),
        payload=to_jsonable(payload),
        wall_time_ms=round((time.monotonic() - started) * 1000),
        limits=ctx.limits.to_dict(),
    )
    logger.debug("%s done in %d ms", args.command, result["wall_time_ms"])
    if args.format == "pretty":
        return EXIT_OK, _pretty(result.payload) + "\n"
    return EXIT_OK, result.to_json(sort_keys=True) + "\n"


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point of the `flowpart` console script."""
    status, output = run(argv)
    sys.stdout.write(output)
    return status
