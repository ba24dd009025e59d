"""Command-line front end.

Exit codes: 0 success / property holds; 1 property fails or a precondition
is violated (JSON diagnostics on stderr); 2 usage or parse error; 3 resource
limit exceeded.  Graph files ending in ``.col`` are read as DIMACS,
everything else as JSON; ``-`` means stdin/stdout.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import io
from .colouring import Colouring, Partition
from .errors import FormatError, PreconditionError, ResourceLimitError
from .exact import EXACT_VERTEX_LIMIT, chromatic_number_exact, max_clique
from .generators import random_3k1_free, random_chordal
from .gn import (
    GN_VERTEX_LIMIT,
    build_gn,
    colour_gn,
    frozen_colouring_gn,
    verify_counterexample,
)
from .graph import Graph, complement, substitute
from .holes import WC_VERTEX_LIMIT, is_3k1_free, is_weakly_chordal
from .matching import max_matching
from .mixing3k1 import (
    normalize_to_partition,
    rare_colour,
    recolour_path_3k1,
    rename_partition,
)
from .recolouring import (
    COLOURING_LIMIT,
    RecolouringSequence,
    apply_sequence,
    bfs_distance,
    enumerate_colourings,
    recolouring_graph,
)


@dataclass(frozen=True)
class RunConfig:
    """Resolved limits, seed, and output format for one invocation.

    Limits are validated positive at parse time; a fixed seed makes every
    generated file byte-identical across runs.
    """

    vertex_limit: int | None  # None means each operation's own default
    colouring_limit: int
    seed: int
    format: str

    @staticmethod
    def from_args(args: argparse.Namespace) -> RunConfig:
        return RunConfig(
            vertex_limit=args.limit_vertices,
            colouring_limit=args.limit_colourings or COLOURING_LIMIT,
            seed=args.seed,
            format=args.format,
        )


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _load_graph(path: str) -> Graph:
    text = _read_text(path)
    if path.endswith(".col"):
        return io.graph_from_dimacs(text)
    return io.graph_from_json(text)


def _load_colouring(path: str) -> Colouring:
    return io.colouring_from_json(_read_text(path))


def _emit_graph(g: Graph, args) -> None:
    if args.config.format == "dot":
        _write_text(args.out, io.graph_to_dot(g))
    else:
        _write_text(args.out, io.graph_to_json(g))


def _diag(kind: str, message: str, **extra) -> None:
    payload = {"error": kind, "message": message, **extra}
    print(json.dumps(payload), file=sys.stderr)


# ---------------------------------------------------------------- commands


def cmd_gen_gn(args) -> int:
    _emit_graph(build_gn(args.n, args.config.vertex_limit or GN_VERTEX_LIMIT).graph, args)
    return 0


def cmd_colour_gn(args) -> int:
    c = colour_gn(args.n, args.config.vertex_limit or GN_VERTEX_LIMIT)
    _write_text(args.out, io.colouring_to_json(c))
    return 0


def cmd_frozen_gn(args) -> int:
    c = frozen_colouring_gn(args.n, args.config.vertex_limit or GN_VERTEX_LIMIT)
    _write_text(args.out, io.colouring_to_json(c))
    return 0


def cmd_verify_counterexample(args) -> int:
    report = verify_counterexample(args.n, wc_limit=args.config.vertex_limit or WC_VERTEX_LIMIT)
    if args.config.format == "json":
        _write_text(args.out, json.dumps(dataclasses.asdict(report)) + "\n")
    else:
        lines = [
            f"G_{report.n}: {report.vertex_count} vertices, "
            f"chi = omega = {report.k}, frozen palette {report.palette}"
        ]
        lines.extend(f"  [{c.status:>7}] {c.name}: {c.detail}" for c in report.checks)
        _write_text(args.out, "\n".join(lines) + "\n")
    if not report.all_passed:
        _diag("check-failed", f"counterexample verification failed for n={args.n}")
        return 1
    return 0


def cmd_check_wc(args) -> int:
    g = _load_graph(args.graph)
    verdict = is_weakly_chordal(g, args.config.vertex_limit or WC_VERTEX_LIMIT)
    payload = {
        "weakly_chordal": verdict.is_weakly_chordal,
        "witness": list(verdict.witness.cycle) if verdict.witness else None,
        "witness_in_complement": verdict.witness_in_complement,
    }
    _write_text(args.out, json.dumps(payload) + "\n")
    if not verdict.is_weakly_chordal:
        _diag("check-failed", "graph is not weakly chordal", **payload)
        return 1
    return 0


def cmd_is_3k1_free(args) -> int:
    g = _load_graph(args.graph)
    ok, triple = is_3k1_free(g)
    payload = {"is_3k1_free": ok, "witness": list(triple) if triple else None}
    _write_text(args.out, json.dumps(payload) + "\n")
    if not ok:
        _diag("check-failed", "graph has a stable triple", **payload)
        return 1
    return 0


def cmd_chromatic(args) -> int:
    g = _load_graph(args.graph)
    k, witness = chromatic_number_exact(g, args.config.vertex_limit or EXACT_VERTEX_LIMIT)
    payload = {
        "chromatic_number": k,
        "colouring": {"k": witness.k, "colours": list(witness.colours)},
    }
    _write_text(args.out, json.dumps(payload) + "\n")
    return 0


def cmd_clique(args) -> int:
    g = _load_graph(args.graph)
    clique = max_clique(g, args.config.vertex_limit or EXACT_VERTEX_LIMIT)
    _write_text(args.out, json.dumps({"size": len(clique), "vertices": list(clique)}) + "\n")
    return 0


def cmd_matching(args) -> int:
    g = _load_graph(args.graph)
    m = max_matching(g)
    _write_text(args.out, json.dumps({"size": len(m), "pairs": [list(p) for p in m.pairs]}) + "\n")
    return 0


def cmd_enumerate(args) -> int:
    g = _load_graph(args.graph)
    limit = args.config.colouring_limit
    print(f"enumerating {args.k}-colourings (limit {limit})", file=sys.stderr)
    found = enumerate_colourings(g, args.k, limit)
    payload = {"k": args.k, "count": len(found)}
    if args.list:
        payload["colourings"] = [list(c.colours) for c in found]
    _write_text(args.out, json.dumps(payload) + "\n")
    return 0


def cmd_mixing(args) -> int:
    g = _load_graph(args.graph)
    print(f"exploring the {args.k}-recolouring graph", file=sys.stderr)
    summary = recolouring_graph(g, args.k, args.config.colouring_limit)
    _write_text(args.out, json.dumps(dataclasses.asdict(summary)) + "\n")
    if not summary.is_mixing:
        _diag(
            "check-failed",
            "not mixing",
            component_count=summary.component_count,
            frozen_count=summary.frozen_count,
        )
        return 1
    return 0


def cmd_distance(args) -> int:
    g = _load_graph(args.graph)
    a = _load_colouring(args.a)
    b = _load_colouring(args.b)
    d = bfs_distance(g, args.k, a, b, args.config.colouring_limit)
    _write_text(args.out, json.dumps({"distance": d}) + "\n")
    if d is None:
        _diag("check-failed", "colourings lie in different components")
        return 1
    return 0


def cmd_verify_sequence(args) -> int:
    g = _load_graph(args.graph)
    seq = io.sequence_from_json(_read_text(args.sequence))
    final, counts = apply_sequence(g, seq.start, seq.steps)
    payload = {
        "valid": True,
        "length": len(seq.steps),
        "max_recolourings_per_vertex": max(counts, default=0),
        "final": {"k": final.k, "colours": list(final.colours)},
    }
    _write_text(args.out, json.dumps(payload) + "\n")
    return 0


def cmd_recolour_3k1(args) -> int:
    g = _load_graph(args.graph)
    start = _load_colouring(args.start)
    goal = _load_colouring(args.goal)
    seq = recolour_path_3k1(g, start, goal)
    _write_text(args.out, io.sequence_to_json(seq))
    return 0


def cmd_rename(args) -> int:
    g = _load_graph(args.graph)
    start = _load_colouring(args.start)
    goal = _load_colouring(args.goal)
    steps = rename_partition(g, start, goal)
    seq = RecolouringSequence(start, tuple(steps))
    _write_text(args.out, io.sequence_to_json(seq))
    return 0


def cmd_normalize(args) -> int:
    g = _load_graph(args.graph)
    start = _load_colouring(args.start)
    target = Partition.of(_load_colouring(args.target))
    trace = normalize_to_partition(g, start, target)
    payload = {
        "steps": [{"v": s.vertex, "to": s.new_colour} for s in trace.steps],
        "per_vertex_counts": list(trace.per_vertex_counts),
    }
    _write_text(args.out, json.dumps(payload) + "\n")
    return 0


def cmd_rare_colour(args) -> int:
    g = _load_graph(args.graph)
    c = _load_colouring(args.colouring)
    verdict = rare_colour(g, c)
    _write_text(args.out, json.dumps(dataclasses.asdict(verdict)) + "\n")
    return 0


def cmd_random_3k1(args) -> int:
    g = random_3k1_free(args.n, args.bias, args.config.seed)
    print(f"seed: {args.config.seed}", file=sys.stderr)
    _emit_graph(g, args)
    return 0


def cmd_random_chordal(args) -> int:
    g = random_chordal(args.n, args.density, args.config.seed)
    print(f"seed: {args.config.seed}", file=sys.stderr)
    _emit_graph(g, args)
    return 0


def cmd_substitute(args) -> int:
    g = _load_graph(args.graph)
    h = _load_graph(args.insert)
    _emit_graph(substitute(g, args.vertex, h), args)
    return 0


def cmd_complement(args) -> int:
    _emit_graph(complement(_load_graph(args.graph)), args)
    return 0


def cmd_export_dot(args) -> int:
    _write_text(args.out, io.graph_to_dot(_load_graph(args.graph)))
    return 0


# ----------------------------------------------------------------- parser


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("limit must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="recolour",
        description="Graph recolouring reconfiguration toolkit",
    )
    parser.add_argument("--limit-vertices", type=_positive_int, default=None, metavar="N",
                        help="override the per-operation vertex cap")
    parser.add_argument("--limit-colourings", type=_positive_int, default=None, metavar="N",
                        help="override the colouring-count cap")
    parser.add_argument("--seed", type=int, default=0, help="PRNG seed (64-bit)")
    parser.add_argument("--format", choices=("json", "dot", "text"), default="json",
                        help="output format where applicable")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--out", default=None, help="output file (default stdout)")
        p.set_defaults(func=func)
        return p

    p = add("gen-gn", cmd_gen_gn, "emit the level-n counterexample graph")
    p.add_argument("--n", type=int, required=True)
    p = add("colour-gn", cmd_colour_gn, "emit its canonical (2n+1)-colouring")
    p.add_argument("--n", type=int, required=True)
    p = add("frozen-gn", cmd_frozen_gn, "emit its frozen (3n+1)-colouring")
    p.add_argument("--n", type=int, required=True)
    p = add("verify-counterexample", cmd_verify_counterexample,
            "run all counterexample checks for level n")
    p.add_argument("--n", type=int, required=True)

    p = add("check-wc", cmd_check_wc, "weakly-chordal verdict with certificate")
    p.add_argument("graph")
    p = add("is-3k1-free", cmd_is_3k1_free, "stable-triple scan")
    p.add_argument("graph")
    p = add("chromatic", cmd_chromatic, "exact chromatic number with witness")
    p.add_argument("graph")
    p = add("clique", cmd_clique, "exact maximum clique")
    p.add_argument("graph")
    p = add("matching", cmd_matching, "maximum matching")
    p.add_argument("graph")

    p = add("enumerate", cmd_enumerate, "enumerate proper k-colourings")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--list", action="store_true", help="include the colourings")
    p.add_argument("graph")
    p = add("mixing", cmd_mixing, "explore the k-recolouring graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("graph")
    p = add("distance", cmd_distance, "BFS distance between two colourings")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("graph")
    p.add_argument("a")
    p.add_argument("b")
    p = add("verify-sequence", cmd_verify_sequence, "validate a recolouring walk")
    p.add_argument("graph")
    p.add_argument("sequence")

    p = add("recolour-3k1", cmd_recolour_3k1,
            "build a length <= 4|V| walk between two colourings")
    p.add_argument("--graph", required=True)
    p.add_argument("--from", dest="start", required=True, metavar="COLOURING")
    p.add_argument("--to", dest="goal", required=True, metavar="COLOURING")
    p = add("rename", cmd_rename, "rename colour classes (same partition)")
    p.add_argument("--graph", required=True)
    p.add_argument("--from", dest="start", required=True, metavar="COLOURING")
    p.add_argument("--to", dest="goal", required=True, metavar="COLOURING")
    p = add("normalize", cmd_normalize, "recolour onto a target partition")
    p.add_argument("--graph", required=True)
    p.add_argument("--from", dest="start", required=True, metavar="COLOURING")
    p.add_argument("--target", required=True,
                   help="colouring file whose classes give the target partition")
    p = add("rare-colour", cmd_rare_colour, "find a colour used at most once")
    p.add_argument("--graph", required=True)
    p.add_argument("--colouring", required=True)

    p = add("random-3k1", cmd_random_3k1, "seeded random 3K1-free graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bias", type=float, default=0.5)
    p = add("random-chordal", cmd_random_chordal, "seeded random chordal graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--density", type=float, default=0.5)

    p = add("substitute", cmd_substitute, "substitute a graph for a vertex")
    p.add_argument("--graph", required=True)
    p.add_argument("--vertex", type=int, required=True)
    p.add_argument("--insert", required=True, metavar="GRAPH")
    p = add("complement", cmd_complement, "complement a graph")
    p.add_argument("graph")
    p = add("export-dot", cmd_export_dot, "write a graph as DOT")
    p.add_argument("graph")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.config = RunConfig.from_args(args)
    try:
        return args.func(args)
    except FormatError as exc:
        _diag("format-error", str(exc))
        return 2
    except ResourceLimitError as exc:
        _diag("resource-limit", str(exc), **exc.details)
        return 3
    except PreconditionError as exc:
        _diag("precondition-violated", str(exc))
        return 1


if __name__ == "__main__":
    sys.exit(main())
