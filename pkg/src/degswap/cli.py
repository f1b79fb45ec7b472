"""Command-line surface.

Subcommands: realize, sample, recognize, enumerate, generate, stats.  JSON
goes to stdout by default; exit code 0 on success, 2 on invalid input, 3 on
a resource limit.  Seeds default to a fixed constant so published runs
reproduce; pass ``--seed entropy`` to opt into randomness.
"""

from __future__ import annotations

import argparse
import json
import secrets
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

from . import arcswap, statespace
from .chain import DEFAULT_SEED, MODE_FULL, MODE_PLAIN, MODE_UNDIRECTED, ChainConfig, derive_seed, run_chain
from .core import (
    DegreeSequence,
    DiDegreeSequence,
    Digraph,
    Graph,
    canonical_key,
    format_degree_sequence,
    format_edgelist,
    parse_degree_sequence,
    parse_edgelist,
)
from .errors import InvalidInputError, RealizationError, ResourceLimitError
from .generators import FAMILIES, FAMILY_EXAMPLE1, BlockedInstanceSpec, generate_blocked
from .realize import realize_directed, realize_undirected
from .stats import ensemble_stats

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_RESOURCE = 3


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _parse_seed(text: str) -> int:
    if text == "entropy":
        return secrets.randbits(63)
    try:
        return int(text)
    except ValueError as exc:
        raise InvalidInputError(f"bad seed {text!r}") from exc


def _load_sequence(args) -> DegreeSequence | DiDegreeSequence:
    if args.degrees is not None:
        return parse_degree_sequence(args.degrees)
    if args.degrees_file is not None:
        return parse_degree_sequence(_read_text(args.degrees_file))
    raise InvalidInputError("need --degrees or --degrees-file")


def _load_graph_or_sequence(args):
    """(graph, sequence) with the graph realized on demand."""
    if getattr(args, "edgelist", None) is not None:
        g = parse_edgelist(_read_text(args.edgelist))
        return g, g.degree_sequence()
    s = _load_sequence(args)
    g = realize_directed(s) if isinstance(s, DiDegreeSequence) else realize_undirected(s)
    return g, s


def _emit(payload: str) -> None:
    sys.stdout.write(payload if payload.endswith("\n") else payload + "\n")


def _sample_one(job):
    """One independent chain for the sample fan-out (top level: picklable)."""
    kind, n, pairs, mode, tau, seed = job
    g0 = Graph(n, pairs) if kind == "undirected" else Digraph(n, pairs)
    result = run_chain(g0, ChainConfig(tau=tau, mode=mode, seed=seed))
    g = result.graph
    out_pairs = tuple(g.edges() if isinstance(g, Graph) else g.arcs())
    return canonical_key(g).hex(), result.moves, result.loops, out_pairs


def _graph_json(g: Graph | Digraph) -> dict:
    pairs = g.edges() if isinstance(g, Graph) else g.arcs()
    return {
        "kind": g.kind,
        "n": g.n,
        "edges": sorted(pairs),
        "canonical_key": canonical_key(g).hex(),
    }


# ---------------------------------------------------------------------------
# subcommands


def _cmd_realize(args) -> int:
    s = _load_sequence(args)
    g = realize_directed(s) if isinstance(s, DiDegreeSequence) else realize_undirected(s)
    if args.format == "edgelist":
        _emit(format_edgelist(g))
    else:
        _emit(json.dumps(_graph_json(g), indent=2))
    return EXIT_OK


def _mode_for(args, s) -> str:
    if args.mode is not None:
        return args.mode
    return MODE_UNDIRECTED if isinstance(s, DegreeSequence) else MODE_FULL


def _cmd_sample(args) -> int:
    g0, s = _load_graph_or_sequence(args)
    mode = _mode_for(args, s)
    seed = _parse_seed(args.seed)
    if args.runs <= 1:
        cfg = ChainConfig(tau=args.tau, mode=mode, seed=seed)
        result = run_chain(g0, cfg)
        if args.format == "edgelist":
            _emit(format_edgelist(result.graph))
            return EXIT_OK
        _emit(
            json.dumps(
                {
                    "mode": mode,
                    "tau": args.tau,
                    "seed": seed,
                    "moves": result.moves,
                    "loops": result.loops,
                    "final": _graph_json(result.graph),
                },
                indent=2,
            )
        )
        return EXIT_OK

    pairs = tuple(g0.edges() if isinstance(g0, Graph) else g0.arcs())
    jobs = [
        (g0.kind, g0.n, pairs, mode, args.tau, derive_seed(seed, i))
        for i in range(args.runs)
    ]
    if args.workers > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            outcomes = list(pool.map(_sample_one, jobs, chunksize=16))
    else:
        outcomes = [_sample_one(job) for job in jobs]
    visits: dict[str, int] = {}
    moves = loops = 0
    for key, mv, lp, _ in outcomes:
        visits[key] = visits.get(key, 0) + 1
        moves += mv
        loops += lp
    final_pairs = outcomes[-1][3]
    final = (
        Graph(g0.n, final_pairs)
        if g0.kind == "undirected"
        else Digraph(g0.n, final_pairs)
    )
    _emit(
        json.dumps(
            {
                "mode": mode,
                "tau": args.tau,
                "seed": seed,
                "runs": args.runs,
                "moves": moves,
                "loops": loops,
                "visit_frequency": {
                    k: v / args.runs for k, v in sorted(visits.items())
                },
                "final": _graph_json(final),
            },
            indent=2,
        )
    )
    return EXIT_OK


def _cmd_recognize(args) -> int:
    if args.edgelist is not None:
        g = parse_edgelist(_read_text(args.edgelist))
        if not isinstance(g, Digraph):
            raise InvalidInputError("recognize needs a directed input")
        s = g.degree_sequence()
    else:
        s = _load_sequence(args)
        if not isinstance(s, DiDegreeSequence):
            raise InvalidInputError("recognize needs a directed degree sequence")
    report = arcswap.recognize(s)
    _emit(
        json.dumps(
            {
                "is_arc_swap": report.is_arc_swap,
                "cycle_sets": [list(cs.vertices) for cs in report.cycle_sets],
                "component_count_log2": len(report.cycle_sets),
                "reduced_sequence": (
                    None
                    if report.reduced_sequence is None
                    else format_degree_sequence(report.reduced_sequence)
                ),
            },
            indent=2,
        )
    )
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    s = _load_sequence(args)
    sg = statespace.build_state_graph(s, args.kind, max_n=args.max_n)
    props = statespace.check_properties(sg)
    if sg.kind == statespace.KIND_PHIBAR:
        arc_swap = arcswap.recognize(s).is_arc_swap
    else:
        arc_swap = None
    bounds = statespace.check_diameter_bounds(sg, arc_swap=arc_swap)
    if args.format == "dot":
        _emit(statespace.to_dot(sg))
        return EXIT_OK
    _emit(
        json.dumps(
            {
                "kind": sg.kind,
                "node_count": sg.node_count,
                "degree": props.degree,
                "symmetric": props.symmetric,
                "regular": props.regular,
                "non_bipartite": props.non_bipartite,
                "components": props.component_sizes,
                "diameter": max(props.diameters) if props.diameters else 0,
                "bounds_ok": bounds.ok,
                "bounds_applicable": bounds.applicable,
            },
            indent=2,
        )
    )
    return EXIT_OK


def _cmd_generate(args) -> int:
    spec = BlockedInstanceSpec(
        blocks=args.blocks,
        family=args.family,
        attachment_size=args.attachment_size,
        independent_size=args.independent_size,
    )
    g = generate_blocked(spec)
    if args.format == "json":
        payload = _graph_json(g)
        payload["degree_sequence"] = format_degree_sequence(g.degree_sequence())
        _emit(json.dumps(payload, indent=2))
    else:
        _emit(format_edgelist(g))
    return EXIT_OK


def _cmd_stats(args) -> int:
    g0, s = _load_graph_or_sequence(args)
    mode = _mode_for(args, s)
    seed = _parse_seed(args.seed)
    cfg = ChainConfig(tau=args.tau, mode=mode, seed=seed)
    report = ensemble_stats(s, cfg, args.runs, workers=args.workers)
    payload = {
        "mode": mode,
        "tau": args.tau,
        "runs": report.runs,
        "seed": seed,
        "arc_frequency": {f"{u} {v}": f for (u, v), f in report.arc_frequency.items()},
        "visit_frequency": {
            k: v / report.runs for k, v in sorted(report.final_keys.items())
        },
    }
    if report.motif_counts is not None:
        payload["motif_counts"] = {
            str(k): v for k, v in sorted(report.motif_counts.items())
        }
    if report.corrected_frequency is not None:
        payload["corrected_frequency"] = {
            f"{u} {v}": f for (u, v), f in report.corrected_frequency.items()
        }
    _emit(json.dumps(payload, indent=2))
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _add_sequence_args(p: argparse.ArgumentParser, with_edgelist: bool = False):
    p.add_argument("--degrees", help="degree sequence, e.g. '2 2 2' or '1/1 1/1 1/1'")
    p.add_argument("--degrees-file", help="file with a degree sequence ('-' = stdin)")
    if with_edgelist:
        p.add_argument("--edgelist", help="edge-list file ('-' = stdin)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degswap",
        description="Sample graphs/digraphs with prescribed degrees by switching chains",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("realize", help="construct one realization of a degree sequence")
    _add_sequence_args(p)
    p.add_argument("--format", choices=["edgelist", "json"], default="json")
    p.set_defaults(func=_cmd_realize)

    p = sub.add_parser("sample", help="run a switching chain")
    _add_sequence_args(p, with_edgelist=True)
    p.add_argument("--mode", choices=[MODE_UNDIRECTED, MODE_FULL, MODE_PLAIN])
    p.add_argument("--tau", type=int, default=1000, help="step count")
    p.add_argument("--seed", default=str(DEFAULT_SEED), help="integer or 'entropy'")
    p.add_argument("--runs", type=int, default=1, help="independent chains")
    p.add_argument("--workers", type=int, default=1, help="worker pool for --runs")
    p.add_argument(
        "--emit",
        "--format",
        dest="format",
        choices=["edgelist", "json"],
        default="json",
    )
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("recognize", help="detect induced cycle sets / arc-swap status")
    _add_sequence_args(p, with_edgelist=True)
    p.set_defaults(func=_cmd_recognize)

    p = sub.add_parser("enumerate", help="build and check the explicit state graph")
    _add_sequence_args(p)
    p.add_argument(
        "--kind",
        choices=[statespace.KIND_PSI, statespace.KIND_PHI, statespace.KIND_PHIBAR],
        required=True,
    )
    p.add_argument("--max-n", type=int, default=None, help="enumeration bound override")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("generate", help="emit a blocked instance")
    p.add_argument("--family", choices=list(FAMILIES), default=FAMILY_EXAMPLE1)
    p.add_argument("--blocks", type=int, default=1)
    p.add_argument("--attachment-size", type=int, default=3)
    p.add_argument("--independent-size", type=int, default=2)
    p.add_argument("--format", choices=["edgelist", "json"], default="json")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("stats", help="ensemble statistics over many chains")
    _add_sequence_args(p, with_edgelist=True)
    p.add_argument("--mode", choices=[MODE_UNDIRECTED, MODE_FULL, MODE_PLAIN])
    p.add_argument("--tau", type=int, default=1000)
    p.add_argument("--seed", default=str(DEFAULT_SEED))
    p.add_argument("--runs", type=int, default=100)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_stats)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidInputError, RealizationError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_INVALID
    except ResourceLimitError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_RESOURCE
    except OSError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
