"""Command-line interface: batch experiments, scaling series, traced runs.

Subcommands:
  bench run      aggregate set sizes and move counts over seeded trials
  bench scaling  per-order mean moves for growth plots
  bench verify   one traced run on an edge-list file, with verdicts

Any verification failure exits nonzero.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bench import (
    ExperimentSpec,
    VerificationError,
    emit,
    emit_scaling_csv,
    emit_scaling_series,
    run_experiment,
)
from .engine import derive_seed, extract_sets, random_initial, run
from .generators import GRAPH_CLASSES
from .graph import read_edge_list
from .rules import ALGORITHM_ORDER, get_algorithm
from .verify import check_move_bound, is_maximal_independent, verify_two_layer


def _algo_list(text: str) -> tuple[str, ...]:
    names = tuple(part.strip() for part in text.split(",") if part.strip())
    for name in names:
        get_algorithm(name)  # early validation with a helpful message
    if not names:
        raise argparse.ArgumentTypeError("expected at least one algorithm")
    return names


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=0, help="base seed (default 0)")
    parser.add_argument("--p", type=float, default=None, help="edge probability (bipartite/connected)")
    parser.add_argument("--r", type=float, default=None, help="disk radius (unitdisk)")
    parser.add_argument("--move-cap", type=int, default=None, help="move cap (default 10*maxdeg*n)")
    parser.add_argument(
        "--no-wait-init",
        action="store_true",
        help="draw initial states without the wait state",
    )
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--out", type=Path, default=None, help="output path (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bench",
        description="Self-stabilizing maximal-independent-set simulation benchmarks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="batch experiment over one graph class")
    p_run.add_argument(
        "--algo", type=_algo_list, required=True,
        help=f"comma-separated algorithms from: {', '.join(ALGORITHM_ORDER)}",
    )
    p_run.add_argument("--class", dest="graph_class", choices=GRAPH_CLASSES, required=True)
    p_run.add_argument("--n", type=_int_list, required=True, help="order(s), comma-separated")
    p_run.add_argument("--trials", type=int, default=200)
    _add_common(p_run)

    p_scaling = sub.add_parser("scaling", help="mean moves per order, for plotting")
    p_scaling.add_argument("--algo", type=_algo_list, required=True)
    p_scaling.add_argument("--class", dest="graph_class", choices=GRAPH_CLASSES, default="tree")
    p_scaling.add_argument(
        "--orders", type=_int_list, default=(250, 500, 1000, 2000),
        help="ascending orders, comma-separated (default 250,500,1000,2000)",
    )
    p_scaling.add_argument("--trials", type=int, default=100)
    _add_common(p_scaling)

    p_verify = sub.add_parser("verify", help="single traced run with verdicts")
    p_verify.add_argument("--graph", type=Path, required=True, help="edge-list file")
    p_verify.add_argument("--algo", type=str, required=True)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--move-cap", type=int, default=None)
    p_verify.add_argument("--no-wait-init", action="store_true")
    p_verify.add_argument("--out", type=Path, default=None)
    return parser


def _write(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")


def _cmd_run(args: argparse.Namespace) -> int:
    spec = ExperimentSpec(
        algorithms=args.algo,
        graph_class=args.graph_class,
        orders=args.n,
        trials=args.trials,
        seed=args.seed,
        p=args.p,
        r=args.r,
        move_cap=args.move_cap,
        include_wait=not args.no_wait_init,
    )
    try:
        table = run_experiment(spec)
    except VerificationError as exc:
        sys.stderr.write(f"verification failure: {exc}\n")
        sys.stderr.write(exc.trace.to_json(indent=2) + "\n")
        return 1
    _write(emit(table, args.format), args.out)
    return 0


def _cmd_scaling(args: argparse.Namespace) -> int:
    try:
        points = emit_scaling_series(
            args.algo,
            args.graph_class,
            args.orders,
            args.trials,
            args.seed,
            p=args.p,
            r=args.r,
            move_cap=args.move_cap,
            include_wait=not args.no_wait_init,
        )
    except VerificationError as exc:
        sys.stderr.write(f"verification failure: {exc}\n")
        sys.stderr.write(exc.trace.to_json(indent=2) + "\n")
        return 1
    if args.format == "json":
        payload = [
            {
                "algorithm": pt.algorithm,
                "class": pt.graph_class,
                "n": pt.n,
                "mean_moves": pt.mean_moves,
                "pct_diff_moves": pt.pct_diff_moves,
            }
            for pt in points
        ]
        _write(json.dumps({"points": payload}, sort_keys=True) + "\n", args.out)
    else:
        _write(emit_scaling_csv(points), args.out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    g = read_edge_list(args.graph.read_text(encoding="utf-8"))
    algo = get_algorithm(args.algo)
    init = random_initial(
        algo, g, derive_seed(args.seed, "init"), include_wait=not args.no_wait_init
    )
    trace = run(algo, g, init, seed=derive_seed(args.seed, "scheduler"), move_cap=args.move_cap)
    verdicts: dict[str, object] = {
        "stabilized": trace.stabilized,
        "bound": check_move_bound(algo, g.n, g.max_degree, trace.total_moves).value,
    }
    sets: dict[str, list[int]] = {}
    ok = trace.stabilized
    if trace.stabilized:
        first, second = extract_sets(trace)
        if second is not None:
            verdict = verify_two_layer(g, first, second)
            sets["R"] = sorted(first)
            sets["B"] = sorted(second)
        else:
            verdict = is_maximal_independent(g, first)
            sets["X"] = sorted(first)
        verdicts["sets"] = verdict.to_dict()
        ok = verdict.ok
    payload = {
        "trace": json.loads(trace.to_json()),
        "verdicts": verdicts,
        "sets": sets,
    }
    _write(json.dumps(payload, sort_keys=True, indent=2) + "\n", args.out)
    return 0 if ok else 1


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "run":
        return _cmd_run(args)
    if args.command == "scaling":
        return _cmd_scaling(args)
    return _cmd_verify(args)


if __name__ == "__main__":
    sys.exit(main())
