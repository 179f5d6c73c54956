"""Experiment harness: batch runs, paired-seed aggregation, CSV/JSON output.

A fixed base seed determines every graph, initial configuration, and
scheduler stream, so rerunning an experiment reproduces the results table
byte for byte.  Within one trial the same graph is reused by every
algorithm, and algorithms whose initial-state domains coincide also share
the initial configuration, which pairs the comparisons the way the
difference columns assume.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass
from statistics import fmean

from .engine import Trace, default_move_cap, derive_seed, extract_sets, initial_domain, random_initial, run
from .generators import GRAPH_CLASSES, GenSpec, generate
from .rules import ALGORITHM_ORDER, get_algorithm
from .verify import BoundStatus, Verdict, check_move_bound, is_maximal_independent, verify_two_layer

#: Emission order of the CSV columns.
CSV_COLUMNS = (
    "algorithm",
    "class",
    "n",
    "mean_size",
    "pct_diff_size",
    "mean_moves",
    "pct_diff_moves",
    "stabilized_rate",
    "bound_violations",
)

BASELINES = {"central": "C1", "distributed": "D1"}


class VerificationError(RuntimeError):
    """A run produced an invalid set; carries the trace and the verdict."""

    def __init__(self, message: str, trace: Trace, verdict: Verdict | None = None):
        super().__init__(message)
        self.trace = trace
        self.verdict = verdict


@dataclass(frozen=True)
class ExperimentSpec:
    """One batch experiment over a single graph class."""

    algorithms: tuple[str, ...]
    graph_class: str
    orders: tuple[int, ...]
    trials: int
    seed: int
    p: float | None = None
    r: float | None = None
    move_cap: int | None = None
    include_wait: bool = True

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if not self.orders:
            raise ValueError("orders must be non-empty")
        if self.graph_class not in GRAPH_CLASSES:
            raise ValueError(f"unknown graph class {self.graph_class!r}")
        for name in self.algorithms:
            get_algorithm(name)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


@dataclass(frozen=True)
class ResultRow:
    algorithm: str
    graph_class: str
    n: int
    mean_size: float
    pct_diff_size: float
    mean_moves: float
    pct_diff_moves: float
    stabilized_rate: float
    bound_violations: int


@dataclass(frozen=True)
class ResultsTable:
    rows: tuple[ResultRow, ...]


def _effective_algorithms(requested: tuple[str, ...]) -> tuple[str, ...]:
    """Requested algorithms plus the family baseline of each scheduler,
    in canonical order.  Baselines anchor the difference columns."""
    names = set(requested)
    for name in requested:
        names.add(BASELINES[get_algorithm(name).scheduler])
    return tuple(a for a in ALGORITHM_ORDER if a in names)


def _domain_key(algo_name: str, include_wait: bool) -> str:
    domain = initial_domain(get_algorithm(algo_name), include_wait)
    return ",".join(str(s) for s in domain)


def _pct_diff(value: float, baseline: float) -> float:
    if baseline == 0:
        return 0.0
    return 100.0 * (value - baseline) / baseline


def run_experiment(spec: ExperimentSpec) -> ResultsTable:
    """Run, verify, and aggregate every (algorithm, order, trial) cell.

    Raises :class:`VerificationError` if any stabilized run fails its set
    checks.  Runs that hit the move cap are recorded in the stabilization
    rate and excluded from the set-size mean.
    """
    algos = _effective_algorithms(spec.algorithms)
    rows = []
    for n in spec.orders:
        sizes: dict[str, list[int]] = {a: [] for a in algos}
        moves: dict[str, list[int]] = {a: [] for a in algos}
        stabilized: dict[str, int] = {a: 0 for a in algos}
        violations: dict[str, int] = {a: 0 for a in algos}
        for trial in range(spec.trials):
            graph_seed = derive_seed(spec.seed, "graph", spec.graph_class, n, trial)
            g = generate(GenSpec(spec.graph_class, n, p=spec.p, r=spec.r, seed=graph_seed))
            cap = spec.move_cap if spec.move_cap is not None else default_move_cap(g)
            inits: dict[str, tuple[int, ...]] = {}
            for name in algos:
                key = _domain_key(name, spec.include_wait)
                if key not in inits:
                    init_seed = derive_seed(spec.seed, "init", spec.graph_class, n, trial, key)
                    inits[key] = random_initial(name, g, init_seed, spec.include_wait)
                run_seed = derive_seed(spec.seed, "run", spec.graph_class, n, trial, name)
                trace = run(name, g, inits[key], seed=run_seed, move_cap=cap)
                moves[name].append(trace.total_moves)
                if not trace.stabilized:
                    continue
                stabilized[name] += 1
                first, second = extract_sets(trace)
                verdict = (
                    verify_two_layer(g, first, second)
                    if second is not None
                    else is_maximal_independent(g, first)
                )
                if not verdict.ok:
                    raise VerificationError(
                        f"{name} produced an invalid set on {spec.graph_class} n={n} "
                        f"trial={trial}: {verdict.violations[:3]}",
                        trace,
                        verdict,
                    )
                sizes[name].append(len(first))
                if check_move_bound(name, g.n, g.max_degree, trace.total_moves) is BoundStatus.EXCEEDED:
                    violations[name] += 1

        mean_sizes = {a: fmean(sizes[a]) if sizes[a] else math.nan for a in algos}
        mean_moves = {a: fmean(moves[a]) for a in algos}
        for name in algos:
            base = BASELINES[get_algorithm(name).scheduler]
            rows.append(
                ResultRow(
                    algorithm=name,
                    graph_class=spec.graph_class,
                    n=n,
                    mean_size=mean_sizes[name],
                    pct_diff_size=_pct_diff(mean_sizes[name], mean_sizes[base]),
                    mean_moves=mean_moves[name],
                    pct_diff_moves=_pct_diff(mean_moves[name], mean_moves[base]),
                    stabilized_rate=stabilized[name] / spec.trials,
                    bound_violations=violations[name],
                )
            )
    return ResultsTable(tuple(rows))


def emit(table: ResultsTable, fmt: str = "csv") -> str:
    """Render a results table as CSV (stable column order) or JSON."""
    if fmt == "csv":
        lines = [",".join(CSV_COLUMNS)]
        for row in table.rows:
            lines.append(
                f"{row.algorithm},{row.graph_class},{row.n},"
                f"{row.mean_size:.6f},{row.pct_diff_size:.6f},"
                f"{row.mean_moves:.6f},{row.pct_diff_moves:.6f},"
                f"{row.stabilized_rate:.6f},{row.bound_violations}"
            )
        return "\n".join(lines) + "\n"
    if fmt == "json":
        return json.dumps({"rows": [asdict(r) for r in table.rows]}, sort_keys=True)
    raise ValueError(f"unknown format {fmt!r}; expected 'csv' or 'json'")


def results_from_json(text: str) -> ResultsTable:
    payload = json.loads(text)
    return ResultsTable(tuple(ResultRow(**r) for r in payload["rows"]))


@dataclass(frozen=True)
class ScalingPoint:
    algorithm: str
    graph_class: str
    n: int
    mean_moves: float
    pct_diff_moves: float


def emit_scaling_series(
    algorithms: tuple[str, ...],
    graph_class: str,
    orders: tuple[int, ...],
    trials: int,
    seed: int,
    *,
    p: float | None = None,
    r: float | None = None,
    move_cap: int | None = None,
    include_wait: bool = True,
) -> tuple[ScalingPoint, ...]:
    """Per-order mean moves and difference vs the family baseline,
    shaped for plotting move-count growth."""
    if list(orders) != sorted(orders):
        raise ValueError("orders must be sorted ascending")
    spec = ExperimentSpec(
        algorithms=tuple(algorithms),
        graph_class=graph_class,
        orders=tuple(orders),
        trials=trials,
        seed=seed,
        p=p,
        r=r,
        move_cap=move_cap,
        include_wait=include_wait,
    )
    table = run_experiment(spec)
    return tuple(
        ScalingPoint(row.algorithm, row.graph_class, row.n, row.mean_moves, row.pct_diff_moves)
        for row in table.rows
    )


def emit_scaling_csv(points: tuple[ScalingPoint, ...]) -> str:
    lines = ["algorithm,class,n,mean_moves,pct_diff_moves"]
    for pt in points:
        lines.append(
            f"{pt.algorithm},{pt.graph_class},{pt.n},{pt.mean_moves:.6f},{pt.pct_diff_moves:.6f}"
        )
    return "\n".join(lines) + "\n"


def sign_test_pvalue(diffs: list[float]) -> float:
    """Two-sided paired sign test; ties are dropped.  p close to 1 means
    the paired samples are statistically indistinguishable."""
    from scipy.stats import binomtest

    positives = sum(1 for d in diffs if d > 0)
    negatives = sum(1 for d in diffs if d < 0)
    total = positives + negatives
    if total == 0:
        return 1.0
    return binomtest(positives, total, 0.5).pvalue


__all__ = [
    "BASELINES",
    "CSV_COLUMNS",
    "ExperimentSpec",
    "ResultRow",
    "ResultsTable",
    "ScalingPoint",
    "VerificationError",
    "emit",
    "emit_scaling_csv",
    "emit_scaling_series",
    "results_from_json",
    "run_experiment",
    "sign_test_pvalue",
]
