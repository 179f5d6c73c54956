"""Execution of rule tables under central and distributed unfair schedulers.

A central step fires one uniformly-chosen eligible node; a distributed step
fires a uniformly-chosen non-empty subset of the eligible nodes, with every
guard and statement evaluated against the pre-step snapshot.  Each node-rule
execution counts as one move.  Runs are deterministic given
(algorithm, graph, initial configuration, seed).
"""

from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph
from .rules import WAIT, Algorithm, get_algorithm

#: One step record: (nodes moved, rules fired, new states), index-aligned.
Step = tuple[tuple[int, ...], tuple[str, ...], tuple[int, ...]]


def derive_seed(base: int, *parts) -> int:
    """Stable 64-bit sub-seed from a base seed and a label path.

    Hash-based (not ``hash()``) so results do not depend on interpreter
    hash randomization.
    """
    h = hashlib.sha256(str(base).encode())
    for part in parts:
        h.update(b"/")
        h.update(str(part).encode())
    return int.from_bytes(h.digest()[:8], "big")


def default_move_cap(g: Graph) -> int:
    """Safety cap well above every known bound: 10 * max_degree * n,
    floored so degenerate (edgeless or tiny) graphs can still finish."""
    return max(10 * g.max_degree * g.n, 3 * g.n, 1)


def initial_domain(algo: Algorithm, include_wait: bool = True) -> tuple[int, ...]:
    """States the random initializer draws from.  ``include_wait=False``
    restricts distributed algorithms to their wait-free states."""
    if include_wait:
        return algo.states
    return tuple(s for s in algo.states if s != WAIT)


def random_initial(
    algo: Algorithm | str, g: Graph, seed: int, include_wait: bool = True
) -> tuple[int, ...]:
    """Configuration with every node's state uniform over the legal domain."""
    if isinstance(algo, str):
        algo = get_algorithm(algo)
    domain = initial_domain(algo, include_wait)
    rng = random.Random(seed)
    return tuple(rng.choice(domain) for _ in range(g.n))


@dataclass
class Trace:
    """Record of one run: every step, the move total, and the outcome."""

    algorithm: str
    n: int
    steps: list[Step]
    total_moves: int
    stabilized: bool
    final: tuple[int, ...]

    def rule_moves(self) -> dict[str, int]:
        """Moves per rule name, summed over all steps."""
        hist: dict[str, int] = {}
        for _, rules, _ in self.steps:
            for name in rules:
                hist[name] = hist.get(name, 0) + 1
        return hist

    def to_json(self, indent: int | None = None) -> str:
        def state_repr(s: int):
            return "w" if s == WAIT else s

        payload = {
            "algorithm": self.algorithm,
            "n": self.n,
            "stabilized": self.stabilized,
            "total_moves": self.total_moves,
            "rule_moves": self.rule_moves(),
            "steps": [
                {
                    "nodes": list(nodes),
                    "rules": list(rules),
                    "states": [state_repr(s) for s in states],
                }
                for nodes, rules, states in self.steps
            ],
            "final": [state_repr(s) for s in self.final],
        }
        return json.dumps(payload, sort_keys=True, indent=indent)


class _Sim:
    """Mutable run state with incremental eligibility tracking.

    After a node ``v`` changes state only guards within ``N[v]`` can change,
    so the eligible set is refreshed locally instead of rescanned.
    """

    def __init__(self, algo: Algorithm, g: Graph, config: Sequence[int]):
        if not g.is_dense():
            raise ValueError("runs require node ids 0..n-1")
        if len(config) != g.n:
            raise ValueError(f"configuration length {len(config)} != n {g.n}")
        legal = set(algo.states)
        for v, s in enumerate(config):
            if s not in legal:
                raise ValueError(f"state {s!r} at node {v} outside domain of {algo.name}")
        self.algo = algo
        self.adj = [g.adj[v] for v in range(g.n)]
        self.deg = [g.deg[v] for v in range(g.n)]
        self.x = list(config)
        self.table = [(r.guard, r.statement, r.name) for r in algo.rules]
        self.elig: list[int] = []
        self.pos: dict[int, int] = {}
        for v in range(g.n):
            if self._first(v) >= 0:
                self.pos[v] = len(self.elig)
                self.elig.append(v)

    def _first(self, v: int) -> int:
        adj, deg, x = self.adj, self.deg, self.x
        for idx, (guard, _, _) in enumerate(self.table):
            if guard(adj, deg, x, v):
                return idx
        return -1

    def _refresh(self, v: int) -> None:
        now = self._first(v) >= 0
        pos = self.pos
        if now and v not in pos:
            pos[v] = len(self.elig)
            self.elig.append(v)
        elif not now and v in pos:
            i = pos.pop(v)
            last = self.elig.pop()
            if last != v:
                self.elig[i] = last
                pos[last] = i

    def _refresh_around(self, nodes) -> None:
        affected = set()
        for v in nodes:
            affected.add(v)
            affected.update(self.adj[v])
        for u in sorted(affected):
            self._refresh(u)

    def step_central(self, rng: random.Random) -> Step | None:
        if not self.elig:
            return None
        v = self.elig[rng.randrange(len(self.elig))]
        guard, statement, name = self.table[self._first(v)]
        new = statement(self.adj, self.deg, self.x, v)
        self.x[v] = new
        self._refresh_around((v,))
        return ((v,), (name,), (new,))

    def step_distributed(self, rng: random.Random) -> Step | None:
        if not self.elig:
            return None
        order = sorted(self.elig)
        while True:
            chosen = [v for v in order if rng.random() < 0.5]
            if chosen:
                break
        # All guards/statements read the pre-step snapshot.
        fired = []
        for v in chosen:
            guard, statement, name = self.table[self._first(v)]
            fired.append((v, name, statement(self.adj, self.deg, self.x, v)))
        for v, _, new in fired:
            self.x[v] = new
        self._refresh_around(chosen)
        return (
            tuple(v for v, _, _ in fired),
            tuple(name for _, name, _ in fired),
            tuple(new for _, _, new in fired),
        )

    def step(self, rng: random.Random) -> Step | None:
        if self.algo.scheduler == "central":
            return self.step_central(rng)
        return self.step_distributed(rng)


def step_central(
    algo: Algorithm | str, g: Graph, config: Sequence[int], rng: random.Random
) -> tuple[tuple[int, ...], int, str] | None:
    """One central move: (new config, moved node, rule) or None when stable."""
    if isinstance(algo, str):
        algo = get_algorithm(algo)
    if algo.scheduler != "central":
        raise ValueError(f"{algo.name} runs under the distributed scheduler")
    sim = _Sim(algo, g, config)
    step = sim.step_central(rng)
    if step is None:
        return None
    return tuple(sim.x), step[0][0], step[1][0]


def step_distributed(
    algo: Algorithm | str, g: Graph, config: Sequence[int], rng: random.Random
) -> tuple[tuple[int, ...], tuple[int, ...], tuple[str, ...]] | None:
    """One distributed move: (new config, moved nodes, rules) or None."""
    if isinstance(algo, str):
        algo = get_algorithm(algo)
    if algo.scheduler != "distributed":
        raise ValueError(f"{algo.name} runs under the central scheduler")
    sim = _Sim(algo, g, config)
    step = sim.step_distributed(rng)
    if step is None:
        return None
    return tuple(sim.x), step[0], step[1]


def run(
    algo: Algorithm | str,
    g: Graph,
    init: Sequence[int],
    *,
    seed: int = 0,
    move_cap: int | None = None,
) -> Trace:
    """Execute until no node is eligible or the move cap is passed.

    A capped run returns a trace with ``stabilized=False`` rather than
    raising: some algorithm families carry no proven move bound.
    """
    if isinstance(algo, str):
        algo = get_algorithm(algo)
    if move_cap is None:
        move_cap = default_move_cap(g)
    if move_cap < 1:
        raise ValueError(f"move_cap must be >= 1, got {move_cap}")
    sim = _Sim(algo, g, init)
    rng = random.Random(seed)
    steps: list[Step] = []
    moves = 0
    stabilized = False
    while True:
        if not sim.elig:
            stabilized = True
            break
        if moves > move_cap:
            break
        step = sim.step(rng)
        steps.append(step)
        moves += len(step[0])
    return Trace(
        algorithm=algo.name,
        n=g.n,
        steps=steps,
        total_moves=moves,
        stabilized=stabilized,
        final=tuple(sim.x),
    )


def extract_sets(trace: Trace) -> tuple[frozenset[int], frozenset[int] | None]:
    """Sets defined by a stabilized final configuration.

    For the two-layer coloring families the result is (color-1 set,
    color-2 set); for everything else (the x=1 set, None).
    """
    if not trace.stabilized:
        raise ValueError("extract_sets requires a stabilized trace")
    algo = get_algorithm(trace.algorithm)
    first = frozenset(v for v, s in enumerate(trace.final) if s == 1)
    if algo.family in ("C5", "D5"):
        second = frozenset(v for v, s in enumerate(trace.final) if s == 2)
        return first, second
    return first, None


__all__ = [
    "Step",
    "Trace",
    "default_move_cap",
    "derive_seed",
    "extract_sets",
    "initial_domain",
    "random_initial",
    "run",
    "step_central",
    "step_distributed",
]
