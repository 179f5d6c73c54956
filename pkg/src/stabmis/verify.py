"""Post-hoc certification of run outcomes.

Predicates return a :class:`Verdict` carrying explicit witnesses (offending
nodes or edges) so scheduler bugs stay debuggable.  The move-bound table
distinguishes families with hard proven bounds from families that are only
monitored.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .engine import Trace
from .graph import Graph, GraphError
from .rules import Algorithm, get_algorithm

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Verdict:
    ok: bool
    violations: tuple[tuple[str, tuple[int, ...]], ...]

    @staticmethod
    def from_violations(violations: Iterable[tuple[str, tuple[int, ...]]]) -> "Verdict":
        vs = tuple(violations)
        return Verdict(ok=not vs, violations=vs)

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "violations": [
                {"property": name, "witness": list(w)} for name, w in self.violations
            ],
        }


class BoundStatus(str, Enum):
    WITHIN = "within"
    EXCEEDED = "exceeded"
    MONITORED = "unbounded-monitored"


def _check_subset(g: Graph, s: Iterable[int], label: str) -> set[int]:
    out = set(s)
    for v in out:
        if v not in g.deg:
            raise GraphError(f"{label} contains unknown node id {v}")
    return out


def is_independent(g: Graph, x: Iterable[int]) -> Verdict:
    """No edge has both endpoints in ``x``."""
    members = _check_subset(g, x, "set")
    bad = [
        ("independence", (u, v))
        for u, v in g.edges
        if u in members and v in members
    ]
    return Verdict.from_violations(bad)


def is_maximal_independent(g: Graph, x: Iterable[int]) -> Verdict:
    """Independent, and every outside node has a neighbor inside."""
    members = _check_subset(g, x, "set")
    violations = list(is_independent(g, members).violations)
    for v in g.nodes:
        if v in members:
            continue
        if not any(u in members for u in g.adj[v]):
            violations.append(("maximality", (v,)))
    return Verdict.from_violations(violations)


def is_dominating(g: Graph, x: Iterable[int]) -> Verdict:
    """Every node outside ``x`` is adjacent to a member of ``x``."""
    members = _check_subset(g, x, "set")
    bad = [
        ("domination", (v,))
        for v in g.nodes
        if v not in members and not any(u in members for u in g.adj[v])
    ]
    return Verdict.from_violations(bad)


def verify_two_layer(g: Graph, r: Iterable[int], b: Iterable[int]) -> Verdict:
    """First layer maximal independent in ``g``; second layer maximal
    independent in the subgraph induced by the non-members of the first."""
    r_set = _check_subset(g, r, "first layer")
    b_set = _check_subset(g, b, "second layer")
    if r_set & b_set:
        raise GraphError(f"layers overlap on nodes {sorted(r_set & b_set)}")
    violations = [
        ("layer1." + name, w) for name, w in is_maximal_independent(g, r_set).violations
    ]
    rest = g.induced_subgraph(set(g.nodes) - r_set)
    violations.extend(
        ("layer2." + name, w) for name, w in is_maximal_independent(rest, b_set).violations
    )
    return Verdict.from_violations(violations)


def move_bound(algo: Algorithm | str, n: int, max_degree: int) -> int | None:
    """Proven move bound for the family, or None when only monitored.

    Hard bounds: C1, C2 at 2n; C3, C5, D2 at 3n; D1 at max(3n-5, 2n).
    D3 and D5 are linear in max degree with an implicit constant; they are
    monitored against a 3*max_degree*n ceiling.  C4/D4 have no bound.
    """
    if isinstance(algo, str):
        algo = get_algorithm(algo)
    family = algo.family
    if family in ("C1", "C2"):
        return 2 * n
    if family in ("C3", "C5", "D2"):
        return 3 * n
    if family == "D1":
        return max(3 * n - 5, 2 * n)
    if family in ("D3", "D5"):
        return 3 * max(max_degree, 1) * n
    return None  # C4, D4


_MONITORED_FAMILIES = ("C4", "D4")
_SOFT_BOUND_FAMILIES = ("D3", "D5")


def check_move_bound(
    algo: Algorithm | str, n: int, max_degree: int, total_moves: int
) -> BoundStatus:
    """Compare a stabilized run's move total against the family bound table."""
    if isinstance(algo, str):
        algo = get_algorithm(algo)
    bound = move_bound(algo, n, max_degree)
    if bound is None:
        return BoundStatus.MONITORED
    if total_moves <= bound:
        return BoundStatus.WITHIN
    if algo.family in _SOFT_BOUND_FAMILIES:
        logger.warning(
            "%s exceeded the monitored ceiling: %d moves > %d (n=%d, max_degree=%d)",
            algo.name, total_moves, bound, n, max_degree,
        )
        return BoundStatus.MONITORED
    return BoundStatus.EXCEEDED


#: Per-family rules after which a node must never move again.  For D5 the
#: guarantee applies only when the entering move set color 1.
TERMINAL_RULES: dict[str, tuple[str, int | None]] = {
    "C2": ("RIn", None),
    "D2": ("RIn", None),
    "C3": ("RInVW", None),
    "D3": ("RInVW", None),
    "D5": ("RIn", 1),
}


def audit_terminal_rules(trace: Trace) -> tuple[tuple[int, int, str], ...]:
    """Scan a trace for moves made after a terminal rule fired.

    Returns (node, step index, offending rule) triples; empty means the
    per-node move pattern held.  Families without a terminal rule always
    audit clean.
    """
    family = get_algorithm(trace.algorithm).family
    spec = TERMINAL_RULES.get(family)
    if spec is None:
        return ()
    rule_name, required_state = spec
    terminal: set[int] = set()
    violations = []
    for step_idx, (nodes, rule_names, states) in enumerate(trace.steps):
        for v, name, new_state in zip(nodes, rule_names, states):
            if v in terminal:
                violations.append((v, step_idx, name))
            elif name == rule_name and (required_state is None or new_state == required_state):
                terminal.add(v)
    return tuple(violations)


__all__ = [
    "BoundStatus",
    "TERMINAL_RULES",
    "Verdict",
    "audit_terminal_rules",
    "check_move_bound",
    "is_dominating",
    "is_independent",
    "is_maximal_independent",
    "move_bound",
    "verify_two_layer",
]
