"""Rule tables for the ten self-stabilizing MIS algorithms.

Every algorithm is an ordered table of (guard, statement) rules evaluated
in the distance-1 model: a guard at node ``v`` reads only the states of
``N[v]`` plus the ids and degrees of ``N[v]``.  Node ids double as the
tie-break identifiers, so "id(k) > id(i)" is literally ``k > v``.

Central algorithms C1-C4 use states {0, 1}; C5 uses colors {1, 2, 3}.
Distributed algorithms D1-D4 add the wait state; D5 colors plus wait.
The degree-comparing algorithms come in two variants: ``b0`` (grow the
set, comparisons as ``deg(i) >= deg(j)``) and ``i`` (shrink the set,
every degree comparison flipped to ``<=``).
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Callable

#: Wait-state marker; distinct from every state and color value.
WAIT = -1

GuardFn = Callable[[dict, dict, list, int], bool]
StatementFn = Callable[[dict, dict, list, int], int]


@dataclass(frozen=True)
class Rule:
    """One guarded move: when ``guard`` holds at ``v``, firing sets
    ``x[v] = statement(...)``.  Guards and statements take
    ``(adj, deg, x, v)`` where ``adj``/``deg`` are indexable by node id."""

    name: str
    guard: GuardFn
    statement: StatementFn


@dataclass(frozen=True)
class Algorithm:
    """An algorithm row: rule table plus scheduler and state domain."""

    name: str
    family: str
    variant: str | None  # "b0", "i", or None
    scheduler: str  # "central" | "distributed"
    states: tuple[int, ...]
    rules: tuple[Rule, ...]

    @property
    def has_wait(self) -> bool:
        return WAIT in self.states


def color(adj, x, v: int) -> int:
    """Smallest color in {1, 2, 3} not used by a 1- or 2-colored neighbor.

    Neighbors in other states (3 or wait) never block a color.
    """
    has1 = has2 = False
    for j in adj[v]:
        s = x[j]
        if s == 1:
            has1 = True
        elif s == 2:
            has2 = True
    if not has1:
        return 1
    if not has2:
        return 2
    return 3


def swn(adj, x, v: int) -> bool:
    """True iff some neighbor with a smaller id is in the wait state."""
    for j in adj[v]:
        if j < v and x[j] == WAIT:
            return True
    return False


def _const(value: int) -> StatementFn:
    def statement(adj, deg, x, v):
        return value

    return statement


def _statement_color(adj, deg, x, v):
    return color(adj, x, v)


# -- shared guard builders ---------------------------------------------------


def _guard_rin_plain(adj, deg, x, v):
    # x(v)=0 and no neighbor in the set
    if x[v] != 0:
        return False
    for j in adj[v]:
        if x[j] == 1:
            return False
    return True


def _guard_rout_plain(adj, deg, x, v):
    # x(v)=1 and some neighbor in the set
    if x[v] != 1:
        return False
    for j in adj[v]:
        if x[j] == 1:
            return True
    return False


def _guard_rout_deg(cmp) -> GuardFn:
    # x(v)=1 and some set neighbor j with cmp(deg(v), deg(j))
    def guard(adj, deg, x, v):
        if x[v] != 1:
            return False
        dv = deg[v]
        for j in adj[v]:
            if x[j] == 1 and cmp(dv, deg[j]):
                return True
        return False

    return guard


def _guard_rinvw(state: int, cmp) -> GuardFn:
    # x(v)=state and no neighbor j with cmp(deg(v), deg(j))
    def guard(adj, deg, x, v):
        if x[v] != state:
            return False
        dv = deg[v]
        for j in adj[v]:
            if cmp(dv, deg[j]):
                return False
        return True

    return guard


def _guard_rwait_plain(adj, deg, x, v):
    if x[v] != 0:
        return False
    for j in adj[v]:
        if x[j] == 1:
            return False
    return True


def _guard_rback_plain(adj, deg, x, v):
    if x[v] != WAIT:
        return False
    for j in adj[v]:
        if x[j] == 1:
            return True
    return False


def _guard_rin_wait(adj, deg, x, v):
    # x(v)=w, no neighbor in the set, and every waiting neighbor has a
    # larger id (with unique ids, ">" and ">=" tie-breaks coincide).
    if x[v] != WAIT:
        return False
    waiting_smaller = False
    for j in adj[v]:
        if x[j] == 1:
            return False
        if x[j] == WAIT and j < v:
            waiting_smaller = True
    return not waiting_smaller


# -- rule tables -------------------------------------------------------------


def _c1_rules() -> tuple[Rule, ...]:
    return (
        Rule("RIn", _guard_rin_plain, _const(1)),
        Rule("ROut", _guard_rout_plain, _const(0)),
    )


def _c2_rules(cmp) -> tuple[Rule, ...]:
    return (
        Rule("RIn", _guard_rin_plain, _const(1)),
        Rule("ROut", _guard_rout_deg(cmp), _const(0)),
    )


def _c3_rules(cmp) -> tuple[Rule, ...]:
    return (
        Rule("RIn", _guard_rin_plain, _const(1)),
        Rule("RInVW", _guard_rinvw(0, cmp), _const(1)),
        Rule("ROut", _guard_rout_deg(cmp), _const(0)),
    )


def _c4_rules(cmp) -> tuple[Rule, ...]:
    def guard_rin(adj, deg, x, v):
        # Enter unless some set neighbor compares against v's degree.
        if x[v] != 0:
            return False
        dv = deg[v]
        for j in adj[v]:
            if x[j] == 1 and cmp(dv, deg[j]):
                return False
        return True

    return (
        Rule("RIn", guard_rin, _const(1)),
        Rule("ROut", _guard_rout_deg(cmp), _const(0)),
    )


def _c5_rules() -> tuple[Rule, ...]:
    def guard(adj, deg, x, v):
        return x[v] != color(adj, x, v)

    return (Rule("Re-color", guard, _statement_color),)


def _d1_rules() -> tuple[Rule, ...]:
    return (
        Rule("RWait", _guard_rwait_plain, _const(WAIT)),
        Rule("RBack", _guard_rback_plain, _const(0)),
        Rule("RIn", _guard_rin_wait, _const(1)),
        Rule("ROut", _guard_rout_plain, _const(0)),
    )


def _d2_rules(cmp) -> tuple[Rule, ...]:
    return (
        Rule("RWait", _guard_rwait_plain, _const(WAIT)),
        Rule("RBack", _guard_rback_plain, _const(0)),
        Rule("RIn", _guard_rin_wait, _const(1)),
        Rule("ROut", _guard_rout_deg(cmp), _const(0)),
    )


def _d3_rules(cmp) -> tuple[Rule, ...]:
    def guard_rwait(adj, deg, x, v):
        # x(v)=0 and (no set neighbor, or no neighbor k with cmp(deg(v), deg(k)))
        if x[v] != 0:
            return False
        dv = deg[v]
        any_in = False
        any_cmp = False
        for j in adj[v]:
            if x[j] == 1:
                any_in = True
            if cmp(dv, deg[j]):
                any_cmp = True
        return (not any_in) or (not any_cmp)

    def guard_rback(adj, deg, x, v):
        if x[v] != WAIT:
            return False
        dv = deg[v]
        any_in = False
        any_cmp = False
        for j in adj[v]:
            if x[j] == 1:
                any_in = True
            if cmp(dv, deg[j]):
                any_cmp = True
        return any_in and any_cmp

    return (
        Rule("RWait", guard_rwait, _const(WAIT)),
        Rule("RBack", guard_rback, _const(0)),
        Rule("RIn", _guard_rin_wait, _const(1)),
        Rule("RInVW", _guard_rinvw(WAIT, cmp), _const(1)),
        Rule("ROut", _guard_rout_deg(cmp), _const(0)),
    )


def _d4_rules(cmp) -> tuple[Rule, ...]:
    def guard_rwait(adj, deg, x, v):
        # x(v)=0 and (no set neighbor, or no set neighbor k with cmp(deg(v), deg(k)))
        if x[v] != 0:
            return False
        dv = deg[v]
        any_in = False
        any_in_cmp = False
        for j in adj[v]:
            if x[j] == 1:
                any_in = True
                if cmp(dv, deg[j]):
                    any_in_cmp = True
        return (not any_in) or (not any_in_cmp)

    def guard_rback(adj, deg, x, v):
        if x[v] != WAIT:
            return False
        dv = deg[v]
        for j in adj[v]:
            if x[j] == 1 and cmp(dv, deg[j]):
                return True
        return False

    def guard_rin(adj, deg, x, v):
        if x[v] != WAIT:
            return False
        dv = deg[v]
        for j in adj[v]:
            if x[j] == 1 and cmp(dv, deg[j]):
                return False
        return True

    return (
        Rule("RWait", guard_rwait, _const(WAIT)),
        Rule("RBack", guard_rback, _const(0)),
        Rule("RIn", guard_rin, _const(1)),
        Rule("ROut", _guard_rout_deg(cmp), _const(0)),
    )


def _d5_rules() -> tuple[Rule, ...]:
    def guard_rwait(adj, deg, x, v):
        return x[v] == 3 and color(adj, x, v) != 3

    def guard_rback(adj, deg, x, v):
        return x[v] == WAIT and color(adj, x, v) == 3

    def guard_rin(adj, deg, x, v):
        return x[v] == WAIT and color(adj, x, v) != 3 and not swn(adj, x, v)

    def guard_rout(adj, deg, x, v):
        return (x[v] == 1 or x[v] == 2) and x[v] != color(adj, x, v)

    return (
        Rule("RWait", guard_rwait, _const(WAIT)),
        Rule("RBack", guard_rback, _const(3)),
        Rule("RIn", guard_rin, _statement_color),
        Rule("ROut", guard_rout, _const(3)),
    )


_GE = operator.ge
_LE = operator.le

_BINARY = (0, 1)
_BINARY_WAIT = (0, 1, WAIT)
_COLORS = (1, 2, 3)
_COLORS_WAIT = (1, 2, 3, WAIT)

ALGORITHMS: dict[str, Algorithm] = {
    "C1": Algorithm("C1", "C1", None, "central", _BINARY, _c1_rules()),
    "C2b0": Algorithm("C2b0", "C2", "b0", "central", _BINARY, _c2_rules(_GE)),
    "C2i": Algorithm("C2i", "C2", "i", "central", _BINARY, _c2_rules(_LE)),
    "C3b0": Algorithm("C3b0", "C3", "b0", "central", _BINARY, _c3_rules(_GE)),
    "C3i": Algorithm("C3i", "C3", "i", "central", _BINARY, _c3_rules(_LE)),
    "C4b0": Algorithm("C4b0", "C4", "b0", "central", _BINARY, _c4_rules(_GE)),
    "C4i": Algorithm("C4i", "C4", "i", "central", _BINARY, _c4_rules(_LE)),
    "C5": Algorithm("C5", "C5", None, "central", _COLORS, _c5_rules()),
    "D1": Algorithm("D1", "D1", None, "distributed", _BINARY_WAIT, _d1_rules()),
    "D2b0": Algorithm("D2b0", "D2", "b0", "distributed", _BINARY_WAIT, _d2_rules(_GE)),
    "D2i": Algorithm("D2i", "D2", "i", "distributed", _BINARY_WAIT, _d2_rules(_LE)),
    "D3b0": Algorithm("D3b0", "D3", "b0", "distributed", _BINARY_WAIT, _d3_rules(_GE)),
    "D3i": Algorithm("D3i", "D3", "i", "distributed", _BINARY_WAIT, _d3_rules(_LE)),
    "D4b0": Algorithm("D4b0", "D4", "b0", "distributed", _BINARY_WAIT, _d4_rules(_GE)),
    "D4i": Algorithm("D4i", "D4", "i", "distributed", _BINARY_WAIT, _d4_rules(_LE)),
    "D5": Algorithm("D5", "D5", None, "distributed", _COLORS_WAIT, _d5_rules()),
}

#: Canonical presentation order (central block, then distributed).
ALGORITHM_ORDER: tuple[str, ...] = tuple(ALGORITHMS)


def get_algorithm(name: str) -> Algorithm:
    try:
        return ALGORITHMS[name]
    except KeyError:
        raise ValueError(
            f"unknown algorithm {name!r}; expected one of {', '.join(ALGORITHM_ORDER)}"
        ) from None


def eligible_rules(algo: Algorithm, g, config, v: int) -> tuple[Rule, ...]:
    """All rules of ``algo`` whose guards hold at ``v`` under ``config``."""
    if v not in g.deg:
        raise ValueError(f"unknown node id {v}")
    return tuple(r for r in algo.rules if r.guard(g.adj, g.deg, config, v))


__all__ = [
    "ALGORITHMS",
    "ALGORITHM_ORDER",
    "Algorithm",
    "Rule",
    "WAIT",
    "color",
    "eligible_rules",
    "get_algorithm",
    "swn",
]
