"""Exact small-instance ground truth via maximal-independent-set enumeration.

Exhaustive and intentionally simple: correctness is the point.  The node
limit keeps worst cases tractable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .graph import Graph
from .verify import is_maximal_independent

#: Default enumeration size limit.
MAX_ORACLE_NODES = 24


class OracleError(ValueError):
    """Instance too large or precondition violated."""


@dataclass(frozen=True)
class ExactBounds:
    """Extremes over all maximal independent sets: minimum cardinality
    (independent domination number) and maximum (independence number)."""

    i: int
    beta0: int


def enumerate_maximal_independent_sets(
    g: Graph, limit: int = MAX_ORACLE_NODES
) -> Iterator[frozenset[int]]:
    """Yield every maximal independent set of ``g`` exactly once.

    Recursive branching on the lowest undecided node: include it, or leave
    it out provided it is already dominated or still has an undecided
    neighbor that could dominate it later.  Leaves are checked for
    maximality, so deferred domination cannot produce false positives.
    """
    if g.n > limit:
        raise OracleError(f"graph order {g.n} exceeds oracle limit {limit}")
    nodes = g.nodes
    index = {v: k for k, v in enumerate(nodes)}
    adj = g.adj

    def rec(k: int, chosen: set[int]) -> Iterator[frozenset[int]]:
        if k == len(nodes):
            for v in nodes:
                if v not in chosen and not any(u in chosen for u in adj[v]):
                    return
            yield frozenset(chosen)
            return
        v = nodes[k]
        if not any(u in chosen for u in adj[v]):
            chosen.add(v)
            yield from rec(k + 1, chosen)
            chosen.remove(v)
            # Excluding v is only viable if something can still dominate it.
            if any(u in chosen for u in adj[v]) or any(index[u] > k for u in adj[v]):
                yield from rec(k + 1, chosen)
        else:
            yield from rec(k + 1, chosen)

    return rec(0, set())


def exact_bounds(g: Graph, limit: int = MAX_ORACLE_NODES) -> ExactBounds:
    """Minimum and maximum maximal-independent-set sizes by enumeration."""
    smallest: int | None = None
    largest: int | None = None
    for s in enumerate_maximal_independent_sets(g, limit):
        size = len(s)
        if smallest is None or size < smallest:
            smallest = size
        if largest is None or size > largest:
            largest = size
    if smallest is None:
        # Only the empty graph has no nonempty maximal set; its unique
        # maximal independent set is the empty set.
        return ExactBounds(0, 0)
    return ExactBounds(smallest, largest)


def approximation_ratio_check(
    g: Graph, x: Iterable[int], limit: int = MAX_ORACLE_NODES
) -> bool:
    """True iff beta0(g) / |x| <= (max_degree + 2) / 3 for a verified
    maximal independent set ``x`` (exact integer comparison)."""
    members = frozenset(x)
    if not is_maximal_independent(g, members).ok:
        raise OracleError("approximation ratio is defined for maximal independent sets only")
    if not members:
        raise OracleError("empty set on a nonempty graph is not maximal")
    beta0 = exact_bounds(g, limit).beta0
    return 3 * beta0 <= len(members) * (g.max_degree + 2)


__all__ = [
    "ExactBounds",
    "MAX_ORACLE_NODES",
    "OracleError",
    "approximation_ratio_check",
    "enumerate_maximal_independent_sets",
    "exact_bounds",
]
