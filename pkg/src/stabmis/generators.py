"""Seeded random generators for the four benchmark graph classes.

All generators are pure functions of their parameters and seed: the same
arguments always produce a bit-identical graph.  Every generated graph is
connected.
"""

from __future__ import annotations

import heapq
import math
import random
from dataclasses import asdict, dataclass

from .graph import Graph

GRAPH_CLASSES = ("tree", "bipartite", "unitdisk", "connected")

#: Attempts at resampling a unit-disk point set before giving up.
UNIT_DISK_RESAMPLE_CAP = 1000


class GeneratorError(ValueError):
    """Invalid generator parameters or exhausted resampling budget."""


def default_p(n: int) -> float:
    """Default edge probability: sparse but (almost surely) connectable."""
    if n < 2:
        return 1.0
    return min(1.0, 2.0 * math.log(n) / n)


def default_r(n: int) -> float:
    """Default disk radius targeting expected degree ~8."""
    return min(math.sqrt(2.0), math.sqrt(8.0 / (math.pi * n)))


def gen_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree on ``n`` nodes (random sequence decode)."""
    if n < 1:
        raise GeneratorError(f"tree order must be >= 1, got {n}")
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph(2, [(0, 1)])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    deg = [1] * n
    for t in seq:
        deg[t] += 1
    leaves = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for t in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, t) if leaf < t else (t, leaf))
        deg[t] -= 1
        if deg[t] == 1:
            heapq.heappush(leaves, t)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v) if u < v else (v, u))
    return Graph(n, edges)


def gen_bipartite(n: int, p: float, seed: int) -> Graph:
    """Connected bipartite graph: random split, cross edges with prob ``p``,
    then the minimum number of random cross edges to join components."""
    if n < 2:
        raise GeneratorError(f"bipartite order must be >= 2, got {n}")
    if not 0.0 < p <= 1.0:
        raise GeneratorError(f"edge probability must be in (0, 1], got {p}")
    rng = random.Random(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    left = sorted(perm[: (n + 1) // 2])
    right = sorted(perm[(n + 1) // 2 :])
    on_left = set(left)
    edges = []
    for u in left:
        for w in right:
            if rng.random() < p:
                edges.append((u, w) if u < w else (w, u))

    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        parent[find(a)] = find(b)

    for u, w in edges:
        union(u, w)
    # Join components with single cross edges; each merge keeps both sides legal.
    while True:
        comps: dict[int, tuple[list[int], list[int]]] = {}
        for v in range(n):
            lefts, rights = comps.setdefault(find(v), ([], []))
            (lefts if v in on_left else rights).append(v)
        if len(comps) == 1:
            break
        roots = sorted(comps)
        base = roots[0]
        others = roots[1:]
        rng.shuffle(others)
        for other in others:
            b_left, b_right = comps[base]
            o_left, o_right = comps[other]
            if b_left and o_right:
                u, w = rng.choice(b_left), rng.choice(o_right)
            elif b_right and o_left:
                u, w = rng.choice(o_left), rng.choice(b_right)
            else:
                continue
            edges.append((u, w) if u < w else (w, u))
            union(u, w)
            break
        else:
            raise GeneratorError("cannot connect bipartite sides")  # unreachable for n >= 2
    return Graph(n, edges)


def _disk_edges(points: list[tuple[float, float]], r: float) -> list[tuple[int, int]]:
    """Edges of the intersection graph: pairs within distance ``r`` (inclusive)."""
    r2 = r * r
    edges = []
    for i, (xi, yi) in enumerate(points):
        for j in range(i + 1, len(points)):
            dx = xi - points[j][0]
            dy = yi - points[j][1]
            if dx * dx + dy * dy <= r2:
                edges.append((i, j))
    return edges


def gen_unit_disk(n: int, r: float, seed: int) -> Graph:
    """Unit disk graph: ``n`` uniform points in the unit square, edges at
    distance <= ``r``; whole point sets are resampled until connected."""
    if n < 1:
        raise GeneratorError(f"unit disk order must be >= 1, got {n}")
    if not 0.0 < r <= math.sqrt(2.0):
        raise GeneratorError(f"disk radius must be in (0, sqrt(2)], got {r}")
    rng = random.Random(seed)
    for _ in range(UNIT_DISK_RESAMPLE_CAP):
        points = [(rng.random(), rng.random()) for _ in range(n)]
        g = Graph(n, _disk_edges(points, r))
        if g.is_connected():
            return g
    raise GeneratorError(
        f"no connected unit disk graph after {UNIT_DISK_RESAMPLE_CAP} attempts (n={n}, r={r})"
    )


def gen_connected(n: int, p: float, seed: int) -> Graph:
    """G(n, p) repaired to connectivity by adding uniformly random edges
    between distinct components until one component remains."""
    if n < 1:
        raise GeneratorError(f"order must be >= 1, got {n}")
    if not 0.0 < p <= 1.0:
        raise GeneratorError(f"edge probability must be in (0, 1], got {p}")
    rng = random.Random(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v))

    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    n_comps = n
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            n_comps -= 1
    while n_comps > 1:
        u = rng.randrange(n)
        v = rng.randrange(n)
        ru, rv = find(u), find(v)
        if ru == rv:
            continue
        parent[ru] = rv
        n_comps -= 1
        edges.append((u, v) if u < v else (v, u))
    return Graph(n, edges)


@dataclass(frozen=True)
class GenSpec:
    """Parameters selecting one graph class instance; JSON-friendly."""

    graph_class: str
    n: int
    p: float | None = None
    r: float | None = None
    seed: int = 0

    def __post_init__(self):
        if self.graph_class not in GRAPH_CLASSES:
            raise GeneratorError(
                f"unknown graph class {self.graph_class!r}; expected one of {GRAPH_CLASSES}"
            )

    def to_dict(self) -> dict:
        return asdict(self)


def generate(spec: GenSpec) -> Graph:
    """Generate the graph described by ``spec``, applying class defaults."""
    if spec.graph_class == "tree":
        return gen_tree(spec.n, spec.seed)
    if spec.graph_class == "bipartite":
        p = spec.p if spec.p is not None else default_p(spec.n)
        return gen_bipartite(spec.n, p, spec.seed)
    if spec.graph_class == "unitdisk":
        r = spec.r if spec.r is not None else default_r(spec.n)
        return gen_unit_disk(spec.n, r, spec.seed)
    p = spec.p if spec.p is not None else default_p(spec.n)
    return gen_connected(spec.n, p, spec.seed)


__all__ = [
    "GRAPH_CLASSES",
    "GenSpec",
    "GeneratorError",
    "default_p",
    "default_r",
    "gen_bipartite",
    "gen_connected",
    "gen_tree",
    "gen_unit_disk",
    "generate",
]
