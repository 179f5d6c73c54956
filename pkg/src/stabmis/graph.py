"""Immutable undirected simple graphs with neighborhood and degree queries.

Graphs are value objects: node set and edge set are fixed at construction,
validated (no self-loops, no duplicate edges), and safe to share across
concurrent runs.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable


class GraphError(ValueError):
    """Domain error for graph construction or queries."""


class EdgeListError(GraphError):
    """Malformed edge-list text; carries the 1-based offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class Graph:
    """Undirected simple graph over distinct non-negative integer node ids.

    ``nodes`` may be an int ``n`` (shorthand for ids ``0..n-1``) or an
    iterable of ids; ids need not be contiguous, which lets induced
    subgraphs keep their original labels.
    """

    __slots__ = ("n", "nodes", "edges", "adj", "deg", "max_degree")

    def __init__(self, nodes: int | Iterable[int], edges: Iterable[tuple[int, int]] = ()):
        if isinstance(nodes, int):
            if nodes < 0:
                raise GraphError(f"node count must be non-negative, got {nodes}")
            node_tuple = tuple(range(nodes))
        else:
            node_list = sorted(nodes)
            for v in node_list:
                if not isinstance(v, int) or v < 0:
                    raise GraphError(f"node ids must be non-negative integers, got {v!r}")
            node_tuple = tuple(node_list)
            if len(set(node_tuple)) != len(node_tuple):
                raise GraphError("duplicate node ids")

        node_set = set(node_tuple)
        adj: dict[int, list[int]] = {v: [] for v in node_tuple}
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at node {u}")
            if u not in node_set or v not in node_set:
                raise GraphError(f"edge ({u}, {v}) references an unknown node id")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise GraphError(f"duplicate edge ({e[0]}, {e[1]})")
            seen.add(e)
            adj[u].append(v)
            adj[v].append(u)

        self.nodes: tuple[int, ...] = node_tuple
        self.n: int = len(node_tuple)
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(seen))
        self.adj: dict[int, tuple[int, ...]] = {v: tuple(sorted(ns)) for v, ns in adj.items()}
        self.deg: dict[int, int] = {v: len(ns) for v, ns in adj.items()}
        self.max_degree: int = max(self.deg.values()) if self.deg else 0

    def neighbors(self, v: int) -> frozenset[int]:
        """Open neighborhood of ``v``."""
        self._check_node(v)
        return frozenset(self.adj[v])

    def degree(self, v: int) -> int:
        self._check_node(v)
        return self.deg[v]

    def induced_subgraph(self, keep: Iterable[int]) -> "Graph":
        """Subgraph on ``keep`` with exactly the edges inside it; ids preserved."""
        keep_set = set(keep)
        for v in keep_set:
            self._check_node(v)
        kept_edges = [(u, v) for u, v in self.edges if u in keep_set and v in keep_set]
        return Graph(keep_set, kept_edges)

    def is_connected(self) -> bool:
        """True iff every node is reachable from every other (empty graph: True)."""
        if self.n <= 1:
            return True
        start = self.nodes[0]
        seen = {start}
        queue = deque((start,))
        while queue:
            u = queue.popleft()
            for w in self.adj[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.n

    def is_dense(self) -> bool:
        """True iff node ids are exactly ``0..n-1``."""
        return self.nodes == tuple(range(self.n))

    def _check_node(self, v: int) -> None:
        if v not in self.deg:
            raise GraphError(f"unknown node id {v}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.nodes == other.nodes and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.nodes, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


def read_edge_list(text: str) -> Graph:
    """Parse edge-list text into a graph.

    Format: the first significant line is the node count ``n``; every later
    significant line is ``"u v"`` with ``0 <= u < v < n``.  Lines starting
    with ``#`` are comments; blank lines are ignored.
    """
    n: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise EdgeListError(f"expected node count, got {line!r}", lineno) from None
            if n < 0:
                raise EdgeListError(f"node count must be non-negative, got {n}", lineno)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"non-integer endpoint in {line!r}", lineno) from None
        if u == v:
            raise EdgeListError(f"self-loop {u} {v}", lineno)
        if not 0 <= u < v < n:
            raise EdgeListError(f"endpoints must satisfy 0 <= u < v < {n}, got {u} {v}", lineno)
        if (u, v) in seen:
            raise EdgeListError(f"duplicate edge {u} {v}", lineno)
        seen.add((u, v))
        edges.append((u, v))
    if n is None:
        raise EdgeListError("missing node count line", 1)
    return Graph(n, edges)


def write_edge_list(g: Graph) -> str:
    """Render a dense graph in the edge-list format (canonical: sorted edges)."""
    if not g.is_dense():
        raise GraphError("edge-list format requires node ids 0..n-1")
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
