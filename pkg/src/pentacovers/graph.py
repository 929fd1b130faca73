"""Simple undirected graphs stored as bit-rows, with the structural queries the rest of the package needs."""
from __future__ import annotations

from collections import deque
from functools import cached_property
from typing import Iterable, Sequence


class Graph:
    """Immutable simple graph on vertices 0..n-1."""

    __slots__ = ("n", "rows", "__dict__")

    def __init__(self, n: int, rows: Sequence[int]) -> None:
        if len(rows) != n:
            raise ValueError("need one adjacency row per vertex")
        rows = tuple(int(r) for r in rows)
        for v, r in enumerate(rows):
            if (r >> v) & 1:
                raise ValueError(f"loop at vertex {v}")
            if r >> n:
                raise ValueError(f"row {v} refers to vertices outside 0..{n - 1}")
        for v, r in enumerate(rows):
            x = r
            while x:
                low = x & -x
                u = low.bit_length() - 1
                if not (rows[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
                x ^= low
        self.n = n
        self.rows = rows

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        out = []
        for r in self.rows:
            nbrs = []
            while r:
                low = r & -r
                nbrs.append(low.bit_length() - 1)
                r ^= low
            out.append(tuple(nbrs))
        return tuple(out)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph whose vertex perm[v] plays the role of v."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return len(bfs_distances(g, 0)) == g.n


def bfs_distances(g: Graph, source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    adj = g.adj
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def regular_valency(g: Graph) -> int | None:
    if g.n == 0:
        return None
    degs = {r.bit_count() for r in g.rows}
    return degs.pop() if len(degs) == 1 else None


def is_bipartite(g: Graph) -> list[int] | None:
    """2-colouring with every component's smallest vertex coloured 0, or None."""
    colour = [-1] * g.n
    adj = g.adj
    for s in range(g.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if colour[w] < 0:
                    colour[w] = colour[u] ^ 1
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return None
    return colour


def contains_cycle(g: Graph, vertices: Sequence[int]) -> bool:
    k = len(vertices)
    if k < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    if len(set(vertices)) != k:
        return False
    return all(g.has_edge(vertices[i], vertices[(i + 1) % k]) for i in range(k))


def girth(g: Graph) -> int:
    best = None
    adj = g.adj
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    if best is None:
        raise ValueError("graph is a forest; girth undefined")
    return best


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))
