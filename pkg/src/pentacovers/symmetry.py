"""Automorphism groups, isomorphism tests and transitivity analysis.

The engine is individualization-refinement: ordered partitions are refined
to equitable ones by neighbour counts, a target cell (smallest non-singleton,
earliest on ties) is split by individualizing its smallest vertex, and the
group order is assembled level by level as orbit size times stabilizer order.
Refinement records a trace of every split it performs; two branches can only
correspond under an isomorphism if their traces agree, which is what prunes
the search.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from .graph import Graph, girth, is_connected, regular_valency
from .groups import (
    STABILIZER_ORDERS_BY_S,
    AbelianGroup,
    Perm,
    PermGroup,
    iter_abelian_automorphisms,
)

NODE_BUDGET = 10**8


class SearchBudgetExceeded(RuntimeError):
    pass


class SymmetryInconsistency(AssertionError):
    pass


# ------------------------------------------------------------------ partitions


class _Partition:
    """Ordered partition: lab lists vertices cell by cell; cells are named by their start index."""

    __slots__ = ("lab", "start", "size")

    def __init__(self, lab: list[int], start: list[int], size: list[int]) -> None:
        self.lab = lab
        self.start = start
        self.size = size

    @classmethod
    def unit(cls, n: int) -> "_Partition":
        size = [0] * n
        if n:
            size[0] = n
        return cls(list(range(n)), [0] * n, size)

    def copy(self) -> "_Partition":
        return _Partition(self.lab[:], self.start[:], self.size[:])

    def cell(self, c: int) -> list[int]:
        return self.lab[c:c + self.size[c]]

    def cell_starts(self) -> list[int]:
        out = []
        i = 0
        n = len(self.lab)
        while i < n:
            out.append(i)
            i += self.size[i]
        return out

    def is_discrete(self) -> bool:
        return all(self.size[c] == 1 for c in self.cell_starts())

    def target_cell(self) -> int | None:
        best = None
        for c in self.cell_starts():
            s = self.size[c]
            if s > 1 and (best is None or s < self.size[best]):
                best = c
        return best


def _refine(adj: Sequence[Sequence[int]], part: _Partition, queue: list[int],
            ref: list | None = None) -> list | None:
    """Refine in place to the coarsest equitable refinement; return the trace.

    With ``ref`` given, abort (returning None) as soon as the trace departs from it.
    """
    lab, start, size = part.lab, part.start, part.size
    trace: list = []
    pending = deque(queue)
    inq = set(queue)
    while pending:
        s = pending.popleft()
        inq.discard(s)
        counts: dict[int, int] = {}
        for i in range(s, s + size[s]):
            for w in adj[lab[i]]:
                counts[w] = counts.get(w, 0) + 1
        bycell: dict[int, list[int]] = {}
        for w in counts:
            bycell.setdefault(start[w], []).append(w)
        entry = [s]
        for c in sorted(bycell):
            touched = bycell[c]
            csize = size[c]
            groups: dict[int, list[int]] = {}
            for w in touched:
                groups.setdefault(counts[w], []).append(w)
            if len(touched) < csize:
                tset = set(touched)
                groups[0] = [v for v in lab[c:c + csize] if v not in tset]
            keys = sorted(groups)
            entry.append((c, tuple((k, len(groups[k])) for k in keys)))
            if len(keys) == 1:
                continue
            pos = c
            frags = []
            for k in keys:
                frag = groups[k]
                fs = pos
                frags.append((fs, len(frag)))
                for v in frag:
                    lab[pos] = v
                    start[v] = fs
                    pos += 1
            for fs, fl in frags:
                size[fs] = fl
            if c in inq:
                new = [fs for fs, _ in frags[1:]]
            else:
                largest = max(range(len(frags)), key=lambda i: (frags[i][1], -i))
                new = [fs for i, (fs, _) in enumerate(frags) if i != largest]
            for fs in new:
                if fs not in inq:
                    inq.add(fs)
                    pending.append(fs)
        entry = tuple(entry)
        if ref is not None:
            k = len(trace)
            if k >= len(ref) or ref[k] != entry:
                return None
        trace.append(entry)
    if ref is not None and len(trace) != len(ref):
        return None
    return trace


def _individualize(adj, part: _Partition, v: int, ref: list | None = None):
    p = part.copy()
    c = p.start[v]
    csize = p.size[c]
    i = p.lab.index(v, c, c + csize)
    p.lab[i], p.lab[c] = p.lab[c], p.lab[i]
    p.size[c] = 1
    if csize > 1:
        p.size[c + 1] = csize - 1
        for j in range(c + 1, c + csize):
            p.start[p.lab[j]] = c + 1
    trace = _refine(adj, p, [c], ref)
    if trace is None:
        return None, None
    return p, trace


# -------------------------------------------------------------------- engine


@dataclass
class _FirstPath:
    partitions: list[_Partition]
    traces: list[list]
    cells: list[int]
    base: list[int]
    root_trace: list


def _first_path(adj, n: int) -> _FirstPath:
    p = _Partition.unit(n)
    root_trace = _refine(adj, p, [0] if n else [])
    parts, traces, cells, base = [p], [], [], []
    while True:
        c = p.target_cell()
        if c is None:
            break
        v = min(p.cell(c))
        p, tr = _individualize(adj, p, v)
        parts.append(p)
        traces.append(tr)
        cells.append(c)
        base.append(v)
    return _FirstPath(parts, traces, cells, base, root_trace)


class _Counter:
    def __init__(self, budget: int) -> None:
        self.budget = budget
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchBudgetExceeded(f"search exceeded node budget {self.budget}")


def _is_isomorphism(g1: Graph, g2: Graph, images: Sequence[int]) -> bool:
    rows2 = g2.rows
    for u, nbrs in enumerate(g1.adj):
        row = rows2[images[u]]
        for w in nbrs:
            if not (row >> images[w]) & 1:
                return False
    return g1.edge_count == g2.edge_count


def _extend(g1: Graph, g2: Graph, path: _FirstPath, level: int, right: _Partition,
            counter: _Counter, pruning: "AutResult | None", on_base: bool) -> Perm | None:
    """Search for an isomorphism g1 -> g2 matching path.partitions[level] with ``right``."""
    if level == len(path.base):
        left = path.partitions[level]
        images = [0] * g1.n
        for a, b in zip(left.lab, right.lab):
            images[a] = b
        if _is_isomorphism(g1, g2, images):
            return Perm(images, check=False)
        return None
    c = path.cells[level]
    candidates = sorted(right.cell(c))
    if on_base and pruning is not None and level < len(pruning.base) and pruning.base[level] in candidates:
        reps = pruning.orbit_reps(level)
        b = pruning.base[level]
        candidates = [b] + [y for y in candidates if reps[y] == y and reps[y] != reps[b]]
    adj2 = g2.adj
    for y in candidates:
        counter.tick()
        child, _ = _individualize(adj2, right, y, path.traces[level])
        if child is None:
            continue
        still_on_base = on_base and pruning is not None and level < len(pruning.base) and y == pruning.base[level]
        res = _extend(g1, g2, path, level + 1, child, counter, pruning, still_on_base)
        if res is not None:
            return res
    return None


@dataclass
class AutResult:
    degree: int
    generators: list[Perm]
    order: int
    base: list[int]
    orbit_sizes: list[int]
    level_of: list[int]  # level at which each generator was found
    nodes: int = 0
    _reps: dict = field(default_factory=dict, repr=False)

    @property
    def base_vertex(self) -> int:
        return self.base[0] if self.base else 0

    def level_generators(self, level: int) -> list[Perm]:
        """Generators of the pointwise stabilizer of base[:level]."""
        return [g for g, l in zip(self.generators, self.level_of) if l >= level]

    @property
    def stabilizer_generators(self) -> list[Perm]:
        if not self.base:
            return []
        return self.level_generators(1)

    def group(self) -> PermGroup:
        return PermGroup(self.degree, self.generators)

    def stabilizer(self) -> PermGroup:
        return PermGroup(self.degree, self.stabilizer_generators)

    @property
    def stabilizer_order(self) -> int:
        o = 1
        for s in self.orbit_sizes[1:]:
            o *= s
        return o

    def orbit_reps(self, level: int) -> list[int]:
        if level not in self._reps:
            parent = list(range(self.degree))

            def find(x: int) -> int:
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for g in self.level_generators(level):
                for i, x in enumerate(g.images):
                    a, b = find(i), find(x)
                    if a != b:
                        parent[max(a, b)] = min(a, b)
            self._reps[level] = [find(i) for i in range(self.degree)]
        return self._reps[level]

    def vertex_orbits(self) -> list[list[int]]:
        reps = self.orbit_reps(0)
        out: dict[int, list[int]] = {}
        for v, r in enumerate(reps):
            out.setdefault(r, []).append(v)
        return sorted(out.values())


def _orbit_under(gens: Sequence[Perm], x: int) -> set[int]:
    seen = {x}
    stack = [x]
    while stack:
        y = stack.pop()
        for g in gens:
            z = g.images[y]
            if z not in seen:
                seen.add(z)
                stack.append(z)
    return seen


def _automorphism_group(g: Graph, budget: int) -> AutResult:
    adj = g.adj
    path = _first_path(adj, g.n)
    counter = _Counter(budget)
    gens: list[Perm] = []
    level_of: list[int] = []
    depth = len(path.base)
    orbit_sizes = [1] * depth
    for level in range(depth - 1, -1, -1):
        b = path.base[level]
        part = path.partitions[level]
        cell = sorted(part.cell(path.cells[level]))
        current = [h for h, l in zip(gens, level_of) if l >= level]
        orbit = _orbit_under(current, b)
        for w in cell:
            if w in orbit:
                continue
            counter.tick()
            right, _ = _individualize(adj, part, w, path.traces[level])
            if right is None:
                continue
            found = _extend(g, g, path, level + 1, right, counter, None, False)
            if found is not None:
                gens.append(found)
                level_of.append(level)
                current.append(found)
                orbit = _orbit_under(current, b)
        orbit_sizes[level] = len(orbit)
    order = 1
    for s in orbit_sizes:
        order *= s
    return AutResult(g.n, gens, order, list(path.base), orbit_sizes, level_of, counter.nodes)


@lru_cache(maxsize=64)
def _cached_aut(g: Graph, budget: int) -> AutResult:
    return _automorphism_group(g, budget)


def automorphism_group(g: Graph, budget: int = NODE_BUDGET) -> AutResult:
    """Exact automorphism group: generators (each verified) and order."""
    if g.n and not is_connected(g):
        raise ValueError("automorphism_group expects a connected graph")
    return _cached_aut(g, budget)


def automorphism_group_any(g: Graph, budget: int = NODE_BUDGET) -> AutResult:
    """Same search without the connectivity precondition."""
    return _cached_aut(g, budget)


# ---------------------------------------------------------------- isomorphism


def invariant_screen(g: Graph) -> dict:
    """Cheap isomorphism invariants, reported for diagnostics; never used to certify absence."""
    inv: dict = {
        "order": g.n,
        "edges": g.edge_count,
        "degrees": tuple(sorted(r.bit_count() for r in g.rows)),
    }
    try:
        inv["girth"] = girth(g)
    except ValueError:
        inv["girth"] = None
    if g.n <= 600:
        mat = np.zeros((g.n, g.n))
        for u, v in g.edges():
            mat[u, v] = mat[v, u] = 1.0
        inv["spectrum"] = tuple(np.round(np.linalg.eigvalsh(mat), 9) + 0.0)
    return inv


def are_isomorphic(g1: Graph, g2: Graph, budget: int = NODE_BUDGET) -> Perm | None:
    """An isomorphism g1 -> g2 (as vertex images) or None after exhausting the search."""
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return None
    if sorted(r.bit_count() for r in g1.rows) != sorted(r.bit_count() for r in g2.rows):
        return None
    if g1.n == 0:
        return Perm([])
    path = _first_path(g1.adj, g1.n)
    right = _Partition.unit(g2.n)
    if _refine(g2.adj, right, [0], path.root_trace) is None:
        return None
    aut2 = automorphism_group_any(g2, budget)
    counter = _Counter(budget)
    found = _extend(g1, g2, path, 0, right, counter, aut2, True)
    if found is not None and not _is_isomorphism(g1, g2, found.images):
        raise SymmetryInconsistency("search returned a map that is not an isomorphism")
    return found


# ---------------------------------------------------------------- transitivity


def _arc_orbit_size(gens: Sequence[Perm], start: tuple[int, ...]) -> int:
    seen = {start}
    stack = [start]
    while stack:
        a = stack.pop()
        for g in gens:
            img = g.images
            b = tuple(img[x] for x in a)
            if b not in seen:
                seen.add(b)
                stack.append(b)
    return len(seen)


def is_arc_transitive(g: Graph, aut: AutResult) -> bool:
    if g.edge_count == 0:
        return False
    u = next(v for v in range(g.n) if g.adj[v])
    return _arc_orbit_size(aut.generators, (u, g.adj[u][0])) == 2 * g.edge_count


def group_is_arc_transitive(g: Graph, gens: Sequence[Perm]) -> bool:
    if g.edge_count == 0:
        return False
    u = next(v for v in range(g.n) if g.adj[v])
    return _arc_orbit_size(gens, (u, g.adj[u][0])) == 2 * g.edge_count


def _some_s_arc(g: Graph, s: int) -> tuple[int, ...]:
    arc = [0]
    prev = -1
    for _ in range(s):
        cur = arc[-1]
        nxt = next(w for w in g.adj[cur] if w != prev)
        prev = cur
        arc.append(nxt)
    return tuple(arc)


def s_transitivity(g: Graph, aut: AutResult) -> int:
    """Largest s such that Aut(g) is transitive on s-arcs."""
    k = regular_valency(g)
    if k is None or k < 2 or not is_arc_transitive(g, aut):
        raise ValueError("s_transitivity expects a regular arc-transitive graph of valency >= 2")
    s = 1
    while True:
        total = g.n * k * (k - 1) ** s
        if aut.order < total:
            break
        if _arc_orbit_size(aut.generators, _some_s_arc(g, s + 1)) != total:
            break
        s += 1
    if k == 5:
        stab = aut.order // g.n
        if stab not in STABILIZER_ORDERS_BY_S.get(s, frozenset()):
            raise SymmetryInconsistency(f"s = {s} but vertex stabilizer has order {stab}, not a possible order")
    return s


# ---------------------------------------------------------------- bi-Cayley normalizer


@dataclass
class BiCayleyNormalizer:
    group: AbelianGroup
    connection: list[tuple[int, ...]]
    graph: Graph
    F: list[Perm]
    delta: Perm
    normalizer_order: int

    @property
    def verified(self) -> bool:
        return self.normalizer_order == 2 * self.group.order * len(self.F)


def bicayley_F(H: AbelianGroup, S: Sequence[tuple[int, ...]], cap: int = 10**4) -> BiCayleyNormalizer:
    """All sigma_{alpha,x} (alpha in Aut(H), alpha(S) = S - x) plus the swap delta."""
    from .construct import bicayley

    S = sorted(set(H.element(*s) for s in S))
    if H.identity not in S:
        shift = S[0]
        S = sorted(H.sub(s, shift) for s in S)
    graph = bicayley(H, [], [], S)
    elems = H.elements()
    n = H.order
    sset = set(S)
    shifted = {x: frozenset(H.sub(s, x) for s in S) for x in S}
    F: list[Perm] = []
    for alpha in iter_abelian_automorphisms(H, cap):
        image = frozenset(alpha(s) for s in S)
        for x in S:
            if image == shifted[x]:
                imgs = [0] * (2 * n)
                for r, h in enumerate(elems):
                    ah = alpha(h)
                    imgs[r] = H.rank(ah)
                    imgs[n + r] = n + H.rank(H.add(x, ah))
                sigma = Perm(imgs)
                if not _is_isomorphism(graph, graph, sigma.images) or imgs[H.rank(H.identity)] != H.rank(H.identity):
                    raise SymmetryInconsistency("sigma_{alpha,x} is not an automorphism fixing 1_0")
                F.append(sigma)
    assert sset  # S nonempty
    delta = Perm([n + H.rank(H.neg(h)) for h in elems] + [H.rank(H.neg(h)) for h in elems])
    if not _is_isomorphism(graph, graph, delta.images):
        raise SymmetryInconsistency("delta is not an automorphism")
    translations = []
    for gen in H.generators():
        imgs = [H.rank(H.add(h, gen)) for h in elems]
        translations.append(Perm(imgs + [n + x for x in imgs]))
    N = PermGroup(2 * n, translations + F + [delta])
    return BiCayleyNormalizer(H, S, graph, F, delta, N.order())
