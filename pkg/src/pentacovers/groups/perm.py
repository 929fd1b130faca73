"""Permutations and generated permutation groups.

Permutations act on the right: (p * q)(x) = q(p(x)).
"""
from __future__ import annotations

from collections import deque
from math import gcd
from typing import Iterable, Sequence

import numpy as np

CLOSURE_CAP = 10**6


class ClosureCapExceeded(RuntimeError):
    def __init__(self, cap: int, partial: int) -> None:
        super().__init__(f"closure exceeded cap {cap} (enumerated {partial} elements so far)")
        self.cap = cap
        self.partial = partial


class Perm:
    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int], check: bool = True) -> None:
        imgs = tuple(int(x) for x in images)
        if check and sorted(imgs) != list(range(len(imgs))):
            raise ValueError("not a permutation")
        self.images = imgs
        self._hash = hash(imgs)

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(n), check=False)

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Perm":
        imgs = list(range(n))
        for cyc in cycles:
            for i, x in enumerate(cyc):
                imgs[x] = cyc[(i + 1) % len(cyc)]
        return cls(imgs)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __getitem__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Perm") -> "Perm":
        o = other.images
        return Perm([o[x] for x in self.images], check=False)

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Perm(inv, check=False)

    def conjugate(self, g: "Perm") -> "Perm":
        """g^-1 * self * g."""
        return g.inverse() * self * g

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def fixed_points(self) -> list[int]:
        return [i for i, x in enumerate(self.images) if i == x]

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * len(self.images)
        out = []
        for i in range(len(self.images)):
            if seen[i]:
                continue
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        o = 1
        for c in self.cycles():
            o = o * len(c) // gcd(o, len(c))
        return o

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        cyc = [c for c in self.cycles() if len(c) > 1]
        return "Perm(" + ("".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()") + ")"


# ------------------------------------------------------------- stabilizer chain


class _Chain:
    """Deterministic Schreier-Sims; used only for order and membership."""

    def __init__(self, degree: int, gens: Sequence[Perm]) -> None:
        self.n = degree
        self.ident = np.arange(degree, dtype=np.int64)
        self.base: list[int] = []
        self.strong: list[np.ndarray] = []
        self.trans: list[dict[int, tuple[np.ndarray, np.ndarray]]] = []
        for g in gens:
            arr = np.asarray(g.images, dtype=np.int64)
            if not np.array_equal(arr, self.ident):
                self._extend_base(arr)
                self.strong.append(arr)
        self._build()

    def _inv(self, a: np.ndarray) -> np.ndarray:
        out = np.empty_like(a)
        out[a] = self.ident
        return out

    def _extend_base(self, g: np.ndarray) -> None:
        if all(g[b] == b for b in self.base):
            moved = np.nonzero(g != self.ident)[0]
            self.base.append(int(moved[0]))

    def _level_gens(self, i: int) -> list[np.ndarray]:
        pref = self.base[:i]
        return [s for s in self.strong if all(s[b] == b for b in pref)]

    def _orbit(self, i: int) -> dict[int, tuple[np.ndarray, np.ndarray]]:
        gens = self._level_gens(i)
        b = self.base[i]
        t = {b: (self.ident, self.ident)}
        queue = deque([b])
        while queue:
            x = queue.popleft()
            u = t[x][0]
            for s in gens:
                y = int(s[x])
                if y not in t:
                    w = s[u]
                    t[y] = (w, self._inv(w))
                    queue.append(y)
        return t

    def _strip(self, h: np.ndarray, start: int) -> tuple[np.ndarray, int]:
        for level in range(start, len(self.base)):
            x = int(h[self.base[level]])
            t = self.trans[level]
            if x not in t:
                return h, level
            h = t[x][1][h]
        return h, len(self.base)

    def _build(self) -> None:
        self.trans = [self._orbit(i) for i in range(len(self.base))]
        i = len(self.base) - 1
        while i >= 0:
            gens = self._level_gens(i)
            t = self.trans[i]
            restart = False
            for x, (u, _) in list(t.items()):
                for s in gens:
                    su = s[u]
                    y = int(s[x])
                    h = t[y][1][su]
                    if np.array_equal(h, self.ident):
                        continue
                    res, j = self._strip(h, i + 1)
                    if j < len(self.base) or not np.array_equal(res, self.ident):
                        if j == len(self.base):
                            moved = np.nonzero(res != self.ident)[0]
                            self.base.append(int(moved[0]))
                            self.trans.append({})
                        self.strong.append(res)
                        for level in range(i + 1, j + 1):
                            self.trans[level] = self._orbit(level)
                        i = j
                        restart = True
                        break
                if restart:
                    break
            if not restart:
                i -= 1

    def order(self) -> int:
        o = 1
        for t in self.trans:
            o *= len(t)
        return o

    def contains(self, g: Perm) -> bool:
        h = np.asarray(g.images, dtype=np.int64)
        res, j = self._strip(h, 0)
        return j == len(self.base) and np.array_equal(res, self.ident)


class PermGroup:
    def __init__(self, degree: int, generators: Iterable[Perm], closure: Iterable[Perm] | None = None) -> None:
        self.degree = degree
        gens = []
        seen = set()
        for g in generators:
            if g.degree != degree:
                raise ValueError("generator degree mismatch")
            if g not in seen and not g.is_identity():
                seen.add(g)
                gens.append(g)
        self.generators: tuple[Perm, ...] = tuple(gens)
        self._closure: frozenset[Perm] | None = frozenset(closure) if closure is not None else None
        self._chain: _Chain | None = None

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, {len(self.generators)} generators)"

    @property
    def closure(self) -> frozenset[Perm] | None:
        return self._closure

    def close(self, cap: int = CLOSURE_CAP) -> frozenset[Perm]:
        if self._closure is None:
            ident = Perm.identity(self.degree)
            seen = {ident}
            queue = deque([ident])
            while queue:
                x = queue.popleft()
                for g in self.generators:
                    y = x * g
                    if y not in seen:
                        seen.add(y)
                        if len(seen) > cap:
                            raise ClosureCapExceeded(cap, len(seen))
                        queue.append(y)
            self._closure = frozenset(seen)
        return self._closure

    def chain(self) -> _Chain:
        if self._chain is None:
            self._chain = _Chain(self.degree, self.generators)
        return self._chain

    def order(self) -> int:
        if self._closure is not None:
            return len(self._closure)
        return self.chain().order()

    def __contains__(self, g: Perm) -> bool:
        if self._closure is not None:
            return g in self._closure
        return self.chain().contains(g)

    def orbits(self) -> list[list[int]]:
        parent = list(range(self.degree))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.generators:
            for i, x in enumerate(g.images):
                a, b = find(i), find(x)
                if a != b:
                    parent[max(a, b)] = min(a, b)
        groups: dict[int, list[int]] = {}
        for i in range(self.degree):
            groups.setdefault(find(i), []).append(i)
        return sorted(groups.values())

    def orbit(self, x: int) -> set[int]:
        seen = {x}
        queue = [x]
        while queue:
            y = queue.pop()
            for g in self.generators:
                z = g.images[y]
                if z not in seen:
                    seen.add(z)
                    queue.append(z)
        return seen

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree if self.degree else True

    def is_abelian(self) -> bool:
        gs = self.generators
        return all(a * b == b * a for i, a in enumerate(gs) for b in gs[i + 1:])

    def normalizes(self, other: "PermGroup") -> bool:
        """True iff every generator of self conjugates other into itself."""
        return all(k.conjugate(g) in other for g in self.generators for k in other.generators)


def is_semiregular(group: PermGroup) -> bool:
    """Every non-identity element fixed-point-free, i.e. every point stabilizer trivial."""
    order = group.order()
    return all(len(orb) == order for orb in group.orbits())


def is_semiregular_by_closure(group: PermGroup) -> bool:
    return all(g.is_identity() or not g.fixed_points() for g in group.close())


def group_from_elements(degree: int, elements: Iterable[Perm]) -> PermGroup:
    """PermGroup over a known element set, with a small generating set picked greedily."""
    elems = sorted(elements, key=lambda g: g.images)
    gens: list[Perm] = []
    span = {Perm.identity(degree)}
    for g in elems:
        if g in span:
            continue
        gens.append(g)
        span = set(PermGroup(degree, gens).close())
    return PermGroup(degree, gens, closure=elems)


def normalizer(ambient: PermGroup, sub: PermGroup) -> PermGroup:
    elems = ambient.closure
    if elems is None:
        raise ValueError("normalizer needs the ambient closure; call close() first")
    ksub = set(sub.close())
    keep = [g for g in elems if all(k.conjugate(g) in ksub for k in sub.generators)]
    return group_from_elements(ambient.degree, keep)


def centralizer(ambient: PermGroup, sub: PermGroup) -> PermGroup:
    elems = ambient.closure
    if elems is None:
        raise ValueError("centralizer needs the ambient closure; call close() first")
    keep = [g for g in elems if all(g * k == k * g for k in sub.generators)]
    return group_from_elements(ambient.degree, keep)


def dumps_perms(perms: Iterable[Perm]) -> str:
    return "".join(" ".join(map(str, p.images)) + "\n" for p in perms)


def loads_perms(text: str) -> list[Perm]:
    return [Perm(map(int, line.split())) for line in text.splitlines() if line.strip() and not line.startswith("#")]
