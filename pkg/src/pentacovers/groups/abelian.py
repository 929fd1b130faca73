"""Finite abelian groups as mixed-modulus vectors, and generalized dihedral groups over them."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd, prod
from typing import Iterator, Sequence

from ..modarith import factorize

Vector = tuple[int, ...]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@dataclass(frozen=True)
class AbelianGroup:
    moduli: tuple[int, ...]

    def __init__(self, moduli: Sequence[int]) -> None:
        mods = tuple(int(d) for d in moduli)
        if any(d < 1 for d in mods):
            raise ValueError("moduli must be positive")
        object.__setattr__(self, "moduli", mods)

    @property
    def order(self) -> int:
        return prod(self.moduli)

    @property
    def identity(self) -> Vector:
        return (0,) * len(self.moduli)

    def element(self, *coords: int) -> Vector:
        if len(coords) != len(self.moduli):
            raise ValueError("wrong number of coordinates")
        return tuple(x % d for x, d in zip(coords, self.moduli))

    def add(self, u: Vector, v: Vector) -> Vector:
        return tuple((x + y) % d for x, y, d in zip(u, v, self.moduli))

    def sub(self, u: Vector, v: Vector) -> Vector:
        return tuple((x - y) % d for x, y, d in zip(u, v, self.moduli))

    def neg(self, u: Vector) -> Vector:
        return tuple(-x % d for x, d in zip(u, self.moduli))

    def scale(self, k: int, u: Vector) -> Vector:
        return tuple(k * x % d for x, d in zip(u, self.moduli))

    # group-description interface (written multiplicatively elsewhere)
    mul = add
    inv = neg

    def rank(self, u: Vector) -> int:
        r = 0
        for x, d in zip(u, self.moduli):
            r = r * d + x
        return r

    def unrank(self, r: int) -> Vector:
        out = []
        for d in reversed(self.moduli):
            r, x = divmod(r, d)
            out.append(x)
        return tuple(reversed(out))

    def elements(self) -> list[Vector]:
        return list(itertools.product(*(range(d) for d in self.moduli)))

    def generators(self) -> list[Vector]:
        gens = []
        for i, d in enumerate(self.moduli):
            if d > 1:
                e = [0] * len(self.moduli)
                e[i] = 1
                gens.append(tuple(e))
        return gens

    def element_order(self, u: Vector) -> int:
        o = 1
        for x, d in zip(u, self.moduli):
            o = _lcm(o, d // gcd(x, d))
        return o

    def span(self, gens: Sequence[Vector]) -> set[Vector]:
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for u in frontier:
                for g in gens:
                    w = self.add(u, g)
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        return seen


@dataclass(frozen=True)
class GDihElement:
    """Element v*h^flip of Dih(H); v is an exponent vector of H."""

    vector: Vector
    flip: int
    moduli: tuple[int, ...]

    def __mul__(self, other: "GDihElement") -> "GDihElement":
        return gdih_multiply(self, other)


def gdih_multiply(x: GDihElement, y: GDihElement) -> GDihElement:
    if x.moduli != y.moduli:
        raise ValueError("elements live in different generalized dihedral groups")
    sign = -1 if x.flip else 1
    vec = tuple((u + sign * v) % d for u, v, d in zip(x.vector, y.vector, x.moduli))
    return GDihElement(vec, x.flip ^ y.flip, x.moduli)


class DihedralGroup:
    """Dih(H) = H x| Z_2, the flip inverting H.  Ranked with the flip most significant."""

    def __init__(self, base: AbelianGroup | Sequence[int]) -> None:
        self.base = base if isinstance(base, AbelianGroup) else AbelianGroup(base)

    def __repr__(self) -> str:
        return f"DihedralGroup{self.base.moduli}"

    @property
    def order(self) -> int:
        return 2 * self.base.order

    @property
    def identity(self) -> GDihElement:
        return GDihElement(self.base.identity, 0, self.base.moduli)

    def make(self, vector: Sequence[int], flip: int = 0) -> GDihElement:
        return GDihElement(self.base.element(*vector), flip & 1, self.base.moduli)

    @property
    def h(self) -> GDihElement:
        return self.make(self.base.identity, 1)

    def mul(self, x: GDihElement, y: GDihElement) -> GDihElement:
        return gdih_multiply(x, y)

    def inv(self, x: GDihElement) -> GDihElement:
        if x.flip:
            return x
        return GDihElement(self.base.neg(x.vector), 0, x.moduli)

    def rank(self, x: GDihElement) -> int:
        return x.flip * self.base.order + self.base.rank(x.vector)

    def unrank(self, r: int) -> GDihElement:
        flip, rest = divmod(r, self.base.order)
        return GDihElement(self.base.unrank(rest), flip, self.base.moduli)

    def elements(self) -> list[GDihElement]:
        return [self.unrank(r) for r in range(self.order)]

    def generators(self) -> list[GDihElement]:
        return [self.make(g) for g in self.base.generators()] + [self.h]

    def word(self, *factors: GDihElement) -> GDihElement:
        out = self.identity
        for f in factors:
            out = gdih_multiply(out, f)
        return out


# ---------------------------------------------------------------- automorphisms


@dataclass(frozen=True)
class AbelianAutomorphism:
    """Endomorphism of H given by the images of the standard basis vectors."""

    moduli: tuple[int, ...]
    images: tuple[Vector, ...]

    def __call__(self, v: Vector) -> Vector:
        acc = [0] * len(self.moduli)
        for x, img in zip(v, self.images):
            if x:
                for j, y in enumerate(img):
                    acc[j] += x * y
        return tuple(a % d for a, d in zip(acc, self.moduli))


def _primary_slots(moduli: Sequence[int]) -> dict[int, list[tuple[int, int]]]:
    """prime -> list of (coordinate index, exponent)."""
    slots: dict[int, list[tuple[int, int]]] = {}
    for i, d in enumerate(moduli):
        for p, a in factorize(d).items():
            slots.setdefault(p, []).append((i, a))
    return slots


def _reduce_mod_p(row: list[int], basis: list[tuple[int, list[int]]], p: int) -> list[int]:
    row = row[:]
    for piv, b in basis:
        if row[piv]:
            f = row[piv] * pow(b[piv], -1, p) % p
            row = [(x - f * y) % p for x, y in zip(row, b)]
    return row


def _p_part_automorphisms(p: int, exps: list[int]) -> Iterator[tuple[Vector, ...]]:
    """Automorphisms of Z_{p^a1} x ... x Z_{p^ak} as tuples of generator images.

    A homomorphism is an automorphism iff it is invertible on the Frattini
    quotient, i.e. the images reduced mod p are linearly independent.
    """
    k = len(exps)
    mods = [p**a for a in exps]
    cands = []
    for a in exps:
        ranges = []
        for b, d in zip(exps, mods):
            step = p ** max(0, b - a)
            ranges.append(range(0, d, step))
        cands.append(list(itertools.product(*ranges)))

    def rec(j: int, basis: list[tuple[int, list[int]]], chosen: list[Vector]):
        if j == k:
            yield tuple(chosen)
            return
        for y in cands[j]:
            r = _reduce_mod_p([x % p for x in y], basis, p)
            piv = next((i for i, x in enumerate(r) if x), None)
            if piv is None:
                continue
            chosen.append(y)
            yield from rec(j + 1, basis + [(piv, r)], chosen)
            chosen.pop()

    yield from rec(0, [], [])


def iter_abelian_automorphisms(group: AbelianGroup, cap: int = 10**4) -> Iterator[AbelianAutomorphism]:
    if group.order > cap:
        raise ValueError(f"|H| = {group.order} exceeds automorphism enumeration cap {cap}")
    moduli = group.moduli
    slots = _primary_slots(moduli)
    primes = sorted(slots)

    # CRT idempotent lifting each p-component back into Z_{d_i}
    def embed(i: int, p: int, a: int, value: int) -> int:
        d = moduli[i]
        q = p**a
        rest = d // q
        # x = value mod q, 0 mod rest
        return (value * rest * pow(rest, -1, q)) % d if q > 1 else 0

    per_prime = []
    for p in primes:
        exps = [a for _, a in slots[p]]
        per_prime.append(list(_p_part_automorphisms(p, exps)))

    for combo in itertools.product(*per_prime):
        images = []
        for i in range(len(moduli)):
            img = [0] * len(moduli)
            for p, phi in zip(primes, combo):
                for j, (ci, _) in enumerate(slots[p]):
                    if ci == i:
                        y = phi[j]
                        for (ti, ta), val in zip(slots[p], y):
                            img[ti] = (img[ti] + embed(ti, p, ta, val)) % moduli[ti]
            images.append(tuple(img))
        yield AbelianAutomorphism(moduli, tuple(images))


def abelian_automorphisms(group: AbelianGroup, cap: int = 10**4) -> list[AbelianAutomorphism]:
    return list(iter_abelian_automorphisms(group, cap))


def count_abelian_automorphisms(group: AbelianGroup) -> int:
    """Product over primary components, counted without materializing maps."""
    total = 1
    for p, sl in _primary_slots(group.moduli).items():
        total *= sum(1 for _ in _p_part_automorphisms(p, [a for _, a in sl]))
    return total
