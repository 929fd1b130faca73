"""A permutation group viewed as an abstract group, and right regular representations."""
from __future__ import annotations

from typing import Any, Protocol, Sequence

from .perm import CLOSURE_CAP, Perm, PermGroup


class GroupDescription(Protocol):
    order: int
    identity: Any

    def elements(self) -> list[Any]: ...
    def rank(self, x: Any) -> int: ...
    def mul(self, x: Any, y: Any) -> Any: ...
    def inv(self, x: Any) -> Any: ...
    def generators(self) -> list[Any]: ...


class PermutationGroupElements:
    """Elements of <gens> in BFS order, usable as a group description."""

    def __init__(self, degree: int, gens: Sequence[Perm], cap: int = CLOSURE_CAP) -> None:
        self.gens = list(gens)
        self.degree = degree
        group = PermGroup(degree, self.gens)
        ident = Perm.identity(degree)
        order = [ident]
        seen = {ident}
        i = 0
        while i < len(order):
            x = order[i]
            i += 1
            for g in group.generators:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    order.append(y)
                    if len(order) > cap:
                        raise ValueError(f"group enumeration exceeded cap {cap}")
        self._elements = order
        self._rank = {g: r for r, g in enumerate(order)}
        self.order = len(order)
        self.identity = ident

    def elements(self) -> list[Perm]:
        return list(self._elements)

    def rank(self, x: Perm) -> int:
        return self._rank[x]

    def mul(self, x: Perm, y: Perm) -> Perm:
        return x * y

    def inv(self, x: Perm) -> Perm:
        return x.inverse()

    def generators(self) -> list[Perm]:
        return list(self.gens)


def right_regular(group: GroupDescription, cap: int = CLOSURE_CAP, gens: Sequence[Any] | None = None) -> PermGroup:
    """R(G): x -> x*g on the ranked element list."""
    if group.order > cap:
        raise ValueError(f"|G| = {group.order} exceeds enumeration cap {cap}")
    elems = group.elements()
    perms = [right_multiplication(group, elems, g) for g in (gens if gens is not None else group.generators())]
    return PermGroup(group.order, perms)


def right_multiplication(group: GroupDescription, elems: Sequence[Any], g: Any) -> Perm:
    return Perm([group.rank(group.mul(x, g)) for x in elems], check=False)
