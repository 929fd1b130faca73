"""Exact arithmetic in Z_n by exhaustive scanning.

Residues are plain ints reduced into [0, n).  Z_1 is treated as the
trivial ring whose only element (and only unit) is 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

SCAN_CAP = 10**7


class ScanTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class ModPoly:
    """Polynomial over Z_n, constant term first."""

    coefficients: tuple[int, ...]
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        reduced = tuple(c % self.modulus for c in self.coefficients)
        object.__setattr__(self, "coefficients", reduced)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = (acc * x + c) % self.modulus
        return acc


def cyclotomic5(n: int) -> ModPoly:
    """x^4 + x^3 + x^2 + x + 1 over Z_n."""
    return ModPoly((1, 1, 1, 1, 1), n)


def quartic_10_5(n: int) -> ModPoly:
    """x^4 + 10x^2 + 5 over Z_n."""
    return ModPoly((5, 0, 10, 0, 1), n)


def units(n: int) -> set[int]:
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return {0}
    return {x for x in range(n) if gcd(x, n) == 1}


def poly_roots(poly: ModPoly, cap: int = SCAN_CAP) -> set[int]:
    n = poly.modulus
    if n > cap:
        raise ScanTooLarge(f"modulus {n} too large for exhaustive scan (cap {cap})")
    return {x for x in range(n) if poly(x) == 0}


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def eq1_solvable_by_factorization(m: int) -> bool:
    """Closed-form criterion for solvability of the cyclotomic quintic in Z_m."""
    if m in (1, 5):
        return True
    f = factorize(m)
    if f.get(5, 0) > 1:
        return False
    others = [p for p in f if p != 5]
    return bool(others) and all(p % 5 == 1 for p in others)


def multiplicative_order(x: int, n: int) -> int:
    if n == 1:
        return 1
    if gcd(x, n) != 1:
        raise ValueError(f"{x} is not a unit mod {n}")
    k, y = 1, x % n
    while y != 1:
        y = y * x % n
        k += 1
    return k


def solve_eq1(m: int) -> set[int]:
    if m < 1:
        raise ValueError("m must be positive")
    roots = poly_roots(cyclotomic5(m))
    if bool(roots) != eq1_solvable_by_factorization(m):
        raise AssertionError(f"root scan and factorization criterion disagree for m={m}")
    if m > 5:
        for r in roots:
            if multiplicative_order(r, m) != 5:
                raise AssertionError(f"root {r} mod {m} does not have order 5")
    return roots


def euler_phi(n: int) -> int:
    result = n
    for p in factorize(n):
        result -= result // p
    return result


def order5_unit(n: int) -> int:
    """Smallest unit of multiplicative order exactly 5 in Z_n."""
    if n < 1:
        raise ValueError("n must be positive")
    phi = euler_phi(n)
    if phi % 5:
        raise ValueError(f"no unit of order 5 mod {n}: 5 does not divide |Z_{n}^*| = {phi}")
    for x in range(2, n):
        if gcd(x, n) == 1 and pow(x, 5, n) == 1:
            return x
    raise AssertionError("unreachable: Cauchy guarantees an element of order 5")


def sqrt_mod(a: int, p: int) -> set[int]:
    a %= p
    return {x for x in range(p) if x * x % p == a}


def smallest(values: set[int], what: str) -> int:
    if not values:
        raise ValueError(f"no {what}")
    return min(values)


def inv(x: int, n: int) -> int:
    """Modular inverse; non-invertible input is a hard error."""
    try:
        return pow(x, -1, n)
    except ValueError:
        raise ValueError(f"{x} is not invertible mod {n}") from None
