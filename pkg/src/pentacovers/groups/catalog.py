"""Group fingerprints and a small catalog of named groups to match them against."""
from __future__ import annotations

import itertools
from collections import Counter
from functools import lru_cache
from typing import Callable, NamedTuple

from .perm import Perm, PermGroup

FINGERPRINT_CAP = 10**4


class Fingerprint(NamedTuple):
    order: int
    order_histogram: tuple[tuple[int, int], ...]
    abelian: bool
    cyclic: bool


def fingerprint(group: PermGroup) -> Fingerprint:
    if group.order() > FINGERPRINT_CAP:
        raise ValueError(f"fingerprint limited to groups of order <= {FINGERPRINT_CAP}")
    elems = group.close()
    hist = Counter(g.order() for g in elems)
    n = len(elems)
    return Fingerprint(n, tuple(sorted(hist.items())), group.is_abelian(), hist.get(n, 0) > 0)


# ---------------------------------------------------------------- constructors


def _cyclic(n: int) -> PermGroup:
    return PermGroup(n, [Perm([(i + 1) % n for i in range(n)])])


def _dihedral(n: int) -> PermGroup:
    """Dihedral group of order 2n."""
    if n == 2:
        return PermGroup(4, [Perm.from_cycles(4, [(0, 1), (2, 3)]), Perm.from_cycles(4, [(0, 2), (1, 3)])])
    return PermGroup(n, [Perm([(i + 1) % n for i in range(n)]), Perm([-i % n for i in range(n)])])


def _shift(g: Perm, offset: int, degree: int) -> Perm:
    imgs = list(range(degree))
    for i, x in enumerate(g.images):
        imgs[i + offset] = x + offset
    return Perm(imgs)


def _product(a: PermGroup, b: PermGroup) -> PermGroup:
    n = a.degree + b.degree
    return PermGroup(n, [_shift(g, 0, n) for g in a.generators] + [_shift(g, a.degree, n) for g in b.generators])


def _sym(n: int) -> PermGroup:
    return PermGroup(n, [Perm.from_cycles(n, [tuple(range(n))]), Perm.from_cycles(n, [(0, 1)])])


def _alt(n: int) -> PermGroup:
    return PermGroup(n, [Perm.from_cycles(n, [(0, 1, i)]) for i in range(2, n)])


def _frobenius20() -> PermGroup:
    return PermGroup(5, [Perm([(x + 1) % 5 for x in range(5)]), Perm([2 * x % 5 for x in range(5)])])


def _even_pairs_s4_s5() -> PermGroup:
    """Index-2 subgroup of S_4 x S_5 of pairs with equal sign: (A_4 x A_5) x| Z_2."""
    base = _product(_alt(4), _alt(5))
    swap = Perm.from_cycles(9, [(0, 1), (4, 5)])
    return PermGroup(9, list(base.generators) + [swap])


# F_4 = {0, 1, w, w+1} encoded as 0..3
def _f4_mul(a: int, b: int) -> int:
    r = 0
    for i in range(2):
        if (b >> i) & 1:
            r ^= a << i
    if r & 4:
        r ^= 0b111
    return r


def _affine_f4(det_ok: Callable[[int], bool], frobenius: bool) -> PermGroup:
    pts = list(itertools.product(range(4), repeat=2))
    index = {v: i for i, v in enumerate(pts)}
    gens = []
    for a, b, c, d in itertools.product(range(4), repeat=4):
        det = _f4_mul(a, d) ^ _f4_mul(b, c)
        if det and det_ok(det):
            gens.append(Perm([index[(_f4_mul(a, x) ^ _f4_mul(b, y), _f4_mul(c, x) ^ _f4_mul(d, y))] for x, y in pts]))
    gens.append(Perm([index[(x ^ 1, y)] for x, y in pts]))
    if frobenius:
        gens.append(Perm([index[(_f4_mul(x, x), _f4_mul(y, y))] for x, y in pts]))
    return PermGroup(16, gens)


_NAMED: dict[str, Callable[[], PermGroup]] = {
    "F_20": _frobenius20,
    "F_20xZ_2": lambda: _product(_frobenius20(), _cyclic(2)),
    "F_20xZ_4": lambda: _product(_frobenius20(), _cyclic(4)),
    "A_5": lambda: _alt(5),
    "S_5": lambda: _sym(5),
    "A_4xA_5": lambda: _product(_alt(4), _alt(5)),
    "S_4xS_5": lambda: _product(_sym(4), _sym(5)),
    "(A_4xA_5):Z_2": _even_pairs_s4_s5,
    "ASL(2,4)": lambda: _affine_f4(lambda d: d == 1, False),
    "AGL(2,4)": lambda: _affine_f4(lambda d: True, False),
    "ASigmaL(2,4)": lambda: _affine_f4(lambda d: d == 1, True),
    "AGammaL(2,4)": lambda: _affine_f4(lambda d: True, True),
}

# vertex-stabilizer types for pentavalent (G,s)-transitive graphs, by s
STABILIZERS_BY_S: dict[int, tuple[str, ...]] = {
    1: ("Z_5", "D_5", "D_10"),
    2: ("F_20", "F_20xZ_2", "A_5", "S_5"),
    3: ("F_20xZ_4", "A_4xA_5", "S_4xS_5", "(A_4xA_5):Z_2"),
    4: ("ASL(2,4)", "AGL(2,4)", "ASigmaL(2,4)", "AGammaL(2,4)"),
    5: ("Z_2^6:GammaL(2,4)",),
}
# the s=5 group (order 23040) exceeds the fingerprint cap and is matched by order only
STABILIZER_ORDERS_BY_S: dict[int, frozenset[int]] = {
    1: frozenset({5, 10, 20}),
    2: frozenset({20, 40, 60, 120}),
    3: frozenset({80, 720, 2880, 1440}),
    4: frozenset({960, 2880, 1920, 5760}),
    5: frozenset({23040}),
}


@lru_cache(maxsize=1)
def catalog_groups() -> dict[str, PermGroup]:
    out: dict[str, PermGroup] = {}
    for n in range(1, 101):
        out[f"Z_{n}"] = _cyclic(n)
    for n in range(2, 101):
        out[f"D_{n}"] = _dihedral(n)
    for name, make in _NAMED.items():
        out[name] = make()
    return out


@lru_cache(maxsize=None)
def _catalog_fingerprint(name: str) -> Fingerprint:
    return fingerprint(catalog_groups()[name])


def catalog() -> dict[Fingerprint, str]:
    """Full fingerprint table; raises if two entries collide."""
    table: dict[Fingerprint, str] = {}
    for name in catalog_groups():
        fp = _catalog_fingerprint(name)
        if fp in table:
            raise AssertionError(f"catalog fingerprints collide: {table[fp]} and {name}")
        table[fp] = name
    return table


def identify(fp: Fingerprint) -> str:
    for name, grp in catalog_groups().items():
        if grp.order() == fp.order and _catalog_fingerprint(name) == fp:
            return name
    return "unrecognized"


def identify_group(group: PermGroup) -> str:
    if group.order() > FINGERPRINT_CAP:
        return "unrecognized"
    return identify(fingerprint(group))
