"""Acceptance harness: each criterion recomputes its numbers with the engine and compares."""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from importlib import resources
from itertools import combinations
from typing import Callable

from . import modarith as ma
from .construct import (
    bicayley,
    bicayley_of,
    canonical_arc_group,
    canonical_cover_subgroup,
    complete_bipartite,
    dihedral_cayley_of,
    expected_base,
    family,
    generator_check,
    connection_rotation_holds,
    six_cycle_vertices,
)
from .covers import covering_projections, fibre_kernel, find_dihedral_cover, verify_symmetric_cover
from .graph import Graph, complete_graph, contains_cycle, girth, regular_valency
from .graphio import from_graph6
from .groups import AbelianGroup, identify_group
from .symmetry import are_isomorphic, automorphism_group, bicayley_F, s_transitivity

QUICK_VERTEX_LIMIT = 600


@dataclass
class CriterionResult:
    number: int
    title: str
    status: str  # "PASS", "FAIL" or "SKIP"
    detail: str
    seconds: float

    @property
    def passed(self) -> bool:
        return self.status == "PASS"

    def line(self) -> str:
        return f"[{self.status}] {self.number:2d}. {self.title}: {self.detail} ({self.seconds:.1f}s)"


# ------------------------------------------------------------------ oracles


def brute_force_automorphism_count(g: Graph) -> int:
    """Count adjacency-preserving bijections by plain vertex-by-vertex backtracking."""
    n = g.n
    image = [-1] * n
    used = [False] * n
    count = 0

    def extend(v: int) -> None:
        nonlocal count
        if v == n:
            count += 1
            return
        for w in range(n):
            if used[w] or g.degree(w) != g.degree(v):
                continue
            if all(g.has_edge(v, u) == g.has_edge(w, image[u]) for u in range(v)):
                image[v] = w
                used[w] = True
                extend(v + 1)
                used[w] = False
        image[v] = -1

    extend(0)
    return count


def brute_force_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    n = g1.n
    image = [-1] * n
    used = [False] * n

    def extend(v: int) -> bool:
        if v == n:
            return True
        for w in range(n):
            if used[w] or g1.degree(v) != g2.degree(w):
                continue
            if all(g1.has_edge(v, u) == g2.has_edge(w, image[u]) for u in range(v)):
                image[v] = w
                used[w] = True
                if extend(v + 1):
                    return True
                used[w] = False
        return False

    return extend(0)


def small_connected_graphs() -> list[Graph]:
    """All connected graphs on 1..7 vertices up to isomorphism (996 of them)."""
    data = resources.files("pentacovers").joinpath("small_connected.g6").read_bytes()
    return [from_graph6(line) for line in data.split(b"\n") if line]


# ---------------------------------------------------------------- criteria


def _eq1_structure(m: int) -> bool:
    fac = ma.factorize(m)
    return fac.get(5, 0) <= 1 and all(q == 5 or q % 5 == 1 for q in fac)


def criterion_1(quick: bool) -> tuple[bool, str]:
    bad = []
    for m in range(1, 201):
        roots = ma.solve_eq1(m)
        if bool(roots) != _eq1_structure(m):
            bad.append(m)
        if m > 5 and any(pow(r, 5, m) != 1 or r % m == 1 for r in roots):
            bad.append(m)
    solvable = [m for m in range(1, 201) if ma.solve_eq1(m)]
    return not bad, f"{len(solvable)} solvable m <= 200, mismatches {bad or 'none'}"


NAMED_ORDERS: list[tuple[tuple, int]] = [
    (("k6",), 720), (("k55",), 28800), (("k66m",), 1440), (("i12",), 120), (("cd", 11), 1320),
    (("cd", 31), 310), (("cgd125",), 30000), (("i12_2",), 480), (("g48",), 960), (("g60",), 600),
    (("g120",), 1200), (("cgd4", 1, 5), 4000), (("cgd4", 1, 11), 2420), (("cgd5", 1, 11), 1210),
]


def criterion_2(quick: bool) -> tuple[bool, str]:
    wrong, slow = [], []
    for args, want in NAMED_ORDERS:
        inst = family(*args)
        t = time.perf_counter()
        got = automorphism_group(inst.graph).order
        if time.perf_counter() - t > 30:
            slow.append(inst.label)
        if got != want:
            wrong.append(f"{inst.label}: {got} != {want}")
    return not wrong and not slow, f"{len(NAMED_ORDERS)} orders checked; wrong {wrong or 'none'}; over 30s {slow or 'none'}"


def criterion_3(quick: bool) -> tuple[bool, str]:
    parts, ok = [], True
    for i in (1, 2, 3):
        inst = family(f"cgd{i}", 1, 11, 2)
        aut = automorphism_group(inst.graph)
        label = identify_group(aut.stabilizer())
        s = s_transitivity(inst.graph, aut)
        ok &= aut.order == 13310 and label == "Z_5" and s == 1
        parts.append(f"cgd{i}: |Aut|={aut.order} stab={label} s={s}")
    return ok, "; ".join(parts)


def criterion_4(quick: bool) -> tuple[bool, str]:
    insts = [family(f"cgd{i}", 1, 11, 2) for i in (1, 2, 3)]
    found = []
    for a, b in combinations(insts, 2):
        if are_isomorphic(a.graph, b.graph) is not None:
            found.append(f"{a.name}~{b.name}")
    return not found, "3 pairs searched exhaustively; isomorphic pairs " + (", ".join(found) or "none")


def _cover_instances(quick: bool) -> list[tuple]:
    full = [("cgd1", 1, 11, 2), ("cgd2", 1, 11, 2), ("cgd3", 1, 11, 2)]
    small = [("cgd4", 1, 5), ("cgd4", 1, 11), ("cgd5", 1, 11)]
    return small if quick else full + small


def criterion_5(quick: bool) -> tuple[bool, str]:
    parts, ok = [], True
    for args in _cover_instances(quick):
        inst = family(*args)
        N = canonical_cover_subgroup(inst)  # raises on order, cyclicity, semiregularity or normality failure
        base = expected_base(inst)
        rep = verify_symmetric_cover(inst.graph, N, base, supplied=canonical_arc_group(inst, with_beta=False))
        good = rep.checks_passed and regular_valency(rep.quotient) == 5 and rep.quotient.n == 2 * inst.p
        ok &= good
        parts.append(f"{inst.label}: |N|={N.order()} quotient {rep.quotient.n} {'ok' if good else 'FAILED'}")
    if quick:
        parts.append("cgd1-3 at 2662 vertices run in full mode")
    return ok, "; ".join(parts)


DIHEDRAL_COVERS = [("i12_2", 2), ("g48", 3), ("g60", 5), ("g120", 10)]


def criterion_6(quick: bool) -> tuple[bool, str]:
    parts, ok = [], True
    k6 = complete_graph(6)
    for name, n in DIHEDRAL_COVERS:
        inst = family(name)
        res = find_dihedral_cover(inst.graph, n, k6)
        if res.report is not None:
            parts.append(f"{name}: D_{n} {'normal' if res.normal_in_aut else 'non-normal'}, F order "
                         f"{res.report.fibre_preserving_group_order}")
            continue
        ok = False
        note = f"{name}: no semiregular D_{n} gives a symmetric cover of K_6 ({res.candidates} candidates)"
        fib = inst.graph.n // 6
        if fib != 2 * n:
            note += f"; fibres of K_6 would have {fib} vertices, not {2 * n}"
            if fib % 2 == 0:
                alt = find_dihedral_cover(inst.graph, fib // 2, k6)
                note += f"; D_{fib // 2} also fails ({alt.candidates} candidates)"
        A = automorphism_group(inst.graph).group()
        projections = covering_projections(inst.graph, k6)
        kernels = [fibre_kernel(A, p) for p in projections]
        desc = []
        for K in kernels:
            involutions = sum(1 for g in K.close() if g.order() == 2)
            desc.append(f"order {K.order()} with {involutions} involution(s)")
        note += f"; {len(projections)} covering projection(s) onto K_6, fibre kernel " + ", ".join(desc)
        parts.append(note)
    return ok, "; ".join(parts)


def criterion_7(quick: bool) -> tuple[bool, str]:
    parts, ok = [], True
    H = AbelianGroup((5,))
    g = bicayley(H, [], [], [(i,) for i in range(5)])
    good = are_isomorphic(g, complete_bipartite(5)) is not None
    ok &= good
    parts.append(f"BiCay(Z_5, Z_5) ~ K_5,5: {good}")
    for args in [("cgd4", 1, 5), ("cgd4", 1, 11), ("cgd5", 1, 11)]:
        inst = family(*args)
        b = bicayley_of(inst)
        c = dihedral_cayley_of(inst)
        good = are_isomorphic(b, c) is not None
        ok &= good
        parts.append(f"{inst.label}: {good}")
    return ok, "; ".join(parts)


def criterion_8(quick: bool) -> tuple[bool, str]:
    targets = [(("cgd5", 1, 11), 5), (("cgd4", 1, 11), 10), (("cgd4", 1, 5), 20)]
    if not quick:
        targets = [((f"cgd{i}", 1, 11, 2), 5) for i in (1, 2, 3)] + targets
    parts, ok = [], True
    for args, want in targets:
        inst = family(*args)
        H, S = inst.bicayley_form
        res = bicayley_F(H, S)
        good = len(res.F) == want and res.verified
        ok &= good
        parts.append(f"{inst.label}: |F|={len(res.F)} (want {want}), |N|={res.normalizer_order}")
    if quick:
        parts.append("cgd1-3 at 2662 vertices run in full mode")
    return ok, "; ".join(parts)


STABILIZER_TARGETS = [
    (("cgd5", 1, 11), "Z_5"), (("cd", 31), "Z_5"), (("cd", 41), "Z_5"), (("g60",), "D_5"),
    (("g120",), "D_5"), (("cgd4", 1, 11), "D_5"), (("i12_2",), "F_20"), (("g48",), "F_20"),
]


def criterion_9(quick: bool) -> tuple[bool, str]:
    targets = list(STABILIZER_TARGETS)
    if not quick:
        targets = [((f"cgd{i}", 1, 11, 2), "Z_5") for i in (1, 2, 3)] + targets
    wrong = []
    for args, want in targets:
        inst = family(*args)
        got = identify_group(automorphism_group(inst.graph).stabilizer())
        if got != want:
            wrong.append(f"{inst.label}: {got} != {want}")
    return not wrong, f"{len(targets)} stabilizers identified; mismatches {wrong or 'none'}"


def _cgd_instances(quick: bool) -> list:
    args = [("cgd4", 1, 5), ("cgd4", 1, 11), ("cgd5", 1, 11), ("cgd4", 11, 5),
            ("cgd1", 1, 11, 2), ("cgd2", 1, 11, 2), ("cgd3", 1, 11, 2)]
    insts = [family(*a) for a in args]
    return [i for i in insts if not quick or i.graph.n <= QUICK_VERTEX_LIMIT]


def criterion_10(quick: bool) -> tuple[bool, str]:
    bad = []
    insts = _cgd_instances(quick)
    for inst in insts:
        if not contains_cycle(inst.graph, six_cycle_vertices(inst)) or girth(inst.graph) > 6:
            bad.append(inst.label)
    return not bad, f"{len(insts)} instances; failures {bad or 'none'}"


def criterion_11(quick: bool) -> tuple[bool, str]:
    bad = []
    insts = _cgd_instances(quick)
    for inst in insts:
        if not generator_check(inst).ok or not connection_rotation_holds(inst):
            bad.append(inst.label)
    return not bad, f"{len(insts)} instances; failures {bad or 'none'}"


def criterion_12(quick: bool) -> tuple[bool, str]:
    graphs = small_connected_graphs()
    rng = random.Random(12)
    order_bad, iso_bad, pairs = [], [], 0
    for idx, g in enumerate(graphs):
        if automorphism_group(g).order != brute_force_automorphism_count(g):
            order_bad.append(idx)
        perm = list(range(g.n))
        rng.shuffle(perm)
        if are_isomorphic(g, g.relabel(perm)) is None:
            iso_bad.append(idx)
    buckets: dict[tuple, list[int]] = {}
    for idx, g in enumerate(graphs):
        key = (g.n, g.edge_count, tuple(sorted(g.degree(v) for v in range(g.n))))
        buckets.setdefault(key, []).append(idx)
    for members in buckets.values():
        for i, j in combinations(members, 2):
            pairs += 1
            engine = are_isomorphic(graphs[i], graphs[j]) is not None
            if engine != brute_force_isomorphic(graphs[i], graphs[j]):
                iso_bad.append((i, j))
    ok = not order_bad and not iso_bad
    return ok, (f"{len(graphs)} graphs, {pairs} same-degree-sequence pairs; order mismatches "
                f"{order_bad or 'none'}, isomorphism mismatches {iso_bad or 'none'}")


CRITERIA: list[tuple[int, str, Callable[[bool], tuple[bool, str]], bool]] = [
    (1, "cyclotomic solvability for m <= 200", criterion_1, False),
    (2, "named automorphism group orders", criterion_2, False),
    (3, "cgd1-3 at (1, 11, 2): order, stabilizer, s", criterion_3, True),
    (4, "cgd1-3 at (1, 11, 2) pairwise non-isomorphic", criterion_4, True),
    (5, "canonical cyclic cover subgroups", criterion_5, False),
    (6, "dihedral covers of K_6", criterion_6, False),
    (7, "bi-Cayley vs dihedral Cayley form", criterion_7, False),
    (8, "bi-Cayley normalizer sizes |F|", criterion_8, False),
    (9, "vertex stabilizer identification", criterion_9, False),
    (10, "6-cycles and girth", criterion_10, False),
    (11, "generator orders and rotation identities", criterion_11, False),
    (12, "engine vs brute force on connected graphs <= 7 vertices", criterion_12, False),
]


def run(quick: bool = False, only: set[int] | None = None,
        progress: Callable[[CriterionResult], None] | None = None) -> list[CriterionResult]:
    results = []
    for number, title, fn, full_only in CRITERIA:
        if only is not None and number not in only:
            continue
        if quick and full_only:
            res = CriterionResult(number, title, "SKIP", "full tier (2662-vertex instances)", 0.0)
        else:
            t = time.perf_counter()
            try:
                ok, detail = fn(quick)
                status = "PASS" if ok else "FAIL"
            except Exception as exc:  # a crash is a failed criterion, reported with its message
                status, detail = "FAIL", f"{type(exc).__name__}: {exc}"
            res = CriterionResult(number, title, status, detail, time.perf_counter() - t)
        results.append(res)
        if progress is not None:
            progress(res)
    return results
