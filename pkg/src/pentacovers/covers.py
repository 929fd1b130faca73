"""Quotients by semiregular subgroups and regular/symmetric cover verification."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .graph import Graph, regular_valency
from .groups import ClosureCapExceeded, Perm, PermGroup, is_semiregular, normalizer
from .symmetry import are_isomorphic, automorphism_group, automorphism_group_any, group_is_arc_transitive


class NotAnAutomorphism(ValueError):
    pass


def _check_automorphisms(g: Graph, gens: Iterable[Perm]) -> None:
    for k in gens:
        if k.degree != g.n:
            raise NotAnAutomorphism(f"permutation of degree {k.degree} on a graph with {g.n} vertices")
        img = k.images
        for u, v in g.edges():
            if not g.has_edge(img[u], img[v]):
                raise NotAnAutomorphism(f"{k!r} maps edge ({u}, {v}) to a non-edge")


def quotient(g: Graph, N: PermGroup) -> tuple[Graph, list[int]]:
    """Quotient graph on the N-orbits plus the projection vertex -> orbit index."""
    _check_automorphisms(g, N.generators)
    orbits = N.orbits()
    proj = [0] * g.n
    for i, orb in enumerate(orbits):
        for v in orb:
            proj[v] = i
    edges = {(min(proj[u], proj[v]), max(proj[u], proj[v])) for u, v in g.edges() if proj[u] != proj[v]}
    return Graph.from_edges(len(orbits), sorted(edges)), proj


def valency_preserved(g: Graph, proj: Sequence[int]) -> bool:
    """Each vertex's neighbours lie in distinct fibres, none of them its own."""
    for v, nbrs in enumerate(g.adj):
        fibres = {proj[w] for w in nbrs}
        if len(fibres) != len(nbrs) or proj[v] in fibres:
            return False
    return True


def edge_fibres_partition(g: Graph, q: Graph, proj: Sequence[int]) -> bool:
    """Every cover edge projects onto a base edge and each base edge has a fibre of equal size."""
    counts: dict[tuple[int, int], int] = {}
    for u, v in g.edges():
        a, b = proj[u], proj[v]
        if a == b or not q.has_edge(a, b):
            return False
        key = (min(a, b), max(a, b))
        counts[key] = counts.get(key, 0) + 1
    return len(counts) == q.edge_count and len(set(counts.values())) <= 1


@dataclass
class CoverReport:
    semiregular: bool
    orbit_count: int
    quotient: Graph
    valency_preserved: bool
    quotient_iso_target: Perm | None
    subgroup_order: int
    fibre_preserving_group_order: int | None = None
    fibre_arc_transitive: bool | None = None
    fibre_group_source: str | None = None
    base_order: int = 0
    notes: list[str] = field(default_factory=list)

    @property
    def regular_checks_passed(self) -> bool:
        return (self.semiregular and self.valency_preserved and self.quotient_iso_target is not None
                and self.orbit_count == self.base_order and self.orbit_count >= 3)

    @property
    def checks_passed(self) -> bool:
        if self.fibre_group_source is None:
            return self.regular_checks_passed
        return self.regular_checks_passed and bool(self.fibre_arc_transitive)

    def to_dict(self) -> dict:
        return {
            "semiregular": self.semiregular,
            "orbit_count": self.orbit_count,
            "valency_preserved": self.valency_preserved,
            "quotient_order": self.quotient.n,
            "iso_to_base": self.quotient_iso_target is not None,
            "fibre_group_order": self.fibre_preserving_group_order,
            "fibre_arc_transitive": self.fibre_arc_transitive,
            "checks_passed": self.checks_passed,
            "fibre_group_source": self.fibre_group_source,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def verify_regular_cover(cover: Graph, K: PermGroup, base: Graph) -> CoverReport:
    """Record semiregularity, valency preservation, orbit count and the quotient isomorphism."""
    q, proj = quotient(cover, K)
    semi = is_semiregular(K)
    kept = valency_preserved(cover, proj)
    iso = None
    if q.n == base.n and q.edge_count == base.edge_count:
        iso = are_isomorphic(q, base)
    report = CoverReport(semi, q.n, q, kept, iso, K.order(), base_order=base.n)
    if kept and regular_valency(q) != regular_valency(cover):
        report.notes.append("fibres distinct but quotient not regular of the cover valency")
        report.valency_preserved = False
    return report


def verify_symmetric_cover(cover: Graph, K: PermGroup, base: Graph, supplied: PermGroup | None = None,
                           cap: int = 10**6) -> CoverReport:
    """Regular-cover checks plus arc-transitivity of the fibre-preserving group.

    With ``supplied`` the given group is used (after checking it consists of
    automorphisms normalizing K); otherwise F is the normalizer of K in the
    enumerated full automorphism group.
    """
    report = verify_regular_cover(cover, K, base)
    if supplied is not None:
        _check_automorphisms(cover, supplied.generators)
        if not supplied.normalizes(K):
            report.notes.append("supplied group does not normalize K")
            report.fibre_group_source = "supplied"
            report.fibre_arc_transitive = False
            return report
        F = supplied
        report.fibre_group_source = "supplied"
    else:
        aut = automorphism_group(cover)
        if aut.order > cap:
            raise ClosureCapExceeded(cap, aut.order)
        A = aut.group()
        A.close(cap)
        F = normalizer(A, K)
        report.fibre_group_source = "normalizer in full automorphism group"
    report.fibre_preserving_group_order = F.order()
    report.fibre_arc_transitive = group_is_arc_transitive(cover, list(F.generators))
    return report


# --------------------------------------------------------- dihedral subgroups


def _involutions_without_fixed_points(elements: Iterable[Perm]) -> list[Perm]:
    out = []
    for g in elements:
        img = g.images
        if all(img[img[i]] == i and img[i] != i for i in range(len(img))):
            out.append(g)
    return sorted(out, key=lambda g: g.images)


def semiregular_dihedral_subgroups(A: PermGroup, n: int) -> list[PermGroup]:
    """All semiregular subgroups of the enumerated group A isomorphic to D_n (order 2n), n >= 2.

    D_n is generated by two involutions whose product has order n; for n = 2
    that means two distinct commuting involutions. Every involution of a
    semiregular subgroup is fixed-point-free, so only those are paired.
    """
    if n < 2:
        raise ValueError("dihedral subgroups need n >= 2")
    invs = _involutions_without_fixed_points(A.close())
    seen: set[frozenset[Perm]] = set()
    found: list[PermGroup] = []
    for s, t in combinations(invs, 2):
        if (s * t).order() != n:
            continue
        K = PermGroup(A.degree, [s, t])
        elems = K.close(2 * n)
        key = frozenset(elems)
        if key in seen:
            continue
        seen.add(key)
        if len(elems) == 2 * n and all(g.is_identity() or not g.fixed_points() for g in elems):
            found.append(K)
    return found


@dataclass
class DihedralCoverSearch:
    subgroup: PermGroup | None
    normal_in_aut: bool
    report: CoverReport | None
    candidates: int
    normal_candidates: int


def find_dihedral_cover(cover: Graph, n: int, base: Graph, cap: int = 10**6) -> DihedralCoverSearch:
    """Locate a semiregular D_n inside Aut(cover) making cover a symmetric D_n-cover of base.

    Subgroups normal in the full automorphism group are tried first; when none
    works, the search falls back to any D_n whose normalizer is arc-transitive.
    """
    aut = automorphism_group(cover)
    A = aut.group()
    A.close(cap)
    cands = semiregular_dihedral_subgroups(A, n)
    normal = [K for K in cands if A.normalizes(K)]
    others = [K for K in cands if not A.normalizes(K)]
    for is_normal, pool in ((True, normal), (False, others)):
        for K in pool:
            if len(K.orbits()) != base.n:
                continue
            report = verify_symmetric_cover(cover, K, base, supplied=A if is_normal else None, cap=cap)
            if is_normal:
                report.fibre_group_source = "full automorphism group (K normal)"
            if report.checks_passed:
                return DihedralCoverSearch(K, is_normal, report, len(cands), len(normal))
    return DihedralCoverSearch(None, False, None, len(cands), len(normal))


# ------------------------------------------------ covering projections by search


def covering_projections(cover: Graph, base: Graph, limit: int = 10**4) -> list[tuple[int, ...]]:
    """Distinct fibre partitions of all locally bijective homomorphisms cover -> base.

    Each partition is returned as a tuple of base-vertex labels normalized so
    that labels appear in order of first occurrence. Independent of any group
    computation: it is a plain backtracking search that fixes where vertex 0
    and its neighbours go and then propagates.
    """
    from itertools import permutations

    n, adj, badj = cover.n, cover.adj, base.adj
    k = len(adj[0]) if n else 0
    found: set[tuple[int, ...]] = set()
    if n == 0 or any(len(a) != k for a in adj) or any(len(a) != k for a in badj):
        return []
    label = [-1] * n

    def consistent(v: int) -> bool:
        for x in (v, *adj[v]):
            lx = label[x]
            if lx < 0:
                continue
            seen = set()
            for w in adj[x]:
                lw = label[w]
                if lw < 0:
                    continue
                if lw in seen or not base.has_edge(lx, lw):
                    return False
                seen.add(lw)
        return True

    def choices(v: int) -> list[int]:
        opts: set[int] | None = None
        for w in adj[v]:
            lw = label[w]
            if lw < 0:
                continue
            used = {label[u] for u in adj[w] if u != v and label[u] >= 0}
            here = set(badj[lw]) - used
            opts = here if opts is None else opts & here
        return sorted(opts) if opts is not None else list(range(base.n))

    def search() -> None:
        if len(found) >= limit:
            return
        best, best_opts = None, None
        for v in range(n):
            if label[v] < 0:
                opts = choices(v)
                if best_opts is None or len(opts) < len(best_opts):
                    best, best_opts = v, opts
                    if len(opts) <= 1:
                        break
        if best is None:
            relabel: dict[int, int] = {}
            found.add(tuple(relabel.setdefault(x, len(relabel)) for x in label))
            return
        for c in best_opts:
            label[best] = c
            if consistent(best):
                search()
            label[best] = -1

    # starting assignments up to automorphisms of the base; the partitions found are label-free
    base_elems = automorphism_group_any(base).group().close()
    starts = set()
    for b0 in range(base.n):
        for images in permutations(badj[b0]):
            starts.add(min((g[b0], tuple(g[x] for x in images)) for g in base_elems))
    for b0, images in sorted(starts):
        label[:] = [-1] * n
        label[0] = b0
        for w, c in zip(adj[0], images):
            label[w] = c
        if consistent(0) and all(consistent(w) for w in adj[0]):
            search()
    return sorted(found)


def fibre_kernel(A: PermGroup, fibres: Sequence[int]) -> PermGroup:
    """Elements of the enumerated group A mapping every fibre to itself."""
    from .groups import group_from_elements

    keep = [g for g in A.close() if all(fibres[g.images[v]] == fibres[v] for v in range(len(fibres)))]
    return group_from_elements(A.degree, keep)
