import itertools
import random
from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pentacovers.construct import family
from pentacovers.construct import canonical_cover_subgroup
from pentacovers.groups import (
    AbelianGroup,
    ClosureCapExceeded,
    DihedralGroup,
    GDihElement,
    Perm,
    PermGroup,
    PermutationGroupElements,
    abelian_automorphisms,
    centralizer,
    count_abelian_automorphisms,
    dumps_perms,
    fingerprint,
    gdih_multiply,
    identify_group,
    is_semiregular,
    is_semiregular_by_closure,
    loads_perms,
    normalizer,
    right_regular,
)
from pentacovers.groups.catalog import catalog
from pentacovers.symmetry import automorphism_group

MODULI = (4, 9, 3)


def gdih_elements(moduli=MODULI):
    return st.builds(
        lambda vec, flip: GDihElement(tuple(v % d for v, d in zip(vec, moduli)), flip, moduli),
        st.tuples(*[st.integers(0, d - 1) for d in moduli]),
        st.integers(0, 1),
    )


def test_gdih_examples():
    G = DihedralGroup(MODULI)
    h = G.h
    assert gdih_multiply(h, h) == G.identity
    a = G.make((1, 0, 0))
    ha = G.make((1, 0, 0), 1)
    assert gdih_multiply(ha, a) == G.make((0, 0, 0), 1)
    v = G.make((2, 5, 1))
    assert gdih_multiply(gdih_multiply(h, v), h) == G.make((2, 4, 2))


def test_gdih_mismatched_moduli():
    with pytest.raises(ValueError):
        gdih_multiply(GDihElement((0,), 0, (5,)), GDihElement((0,), 0, (7,)))


@given(gdih_elements(), gdih_elements(), gdih_elements())
def test_gdih_associative_with_inverses(x, y, z):
    G = DihedralGroup(MODULI)
    assert (x * y) * z == x * (y * z)
    assert G.mul(x, G.inv(x)) == G.identity
    assert G.unrank(G.rank(x)) == x


def test_rank_puts_flip_most_significant():
    G = DihedralGroup((2, 3))
    ranks = [G.rank(x) for x in G.elements()]
    assert ranks == list(range(12))
    assert G.rank(G.make((0, 0), 1)) == 6
    assert G.rank(G.make((1, 2))) == 5


@pytest.mark.parametrize("group, order", [
    (AbelianGroup((3,)), 3),
    (DihedralGroup((5,)), 10),
    (DihedralGroup((5, 5, 5)), 250),
])
def test_right_regular_is_regular(group, order):
    R = right_regular(group)
    assert R.degree == order and R.order() == order
    assert R.is_transitive() and is_semiregular(R)


def test_close_examples():
    S3 = PermGroup(3, [Perm([1, 0, 2]), Perm([1, 2, 0])])
    assert len(S3.close()) == 6
    g60 = family("g60").group
    assert g60.order == 60
    g120 = family("g120").group
    assert g120.order == 120


def test_close_cap_reports_partial_count():
    S6 = PermGroup(6, [Perm([1, 0, 2, 3, 4, 5]), Perm([1, 2, 3, 4, 5, 0])])
    with pytest.raises(ClosureCapExceeded) as info:
        S6.close(cap=100)
    assert info.value.partial > 100


def test_semiregular_examples():
    assert not is_semiregular(PermGroup(3, [Perm([1, 0, 2])]))
    N1 = canonical_cover_subgroup(family("cgd1", 1, 11, 2))
    assert is_semiregular(N1)


def _random_group(rng: random.Random, n: int, k: int) -> PermGroup:
    gens = []
    for _ in range(k):
        p = list(range(n))
        rng.shuffle(p)
        gens.append(Perm(p))
    return PermGroup(n, gens)


@given(st.integers(0, 10**6), st.integers(2, 7), st.integers(1, 2))
def test_semiregularity_two_ways(seed, n, k):
    G = _random_group(random.Random(seed), n, k)
    assert is_semiregular(G) == is_semiregular_by_closure(G)


@given(st.integers(0, 10**6), st.integers(2, 8), st.integers(1, 3))
def test_schreier_sims_order_matches_closure(seed, n, k):
    G = _random_group(random.Random(seed), n, k)
    H = PermGroup(n, G.generators)
    assert H.order() == len(G.close())
    for g in list(G.close())[:20]:
        assert g in H


@given(st.integers(0, 10**6))
def test_group_axioms_on_closure(seed):
    rng = random.Random(seed)
    G = _random_group(rng, 6, 2)
    elems = list(G.close())
    for _ in range(10):
        a, b, c = (rng.choice(elems) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a.inverse() in G.close()
        assert a * b in G.close()
    assert Perm.identity(6) in G.close()


def test_normalizer_examples():
    S3 = PermGroup(3, [Perm([1, 0, 2]), Perm([1, 2, 0])])
    S3.close()
    A3 = PermGroup(3, [Perm([1, 2, 0])])
    assert normalizer(S3, A3).order() == 6
    assert normalizer(S3, PermGroup(3, [Perm([1, 0, 2])])).order() == 2
    A = automorphism_group(family("i12_2").graph).group()
    A.close()
    normal_d2 = [K for K in _klein_subgroups(A) if A.normalizes(K)]
    assert normal_d2
    assert normalizer(A, normal_d2[0]).order() == A.order() == 480


def _klein_subgroups(A: PermGroup):
    invs = [g for g in A.close() if g.order() == 2 and not g.fixed_points()]
    for s, t in itertools.combinations(invs, 2):
        if s * t == t * s:
            yield PermGroup(A.degree, [s, t])


def test_centralizer_examples():
    S3 = PermGroup(3, [Perm([1, 0, 2]), Perm([1, 2, 0])])
    S3.close()
    A3 = PermGroup(3, [Perm([1, 2, 0])])
    C = centralizer(S3, A3)
    assert set(C.close()) == set(A3.close())
    Z12 = PermGroup(12, [Perm([(i + 1) % 12 for i in range(12)])])
    Z12.close()
    assert centralizer(Z12, PermGroup(12, [Perm([(i + 4) % 12 for i in range(12)])])).order() == 12


def test_fingerprint_examples():
    Z5 = PermGroup(5, [Perm([1, 2, 3, 4, 0])])
    fp = fingerprint(Z5)
    assert dict(fp.order_histogram) == {1: 1, 5: 4} and fp.cyclic
    D5 = PermGroup(5, [Perm([1, 2, 3, 4, 0]), Perm([0, 4, 3, 2, 1])])
    fp = fingerprint(D5)
    assert dict(fp.order_histogram) == {1: 1, 2: 5, 5: 4} and not fp.abelian
    F20 = PermGroup(5, [Perm([1, 2, 3, 4, 0]), Perm([(2 * i) % 5 for i in range(5)])])
    assert dict(fingerprint(F20).order_histogram) == {1: 1, 2: 5, 4: 10, 5: 4}
    assert identify_group(Z5) == "Z_5" and identify_group(D5) == "D_5" and identify_group(F20) == "F_20"


@given(st.permutations(list(range(7))))
def test_fingerprint_invariant_under_relabelling(p):
    G = PermGroup(7, [Perm([1, 2, 3, 4, 0, 5, 6]), Perm([0, 4, 3, 2, 1, 6, 5])])
    q = Perm(p)
    H = PermGroup(7, [g.conjugate(q) for g in G.generators])
    assert fingerprint(G) == fingerprint(H)


def test_catalog_fingerprints_are_distinct():
    table = catalog()
    assert len(table) == len(set(table.values()))
    assert {"Z_5", "D_5", "D_10", "F_20", "F_20xZ_2", "A_5", "S_5", "A_4xA_5", "S_4xS_5"} <= set(table.values())


def test_abelian_automorphism_counts():
    assert len(abelian_automorphisms(AbelianGroup((5,)))) == 4
    assert len(abelian_automorphisms(AbelianGroup((5, 5)))) == 480
    assert len(abelian_automorphisms(AbelianGroup((4, 2)))) == 8
    assert count_abelian_automorphisms(AbelianGroup((1, 121, 11))) == 133100


def _brute_force_automorphisms(H: AbelianGroup) -> int:
    """Count generator-image tuples that define bijective homomorphisms."""
    gens = [g for g in (tuple(int(i == j) for i in range(len(H.moduli))) for j in range(len(H.moduli)))]
    elems = H.elements()
    count = 0
    for images in itertools.product(elems, repeat=len(gens)):
        if any(H.scale(d, img) != H.identity for img, d in zip(images, H.moduli)):
            continue
        if len(H.span(list(images))) == H.order:
            count += 1
    return count


@pytest.mark.parametrize("moduli", [(5,), (12,), (2, 2), (4, 2), (2, 2, 2), (3, 3), (6, 2), (4, 4), (9, 3), (10, 5),
                                    (8, 2), (6, 6), (2, 4, 2), (7, 7), (14, 2)])
def test_abelian_automorphisms_against_brute_force(moduli):
    H = AbelianGroup(moduli)
    autos = abelian_automorphisms(H)
    assert len(autos) == _brute_force_automorphisms(H)
    elems = H.elements()
    rng = random.Random(len(elems))
    for alpha in autos[:40]:
        assert len({alpha(x) for x in elems}) == H.order
        x, y = rng.choice(elems), rng.choice(elems)
        assert alpha(H.add(x, y)) == H.add(alpha(x), alpha(y))


def test_permutation_text_roundtrip():
    perms = [Perm([2, 0, 1, 3]), Perm.identity(4), Perm([3, 2, 1, 0])]
    assert loads_perms(dumps_perms(perms)) == perms


def test_permutation_group_elements_is_a_group_description():
    G = PermutationGroupElements(5, [Perm([1, 0, 2, 3, 4]), Perm([1, 2, 3, 4, 0])])
    assert G.order == 120
    assert Counter(g.order() for g in G.elements())[2] == 25
