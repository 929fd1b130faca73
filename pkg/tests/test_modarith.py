from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pentacovers import modarith as ma


def _cyclotomic_condition(m: int) -> bool:
    """Independent restatement: m in {1, 5} or m = 5^t * prod p_i^e_i with t <= 1 and every p_i = 1 mod 5."""
    if m in (1, 5):
        return True
    n, fives = m, 0
    while n % 5 == 0:
        n //= 5
        fives += 1
    if fives > 1 or n == 1:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            if d % 5 != 1:
                return False
            while n % d == 0:
                n //= d
        d += 1
    return n == 1 or n % 5 == 1


def test_units_examples():
    assert ma.units(5) == {1, 2, 3, 4}
    assert ma.units(1) == {0}
    assert ma.units(12) == {1, 5, 7, 11}


@given(st.integers(1, 10**4), st.data())
def test_units_are_exactly_the_invertible_residues(n, data):
    x = data.draw(st.integers(0, n - 1))
    has_inverse = any(x * y % n == 1 % n for y in range(n))
    assert (x in ma.units(n)) == has_inverse


def test_poly_roots_examples():
    assert ma.poly_roots(ma.cyclotomic5(5)) == {1}
    assert ma.poly_roots(ma.cyclotomic5(11)) == {3, 4, 5, 9}
    assert 3 in ma.poly_roots(ma.quartic_10_5(11))


def test_poly_roots_refuses_huge_modulus():
    with pytest.raises(ma.ScanTooLarge, match="too large"):
        ma.poly_roots(ma.cyclotomic5(10**7 + 1))


@given(st.integers(1, 400), st.lists(st.integers(-50, 50), min_size=1, max_size=6))
def test_poly_roots_match_direct_evaluation(n, coeffs):
    poly = ma.ModPoly(tuple(coeffs), n)
    direct = {x for x in range(n) if sum(c * x**i for i, c in enumerate(coeffs)) % n == 0}
    assert ma.poly_roots(poly) == direct


def test_solve_eq1_examples():
    assert ma.solve_eq1(1) == {0}
    assert ma.solve_eq1(7) == set()
    assert 2 in ma.solve_eq1(31)


@pytest.mark.parametrize("m", range(1, 201))
def test_solve_eq1_matches_factorization_condition(m):
    roots = ma.solve_eq1(m)
    assert bool(roots) == _cyclotomic_condition(m)
    if m > 5:
        for r in roots:
            assert pow(r, 5, m) == 1 and r != 1


def test_order5_unit_examples():
    assert ma.order5_unit(11) == 3
    assert ma.order5_unit(121) == min(x for x in range(2, 121) if gcd(x, 121) == 1 and pow(x, 5, 121) == 1)
    with pytest.raises(ValueError, match="5 does not divide"):
        ma.order5_unit(7)


@given(st.integers(2, 3000))
def test_order5_unit_has_order_five_when_it_exists(n):
    if ma.euler_phi(n) % 5:
        with pytest.raises(ValueError):
            ma.order5_unit(n)
    else:
        x = ma.order5_unit(n)
        assert ma.multiplicative_order(x, n) == 5
        assert not any(gcd(y, n) == 1 and pow(y, 5, n) == 1 for y in range(2, x))


def test_sqrt_mod_examples():
    assert ma.sqrt_mod(5, 11) == {4, 7}
    assert ma.sqrt_mod(5, 19) == {9, 10}
    assert ma.sqrt_mod(0, 5) == {0}


PRIMES = [3, 5, 7, 11, 13, 19, 29, 31, 41, 59, 61, 71, 101]


@given(st.sampled_from(PRIMES), st.integers(0, 200))
def test_sqrt_mod_sizes(p, a):
    roots = ma.sqrt_mod(a, p)
    assert len(roots) in (0, 1, 2)
    assert (len(roots) == 1) == (a % p == 0)
    assert all(x * x % p == a % p for x in roots)


def test_inverse_of_non_unit_is_an_error():
    assert ma.inv(2, 11) == 6
    with pytest.raises(ValueError, match="not invertible"):
        ma.inv(11, 121)


def test_factorize_and_phi():
    assert ma.factorize(2662) == {2: 1, 11: 3}
    assert ma.euler_phi(121) == 110
