import random

import pytest
from hypothesis import given, settings, strategies as st

from hopfinv import GF, QQ
from hopfinv.polys import (
    degree,
    derivative,
    factor_univariate,
    is_irreducible,
    monic,
    padd,
    pdivmod,
    peval,
    pgcd,
    pgcdext,
    pmul,
    poly_from_scalars,
    squarefree_decomposition,
    trim,
)

FIELDS = [QQ, GF(2), GF(3), GF(5)]


def rand_poly(field, rng, max_deg):
    d = rng.randrange(max_deg + 1)
    coeffs = [field.random(rng) for _ in range(d + 1)]
    return trim(coeffs)


@given(seed=st.integers(0, 10**6))
@settings(max_examples=50, deadline=None)
def test_divmod_identity(seed):
    rng = random.Random(seed)
    for field in FIELDS:
        f = rand_poly(field, rng, 6)
        g = rand_poly(field, rng, 3)
        if not g:
            continue
        q, r = pdivmod(field, f, g)
        assert padd(field, pmul(field, q, g), r) == f
        assert degree(r) < degree(g) or not r


@given(seed=st.integers(0, 10**6))
@settings(max_examples=50, deadline=None)
def test_gcd_divides_both(seed):
    rng = random.Random(seed)
    for field in FIELDS:
        f = rand_poly(field, rng, 5)
        g = rand_poly(field, rng, 5)
        d = pgcd(field, f, g)
        if d:
            assert not pdivmod(field, f, d)[1]
            assert not pdivmod(field, g, d)[1]


@given(seed=st.integers(0, 10**6))
@settings(max_examples=30, deadline=None)
def test_gcdext_bezout(seed):
    rng = random.Random(seed)
    for field in FIELDS:
        f = rand_poly(field, rng, 4)
        g = rand_poly(field, rng, 4)
        d, s, t = pgcdext(field, f, g)
        lhs = padd(field, pmul(field, s, f), pmul(field, t, g))
        assert lhs == d


@given(seed=st.integers(0, 10**6))
@settings(max_examples=30, deadline=None)
def test_factor_reassembles(seed):
    rng = random.Random(seed)
    for field in FIELDS:
        f = rand_poly(field, rng, 5)
        if degree(f) < 1:
            continue
        unit, factors = factor_univariate(field, f)
        prod = (unit,)
        for piece, mult in factors:
            assert is_irreducible(field, piece)
            assert piece == monic(field, piece)
            for _ in range(mult):
                prod = pmul(field, prod, piece)
        assert prod == f


def test_factor_known_rational():
    # x^4 - 1 = (x-1)(x+1)(x^2+1)
    f = poly_from_scalars(QQ, [-1, 0, 0, 0, 1])
    unit, factors = factor_univariate(QQ, f)
    assert unit == QQ.one
    degs = sorted(degree(p) for p, _ in factors)
    assert degs == [1, 1, 2]
    assert all(m == 1 for _, m in factors)


def test_factor_known_prime_field():
    # x^2 + 1 = (x+1)^2 over F_2, irreducible over F_3
    F2, F3 = GF(2), GF(3)
    f2 = poly_from_scalars(F2, [1, 0, 1])
    unit, factors = factor_univariate(F2, f2)
    assert len(factors) == 1 and factors[0][1] == 2
    f3 = poly_from_scalars(F3, [1, 0, 1])
    assert is_irreducible(F3, f3)
    # x^9 - x splits into every monic irreducible of degree dividing 2 over F_3
    f = poly_from_scalars(F3, [0, -1] + [0] * 7 + [1])
    unit, factors = factor_univariate(F3, f)
    assert sum(degree(p) * m for p, m in factors) == 9
    assert all(m == 1 for _, m in factors)
    assert sorted(degree(p) for p, _ in factors) == [1, 1, 1, 2, 2, 2]


def test_factor_deterministic():
    F = GF(5)
    f = poly_from_scalars(F, [2, 0, 1, 3, 0, 1, 4])
    runs = {tuple(factor_univariate(F, f)[1]) for _ in range(3)}
    assert len(runs) == 1


def test_squarefree_decomposition_char_p():
    F = GF(3)
    # (x^3 - x)^3 = x^9 - x^3 ... build (x+1)^3 * (x^2+1) instead, mixed multiplicity
    cube = poly_from_scalars(F, [1, 1])
    f = pmul(F, pmul(F, cube, pmul(F, cube, cube)), poly_from_scalars(F, [1, 0, 1]))
    parts = squarefree_decomposition(F, f)
    rebuilt = (F.one,)
    for piece, mult in parts:
        for _ in range(mult):
            rebuilt = pmul(F, rebuilt, piece)
    assert monic(F, rebuilt) == monic(F, f)
    mults = sorted(m for _, m in parts)
    assert 3 in mults


def test_derivative_and_eval():
    f = poly_from_scalars(QQ, [1, 2, 3])  # 1 + 2x + 3x^2
    assert derivative(QQ, f) == poly_from_scalars(QQ, [2, 6])
    assert peval(QQ, f, QQ.from_int(2)) == QQ.from_int(17)


def test_zassenhaus_degree_eight():
    # (x^4 - 2)(x^4 + 2): irreducible degree-4 pieces with matching constants
    f = poly_from_scalars(QQ, [-4, 0, 0, 0, 0, 0, 0, 0, 1])
    unit, factors = factor_univariate(QQ, f)
    assert sorted(degree(p) for p, _ in factors) == [4, 4]
    for p, m in factors:
        assert m == 1 and is_irreducible(QQ, p)
