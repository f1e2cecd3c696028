import random

import pytest

from hopfinv import (
    GF,
    QQ,
    Subspace,
    group_algebra,
    idempotent_decomposition,
    make_algebra,
    maximal_ideals,
    nilradical,
    radical_and_semisimplicity,
)
from hopfinv.algebra import AlgebraError, algebra_from_dense, make_algebra as _make
from hopfinv.builders import cyclic_group_table, symmetric_group_table
from hopfinv.spectrum import (
    charpoly_field,
    corner_algebra,
    eval_poly_in_algebra,
    is_field_with_certificate,
    split_etale,
)
from hopfinv.linalg import Mat, unit_vec


def split(field, n):
    return make_algebra(field, tuple(f"e{i}" for i in range(n)),
                        tuple(field.one for _ in range(n)),
                        [(i, i, [(i, field.one)]) for i in range(n)])


def truncated(field, d):
    """K[y]/(y^d)."""
    labels = tuple("one" if i == 0 else f"y{i}" for i in range(d))
    triples = []
    for i in range(d):
        for j in range(d):
            if i + j < d:
                triples.append((i, j, [(i + j, field.one)]))
            else:
                triples.append((i, j, []))
    return make_algebra(field, labels, unit_vec(field, d, 0), triples)


def number_field(field, minpoly_tail):
    """K[x]/(x^n - tail)."""
    n = len(minpoly_tail)
    labels = tuple("one" if i == 0 else f"x{i}" for i in range(n))
    powers = [[field.zero] * n for _ in range(2 * n)]
    for i in range(n):
        powers[i][i] = field.one
    for e in range(n, 2 * n):
        prev = powers[e - 1]
        shifted = [field.zero] + list(prev[:-1])
        if prev[-1]:
            shifted = [field.add(shifted[k], field.mul(prev[-1], minpoly_tail[k]))
                       for k in range(n)]
        powers[e] = shifted
    triples = [(i, j, [(k, c) for k, c in enumerate(powers[i + j]) if c])
               for i in range(n) for j in range(n)]
    return make_algebra(field, labels, unit_vec(field, n, 0), triples)


def test_radical_of_truncated_polynomials():
    for field in (QQ, GF(2), GF(3)):
        A = truncated(field, 4)
        rad, ss = radical_and_semisimplicity(A)
        assert not ss
        assert rad.dim == 3
        assert not rad.contains(A.unit)
        assert rad.contains(A.basis_vec(1))


def test_radical_group_algebra_modular_vs_ordinary():
    # F_2[Z_2] has radical spanned by e+g; Q[Z_2] is semisimple
    F = GF(2)
    A2 = group_algebra(F, cyclic_group_table(2)).alg
    rad, ss = radical_and_semisimplicity(A2)
    assert not ss and rad.dim == 1
    assert rad.contains((F.one, F.one))
    AQ = group_algebra(QQ, cyclic_group_table(2)).alg
    rad, ss = radical_and_semisimplicity(AQ)
    assert ss and rad.dim == 0


def test_radical_matches_nilradical_on_commutative():
    rng = random.Random(3)
    for field in (QQ, GF(3)):
        for d in (2, 3, 4):
            A = truncated(field, d)
            rad, _ = radical_and_semisimplicity(A)
            assert rad.rows == nilradical(A).rows
        A = split(field, 3)
        assert radical_and_semisimplicity(A)[0].rows == nilradical(A).rows


def test_radical_noncommutative_triangular():
    # 2x2 upper triangular matrices: radical is the strictly upper corner
    F = QQ
    # basis: e11, e12, e22
    dense = {
        (0, 0): [(0, F.one)], (0, 1): [(1, F.one)], (0, 2): [],
        (1, 0): [], (1, 1): [], (1, 2): [(1, F.one)],
        (2, 0): [], (2, 1): [], (2, 2): [(2, F.one)],
    }
    A = _make(F, ("e11", "e12", "e22"), (F.one, F.zero, F.one),
              [(i, j, row) for (i, j), row in dense.items()])
    rad, ss = radical_and_semisimplicity(A)
    assert not ss and rad.dim == 1 and rad.contains(A.basis_vec(1))


def test_maximal_ideals_split_case():
    A = split(QQ, 3)
    pts = maximal_ideals(A)
    assert len(pts) == 3
    for pt in pts:
        assert pt.degree == 1
        assert pt.ideal.dim == 2
        # evaluating the complementary idempotent gives 1
        assert pt.evaluate(A.unit) == pt.residue.unit


def test_maximal_ideals_field_case():
    A = number_field(QQ, (QQ.from_int(2), QQ.zero))  # Q(sqrt 2)
    pts = maximal_ideals(A)
    assert len(pts) == 1 and pts[0].degree == 2 and pts[0].ideal.dim == 0
    ok, prim, mp = is_field_with_certificate(A)
    assert ok and prim is not None and len(mp) == 3
    assert eval_poly_in_algebra(A, mp, prim) == A.zero_vec()


def test_maximal_ideals_mixed_degrees():
    # Q[x]/(x^3-1) = Q x Q(omega)
    A = number_field(QQ, (QQ.one, QQ.zero, QQ.zero))
    pts = maximal_ideals(A)
    assert [pt.degree for pt in pts] == [1, 2]


def test_maximal_ideals_local_case():
    A = truncated(GF(3), 3)
    pts = maximal_ideals(A)
    assert len(pts) == 1
    assert pts[0].ideal.dim == 2
    assert pts[0].ideal.rows == nilradical(A).rows


def test_idempotent_decomposition():
    A = number_field(QQ, (QQ.one, QQ.zero, QQ.zero))
    decomp = idempotent_decomposition(A)
    assert len(decomp) == 2
    total = A.zero_vec()
    for e, pt in decomp:
        assert A.mul_vec(e, e) == e
        total = tuple(QQ.add(a, b) for a, b in zip(total, e))
    assert total == A.unit
    e0, e1 = decomp[0][0], decomp[1][0]
    assert A.mul_vec(e0, e1) == A.zero_vec()


def test_split_etale_and_corner():
    A = split(QQ, 2)
    factors = split_etale(A)
    assert len(factors) == 2
    corner = corner_algebra(A, A.basis_vec(0))
    assert corner.algebra.dim == 1


def test_charpoly_field_and_eval():
    m = Mat(QQ, [(QQ.zero, QQ.one), (QQ.one, QQ.zero)])
    cp = charpoly_field(m)
    assert cp == (QQ.from_int(-1), QQ.zero, QQ.one)  # t^2 - 1
    A = split(QQ, 2)
    v = (QQ.one, QQ.from_int(-1))
    assert eval_poly_in_algebra(A, cp, v) == A.zero_vec()


def test_maximal_ideals_requires_commutative():
    F = QQ
    dense = {
        (0, 0): [(0, F.one)], (0, 1): [(1, F.one)], (0, 2): [],
        (1, 0): [], (1, 1): [], (1, 2): [(1, F.one)],
        (2, 0): [], (2, 1): [], (2, 2): [(2, F.one)],
    }
    A = _make(F, ("e11", "e12", "e22"), (F.one, F.zero, F.one),
              [(i, j, row) for (i, j), row in dense.items()])
    with pytest.raises(AlgebraError):
        maximal_ideals(A)


def test_spectrum_deterministic_order():
    A = split(GF(5), 4)
    once = [(pt.degree, pt.ideal.sort_key()) for pt in maximal_ideals(A)]
    again = [(pt.degree, pt.ideal.sort_key()) for pt in maximal_ideals(A)]
    assert once == again
    assert once == sorted(once)
