import pytest

from hopfinv import (
    GF,
    QQ,
    AlgebraError,
    Mat,
    Subspace,
    ideal_generated,
    make_algebra,
    min_poly,
    parse_element,
    quotient_algebra,
    subalgebra_on_subspace,
    tensor_product,
)
from hopfinv.algebra import AlgebraOps, algebra_from_dense, is_ideal, validate_algebra
from hopfinv.linalg import unit_vec


def split(field, n):
    return make_algebra(field, tuple(f"e{i}" for i in range(n)),
                        tuple(field.one for _ in range(n)),
                        [(i, i, [(i, field.one)]) for i in range(n)])


def dual_numbers(field):
    return make_algebra(field, ("one", "y"), (field.one, field.zero),
                        [(0, 0, [(0, field.one)]), (0, 1, [(1, field.one)]),
                         (1, 0, [(1, field.one)])])


def test_make_algebra_and_multiplication():
    A = dual_numbers(QQ)
    y = A.basis_vec(1)
    assert A.mul_vec(y, y) == A.zero_vec()
    assert A.mul_vec(A.unit, y) == y
    assert validate_algebra(A, require_commutative=True) == []


def test_validate_catches_broken_associativity():
    # e*e = f, f*f = e, e*f = f*e = 0 is commutative but not associative or unital
    A = make_algebra(QQ, ("e", "f"), (QQ.one, QQ.zero),
                     [(0, 0, [(1, QQ.one)]), (1, 1, [(0, QQ.one)])])
    problems = validate_algebra(A, require_commutative=True)
    assert problems


def test_power_and_invertibility():
    A = split(QQ, 2)
    v = (QQ.from_int(2), QQ.from_int(3))
    assert A.power(v, 3) == (QQ.from_int(8), QQ.from_int(27))
    assert A.is_invertible(v)
    assert not A.is_invertible((QQ.one, QQ.zero))


def test_format_element():
    A = dual_numbers(QQ)
    assert A.format_element(A.zero_vec()) == "0"
    text = A.format_element((QQ.from_int(2), QQ.from_int(-1)))
    assert "one" in text and "y" in text


def test_parse_element_expressions():
    A = dual_numbers(QQ)
    assert parse_element(A, "y") == (QQ.zero, QQ.one)
    assert parse_element(A, "2*y + 1") == (QQ.one, QQ.from_int(2))
    assert parse_element(A, "-y") == (QQ.zero, QQ.from_int(-1))
    assert parse_element(A, "1/2*one - 3*y") == (QQ.parse("1/2"), QQ.from_int(-3))
    with pytest.raises(AlgebraError):
        parse_element(A, "q + 1")
    with pytest.raises(AlgebraError):
        parse_element(A, "")


def test_ideal_generated_and_is_ideal():
    A = dual_numbers(QQ)
    I = ideal_generated(A, [A.basis_vec(1)])
    assert I.dim == 1 and is_ideal(A, I)
    J = Subspace.span(QQ, 2, [A.unit])
    assert not is_ideal(A, J)


def test_quotient_algebra_round_trip():
    A = split(QQ, 3)
    I = ideal_generated(A, [A.basis_vec(2)])
    quot = quotient_algebra(A, I)
    Q = quot.algebra
    assert Q.dim == 2
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = quot.project(A.mul_vec(A.basis_vec(i), A.basis_vec(j)))
            rhs = Q.mul_vec(quot.project(A.basis_vec(i)), quot.project(A.basis_vec(j)))
            assert lhs == rhs
    back = quot.lift_vec(quot.project(A.unit))
    assert quot.project(back) == quot.project(A.unit)
    with pytest.raises(AlgebraError):
        quotient_algebra(A, Subspace.full(QQ, 3))


def test_tensor_product_structure():
    A = split(QQ, 2)
    B = dual_numbers(QQ)
    T = tensor_product(A, B)
    TA = T.algebra
    assert TA.dim == 4
    v = T.pure(A.basis_vec(0), B.basis_vec(1))
    w = T.pure(A.basis_vec(0), B.basis_vec(1))
    assert TA.mul_vec(v, w) == TA.zero_vec()  # (e0 (x) y)^2 = e0 (x) y^2 = 0
    u = T.pure(A.unit, B.unit)
    assert TA.mul_vec(u, v) == v
    assert "⊗" in TA.labels[T.index(0, 1)]


def test_min_poly():
    A = split(QQ, 2)
    v = (QQ.one, QQ.from_int(-1))
    mp = min_poly(A, v)
    # v^2 = 1, v not scalar: minimal polynomial is t^2 - 1
    assert mp == (QQ.from_int(-1), QQ.zero, QQ.one)
    assert min_poly(A, A.unit) == (QQ.from_int(-1), QQ.one)


def test_subalgebra_on_subspace():
    A = split(QQ, 3)
    diag = Subspace.span(QQ, 3, [A.unit, (QQ.one, QQ.one, QQ.zero)])
    sub = subalgebra_on_subspace(A, diag)
    assert sub.algebra.dim == 2
    v = sub.from_ambient((QQ.from_int(2), QQ.from_int(2), QQ.one))
    assert sub.to_ambient(v) == (QQ.from_int(2), QQ.from_int(2), QQ.one)
    bad = Subspace.span(QQ, 3, [A.basis_vec(0), A.basis_vec(1)])
    with pytest.raises(AlgebraError):
        subalgebra_on_subspace(A, bad)  # misses the unit


def test_algebra_ops_protocol():
    A = dual_numbers(GF(3))
    ops = AlgebraOps(A)
    assert ops.mul(ops.one, ops.one) == ops.one
    assert ops.is_zero(ops.sub(ops.one, ops.one))
    assert ops.add(ops.zero, ops.one) == ops.one


def test_algebra_from_dense_matches_make_algebra():
    F = GF(2)
    dense = [[(F.one, F.zero), (F.zero, F.one)], [(F.zero, F.one), (F.zero, F.zero)]]
    A = algebra_from_dense(F, ("one", "y"), (F.one, F.zero), dense)
    B = dual_numbers(F)
    assert A.mul == B.mul and A.unit == B.unit
