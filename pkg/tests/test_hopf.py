import pytest

from hopfinv import (
    GF,
    QQ,
    Subspace,
    cyclic_group_table,
    dual_group_algebra,
    dual_hopf,
    group_algebra,
    is_geometrically_cosemisimple,
    left_integral_space,
    restricted_enveloping,
    right_integral_space,
    sweedler_hopf,
    symmetric_group_table,
    validate_hopf,
)
from hopfinv.builders import PLieAlgebra, abelian_p_lie, check_group_table
from hopfinv.hopf import HopfError, coideal_subalgebra_check, make_hopf


GROUP_TABLES = {
    "Z1": cyclic_group_table(1),
    "Z2": cyclic_group_table(2),
    "Z3": cyclic_group_table(3),
    "Z4": cyclic_group_table(4),
    "Z5": cyclic_group_table(5),
    "Z6": cyclic_group_table(6),
    "S3": symmetric_group_table(3),
    "V4": (
        (0, 1, 2, 3),
        (1, 0, 3, 2),
        (2, 3, 0, 1),
        (3, 2, 1, 0),
    ),
}


def test_group_table_validation():
    for table in GROUP_TABLES.values():
        identity, inverses = check_group_table(table)
        assert identity == 0
        assert sorted(inverses) == list(range(len(table)))
    with pytest.raises(ValueError):
        check_group_table(((0, 1), (1, 1)))  # 1 has no inverse
    # identity away from index 0 is allowed and located
    assert check_group_table(((1, 0), (0, 1)))[0] == 1
    with pytest.raises(ValueError):
        check_group_table(((0, 1), (1, 2)))  # out of range entry


def test_group_algebras_satisfy_axioms():
    for field in (QQ, GF(2), GF(3), GF(5)):
        for name, table in GROUP_TABLES.items():
            H = group_algebra(field, table)
            assert validate_hopf(H) == [], (field.name, name)


def test_dual_group_algebras_satisfy_axioms():
    for field in (QQ, GF(2), GF(3)):
        for table in (GROUP_TABLES["Z3"], GROUP_TABLES["S3"]):
            H = dual_group_algebra(field, table)
            assert validate_hopf(H) == []


def test_double_dual_is_isomorphic_structure():
    H = group_algebra(GF(3), GROUP_TABLES["S3"])
    DD = dual_hopf(dual_hopf(H))
    assert sorted(DD.alg.mul_triples()) == sorted(H.alg.mul_triples())
    assert DD.comul == H.comul
    assert DD.counit == H.counit
    assert DD.antipode.rows == H.antipode.rows


def test_sweedler_axioms_and_noncommutativity():
    for field in (QQ, GF(3), GF(5)):
        H = sweedler_hopf(field)
        assert validate_hopf(H) == []
        assert not H.alg.is_commutative()
        D = dual_hopf(H)
        assert validate_hopf(D) == []
    with pytest.raises(HopfError):
        sweedler_hopf(GF(2))


def test_sweedler_integrals_are_one_sided():
    H = sweedler_hopf(QQ)
    lab = {l: i for i, l in enumerate(H.alg.labels)}
    left = left_integral_space(H)
    right = right_integral_space(H)
    assert left.dim == 1 and right.dim == 1
    # left integral x + gx, right integral x - gx
    x, gx = H.alg.basis_vec(lab["x"]), H.alg.basis_vec(lab["gx"])
    plus = tuple(QQ.add(a, b) for a, b in zip(x, gx))
    minus = tuple(QQ.sub(a, b) for a, b in zip(x, gx))
    assert left.contains(plus) and not left.contains(minus)
    assert right.contains(minus) and not right.contains(plus)


def test_group_algebra_integral_is_group_sum():
    H = group_algebra(QQ, GROUP_TABLES["Z2"])
    left = left_integral_space(H)
    right = right_integral_space(H)
    ones = tuple(QQ.one for _ in range(2))
    assert left.dim == right.dim == 1
    assert left.contains(ones) and right.contains(ones)


def test_restricted_enveloping_axioms_and_duals():
    for p in (2, 3):
        F = GF(p)
        lie = abelian_p_lie(F, ("x",), ((F.zero,),))
        H = restricted_enveloping(lie)
        assert H.dim == p
        assert validate_hopf(H) == []
        assert validate_hopf(dual_hopf(H)) == []
    # one-dimensional torus: D^[p] = D gives a squarefree minimal polynomial
    F = GF(3)
    lie = PLieAlgebra(F, ("D",), (((F.zero,),),), ((F.one,),))
    H = restricted_enveloping(lie)
    assert validate_hopf(H) == []
    assert is_geometrically_cosemisimple(H)


def test_p_lie_validation_rejects_bad_data():
    F = GF(2)
    with pytest.raises(HopfError):
        PLieAlgebra(F, ("D",), (((F.one,),),), ((F.zero,),))  # [D,D] != 0
    with pytest.raises(HopfError):
        PLieAlgebra(F, ("D",), (((),),), ((F.zero,),))  # wrong vector length
    # [x,y] = y with x^[2] = 0: ad(x^[2]) = 0 but ad(x)^2 = ad(x) on y
    zero2 = (F.zero, F.zero)
    bracket = ((zero2, (F.zero, F.one)), ((F.zero, F.one), zero2))
    with pytest.raises(HopfError):
        PLieAlgebra(F, ("x", "y"), bracket, (zero2, zero2))


def test_geometric_cosemisimplicity_maschke_table():
    for name, table in GROUP_TABLES.items():
        order = len(table)
        for p in (2, 3, 5):
            H = group_algebra(GF(p), table)
            expected = order % p != 0
            assert is_geometrically_cosemisimple(H) == expected, (name, p)
        assert is_geometrically_cosemisimple(group_algebra(QQ, table))


def test_dual_group_algebra_always_geometrically_cosemisimple():
    # pointwise function algebras split into copies of the field in every
    # characteristic, and the integral is the delta function at the identity
    for p in (2, 3):
        H = dual_group_algebra(GF(p), GROUP_TABLES["Z4"])
        assert is_geometrically_cosemisimple(H)


def test_sweedler_is_not_geometrically_cosemisimple():
    assert not is_geometrically_cosemisimple(sweedler_hopf(QQ))
    assert not is_geometrically_cosemisimple(sweedler_hopf(GF(3)))


def test_coideal_subalgebra_check():
    H = sweedler_hopf(QQ)
    lab = {l: i for i, l in enumerate(H.alg.labels)}
    F = QQ
    # span{1, g} is a Hopf subalgebra, in particular a right coideal subalgebra
    kg = Subspace.span(F, 4, [H.alg.basis_vec(lab["1"]), H.alg.basis_vec(lab["g"])])
    assert coideal_subalgebra_check(H, kg) == (True, True)
    # span{1, x} is a unital subalgebra but not a coideal
    kx = Subspace.span(F, 4, [H.alg.basis_vec(lab["1"]), H.alg.basis_vec(lab["x"])])
    coideal, unital = coideal_subalgebra_check(H, kx)
    assert unital and not coideal


def test_make_hopf_rejects_malformed_input():
    H = group_algebra(QQ, GROUP_TABLES["Z2"])
    with pytest.raises(HopfError):
        make_hopf(H.alg, H.comul[:1], H.counit, H.antipode)
    with pytest.raises(HopfError):
        make_hopf(H.alg, [(((0, 7), QQ.one),), (((1, 1), QQ.one),)], H.counit, H.antipode)


def test_validate_hopf_detects_broken_antipode():
    from hopfinv.linalg import Mat

    H = group_algebra(QQ, GROUP_TABLES["Z3"])
    bad = make_hopf(H.alg, H.comul, H.counit, Mat.identity(QQ, 3))
    problems = validate_hopf(bad)
    assert any("antipode" in p for p in problems)
