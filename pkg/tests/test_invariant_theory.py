import pytest

from hopfinv import (
    GF,
    QQ,
    Subspace,
    brute_fiber,
    coaction_charpoly,
    coaction_charpoly_oracle,
    cyclic_group_table,
    doi_trace,
    fiber,
    free_basis_over_invariants,
    group_algebra,
    h_radical,
    hopf_module_equivalence_check,
    ideal_correspondence_check,
    integral_point_survey,
    integral_space,
    integrality_witness,
    invariance_check,
    invariant_subalgebra,
    invariants,
    is_galois,
    is_h_reduced,
    make_algebra,
    make_comodule,
    maximal_ideals,
    module_direct_sum,
    module_from_algebra,
    module_invariants,
    nilpotency_consistency,
    norm_of_coaction,
    openness_ideal_check,
    orbital,
    stabilizer,
    weak_reductivity_certificate,
    weak_reductivity_check,
)
from hopfinv.comodule import ComoduleError
from hopfinv.invariant_theory import (
    TheoremViolation,
    invariant_power_identity,
    orbit_residue_iso_check,
    power_image_check,
    residue_degree_check,
)
from hopfinv.linalg import vec_is_zero


H_REDUCED = ("fix_trivial", "fix_g2", "fix_g2f2", "fix_sw", "fix_ga",
             "fix_der", "fix_z3", "fix_gauss")


def eval_in_algebra(A, coeffs, a):
    acc = A.zero_vec()
    for c in reversed(coeffs):
        acc = A.mul_vec(acc, a)
        acc = tuple(A.field.add(x, y) for x, y in zip(acc, c))
    return acc


def test_charpoly_matches_oracle_everywhere(corpus):
    for name, C in corpus.items():
        for j in range(C.algebra.dim):
            a = C.algebra.basis_vec(j)
            cp = coaction_charpoly(C, a)
            assert cp.coeffs == coaction_charpoly_oracle(C, a), (name, j)
            assert cp.degree == C.hopf.dim


def test_charpoly_pinned_values(corpus):
    g2 = corpus["fix_g2"]
    x = g2.algebra.basis_vec(1)
    cp = coaction_charpoly(g2, x)
    minus_one = tuple(QQ.neg(c) for c in g2.algebra.unit)
    assert cp.coeffs == (minus_one, g2.algebra.zero_vec(), g2.algebra.unit)

    sw = corpus["fix_sw"]
    u = sw.algebra.basis_vec(1)
    z = sw.algebra.zero_vec()
    assert coaction_charpoly(sw, u).coeffs == (z, z, z, z, sw.algebra.unit)

    gauss = corpus["fix_gauss"]
    xg = gauss.algebra.basis_vec(1)
    assert coaction_charpoly(gauss, xg).coeffs == (
        gauss.algebra.unit, gauss.algebra.zero_vec(), gauss.algebra.unit)


def test_charpoly_rejects_non_coactions():
    F = QQ
    A = make_algebra(F, ("one", "x"), (F.one, F.zero),
                     [(0, 0, [(0, F.one)]), (0, 1, [(1, F.one)]),
                      (1, 0, [(1, F.one)]), (1, 1, [(0, F.one)])])
    H = group_algebra(F, cyclic_group_table(2))
    bad = make_comodule(A, H, [[((0, 0), F.one)],
                               [((1, 1), F.one), ((0, 1), F.one)]])
    with pytest.raises(TheoremViolation):
        coaction_charpoly(bad, A.basis_vec(1))


def test_invariance_on_h_reduced_fixtures(corpus):
    for name in H_REDUCED:
        C = corpus[name]
        assert is_h_reduced(C)
        inv_space = invariants(C)
        for j in range(C.algebra.dim):
            a = C.algebra.basis_vec(j)
            verdict = invariance_check(C, a, h_reduced=True)
            assert verdict.all_invariant, (name, j)
            cp = coaction_charpoly(C, a, inv_space=inv_space)
            for c in cp.coeffs:
                assert inv_space.contains(c), (name, j)


def test_invariant_power_identity_and_rejection(corpus):
    g2 = corpus["fix_g2"]
    cp = invariant_power_identity(g2, g2.algebra.unit)
    # (t - 1)^2 = t^2 - 2t + 1
    two = QQ.from_int(2)
    assert cp.coeffs == (g2.algebra.unit,
                         (QQ.neg(two), QQ.zero),
                         g2.algebra.unit)
    with pytest.raises(ValueError):
        invariant_power_identity(g2, g2.algebra.basis_vec(1))


def test_norm_tracks_invertibility(corpus):
    g2 = corpus["fix_g2"]
    x = g2.algebra.basis_vec(1)
    n = norm_of_coaction(g2, x)
    assert n == tuple(QQ.neg(c) for c in g2.algebra.unit)
    sw = corpus["fix_sw"]
    assert norm_of_coaction(sw, sw.algebra.basis_vec(1)) == sw.algebra.zero_vec()


def test_nilpotency_consistency_pinned(corpus):
    sw = corpus["fix_sw"]
    answers = nilpotency_consistency(sw, sw.algebra.basis_vec(1))
    assert [flag for _, flag in answers] == [True]
    g2 = corpus["fix_g2"]
    answers = nilpotency_consistency(g2, g2.algebra.basis_vec(1))
    assert [flag for _, flag in answers] == [False, False]


def test_integrality_witness_on_h_reduced(corpus):
    for name in H_REDUCED:
        C = corpus[name]
        A = C.algebra
        inv_space = invariants(C)
        for j in range(A.dim):
            a = A.basis_vec(j)
            w = integrality_witness(C, a, inv_space=inv_space)
            assert w.found, (name, j)
            assert w.poly[-1] == A.unit
            for c in w.poly:
                assert inv_space.contains(c), (name, j)
            assert vec_is_zero(eval_in_algebra(A, w.poly, a)), (name, j)


def test_integrality_witness_char_p_all_vectors(corpus):
    # every element, not only basis vectors, over the char-2 fixtures
    for name in ("fix_g2f2", "fix_der"):
        C = corpus[name]
        A = C.algebra
        F = A.field
        inv_space = invariants(C)
        for c0 in range(2):
            for c1 in range(2):
                a = (F.from_int(c0), F.from_int(c1))
                w = integrality_witness(C, a, inv_space=inv_space)
                assert w.found, (name, a)
                assert vec_is_zero(eval_in_algebra(A, w.poly, a))


def test_witness_pinned_shapes(corpus):
    nilp = corpus["fix_trivial_nilp"]
    y = nilp.algebra.basis_vec(1)
    w = integrality_witness(nilp, y)
    assert w.kind == "charpoly"
    # (t - y)^2 = t^2 - 2y t since y^2 = 0
    assert w.poly == (nilp.algebra.zero_vec(),
                      tuple(QQ.mul(QQ.from_int(-2), c) for c in y),
                      nilp.algebra.unit)
    sw = corpus["fix_sw"]
    assert integrality_witness(sw, sw.algebra.basis_vec(1)).kind == "charpoly"


def test_openness_identity_everywhere(corpus):
    for name, C in corpus.items():
        for j in range(C.algebra.dim):
            rep = openness_ideal_check(C, C.algebra.basis_vec(j))
            assert rep.matched, (name, j)


def test_openness_pinned_counts(corpus):
    g2 = corpus["fix_g2"]
    rep = openness_ideal_check(g2, g2.algebra.basis_vec(1))
    assert rep.invertible_points == (0, 1)
    assert rep.vanishing_points == ()
    sw = corpus["fix_sw"]
    rep = openness_ideal_check(sw, sw.algebra.basis_vec(1))
    assert rep.invertible_points == ()
    assert rep.vanishing_points == (0,)


def test_fiber_matches_brute_fiber(corpus):
    expected = {
        "fix_trivial": [1, 1],
        "fix_trivial_nilp": [1],
        "fix_g2": [2],
        "fix_g2f2": [1],
        "fix_sw": [1],
        "fix_ga": [3],
        "fix_der": [1],
        "fix_z3": [2],
        "fix_gauss": [1],
    }
    for name, C in corpus.items():
        inv = invariant_subalgebra(C)
        sizes = []
        for q in maximal_ideals(inv.algebra):
            got = fiber(C, q, inv=inv)
            want = brute_fiber(C, q, inv=inv)
            assert [s.rows for s in got] == [s.rows for s in want], name
            sizes.append(len(got))
        assert sizes == expected[name], name


def test_fiber_rejects_non_points(corpus):
    C = corpus["fix_g2"]
    inv = invariant_subalgebra(C)
    with pytest.raises(ComoduleError):
        fiber(C, Subspace.full(QQ, inv.algebra.dim), inv=inv)


def test_orbital_stabilizer_counting(corpus):
    pinned = {"fix_g2": (2, 1), "fix_sw": (2, 2), "fix_ga": (3, 2),
              "fix_der": (2, 1), "fix_gauss": (2, 1)}
    for name, C in corpus.items():
        nh = C.hopf.dim
        for pt in maximal_ideals(C.algebra):
            orb = orbital(C, pt)
            st = stabilizer(C, pt, orb=orb)
            assert orb.e_dim * st.e_dim == nh, name
            assert nh % orb.e_dim == 0, name
            assert st.semisimple, name
            if name in pinned:
                assert (orb.e_dim, st.e_dim) == pinned[name], name


def test_galois_pinned(corpus):
    expected = {
        "fix_trivial": False, "fix_trivial_nilp": False, "fix_g2": True,
        "fix_g2f2": True, "fix_sw": False, "fix_ga": False,
        "fix_der": True, "fix_z3": True, "fix_gauss": True,
    }
    for name, C in corpus.items():
        rep = is_galois(C)
        assert rep.galois == expected[name], name
        assert rep.expected_rank == C.algebra.dim * C.hopf.dim
        if rep.galois:
            assert rep.gamma_rank == rep.expected_rank
            assert all(r == C.hopf.dim for r in rep.orbital_ranks)
        else:
            assert rep.gamma_rank < rep.expected_rank


def test_total_integrals_everywhere(corpus):
    for name, C in corpus.items():
        data = integral_space(C)
        assert data.has_total, name
        assert data.total.mulvec(C.hopf.alg.unit) == C.algebra.unit, name


def test_total_integral_pinned_values(corpus):
    g2 = corpus["fix_g2"]
    total = integral_space(g2).total
    assert total.col(0) == g2.algebra.unit        # phi(e) = 1
    assert total.col(1) == g2.algebra.zero_vec()  # phi(g) = 0
    der = corpus["fix_der"]
    total = integral_space(der).total
    assert total.col(0) == der.algebra.unit       # phi(1*) = 1
    assert total.col(1) == der.algebra.basis_vec(1)  # phi(D*) = y


def test_doi_trace_is_a_retraction(corpus):
    for name in ("fix_g2", "fix_sw", "fix_ga", "fix_der"):
        C = corpus[name]
        data = integral_space(C)
        M = module_from_algebra(C)
        MM = module_direct_sum(M, M)
        for mod in (M, MM):
            inv_m = module_invariants(mod)
            for v in inv_m.rows:
                assert doi_trace(mod, data.total, v) == v, name
            for j in range(mod.dim):
                w = doi_trace(mod, data.total, (mod.field.one,) * 0 + tuple(
                    mod.field.one if k == j else mod.field.zero for k in range(mod.dim)))
                assert inv_m.contains(w), (name, j)


def test_doi_trace_pinned_and_guard(corpus):
    g2 = corpus["fix_g2"]
    data = integral_space(g2)
    M = module_from_algebra(g2)
    x = g2.algebra.basis_vec(1)
    assert doi_trace(M, data.total, x) == g2.algebra.zero_vec()
    one_plus_x = (QQ.one, QQ.one)
    assert doi_trace(M, data.total, one_plus_x) == g2.algebra.unit
    from hopfinv.linalg import Mat
    not_total = Mat(QQ, ((QQ.zero, QQ.zero), (QQ.zero, QQ.zero)))
    with pytest.raises(ValueError):
        doi_trace(M, not_total, x)


def test_integral_point_survey_runs(corpus):
    for name, C in corpus.items():
        reports = integral_point_survey(C)
        assert len(reports) == len(maximal_ideals(C.algebra))
        for rep in reports:
            assert rep.stabilizer_semisimple
            assert rep.value_outside_point, name


def test_free_basis_ranks(corpus):
    expected = {
        "fix_trivial": (1, 1), "fix_g2": (2,), "fix_g2f2": (2,),
        "fix_sw": (2,), "fix_ga": (3,), "fix_der": (2,),
        "fix_z3": (3,), "fix_gauss": (2,),
    }
    for name in H_REDUCED:
        C = corpus[name]
        data = free_basis_over_invariants(C)
        assert data.ranks == expected[name], name
        for f in data.factors:
            assert f.corner_dim == f.rank * f.invariant_corner_dim, name


def test_free_basis_refuses_non_h_reduced(corpus):
    with pytest.raises(ComoduleError, match="h_radical"):
        free_basis_over_invariants(corpus["fix_trivial_nilp"])


def test_ideal_correspondence(corpus):
    rep = ideal_correspondence_check(corpus["fix_trivial"])
    assert rep.ok
    assert rep.costable_count >= 4 and rep.invariant_count >= 4
    for name in ("fix_g2", "fix_sw", "fix_ga"):
        assert ideal_correspondence_check(corpus[name]).ok, name
    with pytest.raises(ComoduleError, match="h_radical"):
        ideal_correspondence_check(corpus["fix_trivial_nilp"])


def test_hopf_module_equivalence(corpus):
    for name in ("fix_trivial", "fix_g2", "fix_sw", "fix_gauss"):
        C = corpus[name]
        M = module_from_algebra(C)
        rep = hopf_module_equivalence_check(C, M)
        assert rep.ok, name
        rep2 = hopf_module_equivalence_check(C, module_direct_sum(M, M))
        assert rep2.ok, name


def test_power_image_check(corpus):
    for name in ("fix_g2", "fix_sw", "fix_trivial"):
        C = corpus[name]
        zero_ideal = Subspace.zero(C.field, C.algebra.dim)
        results = power_image_check(C, zero_ideal)
        assert results, name
        for _, verdict in results:
            assert all(verdict.values()), name


def test_weak_reductivity_certificates(corpus):
    expected = {
        "fix_trivial": "a", "fix_trivial_nilp": "a", "fix_g2": "a",
        "fix_sw": "a", "fix_ga": "a", "fix_z3": "a", "fix_gauss": "a",
        "fix_g2f2": "b", "fix_der": "b",
    }
    for name, C in corpus.items():
        cert = weak_reductivity_certificate(C)
        assert cert.kind == expected[name], name
        assert cert.found


def test_weak_reductivity_check_rows(corpus):
    for name in ("fix_g2", "fix_der", "fix_trivial"):
        ok, rows = weak_reductivity_check(corpus[name])
        assert ok, name
        assert rows
        for ideal, surjective, down_dim, image_dim in rows:
            assert surjective and down_dim == image_dim


def test_residue_degree_check(corpus):
    for name, C in corpus.items():
        rep = residue_degree_check(C)
        assert rep.ok, name
    gauss = residue_degree_check(corpus["fix_gauss"])
    (pt, rel, rank), = gauss.rows
    assert rel == 2 and rank == 2
    z3 = residue_degree_check(corpus["fix_z3"])
    assert sorted((rel, rank) for _, rel, rank in z3.rows) == [(1, 3), (2, 3)]


def test_orbit_residue_iso(corpus):
    g2 = corpus["fix_g2"]
    for pt in maximal_ideals(g2.algebra):
        rep = orbit_residue_iso_check(g2, pt)
        assert rep.iso_checked and rep.iso_ok
        assert rep.fiber_ring_rank == rep.orbital_rank == 2
    gauss = corpus["fix_gauss"]
    pt, = maximal_ideals(gauss.algebra)
    rep = orbit_residue_iso_check(gauss, pt)
    assert not rep.iso_checked
    assert rep.fiber_ring_rank == rep.orbital_rank == 2
    with pytest.raises(ComoduleError):
        orbit_residue_iso_check(corpus["fix_trivial_nilp"],
                                maximal_ideals(corpus["fix_trivial_nilp"].algebra)[0])
