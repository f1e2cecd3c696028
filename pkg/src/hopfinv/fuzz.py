"""Seeded instance generator and the fuzz harness.

Four families: cyclic-group gradings of truncated polynomial quotients, group
actions by coordinate permutations and by signs, derivations in prime
characteristic, and costable quotients of graded instances.  Everything flows
from one random.Random(seed), so a seed pins the whole corpus; the summary is
canonical JSON and must come out byte-identical across runs.

Each instance goes through the core suite: comodule axioms, characteristic
polynomials against the cofactor oracle, coefficient invariance (alarming on
any H-reduced failure), fiber against brute_fiber at every invariant point,
the orbital/stabilizer dimension identities at every point, both Galois
routes, and in prime characteristic the integrality witnesses.  A theorem
violation writes the offending instance to the artifact directory and is
listed in the summary; noninvariant coefficients over non-H-reduced algebras
are recorded as ordinary data.
"""

import itertools
import json
import os
import random

from .algebra import algebra_from_dense
from .builders import (
    PLieAlgebra,
    cyclic_group_table,
    dual_group_algebra,
    group_algebra,
    restricted_enveloping,
    symmetric_group_table,
)
from .comodule import (
    action_matrices_from_generators,
    build_derivation,
    build_graded,
    build_group_action,
    costable_closure,
    invariant_subalgebra,
    invariants,
    is_h_reduced,
    quotient_comodule,
    validate_comodule,
)
from .fields import field_from_name, field_name
from .hopf import dual_hopf
from .instances import instance_digest, serialize_instance
from .invariant_theory import (
    TheoremViolation,
    brute_fiber,
    coaction_charpoly,
    coaction_charpoly_oracle,
    fiber,
    integrality_witness,
    invariance_check,
    is_galois,
    orbital,
    stabilizer,
)
from .linalg import Mat
from .spectrum import maximal_ideals

DEFAULT_FIELDS = ("Q", "F2", "F3")


def truncated_poly_algebra(field, d, r, lam, varname="x"):
    """K[x]/(x^d - lam*x^r) on the monomial basis 1, x, ..., x^(d-1)."""
    if not 0 <= r < d:
        raise ValueError("need 0 <= r < d")
    labels = tuple("1" if i == 0 else (varname if i == 1 else f"{varname}^{i}")
                   for i in range(d))

    def reduce_power(n):
        coeff = field.one
        while n >= d:
            coeff = field.mul(coeff, lam)
            if not coeff:
                return None
            n -= d - r
        return n, coeff

    dense = []
    for i in range(d):
        row = []
        for j in range(d):
            vec = [field.zero] * d
            hit = reduce_power(i + j)
            if hit is not None:
                n, coeff = hit
                vec[n] = coeff
            row.append(tuple(vec))
        dense.append(row)
    unit = tuple(field.one if i == 0 else field.zero for i in range(d))
    return algebra_from_dense(field, labels, unit, dense)


def split_algebra(field, n):
    """K^n with componentwise multiplication."""
    labels = tuple(f"e{i}" for i in range(n))
    dense = [[tuple(field.one if (k == i and i == j) else field.zero for k in range(n))
              for j in range(n)] for i in range(n)]
    unit = tuple(field.one for _ in range(n))
    return algebra_from_dense(field, labels, unit, dense)


def _gen_grading(rng, field):
    m = rng.choice((2, 3))
    options = [(d, r) for d in range(2, 5) for r in range(d) if (d - r) % m == 0]
    d, r = rng.choice(options)
    lam = field.random(rng) if rng.randrange(3) else field.zero
    A = truncated_poly_algebra(field, d, r, lam)
    H = group_algebra(field, cyclic_group_table(m))
    return build_graded(A, H, [i % m for i in range(d)]), f"grading-Z{m}"


def _perm_matrix(field, perm):
    """e_j -> e_{perm(j)}, so composition matches table[g][h] = g after h."""
    n = len(perm)
    return Mat(field, [[field.one if perm[j] == i else field.zero
                        for j in range(n)] for i in range(n)])


def _gen_permutation(rng, field):
    if rng.randrange(4) == 0:
        # coordinate permutations of K^3 by all of S3 (same lex order as the table)
        table = symmetric_group_table(3)
        perms = sorted(itertools.permutations(range(3)))
        mats = [_perm_matrix(field, perm) for perm in perms]
        H = dual_group_algebra(field, table)
        A = split_algebra(field, 3)
        return build_group_action(A, H, mats), "action-S3"
    n = rng.choice((2, 3))
    table = cyclic_group_table(n)
    shift = _perm_matrix(field, tuple((i + 1) % n for i in range(n)))
    full = action_matrices_from_generators(table, {1: shift}, field, n)
    H = dual_group_algebra(field, table)
    A = split_algebra(field, n)
    return build_group_action(A, H, full), f"action-Z{n}"


def _gen_sign(rng, field):
    d = rng.choice((2, 3, 4))
    # x -> -x respects x^d = lam only for even d; odd d keeps the nilpotent form
    lam = field.zero
    if d % 2 == 0 and rng.randrange(2):
        lam = field.random(rng)
    A = truncated_poly_algebra(field, d, 0, lam)
    sign = Mat(field, [[(field.one if i % 2 == 0 else field.neg(field.one)) if i == j
                        else field.zero for j in range(d)] for i in range(d)])
    table = cyclic_group_table(2)
    mats = action_matrices_from_generators(table, {1: sign}, field, d)
    H = dual_group_algebra(field, table)
    return build_group_action(A, H, mats), "action-sign"


def _gen_derivation(rng, field):
    p = field.char
    euler = rng.randrange(2) == 0
    if euler:
        d = rng.choice((2, 3, 4))
        pvec = ((field.one,),)   # D^[p] = D for the Euler operator
        dmat = Mat(field, [[field.from_int(i) if i == j else field.zero
                            for j in range(d)] for i in range(d)])
        tag = "derivation-euler"
    else:
        # d/dy descends to K[y]/(y^d) only when p | d (it must fix the ideal)
        d = p if p != 2 else rng.choice((2, 4))
        pvec = ((field.zero,),)  # d/dy kills y^{p-1} after p steps
        dmat = Mat(field, [[field.from_int(j) if j == i + 1 else field.zero
                            for j in range(d)] for i in range(d)])
        tag = "derivation-shift"
    A = truncated_poly_algebra(field, d, 0, field.zero, varname="y")
    lie = PLieAlgebra(field, ("D",), (((field.zero,),),), pvec)
    H = dual_hopf(restricted_enveloping(lie))
    return build_derivation(A, H, dmat), tag


def _gen_quotient(rng, field):
    base, _ = _gen_grading(rng, field)
    j = rng.randrange(base.algebra.dim)
    ideal = costable_closure(base, [base.algebra.basis_vec(j)])
    if ideal.is_zero() or ideal.is_full():
        return base, "grading-quotient-degenerate"
    quotC, _ = quotient_comodule(base, ideal)
    return quotC, "grading-quotient"


def generate_instance(rng, field):
    p = field.char
    roll = rng.randrange(10)
    if roll <= 3:
        return _gen_grading(rng, field)
    if roll <= 5:
        return _gen_permutation(rng, field)
    if roll == 6:
        if p != 2:
            return _gen_sign(rng, field)
        return _gen_grading(rng, field)
    if roll <= 8:
        if p:
            return _gen_derivation(rng, field)
        return _gen_permutation(rng, field)
    return _gen_quotient(rng, field)


def run_core_suite(C):
    """The per-instance checks; theorem violations propagate to the caller."""
    problems = validate_comodule(C)
    if problems:
        raise TheoremViolation(f"generated instance broke an axiom: {problems[0]}")
    A = C.algebra
    record = {
        "field": field_name(C.field),
        "dim_algebra": A.dim,
        "dim_hopf": C.hopf.dim,
    }
    reduced = is_h_reduced(C)
    record["h_reduced"] = reduced
    inv_space = invariants(C)
    noninvariant = []
    for j in range(A.dim):
        cp = coaction_charpoly(C, A.basis_vec(j), inv_space=inv_space)
        oracle = coaction_charpoly_oracle(C, A.basis_vec(j))
        if tuple(cp.coeffs) != tuple(oracle):
            raise TheoremViolation("characteristic polynomial oracle mismatch",
                                   {"basis_index": j})
        verdict = invariance_check(C, A.basis_vec(j), h_reduced=reduced, charpoly=cp)
        if not verdict.all_invariant:
            noninvariant.append(j)
    record["noninvariant_elements"] = noninvariant

    inv = invariant_subalgebra(C)
    points = maximal_ideals(A)
    dual = dual_hopf(C.hopf)
    fibers_ok = True
    for qpt in maximal_ideals(inv.algebra):
        one = fiber(C, qpt.ideal, inv=inv, points=points)
        other = brute_fiber(C, qpt.ideal, inv=inv, points=points)
        if [s.rows for s in one] != [s.rows for s in other]:
            raise TheoremViolation("fiber routes disagreed", {"ideal": qpt.ideal})
    record["fibers_ok"] = fibers_ok

    ranks = []
    for pt in points:
        orb = orbital(C, pt)
        st = stabilizer(C, pt, dual=dual, orb=orb)
        if C.hopf.dim % orb.e_dim:
            raise TheoremViolation("orbital rank does not divide dim H",
                                   {"rank": orb.e_dim})
        ranks.append((orb.e_dim, st.e_dim))
    record["point_ranks"] = ranks
    record["galois"] = is_galois(C, points=points).galois

    if C.field.char:
        kinds = []
        for j in range(A.dim):
            kinds.append(integrality_witness(C, A.basis_vec(j), inv_space=inv_space).kind)
        if any(k == "none" for k in kinds):
            raise TheoremViolation("missing integrality witness in characteristic p")
        record["witness_kinds"] = kinds
    return record


def fuzz(seed, count, field_names=None, artifact_dir=None, max_dim=None):
    """Generate and check `count` instances; returns the summary document.

    max_dim caps dim A * dim H; oversized draws are redrawn from the same
    stream, so the corpus stays a pure function of the seed.
    """
    rng = random.Random(seed)
    names = tuple(field_names or DEFAULT_FIELDS)
    fields = [field_from_name(n) for n in names]
    summary = {
        "seed": seed,
        "count": count,
        "fields": list(names),
        "instances": [],
        "alarms": [],
        "h_reduced_count": 0,
    }
    for i in range(count):
        field = fields[i % len(fields)]
        C, family = generate_instance(rng, field)
        if max_dim is not None:
            attempts = 0
            while C.algebra.dim * C.hopf.dim > max_dim:
                attempts += 1
                if attempts > 50:
                    raise ValueError(f"cannot satisfy max_dim={max_dim}")
                C, family = generate_instance(rng, field)
        digest = instance_digest(C)
        entry = {"index": i, "family": family, "digest": digest}
        try:
            record = run_core_suite(C)
        except TheoremViolation as exc:
            entry["alarm"] = str(exc)
            summary["alarms"].append({"index": i, "digest": digest, "message": str(exc)})
            if artifact_dir:
                os.makedirs(artifact_dir, exist_ok=True)
                path = os.path.join(artifact_dir, f"alarm-{digest[:16]}.json")
                with open(path, "w", encoding="utf-8") as fh:
                    fh.write(serialize_instance(C))
                entry["artifact"] = path
        else:
            entry.update(record)
            if record["h_reduced"]:
                summary["h_reduced_count"] += 1
        summary["instances"].append(entry)
    return summary


def render_summary(summary):
    return json.dumps(summary, sort_keys=True, separators=(",", ":"),
                      ensure_ascii=False) + "\n"
