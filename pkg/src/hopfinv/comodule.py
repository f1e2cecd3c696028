"""Commutative comodule algebras over a finite-dimensional Hopf algebra.

The coaction is stored in the same sparse-row shape as a comultiplication:
row i lists ((a, h), scalar) summands of δ(a_i) ∈ A⊗H with the tensor index
convention a·dim(H) + h throughout.
"""

from dataclasses import dataclass

from .algebra import (FiniteAlgebra, min_poly, quotient_algebra, subalgebra_on_subspace,
                      tensor_product, validate_algebra)
from .hopf import HopfAlgebra
from .linalg import Mat, Subspace, preimage_space, unit_vec, vec_is_zero
from .polys import pgcdext, pmul, trim
from .spectrum import corner_algebra, eval_poly_in_algebra, maximal_ideals, nilradical


class ComoduleError(ValueError):
    pass


@dataclass(frozen=True)
class ComoduleAlgebra:
    algebra: FiniteAlgebra
    hopf: HopfAlgebra
    coaction: tuple  # coaction[i] = (((a, h), scalar), ...)

    @property
    def field(self):
        return self.algebra.field

    def coaction_vec(self, v):
        F = self.field
        nh = self.hopf.dim
        out = [F.zero] * (self.algebra.dim * nh)
        for i, c in enumerate(v):
            if not c:
                continue
            for (a, h), s in self.coaction[i]:
                idx = a * nh + h
                out[idx] = F.add(out[idx], F.mul(c, s))
        return tuple(out)

    def coaction_matrix(self):
        cols = [self.coaction_vec(self.algebra.basis_vec(j)) for j in range(self.algebra.dim)]
        return Mat.from_cols(self.field, cols)

    def slice_matrix(self, h_index):
        """The map a ↦ (id⊗h*_k)(δa) as a matrix on A."""
        F = self.field
        na = self.algebra.dim
        cols = []
        for j in range(na):
            col = [F.zero] * na
            for (a, h), s in self.coaction[j]:
                if h == h_index:
                    col[a] = F.add(col[a], s)
            cols.append(tuple(col))
        return Mat.from_cols(F, cols)


def make_comodule(alg, hopf, coaction_rows):
    if alg.field != hopf.field:
        raise ComoduleError("algebra and Hopf algebra over different fields")
    F = alg.field
    rows = []
    if len(coaction_rows) != alg.dim:
        raise ComoduleError("coaction has the wrong number of rows")
    for row in coaction_rows:
        merged = {}
        for (a, h), s in row:
            if not (0 <= a < alg.dim and 0 <= h < hopf.dim):
                raise ComoduleError("coaction index out of range")
            merged[(a, h)] = F.add(merged[(a, h)], s) if (a, h) in merged else s
        rows.append(tuple(sorted((k, s) for k, s in merged.items() if s)))
    return ComoduleAlgebra(alg, hopf, tuple(rows))


def validate_comodule(C, require_commutative=True):
    """Axioms of a comodule algebra; returns a list of violations."""
    problems = list(validate_algebra(C.algebra, require_commutative=require_commutative))
    F = C.field
    A, H = C.algebra, C.hopf
    na, nh = A.dim, H.dim
    square = tensor_product(A, H.alg)
    T = square.algebra

    if C.coaction_vec(A.unit) != square.pure(A.unit, H.alg.unit):
        problems.append("coaction does not send the unit to 1⊗1")
    deltas = [C.coaction_vec(A.basis_vec(i)) for i in range(na)]
    for i in range(na):
        for j in range(na):
            prod = A.mul_vec(A.basis_vec(i), A.basis_vec(j))
            if C.coaction_vec(prod) != T.mul_vec(deltas[i], deltas[j]):
                problems.append(f"coaction not multiplicative at ({A.labels[i]}, {A.labels[j]})")
                break

    for i in range(na):
        left = {}   # (δ⊗id)δ at index ((a,h1),h2)
        right = {}  # (id⊗Δ)δ
        counit_leg = [F.zero] * na
        for (a, h), s in C.coaction[i]:
            for (a2, h1), t in C.coaction[a]:
                key = (a2, h1, h)
                left[key] = F.add(left.get(key, F.zero), F.mul(s, t))
            for (h1, h2), t in H.comul[h]:
                key = (a, h1, h2)
                right[key] = F.add(right.get(key, F.zero), F.mul(s, t))
            if H.counit[h]:
                counit_leg[a] = F.add(counit_leg[a], F.mul(s, H.counit[h]))
        left = {k: v for k, v in left.items() if v}
        right = {k: v for k, v in right.items() if v}
        if left != right:
            problems.append(f"coaction not coassociative at {A.labels[i]}")
        if tuple(counit_leg) != A.basis_vec(i):
            problems.append(f"counit law of the coaction fails at {A.labels[i]}")
    return problems


def invariants(C):
    """The invariant subalgebra {a : δ(a) = a⊗1} as a subspace of A."""
    F = C.field
    A, H = C.algebra, C.hopf
    na, nh = A.dim, H.dim
    rows = []
    unit_h = H.alg.unit
    delta = C.coaction_matrix()
    for r in range(na * nh):
        a, h = divmod(r, nh)
        row = list(delta.rows[r])
        # subtract the matrix of v ↦ v⊗1
        if unit_h[h]:
            row[a] = F.sub(row[a], unit_h[h])
        rows.append(row)
    ker = Mat(F, rows).kernel_basis()
    return Subspace.span(F, na, ker)


def invariant_subalgebra(C, labels=None):
    space = invariants(C)
    if labels is None:
        labels = tuple(f"i{k}" for k in range(space.dim))
    return subalgebra_on_subspace(C.algebra, space, labels)


def hstar_action_matrix(C, xi):
    """L_ξ = (id⊗ξ)∘δ for a functional ξ given by its values on the H basis."""
    F = C.field
    na = C.algebra.dim
    cols = []
    for j in range(na):
        col = [F.zero] * na
        for (a, h), s in C.coaction[j]:
            if xi[h]:
                col[a] = F.add(col[a], F.mul(s, xi[h]))
        cols.append(tuple(col))
    return Mat.from_cols(F, cols)


def is_costable(C, space):
    """δ(space) ⊆ space⊗H, slice by slice."""
    nh = C.hopf.dim
    for v in space.rows:
        dv = C.coaction_vec(v)
        for h in range(nh):
            slice_vec = tuple(dv[a * nh + h] for a in range(C.algebra.dim))
            if not vec_is_zero(slice_vec) and not space.contains(slice_vec):
                return False
    return True


def costable_closure(C, generators):
    """Smallest costable ideal containing the generators.

    Closure under multiplication by A and under all coaction slices; the
    slices are exactly the dual-algebra action, so the result is costable.
    """
    F = C.field
    A = C.algebra
    na, nh = A.dim, C.hopf.dim
    space = Subspace.span(F, na, list(generators))
    slicers = [C.slice_matrix(h) for h in range(nh)]
    while True:
        new_vecs = []
        for v in space.rows:
            for j in range(na):
                w = A.mul_vec(v, A.basis_vec(j))
                if not space.contains(w):
                    new_vecs.append(w)
            for sl in slicers:
                w = sl.mulvec(v)
                if not space.contains(w):
                    new_vecs.append(w)
        if not new_vecs:
            return space
        space = space.sum_with(Subspace.span(F, na, new_vecs))


def largest_costable_within(C, space):
    """Largest costable subspace inside the given subspace (a fixpoint).

    When the input is an ideal the result is the largest costable ideal in it.
    """
    F = C.field
    na, nh = C.algebra.dim, C.hopf.dim
    delta = C.coaction_matrix()
    current = space
    while True:
        tensor_rows = []
        for m in current.rows:
            for h in range(nh):
                vec = [F.zero] * (na * nh)
                for a, c in enumerate(m):
                    vec[a * nh + h] = c
                tensor_rows.append(tuple(vec))
        tensored = Subspace.span(F, na * nh, tensor_rows)
        refined = current.intersect(preimage_space(delta, tensored))
        if refined.dim == current.dim:
            return refined
        current = refined


def h_radical(C):
    """Largest costable ideal inside the nilradical."""
    return largest_costable_within(C, nilradical(C.algebra))


def is_h_reduced(C):
    return h_radical(C).is_zero()


def is_h_simple(C):
    """No nonzero proper costable ideal.

    Computed from the largest costable ideal inside every maximal ideal; the
    answers must agree across points, and disagreement raises since it would
    contradict the translation argument the criterion rests on.
    """
    answers = []
    for pt in maximal_ideals(C.algebra):
        answers.append(largest_costable_within(C, pt.ideal).is_zero())
    if len(set(answers)) > 1:
        raise ComoduleError("point-by-point simplicity test disagreed across points")
    return answers[0]


def quotient_comodule(C, ideal, label_prefix=None):
    """A/I with the induced coaction, for a costable ideal I."""
    if not is_costable(C, ideal):
        raise ComoduleError("quotient by a non-costable ideal")
    quot = quotient_algebra(C.algebra, ideal, label_prefix=label_prefix)
    Q = quot.algebra
    nh = C.hopf.dim
    rows = []
    for i in range(Q.dim):
        lift = quot.lift_vec(Q.basis_vec(i))
        dv = C.coaction_vec(lift)
        row = []
        for h in range(nh):
            slice_vec = tuple(dv[a * nh + h] for a in range(C.algebra.dim))
            proj = quot.project(slice_vec)
            for q, c in enumerate(proj):
                if c:
                    row.append(((q, h), c))
        rows.append(row)
    return make_comodule(Q, C.hopf, rows), quot


def point_coaction_matrix(C, pt):
    """δ_p = (α_p ⊗ id)∘δ : A → k(p)⊗H as a matrix, rows indexed r·dim(H)+h."""
    F = C.field
    deg = pt.residue.dim
    nh = C.hopf.dim
    cols = []
    for j in range(C.algebra.dim):
        col = [F.zero] * (deg * nh)
        for (a, h), s in C.coaction[j]:
            for r in range(deg):
                c = pt.alpha.rows[r][a]
                if c:
                    col[r * nh + h] = F.add(col[r * nh + h], F.mul(c, s))
        cols.append(tuple(col))
    return Mat.from_cols(F, cols)


def trivial_coaction(alg, hopf):
    """δ(a) = a⊗1: every element invariant."""
    unit_entries = [(h, c) for h, c in enumerate(hopf.alg.unit) if c]
    rows = [[((i, h), c) for h, c in unit_entries] for i in range(alg.dim)]
    return make_comodule(alg, hopf, rows)


def build_graded(alg, group_hopf, degrees):
    """Coaction of a group grading: basis element i sits in degree degrees[i].

    The Hopf algebra must be a group algebra (grouplike basis); homogeneity
    of the multiplication is certified by validate_comodule afterwards.
    """
    F = alg.field
    rows = [[((i, degrees[i]), F.one)] for i in range(alg.dim)]
    return make_comodule(alg, group_hopf, rows)


def action_matrices_from_generators(table, gen_mats, field, dim):
    """All action matrices of a group from generator matrices, by closure.

    gen_mats maps a group-element index to its matrix; composition follows
    M[g·h] = M[g]·M[h].  Raises when the generated data is inconsistent.
    """
    n = len(table)
    identity = next(e for e in range(n) if all(table[e][g] == g for g in range(n)))
    mats = {identity: Mat.identity(field, dim)}
    mats.update({g: m for g, m in gen_mats.items()})
    frontier = list(mats)
    while frontier:
        nxt = []
        for g in frontier:
            for s, ms in gen_mats.items():
                t = table[s][g]
                if t not in mats:
                    mats[t] = ms.mul(mats[g])
                    nxt.append(t)
        frontier = nxt
    if len(mats) != n:
        raise ComoduleError("generators do not generate the group")
    for a in range(n):
        for b in range(n):
            if mats[table[a][b]].rows != mats[a].mul(mats[b]).rows:
                raise ComoduleError("action matrices are inconsistent with the table")
    return [mats[g] for g in range(n)]


def build_group_action(alg, dual_hopf_algebra, action_mats):
    """Coaction δ(a) = Σ_g (g·a)⊗d_g over the function algebra of the group."""
    F = alg.field
    n = len(action_mats)
    if dual_hopf_algebra.dim != n:
        raise ComoduleError("one action matrix per group element is required")
    rows = []
    for j in range(alg.dim):
        row = []
        for g, mat in enumerate(action_mats):
            for i in range(alg.dim):
                c = mat.rows[i][j]
                if c:
                    row.append(((i, g), c))
        rows.append(row)
    return make_comodule(alg, dual_hopf_algebra, rows)


def build_derivation(alg, dual_enveloping, d_matrix):
    """Coaction of a single restricted derivation d on A.

    The Hopf algebra is the dual of a rank-one restricted enveloping algebra
    with monomial basis 1, x, ..., x^{p-1}; the coaction pairs d^k against
    the k-th dual basis vector.
    """
    F = alg.field
    p = F.char
    if p == 0:
        raise ComoduleError("derivation coactions need positive characteristic")
    if dual_enveloping.dim != p:
        raise ComoduleError("expected the dual of a rank-one restricted enveloping algebra")
    rows = [[] for _ in range(alg.dim)]
    power = Mat.identity(F, alg.dim)
    for k in range(p):
        for j in range(alg.dim):
            for i in range(alg.dim):
                c = power.rows[i][j]
                if c:
                    rows[j].append(((i, k), c))
        if k + 1 < p:
            power = d_matrix.mul(power)
    return make_comodule(alg, dual_enveloping, rows)


def localize_at_invariant(C, s):
    """Invert an invariant element: the corner at its stable idempotent.

    The minimal polynomial of s splits as t^k·g with g(0) ≠ 0; the idempotent
    onto the invertible part is a polynomial in s, hence invariant, and the
    corner inherits the coaction.
    """
    F = C.field
    A = C.algebra
    if not invariants(C).contains(s):
        raise ComoduleError("localization element is not invariant")
    f = min_poly(A, s)
    k = 0
    while k < len(f) - 1 and not f[k]:
        k += 1
    tk = tuple([F.zero] * k + [F.one])
    g = trim(f[k:])
    if len(g) == 1:
        # s is nilpotent: the localization is the zero ring
        raise ComoduleError("localizing at a nilpotent invariant")
    d, u, v = pgcdext(F, tk, g)
    if len(d) != 1:
        raise ComoduleError("unexpected gcd while splitting the minimal polynomial")
    e = eval_poly_in_algebra(A, pmul(F, u, tk), s)
    scale = F.inv(d[0])
    e = tuple(F.mul(scale, c) for c in e)
    if A.mul_vec(e, e) != e:
        raise ComoduleError("stable idempotent computation failed")
    corner = corner_algebra(A, e, label_prefix="l")
    B = corner.algebra
    nh = C.hopf.dim
    rows = []
    for i in range(B.dim):
        amb = corner.embed.mulvec(B.basis_vec(i))
        dv = C.coaction_vec(amb)
        row = []
        for h in range(nh):
            slice_vec = tuple(A.mul_vec(e, tuple(dv[a * nh + h] for a in range(A.dim))))
            coords = corner.space.coords_of(slice_vec)
            for b, c in enumerate(coords):
                if c:
                    row.append(((b, h), c))
        rows.append(row)
    return make_comodule(B, C.hopf, rows), corner, e


@dataclass(frozen=True)
class HopfModule:
    """A Hopf module: an A-module with a compatible H-comodule structure."""
    comodule: ComoduleAlgebra
    dim: int
    action: tuple    # action[i] = Mat on the module for algebra basis a_i
    coaction: tuple  # coaction[i] = (((m, h), scalar), ...)
    labels: tuple

    @property
    def field(self):
        return self.comodule.field

    def act(self, a_vec, m_vec):
        F = self.field
        out = [F.zero] * self.dim
        for i, c in enumerate(a_vec):
            if not c:
                continue
            img = self.action[i].mulvec(m_vec)
            for k, x in enumerate(img):
                if x:
                    out[k] = F.add(out[k], F.mul(c, x))
        return tuple(out)

    def coaction_vec(self, v):
        F = self.field
        nh = self.comodule.hopf.dim
        out = [F.zero] * (self.dim * nh)
        for i, c in enumerate(v):
            if not c:
                continue
            for (m, h), s in self.coaction[i]:
                idx = m * nh + h
                out[idx] = F.add(out[idx], F.mul(c, s))
        return tuple(out)


def module_invariants(M):
    F = M.field
    nh = M.comodule.hopf.dim
    unit_h = M.comodule.hopf.alg.unit
    rows = []
    cols = [M.coaction_vec(unit_vec(F, M.dim, j)) for j in range(M.dim)]
    delta = Mat.from_cols(F, cols)
    for r in range(M.dim * nh):
        m, h = divmod(r, nh)
        row = list(delta.rows[r])
        if unit_h[h]:
            row[m] = F.sub(row[m], unit_h[h])
        rows.append(row)
    ker = Mat(F, rows).kernel_basis()
    return Subspace.span(F, M.dim, ker)


def module_from_algebra(C):
    """A itself as a Hopf module."""
    A = C.algebra
    action = tuple(A.lmul_matrix(A.basis_vec(i)) for i in range(A.dim))
    return HopfModule(C, A.dim, action, C.coaction, A.labels)


def module_direct_sum(M1, M2):
    if M1.comodule is not M2.comodule and M1.comodule != M2.comodule:
        raise ComoduleError("direct sum over different comodule algebras")
    F = M1.field
    d1, d2 = M1.dim, M2.dim
    dim = d1 + d2
    action = []
    na = M1.comodule.algebra.dim
    for i in range(na):
        rows = []
        for r in range(d1):
            rows.append(tuple(M1.action[i].rows[r]) + tuple([F.zero] * d2))
        for r in range(d2):
            rows.append(tuple([F.zero] * d1) + tuple(M2.action[i].rows[r]))
        action.append(Mat(F, rows))
    coaction = []
    for i in range(d1):
        coaction.append(tuple(((m, h), s) for (m, h), s in M1.coaction[i]))
    for i in range(d2):
        coaction.append(tuple(((m + d1, h), s) for (m, h), s in M2.coaction[i]))
    labels = tuple(f"{l}⊕0" for l in M1.labels) + tuple(f"0⊕{l}" for l in M2.labels)
    return HopfModule(M1.comodule, dim, tuple(action), tuple(coaction), labels)


def module_from_quotient(C, ideal):
    """A/I as a Hopf module over A, for a costable ideal I."""
    quotC, quot = quotient_comodule(C, ideal)
    Q = quotC.algebra
    action = []
    for i in range(C.algebra.dim):
        cols = []
        for j in range(Q.dim):
            lift = quot.lift_vec(Q.basis_vec(j))
            cols.append(quot.project(C.algebra.mul_vec(C.algebra.basis_vec(i), lift)))
        action.append(Mat.from_cols(C.field, cols))
    return HopfModule(C, Q.dim, tuple(action), quotC.coaction, Q.labels), quot
