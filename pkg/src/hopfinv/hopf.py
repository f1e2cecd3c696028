"""Hopf algebra structures on finite-dimensional algebras.

A HopfAlgebra carries the comultiplication as sparse rows (basis index to a
list of ((a, b), scalar) pairs meaning a summand scalar·h_a⊗h_b), the counit
as a plain coefficient vector, and the antipode as a matrix.  All axioms are
checked by validate_hopf, never assumed, so the builders stay lean and the
validation is one shared code path.
"""

from dataclasses import dataclass

from .algebra import FiniteAlgebra, make_algebra, tensor_product, validate_algebra
from .linalg import Mat, Subspace, vec_is_zero


class HopfError(ValueError):
    pass


@dataclass(frozen=True)
class HopfAlgebra:
    alg: FiniteAlgebra
    comul: tuple       # comul[i] = (((a, b), scalar), ...)
    counit: tuple      # counit[i] = scalar
    antipode: Mat      # columns are images of basis vectors

    @property
    def field(self):
        return self.alg.field

    @property
    def dim(self):
        return self.alg.dim

    def comul_vec(self, v):
        """Δ(v) as a dense vector in the tensor square, index a*dim + b."""
        F = self.field
        n = self.dim
        out = [F.zero] * (n * n)
        for i, c in enumerate(v):
            if not c:
                continue
            for (a, b), s in self.comul[i]:
                idx = a * n + b
                out[idx] = F.add(out[idx], F.mul(c, s))
        return tuple(out)

    def counit_of(self, v):
        F = self.field
        t = F.zero
        for c, e in zip(v, self.counit):
            if c and e:
                t = F.add(t, F.mul(c, e))
        return t

    def antipode_vec(self, v):
        return self.antipode.mulvec(v)


def make_hopf(alg, comul_rows, counit, antipode_mat):
    F = alg.field
    comul = []
    for row in comul_rows:
        merged = {}
        for (a, b), s in row:
            if not (0 <= a < alg.dim and 0 <= b < alg.dim):
                raise HopfError("comultiplication index out of range")
            key = (a, b)
            merged[key] = F.add(merged[key], s) if key in merged else s
        comul.append(tuple(sorted((k, s) for k, s in merged.items() if s)))
    comul = tuple(comul)
    if len(comul) != alg.dim or len(counit) != alg.dim:
        raise HopfError("comultiplication or counit has the wrong length")
    return HopfAlgebra(alg, comul, tuple(counit), antipode_mat)


def validate_hopf(H):
    """All Hopf axioms on the basis; returns a list of violation descriptions."""
    problems = list(validate_algebra(H.alg))
    F = H.field
    n = H.dim
    square = tensor_product(H.alg, H.alg)
    T = square.algebra

    # counit is an algebra map
    if H.counit_of(H.alg.unit) != F.one:
        problems.append("counit does not send the unit to 1")
    for i in range(n):
        for j in range(n):
            prod = H.alg.mul_vec(H.alg.basis_vec(i), H.alg.basis_vec(j))
            lhs = H.counit_of(prod)
            rhs = F.mul(H.counit[i], H.counit[j])
            if lhs != rhs:
                problems.append(f"counit not multiplicative at ({H.alg.labels[i]}, {H.alg.labels[j]})")

    # comultiplication is an algebra map into the tensor square
    unit_sq = square.pure(H.alg.unit, H.alg.unit)
    if H.comul_vec(H.alg.unit) != unit_sq:
        problems.append("comultiplication does not send the unit to 1⊗1")
    deltas = [H.comul_vec(H.alg.basis_vec(i)) for i in range(n)]
    for i in range(n):
        for j in range(n):
            prod = H.alg.mul_vec(H.alg.basis_vec(i), H.alg.basis_vec(j))
            lhs = H.comul_vec(prod)
            rhs = T.mul_vec(deltas[i], deltas[j])
            if lhs != rhs:
                problems.append(f"comultiplication not multiplicative at ({H.alg.labels[i]}, {H.alg.labels[j]})")
                break

    # coassociativity and counit laws
    for i in range(n):
        left = [F.zero] * (n * n * n)   # (Δ⊗id)Δ, index (a*n + b)*n + c
        right = [F.zero] * (n * n * n)  # (id⊗Δ)Δ
        eps_id = [F.zero] * n
        id_eps = [F.zero] * n
        for (a, b), s in H.comul[i]:
            for (x, y), t in H.comul[a]:
                idx = (x * n + y) * n + b
                left[idx] = F.add(left[idx], F.mul(s, t))
            for (x, y), t in H.comul[b]:
                idx = (a * n + x) * n + y
                right[idx] = F.add(right[idx], F.mul(s, t))
            if H.counit[a]:
                id_eps_c = F.mul(s, H.counit[a])
                eps_id[b] = F.add(eps_id[b], id_eps_c)
            if H.counit[b]:
                id_eps[a] = F.add(id_eps[a], F.mul(s, H.counit[b]))
        if left != right:
            problems.append(f"comultiplication not coassociative at {H.alg.labels[i]}")
        basis = list(H.alg.basis_vec(i))
        if eps_id != basis:
            problems.append(f"left counit law fails at {H.alg.labels[i]}")
        if id_eps != basis:
            problems.append(f"right counit law fails at {H.alg.labels[i]}")

    # antipode laws: mul(σ⊗id)Δ = unit·ε = mul(id⊗σ)Δ
    for i in range(n):
        left = H.alg.zero_vec()
        right = H.alg.zero_vec()
        for (a, b), s in H.comul[i]:
            sa = H.antipode_vec(H.alg.basis_vec(a))
            sb = H.antipode_vec(H.alg.basis_vec(b))
            left = tuple(F.add(u, F.mul(s, w)) for u, w in
                         zip(left, H.alg.mul_vec(sa, H.alg.basis_vec(b))))
            right = tuple(F.add(u, F.mul(s, w)) for u, w in
                          zip(right, H.alg.mul_vec(H.alg.basis_vec(a), sb)))
        target = H.alg.scale(H.counit[i], H.alg.unit)
        if left != target:
            problems.append(f"left antipode law fails at {H.alg.labels[i]}")
        if right != target:
            problems.append(f"right antipode law fails at {H.alg.labels[i]}")
    return problems


def dual_hopf(H, label_suffix="*"):
    """The dual Hopf algebra on the dual basis.

    Multiplication is the transpose of the comultiplication, the unit is the
    counit vector, comultiplication is the transpose of multiplication, the
    counit evaluates at the unit, and the antipode is the transpose matrix.
    """
    F = H.field
    n = H.dim
    labels = tuple(f"{l}{label_suffix}" for l in H.alg.labels)
    triples = {}
    for i in range(n):
        for (a, b), s in H.comul[i]:
            triples.setdefault((a, b), []).append((i, s))
    trip_list = [(a, b, entries) for (a, b), entries in triples.items()]
    dual_alg = make_algebra(F, labels, tuple(H.counit), trip_list)

    comul_rows = [[] for _ in range(n)]
    for i, j, row in H.alg.mul_triples():
        for k, c in row:
            comul_rows[k].append(((i, j), c))
    counit = tuple(H.alg.unit)
    antipode = H.antipode.transpose()
    return make_hopf(dual_alg, comul_rows, counit, antipode)


def left_integral_space(H):
    """{x : h·x = ε(h)·x for all h}, as a subspace of H."""
    return _integral_space(H, left=True)


def right_integral_space(H):
    """{x : x·h = ε(h)·x for all h}."""
    return _integral_space(H, left=False)


def _integral_space(H, left):
    F = H.field
    n = H.dim
    rows = []
    for i in range(n):
        basis = H.alg.basis_vec(i)
        mat = H.alg.lmul_matrix(basis) if left else H.alg.rmul_matrix(basis)
        eps = H.counit[i]
        for r in range(n):
            row = list(mat.rows[r])
            row[r] = F.sub(row[r], eps)
            rows.append(row)
    ker = Mat(F, rows).kernel_basis()
    return Subspace.span(F, n, ker)


def is_geometrically_cosemisimple(H):
    """Whether the counit is nonzero on the integral space of H.

    The integral space is one-dimensional and its generator is defined by a
    linear system with coefficients in the base field, so the counit value
    either stays invertible or stays zero under every extension of scalars.
    A nonzero value normalizes to an idempotent averaging operator that
    splits every exact sequence of modules over every extension; a zero
    value leaves the trivial module without a complement already over the
    base field. Group algebras recover the classical divisibility test:
    the counit of the group sum is the group order.
    """
    space = right_integral_space(H)
    if space.dim != 1:
        raise HopfError("integral space is not one-dimensional")
    x = space.rows[0]
    return H.counit_of(x) != H.field.zero


def is_right_coideal(H, space):
    """Δ(space) ⊆ space ⊗ H, checked row by row."""
    n = H.dim
    F = H.field
    for v in space.rows:
        dv = H.comul_vec(v)
        for b in range(n):
            slice_vec = tuple(dv[a * n + b] for a in range(n))
            if not vec_is_zero(slice_vec) and not space.contains(slice_vec):
                return False
    return True


def is_left_coideal(H, space):
    """Δ(space) ⊆ H ⊗ space."""
    n = H.dim
    for v in space.rows:
        dv = H.comul_vec(v)
        for a in range(n):
            slice_vec = tuple(dv[a * n + b] for b in range(n))
            if not vec_is_zero(slice_vec) and not space.contains(slice_vec):
                return False
    return True


def is_unital_subalgebra(alg, space):
    if not space.contains(alg.unit):
        return False
    rows = list(space.rows)
    for u in rows:
        for v in rows:
            if not space.contains(alg.mul_vec(u, v)):
                return False
    return True


def coideal_subalgebra_check(H, space, side="right"):
    """(is a coideal on the given side, is a unital subalgebra)."""
    coideal = is_right_coideal(H, space) if side == "right" else is_left_coideal(H, space)
    return coideal, is_unital_subalgebra(H.alg, space)
