"""Spectra of finite-dimensional algebras: radicals, maximal ideals, residues.

The maximal-ideal routine is the splitting method: compute the radical, pass
to the semisimple quotient, and split it into field factors by factoring
minimal polynomials of candidate elements (basis elements, then pairs, then
deterministically seeded random elements).  A factor is accepted as a field
only with a certificate: a primitive element whose minimal polynomial is
irreducible of degree equal to the dimension.  Radicals come from the trace
form in characteristic zero and from the characteristic-p trace refinement
chain over prime fields; the two never share code with the splitting search,
which keeps the cross-checks in the test suite honest.
"""

from dataclasses import dataclass
import hashlib
import random

from .algebra import (AlgebraError, FiniteAlgebra, algebra_from_dense, min_poly,
                      quotient_algebra)
from .linalg import Mat, Subspace, image_space, preimage_space, unit_vec, vec_is_zero
from .polys import degree, factor_univariate, pgcdext, pmul, pscale, psub, trim


def charpoly_field(mat):
    """Characteristic polynomial of a square matrix over a field (Hessenberg)."""
    F = mat.field
    n = mat.nrows
    if n == 0:
        return (F.one,)
    H = [list(r) for r in mat.rows]
    for c in range(n - 2):
        piv = next((r for r in range(c + 1, n) if H[r][c]), None)
        if piv is None:
            continue
        if piv != c + 1:
            H[c + 1], H[piv] = H[piv], H[c + 1]
            for row in H:
                row[c + 1], row[piv] = row[piv], row[c + 1]
        inv = F.inv(H[c + 1][c])
        for r in range(c + 2, n):
            if H[r][c]:
                m = F.mul(H[r][c], inv)
                H[r] = [F.sub(x, F.mul(m, y)) for x, y in zip(H[r], H[c + 1])]
                for i in range(n):
                    H[i][c + 1] = F.add(H[i][c + 1], F.mul(m, H[i][r]))
    polys = [(F.one,)]
    for i in range(1, n + 1):
        term = pmul(F, (F.neg(H[i - 1][i - 1]), F.one), polys[i - 1])
        prod = F.one
        for k in range(i - 1, 0, -1):
            prod = F.mul(prod, H[k][k - 1])
            coeff = F.mul(H[k - 1][i - 1], prod)
            if coeff:
                term = psub(F, term, pscale(F, coeff, polys[k - 1]))
        polys.append(term)
    return trim(polys[n]) or (F.one,)


def _trace_vector(alg):
    """tr(L_{e_k}) for each basis element."""
    F = alg.field
    traces = []
    for k in range(alg.dim):
        t = F.zero
        for j in range(alg.dim):
            for kk, c in alg.mul[k][j]:
                if kk == j:
                    t = F.add(t, c)
        traces.append(t)
    return traces


def radical_and_semisimplicity(alg):
    """(Jacobson radical as a Subspace, whether it is zero).

    Characteristic zero uses the trace-form kernel; characteristic p uses the
    chain of coefficient conditions c_{p^i}(L_{xy}) = 0 refined against the
    previous member, which is linear over the prime field.
    """
    F = alg.field
    n = alg.dim
    if n == 0:
        return Subspace.zero(F, 0), True
    traces = _trace_vector(alg)

    def trace_of_product(x, y):
        prod = alg.mul_vec(x, y)
        t = F.zero
        for c, tr in zip(prod, traces):
            if c and tr:
                t = F.add(t, F.mul(c, tr))
        return t

    space = Subspace.full(F, n)
    ks = [1]
    if F.char:
        k = F.char
        while k <= n:
            ks.append(k)
            k *= F.char
    for k in ks:
        basis = list(space.rows)
        if not basis:
            break
        rows = []
        for x in basis:
            row = []
            for y in basis:
                if k == 1:
                    row.append(trace_of_product(x, y))
                else:
                    mat = alg.lmul_matrix(alg.mul_vec(x, y))
                    cp = charpoly_field(mat)
                    idx = n - k
                    row.append(cp[idx] if idx < len(cp) else F.zero)
            rows.append(row)
        ker = Mat(F, rows).transpose().kernel_basis()
        vecs = []
        for combo in ker:
            v = alg.zero_vec()
            for c, b in zip(combo, basis):
                if c:
                    v = tuple(F.add(a, F.mul(c, x)) for a, x in zip(v, b))
            vecs.append(v)
        space = Subspace.span(F, n, vecs)
    return space, space.is_zero()


def eval_poly_in_algebra(alg, poly, v):
    acc = alg.zero_vec()
    for c in reversed(poly):
        acc = alg.mul_vec(acc, v)
        if c:
            acc = tuple(alg.field.add(a, alg.field.mul(c, u)) for a, u in zip(acc, alg.unit))
    return acc


@dataclass(frozen=True)
class CornerData:
    """The factor e·A of a commutative algebra cut out by an idempotent e."""
    algebra: FiniteAlgebra
    embed: Mat
    space: Subspace
    idempotent: tuple


def corner_algebra(alg, e, label_prefix="c"):
    """Build e·A as an algebra with unit e (requires a central idempotent)."""
    F = alg.field
    lmul = alg.lmul_matrix(e)
    space = image_space(lmul)
    rows = list(space.rows)
    dense = [[space.coords_of(alg.mul_vec(u, v)) for v in rows] for u in rows]
    unit_coords = space.coords_of(e)
    if unit_coords is None or any(c is None for row in dense for c in row):
        raise AlgebraError("idempotent does not cut out a closed corner")
    labels = tuple(f"{label_prefix}{i}" for i in range(len(rows)))
    sub = algebra_from_dense(F, labels, unit_coords, dense)
    embed = Mat.from_cols(F, rows) if rows else Mat(F, [() for _ in range(alg.dim)])
    return CornerData(sub, embed, space, tuple(e))


def _alg_seed(alg, tag):
    h = hashlib.sha256()
    h.update(tag.encode())
    h.update(repr(alg.field).encode())
    h.update(repr(alg.mul).encode())
    h.update(repr(alg.unit).encode())
    return int.from_bytes(h.digest()[:8], "big")


def _element_stream(alg, rng, cap):
    for i in range(alg.dim):
        yield alg.basis_vec(i)
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            yield tuple(alg.field.add(a, b) for a, b in zip(alg.basis_vec(i), alg.basis_vec(j)))
    for i in range(alg.dim):
        for j in range(i, alg.dim):
            yield alg.mul_vec(alg.basis_vec(i), alg.basis_vec(j))
    for _ in range(cap):
        yield tuple(alg.field.random(rng) for _ in range(alg.dim))


@dataclass(frozen=True)
class EtaleFactor:
    idempotent: tuple      # in the ambient etale algebra
    space: Subspace        # the corner e·S
    primitive: tuple       # primitive element of the corner, ambient coordinates
    primitive_min_poly: tuple


def split_etale(alg):
    """Split a commutative semisimple algebra into certified field factors."""
    rng = random.Random(_alg_seed(alg, "split"))
    return _split_etale_inner(alg, rng)


def _split_etale_inner(alg, rng):
    F = alg.field
    if alg.dim == 0:
        return []
    for v in _element_stream(alg, rng, cap=200 * alg.dim + 200):
        if vec_is_zero(v):
            continue
        f = min_poly(alg, v)
        _, factors = factor_univariate(F, f)
        if any(m > 1 for _, m in factors):
            raise AlgebraError("repeated factor in a semisimple algebra; radical was wrong")
        if len(factors) == 1 and degree(f) == alg.dim:
            return [EtaleFactor(alg.unit, Subspace.full(F, alg.dim), v, f)]
        if len(factors) >= 2:
            g = factors[0][0]
            h = _poly_quotient(F, f, g)
            d, s, t = pgcdext(F, g, h)
            if degree(d) != 0:
                continue
            e = eval_poly_in_algebra(alg, pmul(F, t, h), v)
            if vec_is_zero(e) or e == alg.unit:
                continue
            out = []
            for idem in (e, tuple(F.sub(a, b) for a, b in zip(alg.unit, e))):
                corner = corner_algebra(alg, idem)
                for fac in _split_etale_inner(corner.algebra, rng):
                    out.append(EtaleFactor(
                        corner.embed.mulvec(fac.idempotent),
                        _push_rows(corner.embed, fac.space, alg.dim),
                        corner.embed.mulvec(fac.primitive),
                        fac.primitive_min_poly,
                    ))
            return out
    raise AlgebraError("failed to split a semisimple commutative algebra (search cap hit)")


def _poly_quotient(field, f, g):
    from .polys import pdivmod
    q, r = pdivmod(field, f, g)
    if r:
        raise AlgebraError("expected exact polynomial division")
    return q


def _push_rows(embed, space, ambient):
    return Subspace.span(embed.field, ambient, [embed.mulvec(r) for r in space.rows])


@dataclass(frozen=True)
class PointData:
    """A maximal ideal of a commutative algebra with its residue field."""
    ideal: Subspace
    residue: FiniteAlgebra
    alpha: Mat                 # dim residue x dim algebra, the evaluation map
    degree: int
    idempotent: tuple          # primitive idempotent of A for this point
    primitive: tuple           # primitive element of the residue (residue coords)
    primitive_min_poly: tuple

    def evaluate(self, v):
        return self.alpha.mulvec(v)


def lift_idempotent(alg, radical_space, ebar_in_quotient, quotient):
    """Lift an idempotent of A/rad to A (unique in the commutative case)."""
    F = alg.field
    e = quotient.lift_vec(ebar_in_quotient)
    for _ in range(alg.dim + 2):
        sq = alg.mul_vec(e, e)
        if sq == e:
            return e
        # Newton step 3e^2 - 2e^3 stays congruent to ebar and converges
        cube = alg.mul_vec(sq, e)
        three = F.from_int(3)
        two = F.from_int(2)
        e = tuple(F.sub(F.mul(three, a), F.mul(two, b)) for a, b in zip(sq, cube))
    raise AlgebraError("idempotent lifting did not converge")


def maximal_ideals(alg):
    """All maximal ideals of a commutative algebra, with residue data, sorted."""
    if not alg.is_commutative():
        raise AlgebraError("maximal_ideals requires a commutative algebra")
    F = alg.field
    rad, _ = radical_and_semisimplicity(alg)
    if rad.is_full():
        raise AlgebraError("algebra has no maximal ideals (zero algebra?)")
    if rad.is_zero():
        semis = alg
        quot = None
    else:
        quot = quotient_algebra(alg, rad)
        semis = quot.algebra
    factors = split_etale(semis)
    points = []
    for fac in factors:
        corner = corner_algebra(semis, fac.idempotent)
        residue = corner.algebra
        # maximal ideal of the semisimple quotient: the complementary corner
        one_minus = tuple(F.sub(a, b) for a, b in zip(semis.unit, fac.idempotent))
        m_semis = image_space(semis.lmul_matrix(one_minus))
        prim_coords = corner.space.coords_of(fac.primitive)
        if quot is None:
            ideal = m_semis
            alpha_cols = [corner.space.coords_of(semis.mul_vec(fac.idempotent, semis.basis_vec(j)))
                          for j in range(semis.dim)]
            alpha = Mat.from_cols(F, alpha_cols)
            idem = fac.idempotent
        else:
            ideal = preimage_space(quot.projection, m_semis)
            alpha_cols = []
            for j in range(alg.dim):
                vbar = quot.project(unit_vec(F, alg.dim, j))
                alpha_cols.append(corner.space.coords_of(semis.mul_vec(fac.idempotent, vbar)))
            alpha = Mat.from_cols(F, alpha_cols)
            idem = lift_idempotent(alg, rad, fac.idempotent, quot)
        points.append(PointData(
            ideal=ideal,
            residue=residue,
            alpha=alpha,
            degree=residue.dim,
            idempotent=idem,
            primitive=prim_coords,
            primitive_min_poly=fac.primitive_min_poly,
        ))
    points.sort(key=lambda pt: (pt.degree, pt.ideal.sort_key()))
    return points


def nilradical(alg):
    """Intersection of all maximal ideals (commutative algebras)."""
    points = maximal_ideals(alg)
    space = Subspace.full(alg.field, alg.dim)
    for pt in points:
        space = space.intersect(pt.ideal)
    return space


def is_field_with_certificate(alg):
    """(True, primitive element, min poly) when the algebra is a field."""
    if not alg.is_commutative():
        return False, None, None
    rad, semisimple = radical_and_semisimplicity(alg)
    if not semisimple:
        return False, None, None
    factors = split_etale(alg)
    if len(factors) != 1:
        return False, None, None
    fac = factors[0]
    return True, fac.primitive, fac.primitive_min_poly


def idempotent_decomposition(alg):
    """Primitive orthogonal idempotents of a commutative algebra, summing to 1."""
    pts = maximal_ideals(alg)
    F = alg.field
    idems = [pt.idempotent for pt in pts]
    total = alg.zero_vec()
    for e in idems:
        if alg.mul_vec(e, e) != e:
            raise AlgebraError("non-idempotent in decomposition")
        total = tuple(F.add(a, b) for a, b in zip(total, e))
    if total != alg.unit:
        raise AlgebraError("idempotents do not sum to the unit")
    for i in range(len(idems)):
        for j in range(i + 1, len(idems)):
            if not vec_is_zero(alg.mul_vec(idems[i], idems[j])):
                raise AlgebraError("idempotents are not orthogonal")
    return list(zip(idems, pts))
