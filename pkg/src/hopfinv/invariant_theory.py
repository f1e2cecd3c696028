"""Invariant theory of commutative comodule algebras.

Everything here is finite linear algebra over the base field: the coaction
characteristic polynomial of an element (computed division-free so that it is
valid in any characteristic), integrality witnesses over the invariant
subalgebra, the orbital and stabilizer algebras attached to a maximal ideal,
fibers of the quotient map Max A -> Max A^H, total integrals and the trace
retraction they induce, free module bases over the invariants, the costable
ideal correspondence, and the weak reductivity certificates.

Statements that the theory guarantees outright are enforced: when the numbers
disagree with a proved identity the functions raise TheoremViolation instead
of returning a report, so a fuzz run cannot quietly absorb a counterexample.
Preconditions the caller got wrong raise ComoduleError or ValueError as usual.
"""

import math
from dataclasses import dataclass

from .algebra import (
    AlgebraOps,
    FiniteAlgebra,
    TensorAlgebra,
    ideal_generated,
    quotient_algebra,
    subalgebra_on_subspace,
    tensor_product,
)
from .comodule import (
    ComoduleError,
    costable_closure,
    h_radical,
    invariant_subalgebra,
    invariants,
    is_costable,
    is_h_reduced,
    largest_costable_within,
    module_invariants,
    point_coaction_matrix,
    quotient_comodule,
)
from .hopf import HopfAlgebra, dual_hopf
from .linalg import Mat, Subspace, preimage_space, unit_vec, vec_add, vec_is_zero
from .rings import berkowitz_charpoly, charpoly_by_cofactors
from .spectrum import (
    PointData,
    maximal_ideals,
    idempotent_decomposition,
    radical_and_semisimplicity,
)


class TheoremViolation(AssertionError):
    """A proved statement failed numerically; carries the witness data."""

    def __init__(self, message, data=None):
        super().__init__(message)
        self.data = data or {}


def coaction_matrix_of(C, a):
    """Matrix over A of left multiplication by delta(a) on the free module A(x)H.

    Columns follow the H basis: delta(a)*(1(x)h_j) = sum_i M[i][j](x)h_i with
    M[i][j] in A.  Each coaction summand s*(b(x)h) of a contributes s*m to the
    b-coordinate of M[k][j] for every product h*h_j = sum_k m*h_k.
    """
    F = C.field
    A, H = C.algebra, C.hopf
    nh = H.dim
    hm = H.alg
    hprod = [[hm.mul_vec(hm.basis_vec(h), hm.basis_vec(j)) for j in range(nh)]
             for h in range(nh)]
    cells = [[list(A.zero_vec()) for _ in range(nh)] for _ in range(nh)]
    dv = C.coaction_vec(a)
    for idx, s in enumerate(dv):
        if not s:
            continue
        b, h = divmod(idx, nh)
        for j in range(nh):
            for k, m in enumerate(hprod[h][j]):
                if m:
                    cells[k][j][b] = F.add(cells[k][j][b], F.mul(m, s))
    return [[tuple(cell) for cell in row] for row in cells]


@dataclass(frozen=True)
class CoactionCharPoly:
    element: tuple          # input, A coordinates
    coeffs: tuple           # ascending, length dim H + 1, entries in A, monic
    invariant_flags: tuple  # per coefficient: lies in A^H?
    norm: tuple             # (-1)^{dim H} * constant coefficient

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def all_invariant(self):
        return all(self.invariant_flags)


def _eval_with_coeffs(A, coeffs, a):
    """sum coeffs[i]*a^i inside A (Horner; A is commutative)."""
    F = A.field
    acc = A.zero_vec()
    for c in reversed(coeffs):
        acc = A.mul_vec(acc, a)
        acc = vec_add(F, acc, c)
    return acc


def coaction_charpoly(C, a, inv_space=None):
    """Characteristic polynomial of delta(a) acting on A(x)H, coefficients in A.

    Samuelson-Berkowitz over the ring A, so no division is ever attempted.
    The annihilation identities are rechecked before returning: the polynomial
    kills delta(a) inside A(x)H and, applied with multiplication in A, kills a
    itself.  Either failing raises TheoremViolation.
    """
    F = C.field
    A, H = C.algebra, C.hopf
    nh = H.dim
    cells = coaction_matrix_of(C, a)
    coeffs = tuple(berkowitz_charpoly(cells, AlgebraOps(A)))
    if len(coeffs) != nh + 1 or coeffs[-1] != A.unit:
        raise TheoremViolation("characteristic polynomial is not monic of degree dim H")
    if inv_space is None:
        inv_space = invariants(C)
    flags = tuple(bool(inv_space.contains(c)) for c in coeffs)

    square = tensor_product(A, H.alg)
    T = square.algebra
    da = C.coaction_vec(a)
    acc = T.zero_vec()
    for c in reversed(coeffs):
        acc = T.mul_vec(acc, da)
        acc = vec_add(F, acc, square.pure(c, H.alg.unit))
    if not vec_is_zero(acc):
        raise TheoremViolation("polynomial fails to annihilate the coacted element",
                               {"element": a, "coeffs": coeffs})
    if not vec_is_zero(_eval_with_coeffs(A, coeffs, a)):
        raise TheoremViolation("polynomial fails to annihilate the element itself",
                               {"element": a, "coeffs": coeffs})
    norm = coeffs[0] if nh % 2 == 0 else tuple(F.neg(c) for c in coeffs[0])
    return CoactionCharPoly(tuple(a), coeffs, flags, norm)


def coaction_charpoly_oracle(C, a):
    """Independent route to the same coefficients: cofactor expansion of
    det(t - L_{delta(a)}) in the polynomial ring over A."""
    cells = coaction_matrix_of(C, a)
    return tuple(charpoly_by_cofactors(cells, AlgebraOps(C.algebra)))


@dataclass(frozen=True)
class InvarianceVerdict:
    element: tuple
    flags: tuple
    all_invariant: bool
    h_reduced: bool


def invariance_check(C, a, h_reduced=None, charpoly=None):
    """Decide which coefficients of the characteristic polynomial are invariant.

    Over an H-reduced algebra every coefficient must be; a failure there is a
    counterexample to the main invariance theorem and raises TheoremViolation
    with the element attached.  Pass h_reduced/charpoly to reuse work across a
    sweep over many elements.
    """
    cp = charpoly if charpoly is not None else coaction_charpoly(C, a)
    if h_reduced is None:
        h_reduced = is_h_reduced(C)
    allinv = cp.all_invariant()
    if h_reduced and not allinv:
        bad = [i for i, f in enumerate(cp.invariant_flags) if not f]
        raise TheoremViolation(
            "noninvariant characteristic coefficient over an H-reduced algebra",
            {"element": a, "coeff_indices": bad, "coeffs": cp.coeffs})
    return InvarianceVerdict(tuple(a), cp.invariant_flags, allinv, h_reduced)


@dataclass(frozen=True)
class IntegralityWitness:
    element: tuple
    kind: str        # "charpoly" | "power" | "none"
    poly: tuple      # ascending, entries in A (all invariant), monic; () when none
    exponent: int    # the p-power used by the "power" route, else 1

    @property
    def found(self):
        return self.kind != "none"


def integrality_witness(C, a, inv_space=None):
    """Monic polynomial with invariant coefficients annihilating a, if any.

    First route: the characteristic polynomial itself when its coefficients
    are already invariant.  Characteristic-p fallback: compute the polynomial
    of the image of a modulo the h-radical (whose coefficients are invariant
    by the reduced case), lift, and raise the whole polynomial to a p-power.
    The p-power kills both obstructions at once because the radical and its
    coaction defect are nilpotent; the exponent grows until the two exact
    checks (coefficients invariant, value at a zero) pass, with a hard bound
    of dim(A)*dim(H).  In characteristic zero with a noninvariant coefficient
    no witness of this shape exists and the answer says so.
    """
    F = C.field
    A = C.algebra
    if inv_space is None:
        inv_space = invariants(C)
    cp = coaction_charpoly(C, a, inv_space=inv_space)
    if cp.all_invariant():
        return IntegralityWitness(tuple(a), "charpoly", cp.coeffs, 1)
    p = F.char
    if not p:
        return IntegralityWitness(tuple(a), "none", (), 0)

    rad = h_radical(C)
    quotC, quot = quotient_comodule(C, rad)
    abar = quot.project(a)
    g = coaction_charpoly(quotC, abar)
    if not g.all_invariant():
        raise TheoremViolation("reduced quotient produced a noninvariant coefficient",
                               {"element": a})
    lifted = tuple(quot.lift_vec(c) for c in g.coeffs)

    def poly_mul(f, g2):
        out = [A.zero_vec()] * (len(f) + len(g2) - 1)
        for i, x in enumerate(f):
            if vec_is_zero(x):
                continue
            for j, y in enumerate(g2):
                if not vec_is_zero(y):
                    out[i + j] = vec_add(F, out[i + j], A.mul_vec(x, y))
        return tuple(out)

    bound = A.dim * C.hopf.dim
    f = lifted
    exponent = 1
    while True:
        good = all(vec_is_zero(c) or inv_space.contains(c) for c in f)
        if good and vec_is_zero(_eval_with_coeffs(A, f, a)):
            return IntegralityWitness(tuple(a), "power", f, exponent)
        if exponent > bound:
            raise TheoremViolation("no p-power witness below the dimension bound",
                                   {"element": a})
        nxt = f
        for _ in range(p - 1):
            nxt = poly_mul(nxt, f)
        f = nxt
        exponent *= p


def norm_of_coaction(C, a, charpoly_data=None):
    """N(a) = (-1)^{dim H} times the constant characteristic coefficient.

    a is invertible in A exactly when N(a) is: one direction because the
    polynomial identity makes a divide N(a), the other because the norm of a
    unit is computed from an invertible multiplication operator.  Both are
    enforced here.
    """
    cp = charpoly_data if charpoly_data is not None else coaction_charpoly(C, a)
    n = cp.norm
    inv_a = C.algebra.is_invertible(a)
    inv_n = C.algebra.is_invertible(n)
    if inv_a != inv_n:
        raise TheoremViolation("norm invertibility criterion failed",
                               {"element": a, "norm": n})
    return n


def invariant_power_identity(C, a):
    """For invariant a the characteristic polynomial must equal (t - a)^{dim H}."""
    F = C.field
    A = C.algebra
    if not invariants(C).contains(a):
        raise ValueError("element is not invariant")
    nh = C.hopf.dim
    factor = (tuple(F.neg(c) for c in a), A.unit)
    expected = (A.unit,)
    for _ in range(nh):
        out = [A.zero_vec()] * (len(expected) + 1)
        for i, x in enumerate(expected):
            for j, y in enumerate(factor):
                out[i + j] = vec_add(F, out[i + j], A.mul_vec(x, y))
        expected = tuple(out)
    cp = coaction_charpoly(C, a)
    if cp.coeffs != expected:
        raise TheoremViolation("invariant element with the wrong power polynomial",
                               {"element": a, "coeffs": cp.coeffs})
    return cp


def nilpotency_consistency(C, a, points=None):
    """Pointwise nilpotency criterion for delta_p(a).

    At each maximal ideal p, the image of delta(a) in k(p)(x)H is nilpotent
    exactly when every characteristic coefficient below the top evaluates to
    zero at p (the polynomial specializes to t^n over the residue field).
    Returns the list of (point, nilpotent) answers; a mismatch raises.
    """
    cp = coaction_charpoly(C, a)
    nh = C.hopf.dim
    if points is None:
        points = maximal_ideals(C.algebra)
    out = []
    for pt in points:
        tensor = tensor_product(pt.residue, C.hopf.alg)
        v = point_coaction_matrix(C, pt).mulvec(a)
        nilpotent = vec_is_zero(tensor.algebra.power(v, tensor.algebra.dim))
        vanish = all(vec_is_zero(pt.evaluate(cp.coeffs[i])) for i in range(nh))
        if nilpotent != vanish:
            raise TheoremViolation("pointwise nilpotency criterion failed",
                                   {"element": a, "ideal": pt.ideal})
        out.append((pt, nilpotent))
    return out


def _point_index(points, space):
    for i, pt in enumerate(points):
        if pt.ideal == space:
            return i
    raise ComoduleError("subspace is not among the maximal ideals")


def contracted_point(C, inv, pt):
    """The point of A^H under pt: the contraction of its ideal, in invariant
    coordinates."""
    return preimage_space(inv.embed, pt.ideal)


@dataclass(frozen=True)
class OpennessReport:
    element: tuple
    coefficient_ideal: Subspace   # ideal of A^H generated by the constant coefficient
    invertible_points: tuple      # indices into Max(A) where delta_p(a) is a unit
    image_points: tuple           # indices into Max(A^H) they contract to
    vanishing_points: tuple       # indices into Max(A^H) containing the ideal
    matched: bool


def openness_ideal_check(C, a):
    """The unit locus of delta(a) maps onto the complement of V(c_0) in the
    invariant spectrum; verified by full enumeration of both spectra.

    Upstairs, delta_p(a) is invertible exactly when the constant coefficient
    does not vanish at p: the characteristic polynomial commutes with the
    base change A -> k(p), and an element of a finite-dimensional algebra is
    a unit exactly when its multiplication operator has nonzero determinant,
    which is c_0(p) up to sign.  Downstairs the locus is cut out by the ideal
    the constant coefficient generates in A^H, so c_0 must be invariant; the
    check raises ValueError when it is not.
    """
    A, H = C.algebra, C.hopf
    inv = invariant_subalgebra(C)
    cp = coaction_charpoly(C, a)
    c0 = inv.space.coords_of(cp.coeffs[0])
    if c0 is None:
        raise ValueError("openness test needs an invariant constant coefficient")
    coeff_ideal = ideal_generated(inv.algebra, [c0])
    pts_up = maximal_ideals(A)
    pts_down = maximal_ideals(inv.algebra)
    invertible = []
    for i, pt in enumerate(pts_up):
        tensor = tensor_product(pt.residue, H.alg)
        v = point_coaction_matrix(C, pt).mulvec(a)
        if tensor.algebra.is_invertible(v):
            invertible.append(i)
    image = sorted({_point_index(pts_down, contracted_point(C, inv, pts_up[i]))
                    for i in invertible})
    vanishing = [j for j, q in enumerate(pts_down) if q.ideal.contains_space(coeff_ideal)]
    expected = [j for j in range(len(pts_down)) if j not in vanishing]
    matched = image == expected
    if not matched:
        raise TheoremViolation("openness identity failed",
                               {"element": a, "image": image, "expected": expected})
    return OpennessReport(tuple(a), coeff_ideal, tuple(invertible), tuple(image),
                          tuple(vanishing), matched)


@dataclass(frozen=True)
class OrbitalData:
    point: PointData
    tensor: TensorAlgebra   # k(p) (x) H, a plain algebra over the base field
    space: Subspace         # O(p) as a subspace of that algebra
    e_dim: int              # rank over the residue field
    reps: tuple             # elements of A whose point coactions give a residue basis


def orbital(C, pt):
    """O(p): the k(p)-span of delta_p(A) inside k(p)(x)H.

    All subspaces of k(p)(x)H are handled linearly over the base field; the
    residue field sits inside as the central subalgebra k(p)(x)1, so carrying
    a module structure around explicitly is never needed (for the structural
    checks, being closed under multiplication by that subalgebra is exactly
    k(p)-linearity).  The representatives are chosen greedily along the basis
    of A, which pins them down for reproducible output.

    Enforced afterwards: O(p) is a unital subalgebra, a right coideal, a
    k(p)-submodule containing k(p)(x)1, and its base-field dimension is the
    residue degree times the reported rank.
    """
    F = C.field
    H = C.hopf
    E = pt.residue
    deg, nh = E.dim, H.dim
    tensor = tensor_product(E, H.alg)
    T = tensor.algebra
    dp = point_coaction_matrix(C, pt)
    kappa = [tensor.pure(unit_vec(F, deg, r), H.alg.unit) for r in range(deg)]
    cols = [dp.col(j) for j in range(C.algebra.dim)]
    space = Subspace.span(F, deg * nh, [T.mul_vec(k, v) for v in cols for k in kappa])
    if space.dim % deg:
        raise TheoremViolation("orbital dimension not divisible by the residue degree",
                               {"ideal": pt.ideal})
    e_dim = space.dim // deg

    reps = []
    cur = Subspace.zero(F, deg * nh)
    for j in range(C.algebra.dim):
        if not cur.contains(cols[j]):
            reps.append(C.algebra.basis_vec(j))
            extra = Subspace.span(F, deg * nh, [T.mul_vec(k, cols[j]) for k in kappa])
            cur = cur.sum_with(extra)
    if len(reps) != e_dim or cur != space:
        raise TheoremViolation("representative extraction disagreed with the rank",
                               {"ideal": pt.ideal})

    if not space.contains(T.unit):
        raise TheoremViolation("orbital misses the unit", {"ideal": pt.ideal})
    for k in kappa:
        if not space.contains(k):
            raise TheoremViolation("orbital misses the residue scalars", {"ideal": pt.ideal})
    for u in space.rows:
        for v in space.rows:
            if not space.contains(T.mul_vec(u, v)):
                raise TheoremViolation("orbital not multiplicatively closed",
                                       {"ideal": pt.ideal})
    # right coideal: every H-comultiplication slice of O(p) stays inside
    for v in space.rows:
        slices = [[F.zero] * (deg * nh) for _ in range(nh)]
        for r in range(deg):
            for h in range(nh):
                c = v[r * nh + h]
                if not c:
                    continue
                for (x, y), s in H.comul[h]:
                    slices[y][r * nh + x] = F.add(slices[y][r * nh + x], F.mul(c, s))
        for sl in slices:
            if not space.contains(tuple(sl)):
                raise TheoremViolation("orbital is not a right coideal",
                                       {"ideal": pt.ideal})
    return OrbitalData(pt, tensor, space, e_dim, tuple(reps))


@dataclass(frozen=True)
class StabilizerData:
    point: PointData
    dual: HopfAlgebra
    tensor: TensorAlgebra   # k(p) (x) H*
    space: Subspace         # St(p) inside it
    e_dim: int              # rank over the residue field
    algebra: FiniteAlgebra  # St(p) as an algebra on the space basis
    semisimple: bool


def stabilizer(C, pt, dual=None, orb=None):
    """St(p) inside k(p)(x)H*: the annihilator of (k(p)(x)H)*(O(p) ∩ ker(id(x)eps))
    under the residue-valued pairing <kappa(x)xi, lam(x)h> = kappa*lam*xi(h).

    Enforced afterwards: St(p) is a unital subalgebra and a left coideal over
    the residue field, and rank O(p) * rank St(p) = dim H.  The semisimplicity
    flag comes from the radical of St(p) as a base-field algebra, which is the
    same subspace as the radical over k(p).
    """
    F = C.field
    H = C.hopf
    if dual is None:
        dual = dual_hopf(H)
    if orb is None:
        orb = orbital(C, pt)
    E = pt.residue
    deg, nh = E.dim, H.dim
    n = deg * nh
    T = orb.tensor.algebra

    eps_rows = []
    for r in range(deg):
        row = [F.zero] * n
        for h in range(nh):
            row[r * nh + h] = H.counit[h]
        eps_rows.append(row)
    ker_eps = Subspace.span(F, n, Mat(F, eps_rows).kernel_basis())
    oplus = orb.space.intersect(ker_eps)
    wvecs = [T.mul_vec(T.basis_vec(t), w) for w in oplus.rows for t in range(n)]
    wspace = Subspace.span(F, n, wvecs)

    mu = [[E.mul_vec(unit_vec(F, deg, r), unit_vec(F, deg, s)) for s in range(deg)]
          for r in range(deg)]
    rows = []
    for w in wspace.rows:
        for t in range(deg):
            row = [F.zero] * n
            for r in range(deg):
                for i in range(nh):
                    acc = F.zero
                    for s in range(deg):
                        c = w[s * nh + i]
                        m = mu[r][s][t]
                        if c and m:
                            acc = F.add(acc, F.mul(c, m))
                    row[r * nh + i] = acc
            rows.append(row)
    if rows:
        st = Subspace.span(F, n, Mat(F, rows).kernel_basis())
    else:
        st = Subspace.full(F, n)

    if st.dim % deg:
        raise TheoremViolation("stabilizer dimension not divisible by the residue degree",
                               {"ideal": pt.ideal})
    e_dim = st.dim // deg
    if orb.e_dim * e_dim != nh:
        raise TheoremViolation("rank O(p) * rank St(p) is not dim H",
                               {"ideal": pt.ideal, "orbital": orb.e_dim, "stabilizer": e_dim})

    tensor_d = tensor_product(E, dual.alg)
    Td = tensor_d.algebra
    kappa_d = [tensor_d.pure(unit_vec(F, deg, r), dual.alg.unit) for r in range(deg)]
    for v in st.rows:
        for k in kappa_d:
            if not st.contains(Td.mul_vec(k, v)):
                raise TheoremViolation("stabilizer not a residue submodule",
                                       {"ideal": pt.ideal})
    sub = subalgebra_on_subspace(Td, st)   # raises when not a unital subalgebra
    # left coideal over the residue field: slices on the first dual leg
    for v in st.rows:
        slices = [[F.zero] * n for _ in range(nh)]
        for r in range(deg):
            for i in range(nh):
                c = v[r * nh + i]
                if not c:
                    continue
                for (x, y), s in dual.comul[i]:
                    slices[x][r * nh + y] = F.add(slices[x][r * nh + y], F.mul(c, s))
        for sl in slices:
            if not st.contains(tuple(sl)):
                raise TheoremViolation("stabilizer is not a left coideal",
                                       {"ideal": pt.ideal})
    _, semisimple = radical_and_semisimplicity(sub.algebra)
    return StabilizerData(pt, dual, tensor_d, st, e_dim, sub.algebra, semisimple)


def _as_ideal_space(q):
    return q.ideal if isinstance(q, PointData) else q


def fiber(C, q, inv=None, points=None):
    """Fiber of Max A -> Max A^H over q, read off from one orbital algebra.

    Picks the first maximal ideal of A contracting to q, forms O(p) as an
    algebra, and pulls its maximal ideals back along delta_p.  Ideals of O(p)
    are automatically subspaces over k(p) because k(p)(x)1 is central, so the
    base-field spectrum machinery applies unchanged.  Every pullback is a
    fiber point (the quotient embeds in a field, and an invariant lies in the
    pullback exactly when it lies in q); over a non-closed base several
    maximal ideals of O(p) can land on one point of A, so the pullbacks are
    deduplicated.  Returns the list of ideals of A, sorted; the brute-force
    companion is brute_fiber.
    """
    F = C.field
    A = C.algebra
    q_space = _as_ideal_space(q)
    if inv is None:
        inv = invariant_subalgebra(C)
    if points is None:
        points = maximal_ideals(A)
    over = [pt for pt in points if contracted_point(C, inv, pt) == q_space]
    if not over:
        raise ComoduleError("no maximal ideal of A lies over the given point")
    pt = over[0]
    orb = orbital(C, pt)
    sub = subalgebra_on_subspace(orb.tensor.algebra, orb.space)
    dp = point_coaction_matrix(C, pt)
    cols = [orb.space.coords_of(dp.col(j)) for j in range(A.dim)]
    dmat = Mat.from_cols(F, cols)
    seen = {}
    for m in maximal_ideals(sub.algebra):
        s = preimage_space(dmat, m.ideal)
        seen[s.rows] = s
    return sorted(seen.values(), key=lambda s: s.sort_key())


def brute_fiber(C, q, inv=None, points=None):
    """Oracle for fiber: enumerate Max A and keep what contracts to q."""
    q_space = _as_ideal_space(q)
    if inv is None:
        inv = invariant_subalgebra(C)
    if points is None:
        points = maximal_ideals(C.algebra)
    out = [pt.ideal for pt in points if contracted_point(C, inv, pt) == q_space]
    out.sort(key=lambda s: s.sort_key())
    return out


@dataclass(frozen=True)
class GaloisReport:
    galois: bool
    gamma_rank: int
    expected_rank: int
    orbital_ranks: tuple   # rank of O(p) per point, in spectrum order


def is_galois(C, points=None):
    """Galois test, run along both available routes.

    Route one: the rank of the map a(x)b -> (a(x)1)*delta(b) out of A(x)A
    must be dim A * dim H.  Route two: every orbital has full rank dim H.
    The two are equivalent for finite-dimensional commutative A (localize the
    cokernel at each maximal ideal), so disagreement raises.
    """
    F = C.field
    A, H = C.algebra, C.hopf
    na, nh = A.dim, H.dim
    square = tensor_product(A, H.alg)
    T = square.algebra
    deltas = [C.coaction_vec(A.basis_vec(j)) for j in range(na)]
    cols = []
    for i in range(na):
        left = square.pure(A.basis_vec(i), H.alg.unit)
        for dv in deltas:
            cols.append(T.mul_vec(left, dv))
    rank = Mat.from_cols(F, cols).rank()
    by_rank = rank == na * nh
    if points is None:
        points = maximal_ideals(A)
    ranks = tuple(orbital(C, pt).e_dim for pt in points)
    by_orbitals = all(r == nh for r in ranks)
    if by_rank != by_orbitals:
        raise TheoremViolation("the two Galois criteria disagreed",
                               {"rank": rank, "orbital_ranks": ranks})
    return GaloisReport(by_rank, rank, na * nh, ranks)


@dataclass(frozen=True)
class IntegralData:
    maps: Subspace          # comodule maps H -> A, coordinates u[h*dimA + a]
    values: Subspace        # their values at 1_H, a subspace of A
    has_total: bool
    total: Mat              # dim A x dim H with phi(1_H) = 1_A, or None


def integral_space(C):
    """All comodule maps phi: H -> A and the ideal of values phi(1_H).

    The solution space of the linearized condition delta(phi(h)) =
    sum phi(h_(1))(x)h_(2).  Values at 1_H always land in the invariants and
    form an ideal of A^H there; both facts are enforced.  has_total reports
    whether some phi takes 1_H to 1_A, and total is one such map when it does
    (found by solving the same system with the normalization appended).
    """
    F = C.field
    A, H = C.algebra, C.hopf
    na, nh = A.dim, H.dim
    D = C.coaction_matrix()
    rows = []
    for i in range(nh):
        block = [[F.zero] * (nh * na) for _ in range(na * nh)]
        for rix in range(na * nh):
            c_coord, b = divmod(rix, nh)
            for a in range(na):
                v = D.rows[rix][a]
                if v:
                    block[rix][i * na + a] = F.add(block[rix][i * na + a], v)
        for (a, b), s in H.comul[i]:
            for c_coord in range(na):
                rix = c_coord * nh + b
                block[rix][a * na + c_coord] = F.sub(block[rix][a * na + c_coord], s)
        rows.extend(block)
    system = Mat(F, rows)
    maps = Subspace.span(F, nh * na, system.kernel_basis())

    value_rows = [[F.zero] * (nh * na) for _ in range(na)]
    for j, uj in enumerate(H.alg.unit):
        if uj:
            for a in range(na):
                value_rows[a][j * na + a] = F.add(value_rows[a][j * na + a], uj)
    value_map = Mat(F, value_rows)
    values = Subspace.span(F, na, [value_map.mulvec(m) for m in maps.rows])

    inv_space = invariants(C)
    for v in values.rows:
        if not inv_space.contains(v):
            raise TheoremViolation("integral value escaped the invariants", {"value": v})
    for v in values.rows:
        for r in inv_space.rows:
            if not values.contains(A.mul_vec(r, v)):
                raise TheoremViolation("integral values are not an invariant ideal",
                                       {"value": v})

    has_total = values.contains(A.unit)
    total = None
    if has_total:
        stacked = Mat(F, list(system.rows) + list(value_map.rows))
        rhs = tuple([F.zero] * system.nrows) + tuple(A.unit)
        sol = stacked.solve(rhs)
        if sol is None:
            raise TheoremViolation("total integral vanished between two solves")
        total = Mat(F, [[sol[j * na + a] for j in range(nh)] for a in range(na)])
    return IntegralData(maps, values, has_total, total)


def doi_trace(M, phi, v):
    """tr(v) = sum v_(0) * phi(antipode(v_(1))): the retraction onto M^H
    attached to a total integral phi (given as its dim A x dim H matrix)."""
    C = M.comodule
    H = C.hopf
    F = C.field
    if phi.mulvec(H.alg.unit) != C.algebra.unit:
        raise ValueError("doi_trace needs a total integral: phi(1_H) = 1_A")
    composed = phi.mul(H.antipode)
    nh = H.dim
    out = tuple([F.zero] * M.dim)
    dv = M.coaction_vec(v)
    for idx, c in enumerate(dv):
        if not c:
            continue
        m0, h = divmod(idx, nh)
        img = M.act(composed.col(h), unit_vec(F, M.dim, m0))
        out = tuple(F.add(x, F.mul(c, y)) for x, y in zip(out, img))
    return out


def doi_trace_matrix(M, phi):
    cols = [doi_trace(M, phi, unit_vec(M.field, M.dim, j)) for j in range(M.dim)]
    return Mat.from_cols(M.field, cols)


@dataclass(frozen=True)
class IntegralPointReport:
    point: PointData
    stabilizer_semisimple: bool
    value_outside_point: bool


def integral_point_survey(C, data=None):
    """Per-point comparison of stabilizer semisimplicity with the position of
    the integral value ideal.

    The proved direction: a semisimple St(p) forces the value ideal out of p
    (and all stabilizers semisimple forces a total integral); violations
    raise.  The converse direction is recorded as data and never enforced.
    """
    if data is None:
        data = integral_space(C)
    reports = []
    all_semisimple = True
    for pt in maximal_ideals(C.algebra):
        st = stabilizer(C, pt)
        outside = any(not pt.ideal.contains(v) for v in data.values.rows)
        if st.semisimple and not outside:
            raise TheoremViolation("semisimple stabilizer with integral values inside the point",
                                   {"ideal": pt.ideal})
        all_semisimple = all_semisimple and st.semisimple
        reports.append(IntegralPointReport(pt, st.semisimple, outside))
    if all_semisimple and not data.has_total:
        raise TheoremViolation("all stabilizers semisimple yet no total integral")
    return reports


@dataclass(frozen=True)
class FreeBasisFactor:
    idempotent: tuple      # ambient A coordinates
    rank: int              # module generators used = rank of the orbital
    reps: tuple            # elements of A
    corner_dim: int
    invariant_corner_dim: int


@dataclass(frozen=True)
class FreeBasisData:
    factors: tuple

    @property
    def ranks(self):
        return tuple(f.rank for f in self.factors)


def free_basis_over_invariants(C):
    """Certified free module bases of A over A^H, one per invariant point.

    Needs an H-reduced algebra (otherwise freeness can genuinely fail; compute
    h_radical to see the obstruction).  For each primitive idempotent f of
    A^H the products {b*a_i}, b running over a basis of f*A^H and a_i over the
    orbital representatives of a point above f, are checked to be a basis of
    the corner f*A; that square invertibility is exactly unique representation
    with coefficients in f*A^H.
    """
    if not is_h_reduced(C):
        raise ComoduleError(
            "free bases need an H-reduced algebra; h_radical(C) is nonzero")
    F = C.field
    A = C.algebra
    inv = invariant_subalgebra(C)
    points = maximal_ideals(A)
    factors = []
    for idem, qpt in idempotent_decomposition(inv.algebra):
        f_amb = inv.to_ambient(idem)
        corner = Subspace.span(F, A.dim,
                               [A.mul_vec(f_amb, A.basis_vec(j)) for j in range(A.dim)])
        inv_corner = Subspace.span(
            F, A.dim,
            [A.mul_vec(f_amb, inv.to_ambient(inv.algebra.basis_vec(k)))
             for k in range(inv.algebra.dim)])
        over = [pt for pt in points if contracted_point(C, inv, pt) == qpt.ideal]
        if not over:
            raise TheoremViolation("invariant point with an empty fiber",
                                   {"ideal": qpt.ideal})
        orb = orbital(C, over[0])
        cols = []
        for b in inv_corner.rows:
            for rep in orb.reps:
                col = corner.coords_of(A.mul_vec(b, rep))
                if col is None:
                    raise TheoremViolation("candidate basis left its corner",
                                           {"ideal": qpt.ideal})
                cols.append(col)
        if len(cols) != corner.dim or Mat.from_cols(F, cols).rank() != corner.dim:
            raise TheoremViolation("free basis certificate failed",
                                   {"ideal": qpt.ideal, "columns": len(cols),
                                    "corner": corner.dim})
        factors.append(FreeBasisFactor(f_amb, orb.e_dim, orb.reps,
                                       corner.dim, inv_corner.dim))
    return FreeBasisData(tuple(factors))


def costable_family(C):
    """A canonical finite family of costable ideals: zero, the whole algebra,
    the h-radical, the largest costable ideal inside each maximal ideal, the
    costable closure of each basis line, and one round of pairwise sums and
    intersections."""
    F = C.field
    A = C.algebra
    na = A.dim
    fam = {}

    def add(s):
        fam[s.rows] = s

    add(Subspace.zero(F, na))
    add(Subspace.full(F, na))
    add(h_radical(C))
    for pt in maximal_ideals(A):
        add(largest_costable_within(C, pt.ideal))
    for j in range(na):
        add(costable_closure(C, [A.basis_vec(j)]))
    base = list(fam.values())
    for s1 in base:
        for s2 in base:
            add(s1.sum_with(s2))
            add(s1.intersect(s2))
    out = sorted(fam.values(), key=lambda s: s.sort_key())
    for s in out:
        if not is_costable(C, s):
            raise TheoremViolation("family member is not costable", {"space": s})
    return out


@dataclass(frozen=True)
class CorrespondenceReport:
    costable_count: int
    invariant_count: int
    restriction_ok: bool   # I -> I ∩ A^H -> (I ∩ A^H)A returns I
    extension_ok: bool     # J -> JA -> JA ∩ A^H returns J

    @property
    def ok(self):
        return self.restriction_ok and self.extension_ok


def ideal_correspondence_check(C):
    """Round trips of the costable-ideal correspondence on finite families.

    Costable ideals of A restrict to ideals of A^H and extend back; ideals of
    A^H extend to costable ideals of A and restrict back.  Over an H-reduced
    algebra both round trips are the identity, so any failure raises.  The
    families are the canonical costable family upstairs and, downstairs, the
    lattice generated by the maximal ideals.
    """
    if not is_h_reduced(C):
        raise ComoduleError(
            "the ideal correspondence needs an H-reduced algebra; "
            "h_radical(C) is nonzero")
    F = C.field
    A = C.algebra
    inv = invariant_subalgebra(C)
    ni = inv.algebra.dim

    upstairs = costable_family(C)
    restriction_ok = True
    for ideal in upstairs:
        meet = ideal.intersect(inv.space)
        back = ideal_generated(A, list(meet.rows))
        if back != ideal:
            raise TheoremViolation("restriction round trip failed",
                                   {"ideal": ideal})

    down = {}

    def add(s):
        down[s.rows] = s

    add(Subspace.zero(F, ni))
    add(Subspace.full(F, ni))
    for qpt in maximal_ideals(inv.algebra):
        add(qpt.ideal)
    base = list(down.values())
    for s1 in base:
        for s2 in base:
            add(s1.sum_with(s2))
            add(s1.intersect(s2))
    downstairs = sorted(down.values(), key=lambda s: s.sort_key())
    extension_ok = True
    for j_ideal in downstairs:
        amb = [inv.to_ambient(r) for r in j_ideal.rows]
        extended = ideal_generated(A, amb)
        if not is_costable(C, extended):
            raise TheoremViolation("extension of an invariant ideal is not costable",
                                   {"ideal": j_ideal})
        meet = extended.intersect(inv.space)
        back = Subspace.span(F, ni, [inv.from_ambient(r) for r in meet.rows])
        if back != j_ideal:
            raise TheoremViolation("extension round trip failed", {"ideal": j_ideal})
    return CorrespondenceReport(len(upstairs), len(downstairs),
                                restriction_ok, extension_ok)


@dataclass(frozen=True)
class HopfModuleReport:
    applicable: bool    # M coincides with M^H * A
    tensor_dim: int     # dim of M^H tensored with A over A^H
    psi_bijective: bool
    phi_bijective: bool

    @property
    def ok(self):
        return self.applicable and self.psi_bijective and self.phi_bijective


def hopf_module_equivalence_check(C, M):
    """Both unit maps of the invariants/Hopf module correspondence, checked as
    explicit linear algebra.

    The module M^H (x)_{A^H} A is built as the quotient of M^H (x) A by the
    balancing relations (w*x)(x)a - w(x)(x*a); the evaluation map down to M
    and the coinvariants comparison map up from M^H are then plain matrices.
    Needs an H-reduced algebra.  When M is not generated by its invariants
    the correspondence does not apply and the report says so; otherwise both
    maps must be bijective and a failure raises.
    """
    if not is_h_reduced(C):
        raise ComoduleError(
            "the Hopf module comparison needs an H-reduced algebra")
    F = C.field
    A = C.algebra
    na, nh = A.dim, C.hopf.dim
    inv = invariant_subalgebra(C)
    ninv = module_invariants(M)
    wbasis = list(ninv.rows)
    n_w = len(wbasis)

    generated = Subspace.span(
        F, M.dim, [M.act(A.basis_vec(j), w) for w in wbasis for j in range(na)])
    if generated.dim != M.dim:
        return HopfModuleReport(False, 0, False, False)

    dim0 = n_w * na
    rels = []
    for widx, w in enumerate(wbasis):
        for k in range(inv.algebra.dim):
            x = inv.to_ambient(inv.algebra.basis_vec(k))
            wx = ninv.coords_of(M.act(x, w))
            if wx is None:
                raise TheoremViolation("invariant action left the invariants",
                                       {"module_dim": M.dim})
            for j in range(na):
                vec = [F.zero] * dim0
                for r, c in enumerate(wx):
                    if c:
                        vec[r * na + j] = F.add(vec[r * na + j], c)
                xa = A.mul_vec(x, A.basis_vec(j))
                for s, c in enumerate(xa):
                    if c:
                        vec[widx * na + s] = F.sub(vec[widx * na + s], c)
                rels.append(tuple(vec))
    rel_space = Subspace.span(F, dim0, rels)
    free = rel_space.complement_coords()
    tdim = len(free)

    def project0(vec):
        red = rel_space.reduce(vec)
        return tuple(red[c] for c in free)

    # evaluation on the big tensor product, then well-definedness downstairs
    eval_cols = [M.act(A.basis_vec(j), wbasis[r]) for r in range(n_w) for j in range(na)]
    eval0 = Mat.from_cols(F, eval_cols)
    for rel in rel_space.rows:
        if not vec_is_zero(eval0.mulvec(rel)):
            raise TheoremViolation("evaluation map does not kill the balancing relations")
    psi = Mat.from_cols(F, [eval_cols[c] for c in free])
    psi_bijective = tdim == M.dim and psi.rank() == M.dim
    if not psi_bijective:
        raise TheoremViolation("tensor-up then evaluate is not bijective",
                               {"tensor_dim": tdim, "module_dim": M.dim})

    # coaction on the quotient: the A leg coacts, the invariant leg is inert
    deltas = [C.coaction_vec(A.basis_vec(j)) for j in range(na)]
    for rel in rel_space.rows:
        slices = [[F.zero] * dim0 for _ in range(nh)]
        for idx, c in enumerate(rel):
            if not c:
                continue
            r, j = divmod(idx, na)
            for t, s in enumerate(deltas[j]):
                if s:
                    a, h = divmod(t, nh)
                    slices[h][r * na + a] = F.add(slices[h][r * na + a], F.mul(c, s))
        for sl in slices:
            if not rel_space.contains(tuple(sl)):
                raise TheoremViolation("balancing relations are not costable")
    lifts = [unit_vec(F, dim0, c) for c in free]
    coact_cols = []
    for lift in lifts:
        col = [F.zero] * (tdim * nh)
        for idx, c in enumerate(lift):
            if not c:
                continue
            r, j = divmod(idx, na)
            for t, s in enumerate(deltas[j]):
                if s:
                    a, h = divmod(t, nh)
                    base_vec = [F.zero] * dim0
                    base_vec[r * na + a] = F.mul(c, s)
                    proj = project0(tuple(base_vec))
                    for qi, qc in enumerate(proj):
                        if qc:
                            col[qi * nh + h] = F.add(col[qi * nh + h], qc)
        coact_cols.append(tuple(col))
    coact = Mat.from_cols(F, coact_cols)
    inv_rows = []
    for rix in range(tdim * nh):
        qi, h = divmod(rix, nh)
        row = list(coact.rows[rix])
        uh = C.hopf.alg.unit[h]
        if uh:
            row[qi] = F.sub(row[qi], uh)
        inv_rows.append(row)
    t_invariants = Subspace.span(F, tdim, Mat(F, inv_rows).kernel_basis())

    phi_cols = []
    for r in range(n_w):
        vec = [F.zero] * dim0
        for s, c in enumerate(A.unit):
            if c:
                vec[r * na + s] = c
        phi_cols.append(project0(tuple(vec)))
    phi = Mat.from_cols(F, phi_cols)
    phi_image = Subspace.span(F, tdim, [phi.mulvec(unit_vec(F, n_w, r)) for r in range(n_w)])
    phi_bijective = (phi.rank() == n_w and phi_image == t_invariants)
    if not phi_bijective:
        raise TheoremViolation("invariants comparison map is not bijective",
                               {"rank": phi.rank(), "invariants_dim": t_invariants.dim})
    return HopfModuleReport(True, tdim, psi_bijective, phi_bijective)


def power_image_check(C, ideal, abar=None):
    """Binomial powers land in the image of the invariants.

    For a costable ideal I and abar in (A/I)^H, every binom(m, j)*abar^j with
    m = dim H must lie in the image of A^H -> (A/I)^H.  Hypothesis: every
    element of A has invariant characteristic coefficients (checked on the
    basis; ValueError when it fails, since the statement needs it).  With
    abar=None all invariant basis vectors downstairs are tested.  Returns
    {j: True} maps per element; a False raises instead.
    """
    F = C.field
    A = C.algebra
    m = C.hopf.dim
    inv_space = invariants(C)
    for j in range(A.dim):
        if not coaction_charpoly(C, A.basis_vec(j), inv_space=inv_space).all_invariant():
            raise ValueError("power image test needs invariant characteristic "
                             "coefficients throughout")
    quotC, quot = quotient_comodule(C, ideal)
    Q = quotC.algebra
    down = invariants(quotC)
    image = Subspace.span(F, Q.dim, [quot.project(r) for r in inv_space.rows])
    for r in image.rows:
        if not down.contains(r):
            raise TheoremViolation("projected invariant is not invariant downstairs")
    targets = [abar] if abar is not None else list(down.rows)
    results = []
    for t in targets:
        if not down.contains(t):
            raise ValueError("element is not invariant in the quotient")
        verdict = {}
        for j in range(m + 1):
            coef = F.from_int(math.comb(m, j))
            val = Q.scale(coef, Q.power(t, j))
            okay = image.contains(val)
            if not okay:
                raise TheoremViolation("binomial power escaped the invariant image",
                                       {"element": t, "power": j})
            verdict[j] = okay
        results.append((tuple(t), verdict))
    return results


def weak_reductivity_check(C, ideals=None):
    """Surjectivity of A^H -> (A/I)^H across a family of costable ideals.

    Defaults to the proper members of the canonical costable family.  Returns
    (all_surjective, rows) with one (ideal, surjective, downstairs dimension,
    image dimension) entry per ideal; nothing raises here, the answer itself
    is the point.
    """
    F = C.field
    inv_space = invariants(C)
    if ideals is None:
        ideals = [s for s in costable_family(C) if not s.is_full()]
    rows = []
    all_ok = True
    for ideal in ideals:
        quotC, quot = quotient_comodule(C, ideal)
        down = invariants(quotC)
        image = Subspace.span(F, quotC.algebra.dim,
                              [quot.project(r) for r in inv_space.rows])
        for r in image.rows:
            if not down.contains(r):
                raise TheoremViolation("projected invariant is not invariant downstairs")
        ok = image.dim == down.dim
        rows.append((ideal, ok, down.dim, image.dim))
        all_ok = all_ok and ok
    return all_ok, rows


@dataclass(frozen=True)
class ReductivityCertificate:
    kind: str     # "a" | "b" | "c" | "none"
    detail: str

    @property
    def found(self):
        return self.kind != "none"


def weak_reductivity_certificate(C):
    """Cheapest sufficient condition for weak reductivity, in order.

    (a) every characteristic coefficient is invariant (guaranteed with a
        commutative H or an H-reduced A, spot-checked on the basis either
        way) and the characteristic does not divide dim H;
    (b) a total integral exists;
    (c) the algebra is H-reduced and every point whose orbital is not full
        has a semisimple stabilizer.
    Returns kind "none" when nothing applies; that is an answer, not an
    error, since these conditions are sufficient only.
    """
    F = C.field
    A = C.algebra
    nh = C.hopf.dim
    structural = C.hopf.alg.is_commutative() or is_h_reduced(C)
    if structural:
        inv_space = invariants(C)
        for j in range(A.dim):
            cp = coaction_charpoly(C, A.basis_vec(j), inv_space=inv_space)
            if not cp.all_invariant():
                raise TheoremViolation(
                    "structural invariance condition failed its spot check",
                    {"basis_index": j})
        if F.char == 0 or nh % F.char:
            return ReductivityCertificate(
                "a", "invariant characteristic coefficients and dim H invertible")
    data = integral_space(C)
    if data.has_total:
        return ReductivityCertificate("b", "total integral exists")
    if is_h_reduced(C):
        fine = True
        for pt in maximal_ideals(A):
            orb = orbital(C, pt)
            if orb.e_dim < nh:
                st = stabilizer(C, pt, orb=orb)
                if not st.semisimple:
                    fine = False
                    break
        if fine:
            return ReductivityCertificate(
                "c", "H-reduced with semisimple stabilizers at every defective point")
    return ReductivityCertificate("none", "no sufficient condition applied")


@dataclass(frozen=True)
class ResidueDegreeReport:
    rows: tuple   # (point, relative degree, orbital rank) triples
    ok: bool


def residue_degree_check(C):
    """Residue degree bound: [k(p):k(q)] divides out to an integer and never
    exceeds the orbital rank at p."""
    A = C.algebra
    inv = invariant_subalgebra(C)
    pts_down = maximal_ideals(inv.algebra)
    rows = []
    for pt in maximal_ideals(A):
        q_space = contracted_point(C, inv, pt)
        qpt = pts_down[_point_index(pts_down, q_space)]
        if pt.degree % qpt.degree:
            raise TheoremViolation("residue degree is not a multiple of the base degree",
                                   {"ideal": pt.ideal})
        rel = pt.degree // qpt.degree
        orb = orbital(C, pt)
        if rel > orb.e_dim:
            raise TheoremViolation("residue degree exceeds the orbital rank",
                                   {"ideal": pt.ideal, "relative": rel,
                                    "rank": orb.e_dim})
        rows.append((pt, rel, orb.e_dim))
    return ResidueDegreeReport(tuple(rows), True)


@dataclass(frozen=True)
class OrbitResidueReport:
    point: PointData
    fiber_ring_rank: int   # dim of A/qA over k(q)
    orbital_rank: int
    iso_checked: bool      # explicit comparison attempted (both residues trivial)
    iso_ok: bool


def orbit_residue_iso_check(C, pt):
    """O(p) against the fiber ring A/qA of the point downstairs.

    The ranks agree for H-reduced algebras: dim_{k(q)} A/qA = dim_{k(p)} O(p).
    When both residue fields are the base field the map induced by delta_p is
    checked to be an honest algebra isomorphism (it always kills qA and is
    always onto, so bijectivity is the dimension count plus multiplicativity).
    """
    if not is_h_reduced(C):
        raise ComoduleError("the fiber ring comparison needs an H-reduced algebra")
    F = C.field
    A = C.algebra
    inv = invariant_subalgebra(C)
    pts_down = maximal_ideals(inv.algebra)
    q_space = contracted_point(C, inv, pt)
    qpt = pts_down[_point_index(pts_down, q_space)]
    amb = [inv.to_ambient(r) for r in qpt.ideal.rows]
    extended = ideal_generated(A, amb)
    quot = quotient_algebra(A, extended)
    ring = quot.algebra
    if ring.dim % qpt.degree:
        raise TheoremViolation("fiber ring dimension not divisible by the residue degree",
                               {"ideal": pt.ideal})
    ring_rank = ring.dim // qpt.degree
    orb = orbital(C, pt)
    if ring_rank != orb.e_dim:
        raise TheoremViolation("fiber ring rank disagrees with the orbital rank",
                               {"ideal": pt.ideal, "ring": ring_rank,
                                "orbital": orb.e_dim})
    iso_checked = pt.degree == 1 and qpt.degree == 1
    iso_ok = False
    if iso_checked:
        dp = point_coaction_matrix(C, pt)
        sub = subalgebra_on_subspace(orb.tensor.algebra, orb.space)
        for gen in extended.rows:
            if not vec_is_zero(dp.mulvec(gen)):
                raise TheoremViolation("point coaction does not kill the fiber ideal",
                                       {"ideal": pt.ideal})
        cols = []
        for j in range(ring.dim):
            lift = quot.lift_vec(ring.basis_vec(j))
            col = orb.space.coords_of(dp.mulvec(lift))
            if col is None:
                raise TheoremViolation("point coaction left the orbital")
            cols.append(col)
        chi = Mat.from_cols(F, cols)
        iso_ok = chi.rank() == ring.dim
        if iso_ok:
            if chi.mulvec(quot.project(A.unit)) != sub.from_ambient(orb.tensor.algebra.unit):
                iso_ok = False
            for i in range(ring.dim):
                for j in range(ring.dim):
                    lhs = chi.mulvec(ring.mul_vec(ring.basis_vec(i), ring.basis_vec(j)))
                    rhs = sub.algebra.mul_vec(chi.col(i), chi.col(j))
                    if lhs != rhs:
                        iso_ok = False
        if not iso_ok:
            raise TheoremViolation("fiber ring comparison map is not an isomorphism",
                                   {"ideal": pt.ideal})
    return OrbitResidueReport(pt, ring_rank, orb.e_dim, iso_checked, iso_ok)
