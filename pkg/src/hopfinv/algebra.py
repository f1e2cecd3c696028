"""Finite-dimensional associative algebras given by structure constants.

Elements are coefficient tuples over the scalar field.  Multiplication tables
are stored sparsely (row i, column j holds the nonzero components of e_i e_j)
because every builder in this package produces tables that are mostly zero.
"""

from dataclasses import dataclass

from .fields import FieldError
from .linalg import Mat, Subspace, unit_vec, vec_add, vec_is_zero, vec_scale, zero_vec
from .rings import FieldOps


class AlgebraError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteAlgebra:
    field: object
    labels: tuple
    unit: tuple
    mul: tuple  # mul[i][j] = ((k, scalar), ...)

    @property
    def dim(self):
        return len(self.labels)

    def zero_vec(self):
        return zero_vec(self.field, self.dim)

    def basis_vec(self, i):
        return unit_vec(self.field, self.dim, i)

    def mul_vec(self, u, v):
        F = self.field
        out = [F.zero] * self.dim
        for i, ui in enumerate(u):
            if not ui:
                continue
            row = self.mul[i]
            for j, vj in enumerate(v):
                if not vj:
                    continue
                s = F.mul(ui, vj)
                for k, c in row[j]:
                    out[k] = F.add(out[k], F.mul(s, c))
        return tuple(out)

    def power(self, v, n):
        acc = self.unit
        for _ in range(n):
            acc = self.mul_vec(acc, v)
        return acc

    def scale(self, c, v):
        return vec_scale(self.field, c, v)

    def lmul_matrix(self, v):
        """Matrix of left multiplication by v (columns are images of basis vectors)."""
        cols = [self.mul_vec(v, self.basis_vec(j)) for j in range(self.dim)]
        return Mat.from_cols(self.field, cols)

    def rmul_matrix(self, v):
        cols = [self.mul_vec(self.basis_vec(j), v) for j in range(self.dim)]
        return Mat.from_cols(self.field, cols)

    def is_commutative(self):
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                ei, ej = self.basis_vec(i), self.basis_vec(j)
                if self.mul_vec(ei, ej) != self.mul_vec(ej, ei):
                    return False
        return True

    def is_invertible(self, v):
        return self.lmul_matrix(v).inverse() is not None

    def inverse(self, v):
        inv = self.lmul_matrix(v).inverse()
        if inv is None:
            return None
        return inv.mulvec(self.unit)

    def ring_ops(self):
        return AlgebraOps(self)

    def format_element(self, v):
        F = self.field
        parts = []
        for c, label in zip(v, self.labels):
            if not c:
                continue
            text = F.format(c)
            parts.append(f"{text}*{label}")
        return " + ".join(parts) if parts else "0"

    def mul_triples(self):
        """Dense-ish iteration of the multiplication tensor as (i, j, [(k, scalar)...])."""
        for i in range(self.dim):
            for j in range(self.dim):
                if self.mul[i][j]:
                    yield i, j, self.mul[i][j]


class AlgebraOps:
    """Commutative-ring protocol over a FiniteAlgebra (for charpoly work)."""

    __slots__ = ("alg", "zero", "one")

    def __init__(self, alg):
        self.alg = alg
        self.zero = alg.zero_vec()
        self.one = alg.unit

    def add(self, a, b):
        return vec_add(self.alg.field, a, b)

    def neg(self, a):
        return tuple(self.alg.field.neg(x) for x in a)

    def sub(self, a, b):
        F = self.alg.field
        return tuple(F.sub(x, y) for x, y in zip(a, b))

    def mul(self, a, b):
        return self.alg.mul_vec(a, b)

    def is_zero(self, a):
        return vec_is_zero(a)


def make_algebra(field, labels, unit, triples):
    """Assemble a FiniteAlgebra from sparse (i, j, [(k, scalar)...]) triples."""
    dim = len(labels)
    table = [[() for _ in range(dim)] for _ in range(dim)]
    for i, j, entries in triples:
        if not (0 <= i < dim and 0 <= j < dim):
            raise AlgebraError(f"multiplication index out of range: ({i}, {j})")
        merged = {}
        for k, c in entries:
            if not 0 <= k < dim:
                raise AlgebraError(f"multiplication target out of range: {k}")
            merged[k] = field.add(merged[k], c) if k in merged else c
        table[i][j] = tuple(sorted((k, c) for k, c in merged.items() if c))
    return FiniteAlgebra(field, tuple(labels), tuple(unit), tuple(tuple(r) for r in table))


def algebra_from_dense(field, labels, unit, dense):
    """dense[i][j] is a full coefficient vector for e_i e_j."""
    triples = []
    for i, row in enumerate(dense):
        for j, vec in enumerate(row):
            entries = [(k, c) for k, c in enumerate(vec) if c]
            if entries:
                triples.append((i, j, entries))
    return make_algebra(field, labels, unit, triples)


def validate_algebra(alg, require_commutative=False, require_unital=True):
    """List of human-readable axiom violations (empty means valid)."""
    issues = []
    d = alg.dim
    if len(alg.unit) != d:
        return [f"unit vector has length {len(alg.unit)}, expected {d}"]
    basis = [alg.basis_vec(i) for i in range(d)]
    if require_unital:
        for i, e in enumerate(basis):
            if alg.mul_vec(alg.unit, e) != e:
                issues.append(f"unit fails on the left of basis element {alg.labels[i]}")
            if alg.mul_vec(e, alg.unit) != e:
                issues.append(f"unit fails on the right of basis element {alg.labels[i]}")
    for i in range(d):
        for j in range(d):
            ij = alg.mul_vec(basis[i], basis[j])
            for k in range(d):
                left = alg.mul_vec(ij, basis[k])
                right = alg.mul_vec(basis[i], alg.mul_vec(basis[j], basis[k]))
                if left != right:
                    issues.append(
                        f"associativity fails at ({alg.labels[i]}, {alg.labels[j]}, {alg.labels[k]})")
    if require_commutative:
        for i in range(d):
            for j in range(i + 1, d):
                if alg.mul_vec(basis[i], basis[j]) != alg.mul_vec(basis[j], basis[i]):
                    issues.append(f"commutativity fails at ({alg.labels[i]}, {alg.labels[j]})")
    return issues


def ideal_generated(alg, generators):
    """Two-sided ideal generated by the given element vectors, as a Subspace."""
    space = Subspace.span(alg.field, alg.dim, list(generators))
    basis = [alg.basis_vec(i) for i in range(alg.dim)]
    while True:
        new_vecs = []
        for row in space.rows:
            for e in basis:
                for prod in (alg.mul_vec(e, row), alg.mul_vec(row, e)):
                    if not space.contains(prod):
                        new_vecs.append(prod)
        if not new_vecs:
            return space
        space = space.sum_with(Subspace.span(alg.field, alg.dim, new_vecs))


def is_ideal(alg, space):
    basis = [alg.basis_vec(i) for i in range(alg.dim)]
    for row in space.rows:
        for e in basis:
            if not space.contains(alg.mul_vec(e, row)):
                return False
            if not space.contains(alg.mul_vec(row, e)):
                return False
    return True


@dataclass(frozen=True)
class Quotient:
    algebra: FiniteAlgebra
    projection: Mat  # dim Q x dim A
    lift: Mat        # dim A x dim Q

    def project(self, v):
        return self.projection.mulvec(v)

    def lift_vec(self, v):
        return self.lift.mulvec(v)


def quotient_algebra(alg, ideal, label_prefix=None):
    """A/I for a two-sided ideal I; quotient basis from the complement coordinates."""
    if not is_ideal(alg, ideal):
        raise AlgebraError("subspace is not a two-sided ideal")
    F = alg.field
    free = ideal.complement_coords()
    qdim = len(free)
    if qdim == 0:
        raise AlgebraError("quotient by the whole algebra")

    def project(v):
        reduced = ideal.reduce(v)
        return tuple(reduced[c] for c in free)

    proj = Mat(F, [[ideal.reduce(unit_vec(F, alg.dim, j))[c] for j in range(alg.dim)] for c in free])
    lift = Mat.from_cols(F, [unit_vec(F, alg.dim, c) for c in free])
    labels = tuple(alg.labels[c] if label_prefix is None else f"{label_prefix}{alg.labels[c]}"
                   for c in free)
    dense = []
    for a in free:
        row = []
        for b in free:
            prod = alg.mul_vec(unit_vec(F, alg.dim, a), unit_vec(F, alg.dim, b))
            row.append(project(prod))
        dense.append(row)
    qalg = algebra_from_dense(F, labels, project(alg.unit), dense)
    return Quotient(qalg, proj, lift)


@dataclass(frozen=True)
class TensorAlgebra:
    algebra: FiniteAlgebra
    left_dim: int
    right_dim: int

    def index(self, i, j):
        return i * self.right_dim + j

    def pure(self, u, v):
        """u ⊗ v as a coefficient vector."""
        F = self.algebra.field
        out = [F.zero] * (self.left_dim * self.right_dim)
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if b:
                    out[self.index(i, j)] = F.mul(a, b)
        return tuple(out)


def tensor_product(a, b):
    """Tensor product algebra with basis pairs ordered left-major."""
    F = a.field
    if b.field != F:
        raise AlgebraError("tensor factors over different fields")
    labels = tuple(f"{la}⊗{lb}" for la in a.labels for lb in b.labels)
    dim_b = b.dim
    triples = []
    for i1, j1, row1 in a.mul_triples():
        for i2, j2, row2 in b.mul_triples():
            entries = []
            for k1, c1 in row1:
                for k2, c2 in row2:
                    entries.append((k1 * dim_b + k2, F.mul(c1, c2)))
            triples.append((i1 * dim_b + i2, j1 * dim_b + j2, entries))
    unit = [F.zero] * (a.dim * b.dim)
    for i, x in enumerate(a.unit):
        if not x:
            continue
        for j, y in enumerate(b.unit):
            if y:
                unit[i * dim_b + j] = F.mul(x, y)
    alg = make_algebra(F, labels, unit, triples)
    return TensorAlgebra(alg, a.dim, b.dim)


def min_poly(alg, v):
    """Monic minimal polynomial of v, ascending coefficients."""
    F = alg.field
    powers = [alg.unit]
    while True:
        mat = Mat.from_cols(F, powers)
        nxt = alg.mul_vec(powers[-1], v)
        sol = mat.solve(nxt)
        if sol is not None:
            return tuple(F.neg(c) for c in sol) + (F.one,)
        powers.append(nxt)
        if len(powers) > alg.dim + 1:
            raise AlgebraError("minimal polynomial search exceeded the dimension")


@dataclass(frozen=True)
class Subalgebra:
    algebra: FiniteAlgebra
    embed: Mat  # dim ambient x dim sub
    space: Subspace

    def to_ambient(self, v):
        return self.embed.mulvec(v)

    def from_ambient(self, v):
        coords = self.space.coords_of(v)
        if coords is None:
            raise AlgebraError("vector lies outside the subalgebra")
        return coords


def subalgebra_on_subspace(alg, space, labels=None):
    """Make the subspace a FiniteAlgebra; requires closure and the ambient unit."""
    F = alg.field
    if not space.contains(alg.unit):
        raise AlgebraError("subspace does not contain the unit")
    rows = list(space.rows)
    for u in rows:
        for v in rows:
            if not space.contains(alg.mul_vec(u, v)):
                raise AlgebraError("subspace is not multiplicatively closed")
    if labels is None:
        labels = tuple(f"s{i}" for i in range(len(rows)))
    dense = [[space.coords_of(alg.mul_vec(u, v)) for v in rows] for u in rows]
    unit = space.coords_of(alg.unit)
    sub = algebra_from_dense(F, labels, unit, dense)
    embed = Mat.from_cols(F, rows) if rows else Mat(F, [() for _ in range(alg.dim)])
    return Subalgebra(sub, embed, space)


def parse_element(alg, text):
    """Parse a linear expression like '2*x + 1/3*y - 4' into a coefficient vector.

    Bare scalars are multiples of the unit; bare labels have coefficient 1.
    """
    F = alg.field
    out = list(alg.zero_vec())
    pos = {label: i for i, label in enumerate(alg.labels)}
    chunk = ""
    sign = 1
    terms = []
    for ch in text:
        if ch in "+-" and chunk.strip() and not chunk.rstrip().endswith(("*", "/", "+", "-")):
            terms.append((sign, chunk))
            sign = 1 if ch == "+" else -1
            chunk = ""
        elif ch in "+-" and not chunk.strip():
            if ch == "-":
                sign = -sign
        else:
            chunk += ch
    if chunk.strip():
        terms.append((sign, chunk))
    if not terms:
        raise AlgebraError("empty element expression")
    for sgn, term in terms:
        term = term.strip()
        if term in pos:
            vec = alg.basis_vec(pos[term])
        elif "*" in term:
            coef_text, label = term.split("*", 1)
            label = label.strip()
            if label not in pos:
                raise AlgebraError(f"unknown basis label {label!r}")
            c = F.parse(coef_text.strip())
            vec = vec_scale(F, c, alg.basis_vec(pos[label]))
        else:
            try:
                c = F.parse(term)
            except FieldError:
                raise AlgebraError(
                    f"not a basis label or scalar of this algebra: {term!r}") from None
            vec = vec_scale(F, c, alg.unit)
        if sgn < 0:
            vec = tuple(F.neg(x) for x in vec)
        out = [F.add(a, b) for a, b in zip(out, vec)]
    return tuple(out)
