"""Dense exact linear algebra over a scalar field.

Matrices are immutable row tuples.  Subspaces are kept in reduced row echelon
form with unit pivots, so two subspaces are equal iff their representations
are equal; that canonical form is relied on throughout for set-like
comparisons of ideals and spectra.
"""


def vec_add(field, u, v):
    return tuple(field.add(a, b) for a, b in zip(u, v))

def vec_sub(field, u, v):
    return tuple(field.sub(a, b) for a, b in zip(u, v))

def vec_scale(field, c, u):
    return tuple(field.mul(c, a) for a in u)

def vec_is_zero(u):
    return all(not a for a in u)

def zero_vec(field, n):
    return (field.zero,) * n

def unit_vec(field, n, i):
    return tuple(field.one if j == i else field.zero for j in range(n))


class Mat:
    """Immutable dense matrix over a field."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field, rows):
        self.field = field
        self.rows = tuple(tuple(r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, field, n):
        return cls(field, [unit_vec(field, n, i) for i in range(n)])

    @classmethod
    def zeros(cls, field, nrows, ncols):
        return cls(field, [zero_vec(field, ncols)] * nrows)

    @classmethod
    def from_cols(cls, field, cols):
        return cls(field, cols).transpose()

    def __eq__(self, other):
        return isinstance(other, Mat) and self.field == other.field and self.rows == other.rows

    def __hash__(self):
        return hash((self.field, self.rows))

    def __repr__(self):
        return f"Mat({self.field!r}, {self.nrows}x{self.ncols})"

    def transpose(self):
        return Mat(self.field, list(zip(*self.rows)) if self.rows else [])

    def col(self, j):
        return tuple(r[j] for r in self.rows)

    def add(self, other):
        return Mat(self.field, [vec_add(self.field, r, s) for r, s in zip(self.rows, other.rows)])

    def sub(self, other):
        return Mat(self.field, [vec_sub(self.field, r, s) for r, s in zip(self.rows, other.rows)])

    def scale(self, c):
        return Mat(self.field, [vec_scale(self.field, c, r) for r in self.rows])

    def mul(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        F = self.field
        cols = other.transpose().rows
        return Mat(F, [
            tuple(_dot(F, r, c) for c in cols)
            for r in self.rows
        ])

    def mulvec(self, v):
        """Matrix times column vector (v given as a tuple)."""
        F = self.field
        if len(v) != self.ncols:
            raise ValueError("shape mismatch")
        return tuple(_dot(F, r, v) for r in self.rows)

    def rref(self):
        """Reduced row echelon form; returns (rows, pivot columns)."""
        F = self.field
        rows = [list(r) for r in self.rows]
        pivots = []
        r = 0
        for c in range(self.ncols):
            pivot_row = next((i for i in range(r, len(rows)) if rows[i][c]), None)
            if pivot_row is None:
                continue
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
            inv = F.inv(rows[r][c])
            rows[r] = [F.mul(inv, x) for x in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][c]:
                    factor = rows[i][c]
                    rows[i] = [F.sub(x, F.mul(factor, y)) for x, y in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == len(rows):
                break
        return [tuple(row) for row in rows[:r]], pivots

    def rank(self):
        return len(self.rref()[1])

    def kernel_basis(self):
        """Echelonized basis of the right null space {v : M v = 0}."""
        F = self.field
        rows, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in pivots]
        basis = []
        for fc in free:
            v = [F.zero] * self.ncols
            v[fc] = F.one
            for i, pc in enumerate(pivots):
                v[pc] = F.neg(rows[i][fc])
            basis.append(tuple(v))
        return basis

    def solve(self, b):
        """One solution of M x = b, or None if inconsistent."""
        F = self.field
        aug = Mat(F, [row + (bi,) for row, bi in zip(self.rows, b)])
        rows, pivots = aug.rref()
        if self.ncols in pivots:
            return None
        x = [F.zero] * self.ncols
        for i, pc in enumerate(pivots):
            x[pc] = rows[i][-1]
        return tuple(x)

    def solve_all(self, b):
        """(particular solution, kernel basis) or None if inconsistent."""
        x = self.solve(b)
        if x is None:
            return None
        return x, self.kernel_basis()

    def inverse(self):
        if self.nrows != self.ncols:
            raise ValueError("not square")
        F = self.field
        n = self.nrows
        aug = Mat(F, [self.rows[i] + unit_vec(F, n, i) for i in range(n)])
        rows, pivots = aug.rref()
        if pivots != list(range(n)):
            return None
        return Mat(F, [r[n:] for r in rows])

    def det(self):
        """Determinant by fraction-free-ish Gaussian elimination (field base)."""
        if self.nrows != self.ncols:
            raise ValueError("not square")
        F = self.field
        rows = [list(r) for r in self.rows]
        n = self.nrows
        det = F.one
        for c in range(n):
            pivot_row = next((i for i in range(c, n) if rows[i][c]), None)
            if pivot_row is None:
                return F.zero
            if pivot_row != c:
                rows[c], rows[pivot_row] = rows[pivot_row], rows[c]
                det = F.neg(det)
            det = F.mul(det, rows[c][c])
            inv = F.inv(rows[c][c])
            for i in range(c + 1, n):
                if rows[i][c]:
                    factor = F.mul(rows[i][c], inv)
                    rows[i] = [F.sub(x, F.mul(factor, y)) for x, y in zip(rows[i], rows[c])]
        return det


def _dot(field, u, v):
    acc = field.zero
    for a, b in zip(u, v):
        if a and b:
            acc = field.add(acc, field.mul(a, b))
    return acc


class Subspace:
    """A subspace of K^n in canonical reduced-echelon form (hashable)."""

    __slots__ = ("field", "ambient", "rows", "pivots")

    def __init__(self, field, ambient, rows, pivots):
        self.field = field
        self.ambient = ambient
        self.rows = rows
        self.pivots = pivots

    @classmethod
    def span(cls, field, ambient, vectors):
        vectors = [v for v in vectors if not vec_is_zero(v)]
        if not vectors:
            return cls(field, ambient, (), ())
        rows, pivots = Mat(field, vectors).rref()
        return cls(field, ambient, tuple(rows), tuple(pivots))

    @classmethod
    def zero(cls, field, ambient):
        return cls(field, ambient, (), ())

    @classmethod
    def full(cls, field, ambient):
        return cls.span(field, ambient, [unit_vec(field, ambient, i) for i in range(ambient)])

    @property
    def dim(self):
        return len(self.rows)

    def is_zero(self):
        return not self.rows

    def is_full(self):
        return self.dim == self.ambient

    def contains(self, v):
        F = self.field
        v = list(v)
        for row, pc in zip(self.rows, self.pivots):
            if v[pc]:
                c = v[pc]
                v = [F.sub(x, F.mul(c, y)) for x, y in zip(v, row)]
        return all(not x for x in v)

    def reduce(self, v):
        """Normal form of v modulo this subspace (kills pivot coordinates)."""
        F = self.field
        v = list(v)
        for row, pc in zip(self.rows, self.pivots):
            if v[pc]:
                c = v[pc]
                v = [F.sub(x, F.mul(c, y)) for x, y in zip(v, row)]
        return tuple(v)

    def contains_space(self, other):
        return all(self.contains(r) for r in other.rows)

    def sum_with(self, other):
        return Subspace.span(self.field, self.ambient, list(self.rows) + list(other.rows))

    def intersect(self, other):
        """Zassenhaus-free intersection: solve for combos of self landing in other."""
        if self.is_zero() or other.is_zero():
            return Subspace.zero(self.field, self.ambient)
        # rows of self that reduce to zero modulo other: solve x^T * self.rows in other
        # via kernel of the composite "reduce mod other" map restricted to self.
        reduced = [other.reduce(r) for r in self.rows]
        ker = Mat(self.field, reduced).transpose().kernel_basis()
        vecs = []
        for combo in ker:
            v = zero_vec(self.field, self.ambient)
            for c, row in zip(combo, self.rows):
                if c:
                    v = vec_add(self.field, v, vec_scale(self.field, c, row))
            vecs.append(v)
        return Subspace.span(self.field, self.ambient, vecs)

    def complement_coords(self):
        """Coordinate positions forming a complement (the non-pivot columns)."""
        return tuple(c for c in range(self.ambient) if c not in self.pivots)

    def coords_of(self, v):
        """Coefficients of v in the echelon basis, or None if v is outside."""
        F = self.field
        coeffs = []
        v = list(v)
        for row, pc in zip(self.rows, self.pivots):
            c = v[pc]
            coeffs.append(c)
            if c:
                v = [F.sub(x, F.mul(c, y)) for x, y in zip(v, row)]
        if any(v):
            return None
        return tuple(coeffs)

    def sort_key(self):
        fk = self.field.sort_key
        return (self.dim, self.pivots, tuple(tuple(fk(x) for x in row) for row in self.rows))

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.field == other.field
                and self.ambient == other.ambient and self.rows == other.rows)

    def __hash__(self):
        return hash((self.field, self.ambient, self.rows))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


def image_space(mat):
    """Column span of a matrix as a Subspace of K^nrows."""
    return Subspace.span(mat.field, mat.nrows, mat.transpose().rows)


def preimage_space(mat, space):
    """{x : M x ∈ space} as a Subspace of K^ncols."""
    field = mat.field
    if space.is_full():
        return Subspace.full(field, mat.ncols)
    reduced_rows = [space.reduce(col) for col in mat.transpose().rows]
    ker = Mat(field, reduced_rows).transpose().kernel_basis()
    return Subspace.span(field, mat.ncols, ker)


def push_space(mat, space):
    """Image {M x : x ∈ space} as a Subspace of K^nrows."""
    vecs = [mat.mulvec(r) for r in space.rows]
    return Subspace.span(mat.field, mat.nrows, vecs)
