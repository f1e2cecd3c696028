"""Division-free characteristic polynomials over commutative rings.

A tiny ring-operations protocol lets the same code run over scalar fields,
structure-constant algebras, and polynomial rings over either.  The primary
algorithm is Samuelson-Berkowitz (no division at all, so it is valid over any
commutative ring, prime characteristic included).  A memoized cofactor
expansion of det(tI - M) over the polynomial ring serves as the independent
cross-check; the two share nothing but this protocol.
"""


class FieldOps:
    """Ring operations of a scalar field."""

    __slots__ = ("field", "zero", "one")

    def __init__(self, field):
        self.field = field
        self.zero = field.zero
        self.one = field.one

    def add(self, a, b):
        return self.field.add(a, b)

    def neg(self, a):
        return self.field.neg(a)

    def sub(self, a, b):
        return self.field.sub(a, b)

    def mul(self, a, b):
        return self.field.mul(a, b)

    def is_zero(self, a):
        return not a


class PolyOps:
    """Polynomials over a base ring, as trimmed ascending coefficient tuples."""

    __slots__ = ("base", "zero", "one")

    def __init__(self, base):
        self.base = base
        self.zero = ()
        self.one = (base.one,)

    def trim(self, coeffs):
        coeffs = list(coeffs)
        while coeffs and self.base.is_zero(coeffs[-1]):
            coeffs.pop()
        return tuple(coeffs)

    def add(self, a, b):
        n = max(len(a), len(b))
        out = []
        for i in range(n):
            x = a[i] if i < len(a) else self.base.zero
            y = b[i] if i < len(b) else self.base.zero
            out.append(self.base.add(x, y))
        return self.trim(out)

    def neg(self, a):
        return tuple(self.base.neg(x) for x in a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if not a or not b:
            return ()
        out = [self.base.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if self.base.is_zero(x):
                continue
            for j, y in enumerate(b):
                if self.base.is_zero(y):
                    continue
                out[i + j] = self.base.add(out[i + j], self.base.mul(x, y))
        return self.trim(out)

    def is_zero(self, a):
        return len(a) == 0

    def const(self, c):
        return self.trim([c])

    def x_minus(self, c):
        return self.trim([self.base.neg(c), self.base.one])


def berkowitz_charpoly(entries, ops):
    """Coefficients (ascending, monic) of det(tI - M) for a square matrix M.

    `entries` is a list of rows of ring elements, `ops` the ring protocol.
    Division-free, so correct over any commutative ring.
    """
    n = len(entries)
    if any(len(row) != n for row in entries):
        raise ValueError("not square")
    if n == 0:
        return [ops.one]
    # descending-coefficient vector of the running principal charpoly
    poly = [ops.one, ops.neg(entries[0][0])]
    for r in range(2, n + 1):
        a = entries[r - 1][r - 1]
        row = entries[r - 1][:r - 1]
        col = [entries[i][r - 1] for i in range(r - 1)]
        # first Toeplitz column: 1, -a, -R S, -R A S, -R A^2 S, ...
        firsts = [ops.one, ops.neg(a)]
        vec = col
        for _ in range(r - 1):
            firsts.append(ops.neg(_dot_ring(ops, row, vec)))
            vec = [_dot_ring(ops, entries[i][:r - 1], vec) for i in range(r - 1)]
        new_poly = []
        for i in range(r + 1):
            acc = ops.zero
            for j in range(len(poly)):
                k = i - j
                if 0 <= k < len(firsts):
                    acc = ops.add(acc, ops.mul(firsts[k], poly[j]))
            new_poly.append(acc)
        poly = new_poly
    poly.reverse()
    return poly


def _dot_ring(ops, u, v):
    acc = ops.zero
    for a, b in zip(u, v):
        acc = ops.add(acc, ops.mul(a, b))
    return acc


def charpoly_by_cofactors(entries, ops):
    """Oracle for berkowitz_charpoly: expand det(tI - M) by cofactors.

    Works in the polynomial ring over `ops`, memoizing on (row count consumed,
    column subset); exponential in n, fine at test sizes.
    """
    n = len(entries)
    pring = PolyOps(ops)
    if n == 0:
        return [ops.one]
    tmat = [[pring.x_minus(entries[i][j]) if i == j else pring.neg(pring.const(entries[i][j]))
             for j in range(n)] for i in range(n)]
    cache = {}

    def minor(row, cols):
        if not cols:
            return pring.one
        key = (row, cols)
        if key in cache:
            return cache[key]
        acc = pring.zero
        sign = False
        for idx, c in enumerate(cols):
            entry = tmat[row][c]
            if not pring.is_zero(entry):
                sub = minor(row + 1, cols[:idx] + cols[idx + 1:])
                term = pring.mul(entry, sub)
                acc = pring.add(acc, pring.neg(term) if sign else term)
            sign = not sign
        cache[key] = acc
        return acc

    det = minor(0, tuple(range(n)))
    coeffs = list(det) + [ops.zero] * (n + 1 - len(det))
    return coeffs
