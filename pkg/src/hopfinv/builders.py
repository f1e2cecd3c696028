"""Constructors for the Hopf algebras the command line and tests work with.

Everything here returns a HopfAlgebra; validate_hopf is the single source of
truth for the axioms and is exercised on every builder in the test suite.
"""

from functools import lru_cache
import itertools

from .algebra import make_algebra, tensor_product
from .hopf import HopfError, make_hopf
from .linalg import Mat, unit_vec, zero_vec


def check_group_table(table):
    """Identity index and inverse list of a Cayley table, or raise."""
    n = len(table)
    for row in table:
        if len(row) != n or any(not 0 <= x < n for x in row):
            raise HopfError("malformed group table")
    identity = None
    for e in range(n):
        if all(table[e][g] == g and table[g][e] == g for g in range(n)):
            identity = e
            break
    if identity is None:
        raise HopfError("group table has no identity")
    inverses = []
    for g in range(n):
        inv = next((h for h in range(n) if table[g][h] == identity and table[h][g] == identity), None)
        if inv is None:
            raise HopfError(f"group element {g} has no inverse")
        inverses.append(inv)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise HopfError("group table is not associative")
    return identity, inverses


def group_algebra(field, table, labels=None):
    """K[G] for a finite group given by its Cayley table.

    Group elements are grouplike, the antipode inverts them.
    """
    n = len(table)
    identity, inverses = check_group_table(table)
    if labels is None:
        labels = tuple("e" if g == identity else f"g{g}" for g in range(n))
    one = field.one
    triples = [(i, j, [(table[i][j], one)]) for i in range(n) for j in range(n)]
    alg = make_algebra(field, labels, unit_vec(field, n, identity), triples)
    comul = [[((g, g), one)] for g in range(n)]
    counit = tuple(one for _ in range(n))
    antipode = Mat.from_cols(field, [unit_vec(field, n, inverses[g]) for g in range(n)])
    return make_hopf(alg, comul, counit, antipode)


def dual_group_algebra(field, table, labels=None):
    """The function algebra K^G: orthogonal idempotents delta_g.

    Multiplication is pointwise, comultiplication spreads over factorizations
    g = h·k, the counit evaluates at the identity.
    """
    n = len(table)
    identity, inverses = check_group_table(table)
    if labels is None:
        labels = tuple(f"d{g}" for g in range(n))
    one = field.one
    triples = [(i, i, [(i, one)]) for i in range(n)]
    alg = make_algebra(field, labels, tuple(one for _ in range(n)), triples)
    comul = [[] for _ in range(n)]
    for h in range(n):
        for k in range(n):
            comul[table[h][k]].append(((h, k), one))
    counit = unit_vec(field, n, identity)
    antipode = Mat.from_cols(field, [unit_vec(field, n, inverses[g]) for g in range(n)])
    return make_hopf(alg, comul, counit, antipode)


def cyclic_group_table(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def symmetric_group_table(m):
    """Cayley table of S_m on the lexicographically sorted permutations."""
    perms = sorted(itertools.permutations(range(m)))
    index = {p: i for i, p in enumerate(perms)}
    # (p·q)(x) = p(q(x)): column acts first
    return [[index[tuple(p[q[x]] for x in range(m))] for q in perms] for p in perms]


def sweedler_hopf(field):
    """The four-dimensional Hopf algebra on 1, g, x, gx (char not 2).

    g is grouplike with g^2 = 1, x is (1, g)-primitive with x^2 = 0 and
    xg = -gx; the antipode has order four.
    """
    if field.char == 2:
        raise HopfError("this four-dimensional Hopf algebra needs characteristic not 2")
    one = field.one
    mone = field.neg(one)
    I, G, X, GX = 0, 1, 2, 3
    labels = ("1", "g", "x", "gx")
    triples = [
        (I, I, [(I, one)]), (I, G, [(G, one)]), (I, X, [(X, one)]), (I, GX, [(GX, one)]),
        (G, I, [(G, one)]), (G, G, [(I, one)]), (G, X, [(GX, one)]), (G, GX, [(X, one)]),
        (X, I, [(X, one)]), (X, G, [(GX, mone)]), (X, X, []), (X, GX, []),
        (GX, I, [(GX, one)]), (GX, G, [(X, mone)]), (GX, X, []), (GX, GX, []),
    ]
    alg = make_algebra(field, labels, unit_vec(field, 4, I), triples)
    comul = [
        [((I, I), one)],
        [((G, G), one)],
        [((X, I), one), ((G, X), one)],
        [((GX, G), one), ((I, GX), one)],
    ]
    counit = (one, one, field.zero, field.zero)
    cols = [unit_vec(field, 4, I), unit_vec(field, 4, G),
            tuple(field.mul(mone, c) for c in unit_vec(field, 4, GX)),
            unit_vec(field, 4, X)]
    antipode = Mat.from_cols(field, cols)
    return make_hopf(alg, comul, counit, antipode)


class PLieAlgebra:
    """A restricted Lie algebra over a prime field: bracket table and p-power map.

    bracket[i][j] is the coefficient vector of [x_i, x_j]; pmap[i] is the
    coefficient vector of the p-th power of x_i.
    """

    def __init__(self, field, labels, bracket, pmap):
        if field.char == 0:
            raise HopfError("restricted Lie algebras live in positive characteristic")
        self.field = field
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        self.bracket = tuple(tuple(tuple(row2) for row2 in row) for row in bracket)
        self.pmap = tuple(tuple(v) for v in pmap)
        self._check()

    def bracket_vec(self, u, v):
        F = self.field
        out = [F.zero] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                s = F.mul(a, b)
                for k, c in enumerate(self.bracket[i][j]):
                    if c:
                        out[k] = F.add(out[k], F.mul(s, c))
        return tuple(out)

    def ad_matrix(self, v):
        cols = [self.bracket_vec(v, unit_vec(self.field, self.dim, j)) for j in range(self.dim)]
        return Mat.from_cols(self.field, cols)

    def _check(self):
        F = self.field
        n = self.dim
        if len(self.bracket) != n or any(len(r) != n for r in self.bracket):
            raise HopfError("bracket table has the wrong shape")
        if any(len(v) != n for row in self.bracket for v in row):
            raise HopfError("bracket table has the wrong shape")
        if len(self.pmap) != n or any(len(v) != n for v in self.pmap):
            raise HopfError("p-power map has the wrong length")
        for i in range(n):
            if any(c for c in self.bracket[i][i]):
                raise HopfError("bracket is not alternating")
            for j in range(n):
                neg = tuple(F.neg(c) for c in self.bracket[j][i])
                if self.bracket[i][j] != neg:
                    raise HopfError("bracket is not antisymmetric")
        basis = [unit_vec(F, n, i) for i in range(n)]
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    s = self.bracket_vec(basis[i], self.bracket_vec(basis[j], basis[k]))
                    s = tuple(F.add(a, b) for a, b in zip(
                        s, self.bracket_vec(basis[j], self.bracket_vec(basis[k], basis[i]))))
                    s = tuple(F.add(a, b) for a, b in zip(
                        s, self.bracket_vec(basis[k], self.bracket_vec(basis[i], basis[j]))))
                    if any(s):
                        raise HopfError("bracket fails the Jacobi identity")
        # ad of the p-th power must be the p-th power of ad
        p = F.char
        for i in range(n):
            adp = self.ad_matrix(basis[i])
            acc = Mat.identity(F, n)
            for _ in range(p):
                acc = adp.mul(acc)
            if self.ad_matrix(self.pmap[i]).rows != acc.rows:
                raise HopfError("p-power map is not compatible with ad")


def restricted_enveloping(lie, gen_labels=None):
    """u(L): monomial basis with exponents below p, straightening by the bracket.

    The generators are primitive; the antipode negates and reverses monomials.
    The dimension p^dim(L) is capped at 32 to keep everything exact and small.
    """
    F = lie.field
    p = F.char
    r = lie.dim
    dim = p ** r
    if dim > 32:
        raise HopfError("restricted enveloping algebra would exceed the size cap")
    if gen_labels is None:
        gen_labels = lie.labels

    exponents = []
    def _fill(prefix):
        if len(prefix) == r:
            exponents.append(tuple(prefix))
            return
        for a in range(p):
            _fill(prefix + [a])
    _fill([])
    # sort by total degree then lexicographically, unit first
    exponents.sort(key=lambda e: (sum(e), e))
    pos = {e: i for i, e in enumerate(exponents)}

    def monomial_label(e):
        if not any(e):
            return "1"
        parts = []
        for i, a in enumerate(e):
            if a == 1:
                parts.append(gen_labels[i])
            elif a > 1:
                parts.append(f"{gen_labels[i]}^{a}")
        return "·".join(parts)

    labels = tuple(monomial_label(e) for e in exponents)

    # elements during construction: dict exponent-tuple -> scalar
    def el_add(x, y):
        out = dict(x)
        for e, c in y.items():
            s = F.add(out.get(e, F.zero), c)
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return out

    def el_scale(c, x):
        if not c:
            return {}
        return {e: F.mul(c, v) for e, v in x.items()}

    def lie_element(vec):
        """A Lie-algebra coefficient vector as a degree-one element."""
        out = {}
        for i, c in enumerate(vec):
            if c:
                e = tuple(1 if k == i else 0 for k in range(r))
                out[e] = c
        return out

    @lru_cache(maxsize=None)
    def rmul_gen(e, i):
        """Normal form of x^e · x_i as a monomial dictionary."""
        top = max((j for j in range(r) if e[j]), default=-1)
        if top <= i:
            if e[i] + 1 < p:
                e2 = tuple(a + 1 if j == i else a for j, a in enumerate(e))
                return {e2: F.one}
            # x_i^p rewrites through the p-power map
            e0 = tuple(0 if j == i else a for j, a in enumerate(e))
            out = {}
            for k, c in enumerate(lie.pmap[i]):
                if c:
                    out = el_add(out, el_scale(c, rmul_gen(e0, k)))
            return out
        # peel the largest generator: x^e = x^{e'} x_top, move x_i past it
        e1 = tuple(a - 1 if j == top else a for j, a in enumerate(e))
        out = {}
        for mono, c in rmul_gen(e1, i).items():
            out = el_add(out, el_scale(c, rmul_gen(mono, top)))
        br = lie.bracket[top][i]
        for k, c in enumerate(br):
            if c:
                out = el_add(out, el_scale(c, rmul_gen(e1, k)))
        return out

    def el_mul(x, y):
        out = {}
        for ey, cy in y.items():
            part = {e: F.mul(c, cy) for e, c in x.items()}
            for i in range(r):
                for _ in range(ey[i]):
                    nxt = {}
                    for mono, c in part.items():
                        nxt = el_add(nxt, el_scale(c, rmul_gen(mono, i)))
                    part = nxt
            out = el_add(out, part)
        return out

    def to_vec(x):
        out = [F.zero] * dim
        for e, c in x.items():
            out[pos[e]] = c
        return tuple(out)

    triples = []
    monos = [{e: F.one} for e in exponents]
    for a in range(dim):
        for b in range(dim):
            prod = el_mul(monos[a], monos[b])
            entries = [(pos[e], c) for e, c in prod.items()]
            if entries:
                triples.append((a, b, entries))
    unit = unit_vec(F, dim, pos[tuple([0] * r)])
    alg = make_algebra(F, labels, unit, triples)

    # comultiplication on monomials: multiply out primitives in the square
    square = tensor_product(alg, alg)
    T = square.algebra
    gen_vec = [to_vec(lie_element(unit_vec(F, r, i))) for i in range(r)]
    prim = [tuple(map(F.add, square.pure(gen_vec[i], alg.unit),
                      square.pure(alg.unit, gen_vec[i]))) for i in range(r)]
    comul_rows = []
    for e in exponents:
        acc = square.pure(alg.unit, alg.unit)
        for i in range(r):
            for _ in range(e[i]):
                acc = T.mul_vec(acc, prim[i])
        row = []
        for idx, c in enumerate(acc):
            if c:
                row.append(((idx // dim, idx % dim), c))
        comul_rows.append(row)

    counit = tuple(F.one if not any(e) else F.zero for e in exponents)

    cols = []
    for e in exponents:
        acc = {tuple([0] * r): F.one}
        for i in range(r - 1, -1, -1):
            for _ in range(e[i]):
                nxt = {}
                for mono, c in acc.items():
                    nxt = el_add(nxt, el_scale(c, rmul_gen(mono, i)))
                acc = nxt
        sign = F.one if sum(e) % 2 == 0 else F.neg(F.one)
        cols.append(to_vec(el_scale(sign, acc)))
    antipode = Mat.from_cols(F, cols)
    return make_hopf(alg, comul_rows, counit, antipode)


def abelian_p_lie(field, labels, pmap_vectors):
    """Abelian restricted Lie algebra with a prescribed p-power map."""
    n = len(labels)
    zero = zero_vec(field, n)
    bracket = [[zero for _ in range(n)] for _ in range(n)]
    return PLieAlgebra(field, labels, bracket, pmap_vectors)
