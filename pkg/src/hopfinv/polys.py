"""Univariate polynomials over a scalar field, with exact factorization.

Coefficient tuples are ascending and trimmed; () is the zero polynomial.
Factorization: squarefree decomposition (Yun in char 0, p-th-root aware in
char p), then distinct-degree + equal-degree splitting over F_p (randomized
splitting with a deterministic seed derived from the input, plus a
deterministic root scan for degree-one pieces), and for Q a monicized
Zassenhaus: factor mod a good prime, Hensel-lift, recombine subsets.  The
practical degree limit for Q factorization is about 16, plenty for the
minimal polynomials that the spectrum machinery feeds in.
"""

from fractions import Fraction
import hashlib
import math
import random

from .fields import QQ, GF


def trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


def degree(f):
    return len(f) - 1


def padd(field, f, g):
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else field.zero
        b = g[i] if i < len(g) else field.zero
        out.append(field.add(a, b))
    return trim(out)


def pneg(field, f):
    return tuple(field.neg(a) for a in f)


def psub(field, f, g):
    return padd(field, f, pneg(field, g))


def pscale(field, c, f):
    if not c:
        return ()
    return trim(field.mul(c, a) for a in f)


def pmul(field, f, g):
    if not f or not g:
        return ()
    out = [field.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if not a:
            continue
        for j, b in enumerate(g):
            if b:
                out[i + j] = field.add(out[i + j], field.mul(a, b))
    return trim(out)


def pdivmod(field, f, g):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(f)
    q = [field.zero] * max(0, len(f) - len(g) + 1)
    inv_lead = field.inv(g[-1])
    while len(f) >= len(g):
        c = field.mul(f[-1], inv_lead)
        k = len(f) - len(g)
        q[k] = c
        if c:
            for i, b in enumerate(g):
                f[k + i] = field.sub(f[k + i], field.mul(c, b))
        f.pop()
    return trim(q), trim(f)


def pmod(field, f, g):
    return pdivmod(field, f, g)[1]


def monic(field, f):
    if not f:
        return ()
    return pscale(field, field.inv(f[-1]), f)


def pgcd(field, f, g):
    while g:
        f, g = g, pmod(field, f, g)
    return monic(field, f)


def pgcdext(field, f, g):
    """(d, s, t) with s f + t g = d = monic gcd."""
    r0, r1 = f, g
    s0, s1 = (field.one,), ()
    t0, t1 = (), (field.one,)
    while r1:
        q, r = pdivmod(field, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, psub(field, s0, pmul(field, q, s1))
        t0, t1 = t1, psub(field, t0, pmul(field, q, t1))
    if not r0:
        return (), s0, t0
    c = field.inv(r0[-1])
    return pscale(field, c, r0), pscale(field, c, s0), pscale(field, c, t0)


def derivative(field, f):
    return trim(field.mul(field.from_int(i), f[i]) for i in range(1, len(f)))


def peval(field, f, x):
    acc = field.zero
    for c in reversed(f):
        acc = field.add(field.mul(acc, x), c)
    return acc


def ppow_mod(field, f, e, m):
    result = (field.one,)
    f = pmod(field, f, m)
    while e:
        if e & 1:
            result = pmod(field, pmul(field, result, f), m)
        f = pmod(field, pmul(field, f, f), m)
        e >>= 1
    return result


def squarefree_decomposition(field, f):
    """[(g, multiplicity)] with f = lc * prod g^m, g monic squarefree, pairwise coprime."""
    f = monic(field, f)
    if degree(f) < 1:
        return []
    if field.char == 0:
        return _yun(field, f)
    return _squarefree_char_p(field, f, 1)


def _yun(field, f):
    out = []
    df = derivative(field, f)
    a = pgcd(field, f, df)
    b = pdivmod(field, f, a)[0]
    c = pdivmod(field, df, a)[0]
    d = psub(field, c, derivative(field, b))
    m = 1
    while degree(b) > 0:
        a = pgcd(field, b, d)
        if degree(a) > 0:
            out.append((a, m))
        b = pdivmod(field, b, a)[0]
        c = pdivmod(field, d, a)[0]
        d = psub(field, c, derivative(field, b))
        m += 1
    return out


def _squarefree_char_p(field, f, mult):
    p = field.char
    df = derivative(field, f)
    out = []
    if not df:
        # f = h(x^p) = h_root(x)^p over the prime field
        root = trim(f[i] for i in range(0, len(f), p))
        for g, m in _squarefree_char_p(field, root, mult * p):
            out.append((g, m))
        return out
    a = pgcd(field, f, df)
    w = pdivmod(field, f, a)[0]
    m = 1
    while degree(w) > 0:
        y = pgcd(field, w, a)
        z = pdivmod(field, w, y)[0]
        if degree(z) > 0:
            out.append((z, m * mult))
        w = y
        a = pdivmod(field, a, y)[0]
        m += 1
    if degree(a) > 0:
        # leftover is again a p-th power
        for g, mm in _squarefree_char_p(field, a, mult):
            merged = False
            for idx, (h, hm) in enumerate(out):
                if h == g:
                    out[idx] = (h, hm + mm)
                    merged = True
            if not merged:
                out.append((g, mm))
    return out


def _det_rng(tag, field, f):
    h = hashlib.sha256()
    h.update(tag.encode())
    h.update(repr(field).encode())
    h.update(repr(f).encode())
    return random.Random(int.from_bytes(h.digest()[:8], "big"))


def _distinct_degree(field, f):
    """[(product of irreducible factors of degree d, d)] for squarefree monic f."""
    p = field.char
    out = []
    x = (field.zero, field.one)
    h = x
    d = 0
    while degree(f) > 0:
        d += 1
        if 2 * d > degree(f):
            out.append((f, degree(f)))
            break
        h = ppow_mod(field, h, p, f)
        g = pgcd(field, psub(field, h, x), f)
        if degree(g) > 0:
            out.append((g, d))
            f = pdivmod(field, f, g)[0]
            h = pmod(field, h, f)
    return out


def _equal_degree_split(field, f, d, rng):
    """One proper monic factor of f (product of distinct degree-d irreducibles)."""
    p = field.char
    n = degree(f)
    if d == 1 and p <= 521:
        for r in range(p):
            if not peval(field, f, r):
                return (field.neg(r), field.one)
    while True:
        u = trim([field.random(rng) for _ in range(n)])
        if degree(u) < 1:
            continue
        g = pgcd(field, u, f)
        if 0 < degree(g) < n:
            return g
        if p == 2:
            w = u
            acc = u
            for _ in range(d - 1):
                w = ppow_mod(field, pmul(field, w, w), 1, f)
                acc = padd(field, acc, w)
            g = pgcd(field, acc, f)
        else:
            e = (p ** d - 1) // 2
            w = ppow_mod(field, u, e, f)
            g = pgcd(field, psub(field, w, (field.one,)), f)
        if 0 < degree(g) < n:
            return g


def _equal_degree_factor(field, f, d, rng):
    if degree(f) == d:
        return [f]
    g = _equal_degree_split(field, f, d, rng)
    h = pdivmod(field, f, g)[0]
    return _equal_degree_factor(field, g, d, rng) + _equal_degree_factor(field, h, d, rng)


def factor_prime_field(field, f):
    """[(monic irreducible, multiplicity)] for f over F_p, plus leading unit."""
    unit = f[-1]
    factors = []
    for g, m in squarefree_decomposition(field, f):
        rng = _det_rng("edf", field, g)
        for prod, d in _distinct_degree(field, g):
            for irr in _equal_degree_factor(field, prod, d, rng):
                factors.append((irr, m))
    return unit, _sorted_factors(field, factors)


def _sorted_factors(field, factors):
    key = lambda fm: (degree(fm[0]), tuple(field.sort_key(c) for c in fm[0]), fm[1])
    return sorted(factors, key=key)


# --- rational factorization -------------------------------------------------

def _to_int_primitive(f):
    """(content Fraction, primitive int coefficient tuple) for f over Q."""
    lcm = 1
    for c in f:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in f]
    g = 0
    for c in ints:
        g = math.gcd(g, abs(c))
    g = g or 1
    sign = -1 if ints[-1] < 0 else 1
    g *= sign
    return Fraction(1, lcm) * g, tuple(c // g for c in ints)


def _int_mul(f, g):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return tuple(out)


def _int_divmod_monic(f, g):
    """Exact division by monic g over Z; returns (q, r)."""
    f = list(f)
    q = [0] * max(0, len(f) - len(g) + 1)
    while len(f) >= len(g):
        c = f[-1]
        k = len(f) - len(g)
        q[k] = c
        for i, b in enumerate(g):
            f[k + i] -= c * b
        f.pop()
    while f and f[-1] == 0:
        f.pop()
    return tuple(q), tuple(f)


def _mod_poly(f, m):
    out = [c % m for c in f]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _mod_mul(f, g, m):
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % m
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _mod_sub(f, g, m):
    n = max(len(f), len(g))
    out = [((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % m for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _mod_add(f, g, m):
    n = max(len(f), len(g))
    out = [((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) % m for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _mod_divmod_monic(f, g, m):
    f = list(f)
    q = [0] * max(0, len(f) - len(g) + 1)
    while len(f) >= len(g):
        c = f[-1] % m
        k = len(f) - len(g)
        q[k] = c
        for i, b in enumerate(g):
            f[k + i] = (f[k + i] - c * b) % m
        f.pop()
    while f and f[-1] % m == 0:
        f.pop()
    while q and q[-1] == 0:
        q.pop()
    return tuple(q), tuple(c % m for c in f)


def _hensel_step(f, g, h, s, t, m):
    """One quadratic Hensel step: mod m data -> mod m*m data (f, h monic)."""
    mm = m * m
    e = _mod_sub(f, _mod_mul(g, h, mm), mm)
    q, r = _mod_divmod_monic(_mod_mul(s, e, mm), h, mm)
    g1 = _mod_add(_mod_add(g, _mod_mul(t, e, mm), mm), _mod_mul(q, g, mm), mm)
    h1 = _mod_add(h, r, mm)
    b = _mod_sub(_mod_add(_mod_mul(s, g1, mm), _mod_mul(t, h1, mm), mm), (1,), mm)
    c, d = _mod_divmod_monic(_mod_mul(s, b, mm), h1, mm)
    s1 = _mod_sub(s, d, mm)
    t1 = _mod_sub(_mod_sub(t, _mod_mul(t, b, mm), mm), _mod_mul(c, g1, mm), mm)
    return g1, h1, s1, t1


def _hensel_lift_list(f, factors, p, steps):
    """Lift monic f ≡ prod(factors) mod p to mod p^(2^steps)."""
    if len(factors) == 1:
        m = p ** (2 ** steps)
        return [_mod_poly(f, m)]
    field = GF(p)
    half = len(factors) // 2
    gs, hs = factors[:half], factors[half:]
    g = (1,)
    for u in gs:
        g = _int_mul(g, u)
    h = (1,)
    for u in hs:
        h = _int_mul(h, u)
    g = _mod_poly(g, p)
    h = _mod_poly(h, p)
    gp = tuple(field.from_int(c) for c in g)
    hp = tuple(field.from_int(c) for c in h)
    d, s, t = pgcdext(field, gp, hp)
    if degree(d) != 0:
        raise ValueError("factors not coprime mod p")
    s = tuple(int(c) for c in s)
    t = tuple(int(c) for c in t)
    m = p
    for _ in range(steps):
        g, h, s, t = _hensel_step(_mod_poly(f, m * m), g, h, s, t, m)
        m *= m
    return _hensel_lift_list(g, gs, p, steps) + _hensel_lift_list(h, hs, p, steps)


def _symmetric(c, m):
    c %= m
    return c - m if c > m // 2 else c


_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83,
           89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173)


def _factor_monic_int_squarefree(f):
    """Monic squarefree integer polynomial -> list of monic integer factors."""
    n = len(f) - 1
    if n <= 1:
        return [f]
    for p in _PRIMES:
        field = GF(p)
        fp = tuple(field.from_int(c) for c in f)
        if degree(fp) != n:
            continue
        if degree(pgcd(field, fp, derivative(field, fp))) != 0:
            continue
        _, modular = factor_prime_field(field, fp)
        mods = [tuple(int(c) for c in g) for g, _ in modular]
        break
    else:
        raise ValueError("no good prime found for rational factorization")
    if len(mods) == 1:
        return [f]
    norm2 = math.isqrt(sum(c * c for c in f)) + 1
    bound = 2 * (2 ** n) * norm2
    steps = 0
    while p ** (2 ** steps) <= 2 * bound:
        steps += 1
    big = p ** (2 ** steps)
    lifted = _hensel_lift_list(f, mods, p, steps)
    result = []
    remaining = list(range(len(lifted)))
    current = f
    size = 1
    while 2 * size <= len(remaining):
        found = False
        for subset in _subsets(remaining, size):
            cand = (1,)
            for i in subset:
                cand = _mod_mul(cand, lifted[i], big)
            cand = tuple(_symmetric(c, big) for c in cand)
            if not cand or cand[-1] != 1:
                continue
            q, r = _int_divmod_monic(current, cand)
            if not r:
                result.append(cand)
                current = q
                remaining = [i for i in remaining if i not in subset]
                found = True
                break
        if not found:
            size += 1
    if len(current) > 1:
        result.append(current)
    return result


def _subsets(items, size):
    import itertools
    return itertools.combinations(items, size)


def factor_rationals(f):
    """[(monic irreducible over Q, multiplicity)] plus the rational unit."""
    unit = f[-1]
    factors = []
    for g, m in squarefree_decomposition(QQ, f):
        _, gi = _to_int_primitive(g)
        n = len(gi) - 1
        lead = gi[-1]
        # monicize: y = lead*x turns gi into a monic integer polynomial
        monic_int = tuple(gi[i] * lead ** (n - 1 - i) for i in range(n)) + (1,)
        for part in _factor_monic_int_squarefree(monic_int):
            # undo the substitution and renormalize to monic over Q
            back = tuple(Fraction(c) * Fraction(lead) ** i for i, c in enumerate(part))
            factors.append((monic(QQ, back), m))
    return unit, _sorted_factors(QQ, factors)


def factor_univariate(field, f):
    """Factor f into monic irreducibles: returns (unit, [(factor, mult)...]).

    The unit is the leading coefficient; the product of factor^mult times the
    unit reproduces f exactly.
    """
    f = trim(f)
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    if degree(f) == 0:
        return f[0], []
    if field.char == 0:
        return factor_rationals(f)
    return factor_prime_field(field, f)


def is_irreducible(field, f):
    if degree(f) < 1:
        return False
    _, factors = factor_univariate(field, f)
    return len(factors) == 1 and factors[0][1] == 1


def poly_from_scalars(field, values):
    return trim(field.from_int(v) if isinstance(v, int) else v for v in values)
