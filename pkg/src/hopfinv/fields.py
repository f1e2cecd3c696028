"""Exact scalar fields: the rationals and prime fields F_p.

Scalars are plain hashable Python values (fractions.Fraction for Q, ints in
[0, p) for F_p); the field object carries the operations.  Keeping elements
unwrapped keeps the linear-algebra inner loops cheap.
"""

from fractions import Fraction
from functools import lru_cache
import re

_RAT_RE = re.compile(r"^-?\d+(/\d+)?$")
_INT_RE = re.compile(r"^-?\d+$")


class FieldError(ValueError):
    pass


class Rationals:
    """The field Q.  Elements are fractions.Fraction (always normalized)."""

    char = 0
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in Q")
        return a / b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in Q")
        return 1 / a

    def from_int(self, n):
        return Fraction(n)

    def parse(self, text):
        text = text.strip()
        if not _RAT_RE.match(text):
            raise FieldError(f"not a rational scalar: {text!r}")
        value = Fraction(text)
        if "/" in text:
            num, den = text.split("/")
            if int(den) <= 0:
                raise FieldError(f"denominator must be positive: {text!r}")
            if Fraction(int(num), int(den)) != value or abs(value.denominator) != int(den):
                raise FieldError(f"rational not in lowest terms: {text!r}")
        return value

    def format(self, a):
        return str(a)

    def sort_key(self, a):
        return (a.numerator, a.denominator)

    def random(self, rng, span=6):
        return Fraction(rng.randint(-span, span), rng.randint(1, 4))

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")


class PrimeField:
    """The field F_p for a prime p.  Elements are ints in [0, p)."""

    def __init__(self, p):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise FieldError(f"not a prime: {p}")
        self.p = p
        self.char = p
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of zero in F_{self.p}")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def from_int(self, n):
        return n % self.p

    def parse(self, text):
        text = text.strip()
        if not _INT_RE.match(text):
            raise FieldError(f"not an F_{self.p} scalar: {text!r}")
        value = int(text)
        if not 0 <= value < self.p:
            raise FieldError(f"F_{self.p} scalar out of range [0,{self.p}): {text!r}")
        return value

    def format(self, a):
        return str(a)

    def sort_key(self, a):
        return (a, 1)

    def random(self, rng, span=None):
        return rng.randrange(self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = Rationals()


@lru_cache(maxsize=None)
def GF(p):
    return PrimeField(p)


def field_from_name(name):
    """Map 'Q' or 'F<p>' to a field object; rejects non-prime orders."""
    if name == "Q":
        return QQ
    m = re.match(r"^F(\d+)$", name)
    if not m:
        raise FieldError(f"unknown field name: {name!r} (use 'Q' or 'F<prime>')")
    return GF(int(m.group(1)))


def field_name(field):
    return "Q" if field.char == 0 else f"F{field.p}"
