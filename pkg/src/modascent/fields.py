"""Exact coefficient fields: the rationals and prime fields GF(p).

Field elements are plain Python values -- ``fractions.Fraction`` for the
rationals and ints in ``range(p)`` for GF(p) -- and the field object
supplies the arithmetic.  Both representations are falsy exactly at zero,
so callers may test ``if coeff:`` regardless of the field.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Rationals:
    """Arbitrary-precision rational arithmetic."""

    characteristic = 0
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

    def inv(self, a):
        if not a:
            raise DomainError("division by zero in Q")
        return 1 / a

    def from_int(self, n):
        return Fraction(n)

    def from_rational(self, num, den):
        if den == 0:
            raise DomainError("zero denominator")
        return Fraction(num, den)

    def to_string(self, a):
        return str(a)

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField:
    """GF(p) with elements stored as ints in ``range(p)``."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise DomainError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
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
            raise DomainError(f"division by zero in GF({self.p})")
        return pow(a, -1, self.p)

    def from_int(self, n):
        return n % self.p

    def from_rational(self, num, den):
        return self.mul(self.from_int(num), self.inv(self.from_int(den)))

    def to_string(self, a):
        return str(a)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = Rationals()

_gf_cache: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    """Return the (cached) prime field with p elements."""
    try:
        return _gf_cache[p]
    except KeyError:
        field = PrimeField(p)
        _gf_cache[p] = field
        return field
