"""Multivariate polynomials with exact coefficients over a fixed variable set.

A monomial is a tuple of non-negative integer exponents, one per ring
variable.  A :class:`Polynomial` stores its nonzero terms in a dict
``{exponents: coefficient}``; the canonical printed form sorts terms by
the ring's monomial order, descending.  Values are immutable after
construction and safe to share between threads.

>>> R = PolyRing(("x", "y"), GF(32003))
>>> x, y = R.gens()
>>> print((x + y) * (x - y))
x^2 + 32002*y^2
>>> print(R.parse("3*x^2*y - 1/2*y^3") * 2)
6*x^2*y + 32002*y^3
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ContextError, DomainError, ParseError
from .fields import GF, QQ  # noqa: F401  (re-exported for convenience)


class MonomialOrder:
    """A global monomial order together with its free-module extension.

    ``kind`` is ``"grevlex"`` or ``"lex"``; ``module_kind`` is ``"top"``
    (term over position, ties going to the lower position) or ``"pot"``
    (position over term, position 0 greatest).  Orders are compared via
    sort keys: larger key means larger monomial.
    """

    __slots__ = ("kind", "module_kind")

    def __init__(self, kind: str = "grevlex", module_kind: str = "top"):
        if kind not in ("grevlex", "lex"):
            raise DomainError(f"unknown monomial order {kind!r}")
        if module_kind not in ("top", "pot"):
            raise DomainError(f"unknown module extension {module_kind!r}")
        self.kind = kind
        self.module_kind = module_kind

    def key(self, exps: tuple) -> tuple:
        if self.kind == "grevlex":
            # degree first; ties broken by the reversed, negated exponents
            total = 0
            for e in exps:
                total += e
            return (total, tuple(-e for e in reversed(exps)))
        return (exps,)

    def module_key(self, pos: int, exps: tuple) -> tuple:
        if self.module_kind == "top":
            return (self.key(exps), -pos)
        return (-pos, self.key(exps))

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and other.kind == self.kind
            and other.module_kind == self.module_kind
        )

    def __hash__(self):
        return hash((self.kind, self.module_kind))

    def __repr__(self):
        return f"MonomialOrder({self.kind!r}, {self.module_kind!r})"


GREVLEX = MonomialOrder("grevlex", "top")
LEX = MonomialOrder("lex", "top")


def monomial_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))

def monomial_divides(a: tuple, b: tuple) -> bool:
    """True when a | b, i.e. every exponent of a is <= that of b."""
    return all(x <= y for x, y in zip(a, b))

def monomial_div(b: tuple, a: tuple) -> tuple:
    return tuple(y - x for x, y in zip(a, b))

def monomial_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))

def monomial_degree(a: tuple) -> int:
    return sum(a)


_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class PolyRing:
    """k[x1, ..., xn] with a fixed global monomial order.

    The ``local`` flag merely records that the caller intends the
    localization at the irrelevant maximal ideal; all computations are
    run on the graded ring, which agrees with the localization on
    homogeneous input.
    """

    __slots__ = ("variables", "field", "order", "local", "_index")

    def __init__(self, variables, field, order: MonomialOrder | None = None,
                 local: bool = False):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise DomainError("duplicate variable names")
        for v in variables:
            if not _NAME_RE.fullmatch(v):
                raise DomainError(f"bad variable name {v!r}")
        self.variables = variables
        self.field = field
        self.order = order if order is not None else GREVLEX
        self.local = local
        self._index = {v: i for i, v in enumerate(variables)}

    @property
    def ngens(self) -> int:
        return len(self.variables)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(self.field.one)

    def constant(self, coeff) -> "Polynomial":
        if not coeff:
            return Polynomial(self, {})
        return Polynomial(self, {(0,) * self.ngens: coeff})

    def var(self, which) -> "Polynomial":
        i = self._index[which] if isinstance(which, str) else which
        exps = [0] * self.ngens
        exps[i] = 1
        return Polynomial(self, {tuple(exps): self.field.one})

    def gens(self) -> tuple:
        return tuple(self.var(i) for i in range(self.ngens))

    def monomial(self, exps, coeff=None) -> "Polynomial":
        exps = tuple(exps)
        if len(exps) != self.ngens or any(e < 0 for e in exps):
            raise DomainError(f"bad exponent vector {exps}")
        c = self.field.one if coeff is None else coeff
        if not c:
            return self.zero()
        return Polynomial(self, {exps: c})

    def from_terms(self, terms: dict) -> "Polynomial":
        return Polynomial(self, {e: c for e, c in terms.items() if c})

    def poly(self, value) -> "Polynomial":
        """Coerce an int, Fraction, str, or Polynomial into this ring."""
        if isinstance(value, Polynomial):
            if value.ring != self:
                raise ContextError("polynomial from a different ring")
            return value
        if isinstance(value, int):
            return self.constant(self.field.from_int(value))
        if isinstance(value, Fraction):
            return self.constant(
                self.field.from_rational(value.numerator, value.denominator))
        if isinstance(value, str):
            return self.parse(value)
        raise DomainError(f"cannot coerce {value!r} into {self!r}")

    def parse(self, text: str) -> "Polynomial":
        return _parse_polynomial(self, text)

    def with_extra_variable(self, name: str | None = None):
        """Return (bigger ring, lift) appending one fresh variable.

        ``lift`` maps a polynomial of this ring into the bigger ring.
        Used for Rabinowitsch-style radical membership tests.
        """
        if name is None:
            name = "t"
            while name in self._index:
                name += "_"
        big = PolyRing(self.variables + (name,), self.field, self.order,
                       self.local)

        def lift(f: "Polynomial") -> "Polynomial":
            return Polynomial(big, {e + (0,): c for e, c in f.terms.items()})

        return big, lift

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and other.variables == self.variables
            and other.field == self.field
            and other.order == self.order
        )

    def __hash__(self):
        return hash((self.variables, self.field, self.order))

    def __repr__(self):
        return f"{self.field}[{','.join(self.variables)}]"


class Polynomial:
    """Immutable sparse multivariate polynomial.

    ``terms`` maps exponent tuples to nonzero field elements.  The zero
    polynomial has an empty term map.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- predicates ----------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(monomial_degree(e) == 0 for e in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_homogeneous(self) -> bool:
        degrees = {monomial_degree(e) for e in self.terms}
        return len(degrees) <= 1

    def total_degree(self) -> int:
        """Max total degree of a term; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(monomial_degree(e) for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.ring.ngens, self.ring.field.zero)

    # -- arithmetic ----------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ContextError(
                    f"mixed ring contexts: {self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.poly(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        field = self.ring.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = field.add(out.get(e, field.zero), c)
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        neg = self.ring.field.neg
        return Polynomial(self.ring, {e: neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        field = self.ring.field
        mul, add = field.mul, field.add
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                prod = mul(c1, c2)
                s = add(out.get(key, field.zero), prod)
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative polynomial power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale(self, coeff) -> "Polynomial":
        if not coeff:
            return self.ring.zero()
        mul = self.ring.field.mul
        return Polynomial(self.ring,
                          {e: mul(c, coeff) for e, c in self.terms.items()})

    # -- leading data ----------------------------------------------------
    def leading_term(self, order: MonomialOrder | None = None):
        """Return (monomial, coefficient) of the maximal term.

        >>> R = PolyRing(("x", "y"), QQ)
        >>> R.parse("x^2*y + x*y^2").leading_term()
        ((2, 1), Fraction(1, 1))
        """
        if not self.terms:
            raise DomainError("the zero polynomial has no leading term")
        key = (order or self.ring.order).key
        e = max(self.terms, key=key)
        return e, self.terms[e]

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        _, c = self.leading_term()
        return self.scale(self.ring.field.inv(c))

    # -- comparison / rendering ------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.poly(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __str__(self):
        return polynomial_to_string(self)

    def __repr__(self):
        return f"<{self} in {self.ring!r}>"


def polynomial_to_string(f: Polynomial) -> str:
    """Canonical text form, terms sorted descending by the ring order."""
    if not f.terms:
        return "0"
    ring = f.ring
    field = ring.field
    key = ring.order.key
    pieces = []
    for e in sorted(f.terms, key=key, reverse=True):
        c = f.terms[e]
        factors = []
        for name, exp in zip(ring.variables, e):
            if exp == 1:
                factors.append(name)
            elif exp > 1:
                factors.append(f"{name}^{exp}")
        mono = "*".join(factors)
        negative = isinstance(c, (int, Fraction)) and field.characteristic == 0 and c < 0
        mag = -c if negative else c
        if not mono:
            body = field.to_string(mag)
        elif mag == field.one:
            body = mono
        else:
            body = f"{field.to_string(mag)}*{mono}"
        pieces.append(("-" if negative else "+", body))
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


_POLY_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")


def _tokenize_poly(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _POLY_TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ParseError(f"bad character {text[pos]!r} in polynomial")
            break
        if m.lastgroup == "num":
            tokens.append(("num", int(m.group("num"))))
        elif m.lastgroup == "name":
            tokens.append(("name", m.group("name")))
        else:
            tokens.append(("op", m.group("op")))
        pos = m.end()
    return tokens


def _parse_polynomial(ring: PolyRing, text: str) -> Polynomial:
    """Parse ``3*x^2*y - 1/2*y^3`` style text.

    Grammar: a signed sum of terms; each term is a ``*``-separated
    product of factors; a factor is an integer literal, a rational
    ``a/b``, or a declared variable with an optional ``^`` power.
    """
    tokens = _tokenize_poly(text)
    n = len(tokens)
    i = 0

    def peek():
        return tokens[i] if i < n else (None, None)

    def factor() -> Polynomial:
        nonlocal i
        kind, value = peek()
        if kind == "num":
            i += 1
            if peek() == ("op", "/"):
                i += 1
                k2, v2 = peek()
                if k2 != "num":
                    raise ParseError("expected denominator after '/'")
                i += 1
                if v2 == 0:
                    raise ParseError("zero denominator")
                return ring.constant(ring.field.from_rational(value, v2))
            return ring.constant(ring.field.from_int(value))
        if kind == "name":
            if value not in ring._index:
                raise ParseError(f"unknown variable {value!r}")
            i += 1
            exp = 1
            if peek() == ("op", "^"):
                i += 1
                k2, v2 = peek()
                if k2 != "num":
                    raise ParseError("expected integer exponent after '^'")
                i += 1
                exp = v2
            exps = [0] * ring.ngens
            exps[ring._index[value]] = exp
            return Polynomial(ring, {tuple(exps): ring.field.one})
        raise ParseError(f"expected a factor, found {value!r}")

    def term() -> Polynomial:
        nonlocal i
        result = factor()
        while peek() == ("op", "*"):
            i += 1
            result = result * factor()
        return result

    if not tokens:
        raise ParseError("empty polynomial text")
    # leading sign
    sign = 1
    if peek()[0] == "op" and peek()[1] in "+-":
        sign = -1 if peek()[1] == "-" else 1
        i += 1
    result = term()
    if sign < 0:
        result = -result
    while i < n:
        kind, value = peek()
        if kind != "op" or value not in "+-":
            raise ParseError(f"expected '+' or '-', found {value!r}")
        i += 1
        t = term()
        result = result + (t if value == "+" else -t)
    return result
