"""Module invariants computed through the graded surrogate.

All notions here (dimension, depth, support at the closed point) are the
local notions for the localization at the irrelevant maximal ideal,
computed on the graded ring.  That identification is only valid for
homogeneous input, so every operation in this module rejects
inhomogeneous presentations instead of guessing.

Conventions for the zero module: dimension -1, finite length, in NAK;
depth is undefined (raises).
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import koszul, sup_complex, tensor_with_module
from .errors import DomainError, UnsupportedInputError
from .groebner import (
    Submodule,
    ideal,
    ideal_intersection,
    is_monomial_ideal,
    krull_dimension,
    module_quotient,
)
from .modules import ModulePresentation
from .rings import PolyRing


@dataclass(frozen=True)
class PrimeIdeal:
    """A prime of the supported fragment: generated by variables.

    ``variables`` is a sorted tuple of variable indices; the empty tuple
    is the zero ideal.  The maximal ideal is the prime on all variables.
    """

    ring: PolyRing
    variables: tuple

    def __post_init__(self):
        vs = tuple(sorted(set(self.variables)))
        object.__setattr__(self, "variables", vs)
        if vs and not (0 <= vs[0] and vs[-1] < self.ring.ngens):
            raise DomainError("prime ideal variable index out of range")

    @property
    def monomial(self) -> bool:
        return True

    def generator_polynomials(self) -> tuple:
        return tuple(self.ring.var(i) for i in self.variables)

    def generator_names(self) -> tuple:
        return tuple(self.ring.variables[i] for i in self.variables)

    def is_maximal(self) -> bool:
        return len(self.variables) == self.ring.ngens

    def codimension(self) -> int:
        return len(self.variables)

    def __str__(self):
        return "(" + ", ".join(self.generator_names()) + ")"


def maximal_ideal(ring: PolyRing) -> PrimeIdeal:
    return PrimeIdeal(ring, tuple(range(ring.ngens)))


# ---------------------------------------------------------------------------
# annihilator and dimension


def annihilator(M: ModulePresentation) -> Submodule:
    """Ann(M) as the intersection of (relations : generator_j).

    Returns a rank-1 submodule whose generators are the reduced Groebner
    basis (a canonical generating set).  Ann(0) is the unit ideal; the
    annihilator of a free module is zero.
    """
    cached = M._extra.get("annihilator")
    if cached is not None:
        return cached
    M.require_homogeneous("annihilator")
    ring = M.ring
    g = M.generators
    if g == 0:
        out = ideal(ring, [ring.one()])
    else:
        U = M.relation_module()
        zero, one = ring.zero(), ring.one()
        quotients = []
        for j in range(g):
            e = tuple(one if i == j else zero for i in range(g))
            quotients.append(module_quotient(U, e))
        out = ideal_intersection(*quotients)
    out = _canonical_ideal(out)
    M._extra["annihilator"] = out
    return out


def _canonical_ideal(I: Submodule) -> Submodule:
    gens = [(g,) for (g,) in I.groebner().elements]
    return Submodule(I.ring, 1, gens)


def dim_module(M: ModulePresentation) -> int:
    """Krull dimension of R/Ann(M); -1 exactly for the zero module."""
    cached = M._extra.get("dimension")
    if cached is None:
        cached = krull_dimension(annihilator(M))
        M._extra["dimension"] = cached
    return cached


def is_finite_length(M: ModulePresentation) -> bool:
    return dim_module(M) <= 0


# ---------------------------------------------------------------------------
# depth via the Koszul complex on the variables


def depth_module(N: ModulePresentation) -> int:
    """ngens - sup of (Koszul complex on all variables) (x) N.

    The variables form a system of parameters for the localized ring;
    the top nonvanishing Koszul homology degree detects depth.
    """
    N.require_homogeneous("depth")
    if N.is_zero():
        raise DomainError("depth of the zero module is undefined")
    cached = N._extra.get("depth")
    if cached is None:
        ring = N.ring
        K = koszul(ring.gens()).complex
        s = sup_complex(tensor_with_module(K, N))
        cached = ring.ngens - int(s)
        N._extra["depth"] = cached
    return cached


# ---------------------------------------------------------------------------
# minimal primes of monomial ideals


def minimal_primes(I: Submodule) -> list:
    """Minimal primes of a monomial ideal, each generated by variables.

    Expands the generators' supports into covering variable choices and
    discards non-minimal covers.  The zero ideal has the single minimal
    prime (0); the unit ideal has none.
    """
    if I.rank != 1:
        raise DomainError("minimal_primes expects a rank-1 submodule")
    ring = I.ring
    if not is_monomial_ideal(I):
        raise UnsupportedInputError(
            "minimal primes are only computed for monomial ideals; use the"
            " dimension-based checks for general homogeneous input")
    gens = [g for (g,) in I.groebner().elements]
    if not gens:
        return [PrimeIdeal(ring, ())]
    supports = []
    for g in gens:
        e = next(iter(g.terms))
        supp = frozenset(i for i, v in enumerate(e) if v)
        if not supp:
            return []  # unit ideal: empty variety
        supports.append(supp)
    covers: set = {frozenset()}
    for supp in supports:
        new: set = set()
        for c in covers:
            if c & supp:
                new.add(c)
            else:
                for v in supp:
                    new.add(c | {v})
        covers = _prune_non_minimal(new)
    return sorted(
        (PrimeIdeal(ring, tuple(sorted(c))) for c in covers),
        key=lambda p: (len(p.variables), p.variables),
    )


def _prune_non_minimal(covers: set) -> set:
    out = set()
    for c in covers:
        if not any(other < c for other in covers):
            out.add(c)
    return out


# ---------------------------------------------------------------------------
# NAK


def nak_status(M: ModulePresentation) -> bool:
    """Presented modules are finitely generated, so this is always true:
    either M = 0, or the minimalized presentation has a generator left,
    witnessing M/mM != 0."""
    if M.is_zero():
        return True
    M.require_homogeneous("NAK status")
    return M.minimalized().generators > 0
