"""Ext and Tor of presented modules via minimal free resolutions.

Tor_i(M, N) is the degree-i homology of (minimal resolution of M) (x) N;
Ext^i(M, N) is the homology at -i of Hom(resolution, N).  Both vanish
beyond the projective dimension of M, which over the polynomial ring is
at most the number of variables, so tables are finite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import hom_into_module, homology, tensor_with_module
from .errors import DomainError, InternalError
from .invariants import depth_module
from .modules import ModulePresentation, zero_module
from .resolutions import minimal_resolution


def _resolved_complex(M: ModulePresentation):
    return minimal_resolution(M).complex


def tor_module(M: ModulePresentation, N: ModulePresentation,
               i: int) -> ModulePresentation:
    """H_i of (minimal resolution of M) (x) N."""
    if i < 0:
        raise DomainError("Tor degree must be >= 0")
    res = minimal_resolution(M)
    if i > res.length:
        return zero_module(M.ring)
    key = ("tor", id(N), i)
    cached = M._extra.get(key)
    if cached is None:
        cached = homology(tensor_with_module(res.complex, N), i)
        M._extra[key] = cached
    return cached


def ext_module(M: ModulePresentation, N: ModulePresentation,
               i: int) -> ModulePresentation:
    """Homology at -i of Hom(minimal resolution of M, N)."""
    if i < 0:
        raise DomainError("Ext degree must be >= 0")
    res = minimal_resolution(M)
    if i > res.length:
        return zero_module(M.ring)
    key = ("ext", id(N), i)
    cached = M._extra.get(key)
    if cached is None:
        cached = homology(hom_into_module(res.complex, N), -i)
        M._extra[key] = cached
    return cached


@dataclass(frozen=True)
class DerivedTable:
    """All Ext or Tor modules of a pair, indexed 0..pd(M)."""

    kind: str  # "ext" | "tor"
    source: ModulePresentation
    argument: ModulePresentation
    entries: dict

    def entry(self, i: int) -> ModulePresentation:
        if i in self.entries:
            return self.entries[i]
        return zero_module(self.source.ring)

    def nonzero_degrees(self) -> list:
        return [i for i in sorted(self.entries) if not self.entries[i].is_zero()]

    def summary(self) -> dict:
        out = {}
        for i in sorted(self.entries):
            e = self.entries[i]
            out[i] = {
                "zero": e.is_zero(),
                "generators": e.generators,
                "length": e.length(),
            }
        return out


def derived_table(M: ModulePresentation, N: ModulePresentation,
                  kind: str) -> DerivedTable:
    if kind not in ("ext", "tor"):
        raise DomainError(f"unknown derived functor kind {kind!r}")
    fn = ext_module if kind == "ext" else tor_module
    bound = minimal_resolution(M).length
    entries = {i: fn(M, N, i) for i in range(bound + 1)}
    return DerivedTable(kind, M, N, entries)


def lemma1_witness(M: ModulePresentation, N: ModulePresentation) -> int:
    """Least i with Ext^i(M, N) != 0, for nonzero M and N.

    The result is bounded by depth(N); exceeding that bound (or finding
    no nonvanishing degree at all) indicates a computation bug and
    raises loudly rather than returning.
    """
    if M.is_zero() or N.is_zero():
        raise DomainError("witness search requires nonzero modules")
    bound = minimal_resolution(M).length
    witness = None
    for i in range(bound + 1):
        if not ext_module(M, N, i).is_zero():
            witness = i
            break
    if witness is None:
        raise InternalError("no nonvanishing degree up to the pd bound")
    d = depth_module(N)
    if witness > d:
        raise InternalError(
            f"least nonvanishing degree {witness} exceeds depth {d}")
    return witness
