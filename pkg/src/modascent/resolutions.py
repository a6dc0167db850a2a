"""Free resolutions of presented modules, minimalization, and pd.

``free_resolution`` iterates syzygy computations on the presentation's
relation columns; ``minimalize`` strips exact unit summands from the
resulting complex (valid on homogeneous input, where an entry with a
nonzero constant coefficient is a nonzero constant).  Over a polynomial
ring in d variables the minimal resolution has length at most d, so the
default cutoff is d.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import ChainComplex
from .errors import DomainError, InternalError
from .groebner import Submodule, syzygy_basis
from .matrices import from_columns
from .modules import ModulePresentation, split_unit_entries


@dataclass(frozen=True)
class Resolution:
    """A complex of free modules augmenting onto ``target``.

    Degree 0 has one basis vector per generator of the target's
    presentation; ``complete`` records that the final kernel vanished
    (the complex is exact in all positive degrees, not merely up to the
    cutoff).
    """

    complex: ChainComplex
    target: ModulePresentation
    minimal: bool
    complete: bool

    @property
    def length(self) -> int:
        degs = self.complex.degrees()
        return max(degs) if degs else 0

    def differentials(self) -> list:
        return [self.complex.differential(i) for i in range(1, self.length + 1)]


def free_resolution(M: ModulePresentation, max_length: int | None = None) -> Resolution:
    """Resolve M by iterated syzygies of its relation columns.

    Stops when the kernel vanishes or after ``max_length`` differentials
    (default: enough for the iteration to terminate on its own; a hard
    internal cap guards against runaway growth).
    """
    if max_length is not None and max_length < 0:
        raise DomainError("max_length must be >= 0")
    ring = M.ring
    cap = max_length if max_length is not None else None
    hard_cap = 2 * ring.ngens + len(M.relation_columns) + 16
    ranks = {0: M.generators}
    diffs = {}
    cols = list(M.relation_columns)
    ambient = M.generators
    step = 1
    complete = True
    while cols:
        if cap is not None and step > cap:
            complete = False
            break
        if step > hard_cap:
            raise InternalError("free resolution failed to terminate")
        diffs[step] = from_columns(ring, cols, ambient)
        ranks[step] = len(cols)
        syz = syzygy_basis(Submodule(ring, ambient, cols))
        ambient = len(cols)
        cols = [tuple(row) for row in syz.generators]
        step += 1
    cx = ChainComplex(ring, ranks, diffs)
    return Resolution(cx, M, minimal=_is_minimal(cx), complete=complete)


def _is_minimal(cx: ChainComplex) -> bool:
    for i in cx.degrees():
        for row in cx.differential(i):
            for e in row:
                if e.constant_term():
                    return False
    return True


def minimalize(res: Resolution) -> Resolution:
    """Strip unit summands; homology is unchanged.

    Requires homogeneous or constant-term-free differentials.
    """
    if res.minimal:
        return res
    ring = res.complex.ring
    L = res.length
    mats = [list(map(list, res.complex.differential(i))) for i in range(1, L + 1)]
    ranks = [res.complex.rank(i) for i in range(0, L + 1)]
    split_unit_entries(ring, mats, ranks)
    new_ranks = {i: r for i, r in enumerate(ranks)}
    new_diffs = {}
    for i in range(1, L + 1):
        if ranks[i] and ranks[i - 1]:
            new_diffs[i] = tuple(tuple(row) for row in mats[i - 1])
    cx = ChainComplex(ring, new_ranks, new_diffs)
    if not _is_minimal(cx):
        raise InternalError("minimalization left a unit entry")
    return Resolution(cx, res.target, minimal=True, complete=res.complete)


def minimal_resolution(M: ModulePresentation) -> Resolution:
    """Cached minimal free resolution of a homogeneous presentation."""
    cached = M._extra.get("minres")
    if cached is None:
        M.require_homogeneous("minimal resolution")
        cached = minimalize(free_resolution(M))
        M._extra["minres"] = cached
    return cached


def projective_dimension(M: ModulePresentation) -> int:
    """Length of the minimal free resolution; 0 for free modules."""
    if M.is_zero():
        raise DomainError("the zero module has no projective dimension")
    return minimal_resolution(M).length
