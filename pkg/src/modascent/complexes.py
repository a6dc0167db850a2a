"""Bounded chain complexes of finite-rank free modules.

Complexes are indexed homologically: the differential in degree i maps
degree i to degree i-1.  Every constructor checks d.d = 0 exactly.

A complex may additionally carry per-degree relation columns presenting
each degree as a quotient of its free module; this is how "complex
tensored with a presented module" and "Hom of a complex into a presented
module" are represented.  Homology of such a complex is computed by two
syzygy computations: one for the preimage of the incoming relations
under the differential (the cycles), one to express the boundaries and
relations in terms of the cycle generators.

Sign conventions (fixed here once; homology does not depend on them):
the Koszul differential carries alternating signs over subset indices,
the mapping cone puts -d_X in its corner block, and shifting by n
multiplies differentials by (-1)^n.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import ContextError, DomainError, InternalError
from .matrices import (
    block_matrix,
    columns,
    from_columns,
    identity_matrix,
    kronecker_with_identity,
    mat_is_zero,
    mat_mul,
    mat_neg,
    mat_scale,
    scalar_matrix,
    transpose,
    zero_matrix,
)
from .modules import ModulePresentation, zero_module
from .groebner import Submodule, syzygy_basis
from .rings import PolyRing, Polynomial

NEG_INF = float("-inf")


class ChainComplex:
    """ranks: degree -> free rank; differentials: degree -> matrix.

    ``differentials[i]`` has shape rank(i-1) x rank(i).  ``relations[i]``,
    when present, is a rank(i) x (any) matrix whose columns present
    degree i as a quotient; a complex with no relations is free.
    """

    __slots__ = ("ring", "_ranks", "_diffs", "_rels")

    def __init__(self, ring: PolyRing, ranks: dict, differentials: dict,
                 relations: dict | None = None, check: bool = True):
        self.ring = ring
        self._ranks = {i: r for i, r in ranks.items() if r > 0}
        self._diffs = {}
        for i, m in differentials.items():
            if self.rank(i) == 0 or self.rank(i - 1) == 0:
                continue
            if len(m) != self.rank(i - 1) or (m and len(m[0]) != self.rank(i)):
                raise ContextError(
                    f"differential at degree {i} has shape "
                    f"{len(m)}x{len(m[0]) if m else 0}, expected "
                    f"{self.rank(i - 1)}x{self.rank(i)}")
            self._diffs[i] = m
        self._rels = {}
        if relations:
            for i, m in relations.items():
                if self.rank(i) == 0 or not m or not m[0]:
                    continue
                if len(m) != self.rank(i):
                    raise ContextError(f"relations at degree {i} have "
                                       f"{len(m)} rows, expected {self.rank(i)}")
                self._rels[i] = m
        if check:
            self.check_dd_zero()

    # -- shape -------------------------------------------------------------
    def degrees(self) -> list:
        return sorted(self._ranks)

    @property
    def min_degree(self):
        return min(self._ranks) if self._ranks else 0

    @property
    def max_degree(self):
        return max(self._ranks) if self._ranks else 0

    def rank(self, i: int) -> int:
        return self._ranks.get(i, 0)

    def differential(self, i: int) -> tuple:
        """The matrix of d_i, materializing zeros at the boundary."""
        if i in self._diffs:
            return self._diffs[i]
        return zero_matrix(self.ring, self.rank(i - 1), self.rank(i))

    def relation_columns_at(self, i: int) -> list:
        if i in self._rels:
            return columns(self._rels[i], self.rank(i))
        return []

    @property
    def is_free(self) -> bool:
        return not self._rels

    def check_dd_zero(self):
        for i in self.degrees():
            if self.rank(i) and self.rank(i - 1) and self.rank(i - 2):
                prod = mat_mul(self.ring, self.differential(i - 1),
                               self.differential(i))
                if not mat_is_zero(prod):
                    raise InternalError(f"d.d != 0 between degrees {i} and {i - 2}")

    def is_homogeneous(self) -> bool:
        mats = list(self._diffs.values()) + list(self._rels.values())
        return all(e.is_homogeneous() for m in mats for row in m for e in row)

    def __repr__(self):
        ranks = {i: self.rank(i) for i in self.degrees()}
        kind = "free " if self.is_free else "presented "
        return f"<{kind}complex ranks={ranks}>"


@dataclass(frozen=True)
class ChainMap:
    """A degreewise map commuting with the differentials (checked exactly)."""

    source: ChainComplex
    target: ChainComplex
    components: dict

    def __post_init__(self):
        X, Y = self.source, self.target
        if X.ring != Y.ring:
            raise ContextError("chain map across different rings")
        for i, m in self.components.items():
            if len(m) != Y.rank(i) or (m and len(m[0]) != X.rank(i)):
                raise ContextError(f"component at degree {i} has wrong shape")
        ring = X.ring
        degs = set(X.degrees()) | set(Y.degrees())
        for i in sorted(degs):
            left = mat_mul(ring, self.component(i - 1), X.differential(i),
                           inner=X.rank(i - 1))
            right = mat_mul(ring, Y.differential(i), self.component(i),
                            inner=Y.rank(i))
            if left != right and not (mat_is_zero(left) and mat_is_zero(right)):
                raise ContextError(f"components do not commute with d at degree {i}")

    def component(self, i: int) -> tuple:
        if i in self.components:
            return self.components[i]
        return zero_matrix(self.source.ring, self.target.rank(i),
                           self.source.rank(i))


@dataclass(frozen=True)
class KoszulData:
    """A Koszul complex together with the sequence it was built on."""

    sequence: tuple
    complex: ChainComplex


# ---------------------------------------------------------------------------
# constructions


def koszul(xs) -> KoszulData:
    """Koszul complex on a nonempty polynomial sequence.

    Degree i has rank C(n, i) with basis indexed by size-i subsets in
    lexicographic order; d(e_S) = sum_t (-1)^t x_{S[t]} e_{S - S[t]}.

    >>> from modascent.rings import PolyRing; from modascent.fields import GF
    >>> R = PolyRing(("x", "y"), GF(5))
    >>> K = koszul(R.gens()).complex
    >>> [K.rank(i) for i in (0, 1, 2)]
    [1, 2, 1]
    """
    xs = tuple(xs)
    if not xs:
        raise DomainError("koszul needs a nonempty sequence")
    ring = xs[0].ring
    for x in xs:
        if x.ring != ring:
            raise ContextError("koszul sequence in mixed rings")
    n = len(xs)
    basis = {i: list(combinations(range(n), i)) for i in range(n + 1)}
    index = {i: {S: k for k, S in enumerate(basis[i])} for i in range(n + 1)}
    ranks = {i: len(basis[i]) for i in range(n + 1)}
    diffs = {}
    zero = ring.zero()
    for i in range(1, n + 1):
        rows = [[zero] * ranks[i] for _ in range(ranks[i - 1])]
        for col, S in enumerate(basis[i]):
            for t, v in enumerate(S):
                T = S[:t] + S[t + 1:]
                r = index[i - 1][T]
                entry = xs[v] if t % 2 == 0 else -xs[v]
                rows[r][col] = rows[r][col] + entry
        diffs[i] = tuple(tuple(r) for r in rows)
    return KoszulData(xs, ChainComplex(ring, ranks, diffs))


def shift(X: ChainComplex, n: int) -> ChainComplex:
    """Shift n steps to the left: degree i of the result is X at i - n;
    differentials pick up the sign (-1)^n."""
    ranks = {i + n: X.rank(i) for i in X.degrees()}
    sign_flip = n % 2 == 1
    diffs = {}
    for i in X.degrees():
        m = X.differential(i)
        if m and m[0]:
            diffs[i + n] = mat_neg(m) if sign_flip else m
    rels = {i + n: X._rels[i] for i in X._rels}
    return ChainComplex(X.ring, ranks, diffs, rels)


def cone(f: ChainMap) -> ChainComplex:
    """Mapping cone: degree i is X_{i-1} (+) Y_i with block differential
    [[-d_X, 0], [f, d_Y]]."""
    X, Y = f.source, f.target
    ring = X.ring
    degs = range(min(X.min_degree, Y.min_degree),
                 max(X.max_degree + 1, Y.max_degree) + 2)
    ranks = {}
    diffs = {}
    rels = {}
    for i in degs:
        rx, ry = X.rank(i - 1), Y.rank(i)
        if rx + ry == 0:
            continue
        ranks[i] = rx + ry
    for i in ranks:
        rx, ry = X.rank(i - 1), Y.rank(i)
        rx2, ry2 = X.rank(i - 2), Y.rank(i - 1)
        if rx2 + ry2 == 0:
            continue
        top_left = mat_neg(X.differential(i - 1)) if rx and rx2 else None
        bottom_left = f.component(i - 1) if rx and ry2 else None
        bottom_right = Y.differential(i) if ry and ry2 else None
        diffs[i] = block_matrix(
            ring,
            [[top_left, None], [bottom_left, bottom_right]],
            [rx2, ry2],
            [rx, ry],
        )
    for i in ranks:
        rx, ry = X.rank(i - 1), Y.rank(i)
        xcols = X.relation_columns_at(i - 1)
        ycols = Y.relation_columns_at(i)
        if not xcols and not ycols:
            continue
        zx = [ring.zero()] * rx
        zy = [ring.zero()] * ry
        cols = [tuple(c) + tuple(zy) for c in xcols]
        cols += [tuple(zx) + tuple(c) for c in ycols]
        rels[i] = from_columns(ring, cols, rx + ry)
    return ChainComplex(ring, ranks, diffs, rels)


def multiplication_map(X: ChainComplex, f: Polynomial) -> ChainMap:
    comps = {i: scalar_matrix(X.ring, X.rank(i), f) for i in X.degrees()}
    return ChainMap(X, X, comps)


def direct_sum_complex(X: ChainComplex, Y: ChainComplex) -> ChainComplex:
    ring = X.ring
    ranks = {}
    for i in set(X.degrees()) | set(Y.degrees()):
        ranks[i] = X.rank(i) + Y.rank(i)
    diffs = {}
    for i in ranks:
        rx, ry = X.rank(i), Y.rank(i)
        rx2, ry2 = X.rank(i - 1), Y.rank(i - 1)
        if (rx + ry) and (rx2 + ry2):
            diffs[i] = block_matrix(
                ring,
                [[X.differential(i) if rx and rx2 else None, None],
                 [None, Y.differential(i) if ry and ry2 else None]],
                [rx2, ry2], [rx, ry])
    rels = {}
    for i in ranks:
        xcols = X.relation_columns_at(i)
        ycols = Y.relation_columns_at(i)
        if not xcols and not ycols:
            continue
        rx, ry = X.rank(i), Y.rank(i)
        cols = [tuple(c) + (ring.zero(),) * ry for c in xcols]
        cols += [(ring.zero(),) * rx + tuple(c) for c in ycols]
        rels[i] = from_columns(ring, cols, rx + ry)
    return ChainComplex(ring, ranks, diffs, rels)


def tensor_with_module(X: ChainComplex, M: ModulePresentation) -> ChainComplex:
    """Degreewise X_i (x) M as a presented complex.

    Degree i has one copy of M per basis vector of X_i (flattened with
    the M-index fastest); the differential is d_i (x) Id, and relations
    are block-diagonal copies of M's presentation.
    """
    if not X.is_free:
        raise DomainError("tensor_with_module expects a free complex")
    if X.ring != M.ring:
        raise ContextError("tensor across different rings")
    ring = X.ring
    g = M.generators
    ranks = {i: X.rank(i) * g for i in X.degrees()}
    diffs = {}
    rels = {}
    for i in X.degrees():
        if ranks.get(i) and ranks.get(i - 1):
            diffs[i] = kronecker_with_identity(
                ring, X.differential(i), g, X.rank(i - 1), X.rank(i))
        if ranks.get(i) and M.relation_columns:
            cols = []
            zero = ring.zero()
            for k in range(X.rank(i)):
                for col in M.relation_columns:
                    big = [zero] * (X.rank(i) * g)
                    for j, p in enumerate(col):
                        big[k * g + j] = p
                    cols.append(tuple(big))
            rels[i] = from_columns(ring, cols, ranks[i])
    return ChainComplex(ring, ranks, diffs, rels)


def hom_into_module(P: ChainComplex, N: ModulePresentation) -> ChainComplex:
    """Hom(P, N) for a free complex P, as a presented complex.

    Hom(P_i, N) = N^{rank(i)} sits in homological degree -i, so the
    cohomology in degree i is the homology of the result at -i.
    Differentials are the transposed matrices acting on copies of N
    (no extra sign: homology is insensitive to it).
    """
    if not P.is_free:
        raise DomainError("hom_into_module expects a free complex")
    if P.ring != N.ring:
        raise ContextError("hom across different rings")
    ring = P.ring
    g = N.generators
    ranks = {-i: P.rank(i) * g for i in P.degrees()}
    diffs = {}
    rels = {}
    for i in P.degrees():
        # d maps Hom(P_i, N) (degree -i) to Hom(P_{i+1}, N) (degree -i-1)
        if P.rank(i) and P.rank(i + 1):
            tr = transpose(ring, P.differential(i + 1), ncols=P.rank(i + 1))
            diffs[-i] = kronecker_with_identity(ring, tr, g, P.rank(i + 1),
                                                P.rank(i))
        if ranks.get(-i) and N.relation_columns:
            zero = ring.zero()
            cols = []
            for k in range(P.rank(i)):
                for col in N.relation_columns:
                    big = [zero] * (P.rank(i) * g)
                    for j, p in enumerate(col):
                        big[k * g + j] = p
                    cols.append(tuple(big))
            rels[-i] = from_columns(ring, cols, ranks[-i])
    return ChainComplex(ring, ranks, diffs, rels)


def koszul_tensor_complex(xs, X: ChainComplex) -> ChainComplex:
    """K(xs) (x) X, built as iterated cones of multiplication maps.

    K(x1..xn) (x) X is the cone of x_n acting on K(x1..x_{n-1}) (x) X,
    which avoids double-complex bookkeeping and agrees with the direct
    tensor up to isomorphism (hence on homology).
    """
    out = X
    for x in xs:
        out = cone(multiplication_map(out, x))
    return out


def koszul_tensor_map(xs, f: ChainMap) -> ChainMap:
    """K(xs) (x) f between the iterated-cone tensors of source and target."""
    src, tgt = f.source, f.target
    comps = dict(f.components)
    for x in xs:
        new_src = cone(multiplication_map(src, x))
        new_tgt = cone(multiplication_map(tgt, x))
        ring = src.ring
        new_comps = {}
        for i in new_src.degrees():
            sx, sy = src.rank(i - 1), src.rank(i)
            tx, ty = tgt.rank(i - 1), tgt.rank(i)
            if sx + sy == 0 or tx + ty == 0:
                continue
            fprev = comps.get(i - 1)
            fcur = comps.get(i)
            new_comps[i] = block_matrix(
                ring,
                [[fprev if sx and tx else None, None],
                 [None, fcur if sy and ty else None]],
                [tx, ty], [sx, sy])
        src, tgt, comps = new_src, new_tgt, new_comps
    return ChainMap(src, tgt, comps)


# ---------------------------------------------------------------------------
# homology


def homology(X: ChainComplex, i: int) -> ModulePresentation:
    """Presentation of H_i = ker(d_i) / (im d_{i+1} + relations at i).

    Two syzygy computations: cycle generators are the projection of the
    syzygies of [d_i | relations_{i-1}] to the degree-i block, and the
    homology relations are the projection of the syzygies of
    [cycles | boundaries | relations_i] to the cycle block.
    """
    ring = X.ring
    n = X.rank(i)
    if n == 0:
        return zero_module(ring)
    d_i = X.differential(i)
    rel_prev = X.relation_columns_at(i - 1)
    if X.rank(i - 1) == 0:
        cycles = columns(identity_matrix(ring, n), n)
    else:
        cols = columns(d_i, X.rank(i - 1)) + rel_prev
        syz = syzygy_basis(Submodule(ring, X.rank(i - 1), cols))
        cycles = []
        for row in syz.generators:
            v = tuple(row[:n])
            if any(v):
                cycles.append(v)
    if not cycles:
        return zero_module(ring)
    boundaries = columns(X.differential(i + 1), n) if X.rank(i + 1) else []
    boundaries += X.relation_columns_at(i)
    m = len(cycles)
    # a syzygy of [cycles | boundaries] says some combination of cycle
    # classes is a boundary; its cycle block is a relation among the
    # generators of H_i
    cols2 = [tuple(c) for c in cycles] + [tuple(b) for b in boundaries]
    syz = syzygy_basis(Submodule(ring, n, cols2))
    rel_cols = []
    for row in syz.generators:
        v = tuple(row[:m])
        if any(v):
            rel_cols.append(v)
    H = ModulePresentation(ring, m, rel_cols)
    if H.is_homogeneous:
        H = H.minimalized()
    return H


def sup_complex(X: ChainComplex):
    """Largest degree with nonzero homology; -inf when all homology is 0."""
    degs = X.degrees()
    if not degs:
        return NEG_INF
    for i in range(max(degs) + 1, min(degs) - 1, -1):
        if not homology(X, i).is_zero():
            return i
    return NEG_INF


def is_exact(X: ChainComplex) -> bool:
    return sup_complex(X) == NEG_INF


def is_quasi_iso(f: ChainMap) -> bool:
    """True iff the mapping cone of f is exact in every degree."""
    return is_exact(cone(f))
