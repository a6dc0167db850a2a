"""Finitely presented modules: cokernels of polynomial matrices.

A :class:`ModulePresentation` is coker of a (generators x relations)
matrix: ``generators`` counts the rows, and each relation is a column.
The zero module is the empty presentation (0 generators).  Instances
are immutable; expensive derived data (Groebner basis of the relation
module, the minimalized presentation, ...) is cached per instance.
"""

from __future__ import annotations

from itertools import product

from .errors import DomainError, HomogeneityError
from .groebner import GroebnerBasis, Submodule, normal_form
from .matrices import from_columns, matrix as make_matrix
from .rings import PolyRing, Polynomial, monomial_divides


class ModulePresentation:
    """coker(relations) for a g x r matrix over a polynomial ring.

    >>> from modascent.rings import PolyRing
    >>> from modascent.fields import GF
    >>> R = PolyRing(("x", "y"), GF(32003))
    >>> M = cyclic_quotient(R, [R.parse("x")])
    >>> M.generators, M.is_zero(), M.is_homogeneous
    (1, False, True)
    """

    __slots__ = ("ring", "generators", "relation_columns", "_gb", "_minimal",
                 "_extra")

    def __init__(self, ring: PolyRing, generators: int, relation_columns):
        if generators < 0:
            raise DomainError("negative generator count")
        self.ring = ring
        self.generators = generators
        cols = []
        for col in relation_columns:
            col = tuple(ring.poly(p) for p in col)
            if len(col) != generators:
                raise DomainError("relation column length != generator count")
            if any(col):
                cols.append(col)
        self.relation_columns = tuple(cols)
        self._gb = None
        self._minimal = None
        self._extra = {}

    # -- structure -------------------------------------------------------
    @property
    def relations(self) -> int:
        return len(self.relation_columns)

    @property
    def relation_matrix(self) -> tuple:
        return from_columns(self.ring, self.relation_columns, self.generators)

    @property
    def is_homogeneous(self) -> bool:
        return all(p.is_homogeneous() for col in self.relation_columns for p in col)

    def require_homogeneous(self, what: str = "this operation"):
        if not self.is_homogeneous:
            raise HomogeneityError(
                f"{what} requires a homogeneous presentation; got inhomogeneous"
                " relation entries")

    def relation_module(self) -> Submodule:
        return Submodule(self.ring, self.generators, self.relation_columns)

    def relation_groebner(self) -> GroebnerBasis:
        if self._gb is None:
            self._gb = self.relation_module().groebner()
        return self._gb

    def is_zero(self) -> bool:
        """True iff every generator lies in the relation span."""
        if self.generators == 0:
            return True
        gb = self.relation_groebner()
        ring = self.ring
        zero, one = ring.zero(), ring.one()
        for j in range(self.generators):
            e = tuple(one if i == j else zero for i in range(self.generators))
            if any(normal_form(e, gb)):
                return False
        return True

    # -- minimal presentation ---------------------------------------------
    def minimalized(self) -> "ModulePresentation":
        """Split off unit relation entries until none remain.

        Requires homogeneous (or already constant-term-free) relations;
        for those inputs a unit entry is a nonzero constant.
        """
        if self._minimal is None:
            mats = [self.relation_matrix]
            ranks = [self.generators, self.relations]
            split_unit_entries(self.ring, mats, ranks)
            g, r = ranks
            m = mats[0]
            cols = [tuple(m[i][j] for i in range(g)) for j in range(r)]
            out = ModulePresentation(self.ring, g, cols)
            out._minimal = out
            self._minimal = out
        return self._minimal

    def minimal_generator_count(self) -> int:
        return self.minimalized().generators

    # -- constructions ------------------------------------------------------
    def direct_sum(self, other: "ModulePresentation") -> "ModulePresentation":
        if other.ring != self.ring:
            raise DomainError("direct sum across different rings")
        g = self.generators + other.generators
        zero = self.ring.zero()
        cols = []
        for col in self.relation_columns:
            cols.append(tuple(col) + (zero,) * other.generators)
        for col in other.relation_columns:
            cols.append((zero,) * self.generators + tuple(col))
        return ModulePresentation(self.ring, g, cols)

    # -- length ------------------------------------------------------------
    def length(self):
        """Total k-dimension when finite, else None.

        Counts standard monomials per generator position against the
        leading terms of the relation Groebner basis.
        """
        if self.generators == 0:
            return 0
        lts = self.relation_groebner().leading_terms()
        n = self.ring.ngens
        total = 0
        for pos in range(self.generators):
            gens_here = [m for p, m in lts if p == pos]
            # finite in this position iff some pure power of every variable
            bounds = []
            for v in range(n):
                exps = [m[v] for m in gens_here
                        if all(m[w] == 0 for w in range(n) if w != v)]
                if not exps:
                    return None
                bounds.append(min(exps))
            for cand in product(*(range(b) for b in bounds)):
                if not any(monomial_divides(m, cand) for m in gens_here):
                    total += 1
        return total

    # -- rendering -----------------------------------------------------------
    def to_dsl(self, name: str = "M") -> str:
        """A `module` statement in the session DSL reproducing this module
        (up to isomorphism for the zero module, which has no 0-generator
        form in the DSL)."""
        if self.generators == 0:
            return f"module {name} = quot (1);"
        if self.generators == 1:
            gens = ", ".join(str(col[0]) for col in self.relation_columns)
            return f"module {name} = quot ({gens});"
        rows = []
        for i in range(self.generators):
            entries = ", ".join(str(col[i]) for col in self.relation_columns)
            rows.append(f"[{entries}]")
        return f"module {name} = coker [{', '.join(rows)}];"

    def summary(self) -> dict:
        return {
            "generators": self.generators,
            "relations": [[str(p) for p in col] for col in self.relation_columns],
            "zero": self.is_zero(),
        }

    def __repr__(self):
        return (f"ModulePresentation({self.generators} generators, "
                f"{self.relations} relations over {self.ring!r})")


def cyclic_quotient(ring: PolyRing, polys) -> ModulePresentation:
    """R/(polys) presented on one generator."""
    return ModulePresentation(ring, 1, [(ring.poly(p),) for p in polys])


def free_module(ring: PolyRing, rank: int = 1) -> ModulePresentation:
    return ModulePresentation(ring, rank, [])


def zero_module(ring: PolyRing) -> ModulePresentation:
    return ModulePresentation(ring, 0, [])


def presentation_from_rows(ring: PolyRing, rows) -> ModulePresentation:
    """Rows index generators, columns index relations (the DSL `coker` form)."""
    rows = [list(r) for r in rows]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise DomainError("ragged relation matrix")
    g = len(rows)
    cols = []
    if rows:
        for j in range(len(rows[0])):
            cols.append(tuple(ring.poly(rows[i][j]) for i in range(g)))
    return ModulePresentation(ring, g, cols)


def presentations_equal(a: ModulePresentation, b: ModulePresentation) -> bool:
    """Literal equality of presentations (same ring, size, column sets)."""
    return (a.ring == b.ring and a.generators == b.generators
            and sorted(map(_col_key, a.relation_columns))
            == sorted(map(_col_key, b.relation_columns)))


def _col_key(col):
    return tuple(tuple(sorted(p.terms.items())) for p in col)


# ---------------------------------------------------------------------------
# unit splitting, shared by presentation and resolution minimalization


def split_unit_entries(ring: PolyRing, mats: list, ranks: list):
    """Strip exact unit summands from a chain of consecutive matrices.

    ``mats[k]`` maps a free module of rank ``ranks[k+1]`` to one of rank
    ``ranks[k]``; the list is mutated in place (matrices as lists of row
    lists is fine, tuples are rebuilt).  Entries with a nonzero constant
    coefficient must be constants -- true for homogeneous matrices --
    otherwise the split is not valid over the polynomial ring.
    """
    work = [[list(row) for row in m] for m in mats]

    def find_unit():
        for k, m in enumerate(work):
            for i, row in enumerate(m):
                for j, e in enumerate(row):
                    c = e.constant_term()
                    if c:
                        if not e.is_constant():
                            raise HomogeneityError(
                                "matrix entry with nonzero constant term is "
                                "not constant; cannot split over the "
                                "polynomial ring")
                        return k, i, j, c
        return None

    while True:
        hit = find_unit()
        if hit is None:
            break
        k, i, j, c = hit
        m = work[k]
        inv = ring.field.inv(c)
        invp = ring.constant(inv)
        # scale column j so the pivot becomes 1; compensate next matrix
        for row in m:
            row[j] = row[j] * invp
        if k + 1 < len(work) and work[k + 1]:
            cp = ring.constant(c)
            work[k + 1][j] = [e * cp for e in work[k + 1][j]]
        # clear row i using column ops; compensate rows of the next matrix
        for j2 in range(len(m[i])):
            if j2 == j or not m[i][j2]:
                continue
            a = m[i][j2]
            for row in m:
                row[j2] = row[j2] - a * row[j]
            if k + 1 < len(work) and work[k + 1]:
                nxt = work[k + 1]
                nxt[j] = [e + a * f for e, f in zip(nxt[j], nxt[j2])]
        # clear column j using row ops; compensate columns of the previous
        for i2 in range(len(m)):
            if i2 == i or not m[i2][j]:
                continue
            b = m[i2][j]
            for j2 in range(len(m[i2])):
                m[i2][j2] = m[i2][j2] - b * m[i][j2]
            if k - 1 >= 0 and work[k - 1]:
                prv = work[k - 1]
                for row in prv:
                    row[i] = row[i] + b * row[i2]
        # delete the split summand
        for row in m:
            del row[j]
        del m[i]
        if k + 1 < len(work) and work[k + 1]:
            del work[k + 1][j]
        if k - 1 >= 0 and work[k - 1]:
            for row in work[k - 1]:
                del row[i]
        ranks[k + 1] -= 1
        ranks[k] -= 1

    for k, m in enumerate(work):
        mats[k] = tuple(tuple(row) for row in m)
