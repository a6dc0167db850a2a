"""Groebner bases for submodules of free modules, and ideal arithmetic.

Free-module elements are tuples of :class:`~modascent.rings.Polynomial`,
one component per ambient basis vector.  Internally the engine flattens a
vector into a single sparse dict ``{(position, exponents): coefficient}``
so that division and S-pair reduction are uniform across ranks; ideals
are the rank-1 case.

Algorithms: Buchberger with the normal selection strategy (smallest lcm
degree first), the product criterion (rank-1 ambient only, where it is
valid) and the chain criterion; full tail reduction yields reduced bases
with monic leading coefficients, sorted descending by leading term so
output is reproducible.  Syzygies are computed by the elimination trick:
append a tag coordinate per generator, compute a basis for the graph
module under a block order that makes every ambient term larger than
every tag term, and keep the elements supported only on the tags.
"""

from __future__ import annotations

from .errors import ContextError, DomainError, InternalError
from .rings import (
    MonomialOrder,
    PolyRing,
    Polynomial,
    monomial_degree,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
)

# ---------------------------------------------------------------------------
# vector <-> flat-dict conversion


def vector(ring: PolyRing, polys) -> tuple:
    """Coerce a sequence of polynomial-likes into a free-module element."""
    return tuple(ring.poly(p) for p in polys)


def _vec_to_dict(vec) -> dict:
    out = {}
    for pos, p in enumerate(vec):
        for e, c in p.terms.items():
            out[(pos, e)] = c
    return out


def _dict_to_vec(d: dict, rank: int, ring: PolyRing) -> tuple:
    comps = [dict() for _ in range(rank)]
    for (pos, e), c in d.items():
        comps[pos][e] = c
    return tuple(Polynomial(ring, comp) for comp in comps)


def _check_vec(ring: PolyRing, rank: int, vec) -> tuple:
    if len(vec) != rank:
        raise ContextError(f"expected rank {rank}, got a vector of length {len(vec)}")
    for p in vec:
        if not isinstance(p, Polynomial) or p.ring != ring:
            raise ContextError("vector component from a different ring")
    return tuple(vec)


def _module_key(order: MonomialOrder, split: int | None = None):
    """Sort key on flat term keys ``(pos, exps)``; larger key = larger term.

    With ``split`` set, positions below ``split`` form a dominating block
    (elimination order used for syzygy computations).
    """
    ring_key = order.key
    top = order.module_kind == "top"
    if split is None:
        if top:
            return lambda t: (ring_key(t[1]), -t[0])
        return lambda t: (-t[0], ring_key(t[1]))
    if top:
        return lambda t: (1 if t[0] < split else 0, ring_key(t[1]), -t[0])
    return lambda t: (1 if t[0] < split else 0, -t[0], ring_key(t[1]))


# ---------------------------------------------------------------------------
# core division / Buchberger on flat dicts


def _leading(d: dict, key):
    return max(d, key=key)


def _scale_dict(d: dict, c, field) -> dict:
    mul = field.mul
    return {k: mul(v, c) for k, v in d.items()}


def _reduce_full(v: dict, basis, key, field, quotients=None):
    """Full division of v by ``basis`` (list of (dict, ltkey) with monic lt).

    Returns the remainder: no remainder term is divisible by any basis
    leading term.  Divisors are tried in list order, so the result is
    deterministic for a fixed basis order.  When ``quotients`` is a list
    it receives (index, monomial, coeff) triples with
    v = sum(c * x^m * basis[i]) + remainder, exactly.
    """
    work = dict(v)
    rem = {}
    add, mul, neg = field.add, field.mul, field.neg
    while work:
        t = _leading(work, key)
        pos, exps = t
        c = work[t]
        hit = None
        for idx, (g, (gpos, gexps)) in enumerate(basis):
            if gpos == pos and monomial_divides(gexps, exps):
                hit = (idx, g, gexps)
                break
        if hit is None:
            rem[t] = c
            del work[t]
            continue
        idx, g, gexps = hit
        shift = monomial_div(exps, gexps)
        if quotients is not None:
            quotients.append((idx, shift, c))
        for (gp, ge), gc in g.items():
            k = (gp, monomial_mul(ge, shift))
            s = add(work.get(k, field.zero), neg(mul(gc, c)))
            if s:
                work[k] = s
            else:
                work.pop(k, None)
    return rem


def _monic_dict(d: dict, key, field):
    lt = _leading(d, key)
    c = d[lt]
    if c == field.one:
        return d, lt
    return _scale_dict(d, field.inv(c), field), lt


def _spair(f, flt, g, glt, field):
    """S-vector of two monic elements whose leading positions agree."""
    pos = flt[0]
    lcm = monomial_lcm(flt[1], glt[1])
    sf = monomial_div(lcm, flt[1])
    sg = monomial_div(lcm, glt[1])
    add, neg = field.add, field.neg
    out = {}
    for (p, e), c in f.items():
        out[(p, monomial_mul(e, sf))] = c
    for (p, e), c in g.items():
        k = (p, monomial_mul(e, sg))
        s = add(out.get(k, field.zero), neg(c))
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out, lcm, pos


def _buchberger_dicts(gens, key, field):
    """Reduced Groebner basis of the module generated by flat dicts."""
    G = []  # list of (dict, lt)
    for v in gens:
        if v:
            G.append(_monic_dict(dict(v), key, field))

    # the product criterion is only valid for ideals: every term (not just
    # the leading one) must sit in component 0
    rank_one = all(pos == 0 for g, _ in G for pos, _e in g)

    def lcm_of(i, j):
        return monomial_lcm(G[i][1][1], G[j][1][1])

    pairs = set()
    for i in range(len(G)):
        for j in range(i):
            if G[i][1][0] == G[j][1][0]:
                pairs.add((j, i))

    while pairs:
        best = min(
            pairs,
            key=lambda ij: (monomial_degree(lcm_of(*ij)), key((G[ij[0]][1][0], lcm_of(*ij))), ij),
        )
        pairs.discard(best)
        i, j = best
        flt, glt = G[i][1], G[j][1]
        lcm = monomial_lcm(flt[1], glt[1])
        # product criterion: valid for ideals (rank-1 leading data only)
        if rank_one and monomial_mul(flt[1], glt[1]) == lcm:
            continue
        # chain criterion
        skip = False
        for k in range(len(G)):
            if k == i or k == j:
                continue
            klt = G[k][1]
            if klt[0] != flt[0] or not monomial_divides(klt[1], lcm):
                continue
            a, b = (min(i, k), max(i, k)), (min(j, k), max(j, k))
            if a not in pairs and b not in pairs:
                skip = True
                break
        if skip:
            continue
        s, _, _ = _spair(G[i][0], flt, G[j][0], glt, field)
        r = _reduce_full(s, G, key, field)
        if r:
            new = _monic_dict(r, key, field)
            G.append(new)
            t = len(G) - 1
            for k in range(t):
                if G[k][1][0] == new[1][0]:
                    pairs.add((k, t))

    # reduced basis: minimal leading terms, fully tail-reduced, sorted
    G.sort(key=lambda item: key(item[1]), reverse=True)
    minimal = []
    for idx, (g, lt) in enumerate(G):
        redundant = False
        for jdx, (_, lt2) in enumerate(G):
            if jdx == idx:
                continue
            if lt2[0] == lt[0] and monomial_divides(lt2[1], lt[1]):
                if key(lt2) < key(lt) or (lt2 == lt and jdx > idx):
                    redundant = True
                    break
        if not redundant:
            minimal.append((g, lt))
    reduced = []
    for idx in range(len(minimal)):
        others = [minimal[k] for k in range(len(minimal)) if k != idx]
        r = _reduce_full(minimal[idx][0], others, key, field)
        if r:
            reduced.append(_monic_dict(r, key, field))
    reduced.sort(key=lambda item: key(item[1]), reverse=True)
    return reduced


# ---------------------------------------------------------------------------
# public containers


class Submodule:
    """A finitely generated submodule of a free module R^rank.

    Generators are tuples of polynomials of length ``rank``.  The object
    caches its reduced Groebner basis; instances are immutable.
    """

    __slots__ = ("ring", "rank", "generators", "_gb")

    def __init__(self, ring: PolyRing, rank: int, generators):
        if rank < 0:
            raise DomainError("negative ambient rank")
        self.ring = ring
        self.rank = rank
        self.generators = tuple(_check_vec(ring, rank, g) for g in generators)
        self._gb = None

    def groebner(self) -> "GroebnerBasis":
        if self._gb is None:
            self._gb = buchberger(self)
        return self._gb

    def contains(self, vec) -> bool:
        return not any(normal_form(vec, self.groebner()))

    def is_zero(self) -> bool:
        return not self.groebner().elements

    def __repr__(self):
        return f"Submodule(rank={self.rank}, {len(self.generators)} generators)"


class GroebnerBasis:
    """A reduced Groebner basis with its order and source submodule."""

    __slots__ = ("ring", "rank", "order", "elements", "source", "_dicts", "_key")

    def __init__(self, ring, rank, order, elements, source):
        self.ring = ring
        self.rank = rank
        self.order = order
        self.elements = tuple(elements)
        self.source = source
        self._key = _module_key(order)
        self._dicts = []
        for el in self.elements:
            d = _vec_to_dict(el)
            self._dicts.append((d, _leading(d, self._key)))

    def leading_terms(self):
        """The (position, monomial) leading data of each basis element."""
        return [lt for _, lt in self._dicts]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"GroebnerBasis({len(self.elements)} elements, rank={self.rank})"


def ideal(ring: PolyRing, polys) -> Submodule:
    """The ideal generated by ``polys``, as a rank-1 submodule."""
    return Submodule(ring, 1, [(ring.poly(p),) for p in polys])


def unit_ideal(ring: PolyRing) -> Submodule:
    return ideal(ring, [ring.one()])


def zero_ideal(ring: PolyRing) -> Submodule:
    return ideal(ring, [])


# ---------------------------------------------------------------------------
# spec operations


def buchberger(S: Submodule, order: MonomialOrder | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of S; idempotent and deterministic."""
    ring = S.ring
    order = order or ring.order
    key = _module_key(order)
    dicts = [_vec_to_dict(g) for g in S.generators]
    reduced = _buchberger_dicts(dicts, key, ring.field)
    elements = [_dict_to_vec(d, S.rank, ring) for d, _ in reduced]
    return GroebnerBasis(ring, S.rank, order, elements, S)


def normal_form(v, G: GroebnerBasis):
    """Remainder of v on division by G; zero iff v lies in the module."""
    vec = _check_vec(G.ring, G.rank, v)
    r = _reduce_full(_vec_to_dict(vec), G._dicts, G._key, G.ring.field)
    return _dict_to_vec(r, G.rank, G.ring)


def normal_form_with_quotients(v, elements, ring: PolyRing,
                               order: MonomialOrder | None = None):
    """Divide v by an explicit list of vectors, tracking quotients.

    Returns ``(remainder, quotients)`` with
    ``v == sum(q_i * elements[i]) + remainder`` exactly.  The divisor
    list need not be a Groebner basis; elements need not be monic.
    """
    order = order or ring.order
    key = _module_key(order)
    field = ring.field
    rank = len(v)
    prepared = []
    lcs = []
    for el in elements:
        d = _vec_to_dict(_check_vec(ring, rank, el))
        if not d:
            raise DomainError("zero divisor element")
        lt = _leading(d, key)
        lcs.append(d[lt])
        dm, lt = _monic_dict(d, key, field)
        prepared.append((dm, lt))
    moves: list = []
    r = _reduce_full(_vec_to_dict(_check_vec(ring, rank, v)), prepared, key,
                     field, quotients=moves)
    quotients = [ring.zero() for _ in elements]
    for idx, shift, c in moves:
        coeff = field.mul(c, field.inv(lcs[idx]))
        quotients[idx] = quotients[idx] + ring.monomial(shift, coeff)
    return _dict_to_vec(r, rank, ring), quotients


def syzygy_basis(S: Submodule) -> Submodule:
    """Generators of the syzygies of S.generators.

    The result lives in R^s, s = number of generators; column i of the
    result pairs with generator i, and (syzygy matrix) . (generators)
    is exactly zero.
    """
    ring = S.ring
    s = len(S.generators)
    r = S.rank
    if s == 0:
        return Submodule(ring, 0, [])
    key = _module_key(ring.order, split=r)
    field = ring.field
    gens = []
    for i, g in enumerate(S.generators):
        d = _vec_to_dict(g)
        d[(r + i, (0,) * ring.ngens)] = field.one
        gens.append(d)
    reduced = _buchberger_dicts(gens, key, field)
    syz = []
    for d, _ in reduced:
        if all(pos >= r for pos, _ in d):
            syz.append({(pos - r, e): c for (pos, e), c in d.items()})
    out = Submodule(ring, s, [_dict_to_vec(d, s, ring) for d in syz])
    _assert_syzygies(out, S)
    return out


def _assert_syzygies(syz: Submodule, S: Submodule):
    ring = S.ring
    zero = ring.zero()
    for row in syz.generators:
        for comp in range(S.rank):
            acc = zero
            for coeff, gen in zip(row, S.generators):
                acc = acc + coeff * gen[comp]
            if acc:
                raise InternalError("syzygy does not annihilate the generators")


def module_quotient(U: Submodule, v) -> Submodule:
    """(U : v) = {f in R : f*v in U}, as a rank-1 submodule (an ideal)."""
    ring = U.ring
    vec = _check_vec(ring, U.rank, v)
    cols = [vec] + list(U.generators)
    syz = syzygy_basis(Submodule(ring, U.rank, cols))
    return ideal(ring, [row[0] for row in syz.generators if row[0]])


def ideal_quotient(I: Submodule, f) -> Submodule:
    """(I : f) for an ideal I and a nonzero polynomial f."""
    if I.rank != 1:
        raise ContextError("ideal_quotient expects a rank-1 submodule")
    f = I.ring.poly(f)
    if not f:
        raise DomainError("quotient by the zero polynomial")
    return module_quotient(I, (f,))


def ideal_sum(*ideals: Submodule) -> Submodule:
    ring = ideals[0].ring
    gens = []
    for I in ideals:
        if I.rank != 1 or I.ring != ring:
            raise ContextError("ideal_sum expects rank-1 submodules of one ring")
        gens.extend(I.generators)
    return Submodule(ring, 1, gens)


def ideal_intersection(*ideals: Submodule) -> Submodule:
    """Intersection of finitely many ideals.

    Realized as the first coordinates of the syzygies of the columns
    (1,...,1), then one block per ideal: a relation c0*(1,..,1) =
    -(combination inside each ideal) forces c0 into every ideal.
    """
    n = len(ideals)
    if n == 0:
        raise DomainError("empty intersection")
    ring = ideals[0].ring
    if n == 1:
        return ideals[0]
    one = ring.one()
    zero = ring.zero()
    cols = [tuple(one for _ in range(n))]
    for which, I in enumerate(ideals):
        if I.rank != 1 or I.ring != ring:
            raise ContextError("ideal_intersection expects ideals of one ring")
        for (g,) in I.generators:
            col = [zero] * n
            col[which] = g
            cols.append(tuple(col))
    syz = syzygy_basis(Submodule(ring, n, cols))
    return ideal(ring, [row[0] for row in syz.generators if row[0]])


def contains_unit(I: Submodule) -> bool:
    return any(p.is_constant() and p for (p,) in I.groebner().elements)


def is_monomial_ideal(I: Submodule) -> bool:
    """True when the reduced Groebner basis consists of monomials."""
    return all(p.is_monomial() for (p,) in I.groebner().elements)


def krull_dimension(I: Submodule) -> int:
    """Dimension of R/I via independent variable subsets mod the
    leading-term ideal; -1 for the unit ideal, ngens for I = 0."""
    if I.rank != 1:
        raise ContextError("krull_dimension expects a rank-1 submodule")
    ring = I.ring
    gb = I.groebner()
    if not gb.elements:
        return ring.ngens
    if contains_unit(I):
        return -1
    supports = []
    for _, lt in gb._dicts:
        supports.append(frozenset(i for i, e in enumerate(lt[1]) if e))
    return _max_independent_set(ring.ngens, supports)


def _max_independent_set(nvars: int, supports) -> int:
    """Largest subset S of variables with no leading-term support inside S."""
    from itertools import combinations

    for size in range(nvars, 0, -1):
        for S in combinations(range(nvars), size):
            s = set(S)
            if all(not supp <= s for supp in supports):
                return size
    return 0


def radical_membership(f, I: Submodule) -> bool:
    """Rabinowitsch test: f in sqrt(I) iff 1 in (I, 1 - t*f) in R[t]."""
    if I.rank != 1:
        raise ContextError("radical_membership expects a rank-1 submodule")
    ring = I.ring
    f = ring.poly(f)
    if not f:
        return True
    big, lift = ring.with_extra_variable()
    t = big.var(big.ngens - 1)
    gens = [lift(g) for (g,) in I.generators]
    gens.append(big.one() - t * lift(f))
    return contains_unit(ideal(big, gens))
