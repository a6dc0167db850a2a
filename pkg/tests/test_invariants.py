import random

import pytest

from modascent.errors import DomainError, HomogeneityError, UnsupportedInputError
from modascent.groebner import ideal, normal_form, radical_membership
from modascent.harness import (
    CampaignConfig,
    all_monomial_ideals,
    exhaustive_minimal_primes,
    random_module,
)
from modascent.invariants import (
    PrimeIdeal,
    annihilator,
    depth_module,
    dim_module,
    is_finite_length,
    maximal_ideal,
    minimal_primes,
    nak_status,
)
from modascent.modules import (
    cyclic_quotient,
    free_module,
    presentation_from_rows,
    zero_module,
)


def ann_strings(M):
    return [str(g[0]) for g in annihilator(M).generators]


def test_annihilator_examples(R2):
    x, y = R2.gens()
    assert ann_strings(cyclic_quotient(R2, [x**2])) == ["x^2"]
    diag = presentation_from_rows(R2, [[x, R2.zero()], [R2.zero(), y]])
    assert ann_strings(diag) == ["x*y"]
    assert ann_strings(free_module(R2, 1)) == []
    assert ann_strings(zero_module(R2)) == ["1"]


def test_annihilator_kills_module(R2):
    x, y = R2.gens()
    rng = random.Random(13)
    cfg = CampaignConfig(seed=0, count=1, max_variables=2)
    for _ in range(10):
        M = random_module(rng, R2, cfg)
        gb = M.relation_groebner()
        zero, one = R2.zero(), R2.one()
        for (a,) in annihilator(M).generators:
            for j in range(M.generators):
                vec = tuple(a if i == j else zero for i in range(M.generators))
                assert not any(normal_form(vec, gb))


def test_annihilator_requires_homogeneous(R2):
    x, _ = R2.gens()
    with pytest.raises(HomogeneityError):
        annihilator(cyclic_quotient(R2, [x + 1]))


def test_dim_module_examples(R2, R3):
    x, y = R2.gens()
    assert dim_module(cyclic_quotient(R2, [x])) == 1
    assert dim_module(cyclic_quotient(R2, [x, y])) == 0
    assert dim_module(zero_module(R2)) == -1
    # killing all variables but the last leaves a line
    x1, x2, x3 = R3.gens()
    assert dim_module(cyclic_quotient(R3, [x2])) == 2


def test_depth_examples(R2):
    x, y = R2.gens()
    assert depth_module(free_module(R2, 1)) == 2
    assert depth_module(cyclic_quotient(R2, [x, y])) == 0
    assert depth_module(cyclic_quotient(R2, [x])) == 1
    with pytest.raises(DomainError):
        depth_module(zero_module(R2))


def test_depth_at_most_dim(R2, R3):
    rng = random.Random(29)
    for ring in (R2, R3):
        cfg = CampaignConfig(seed=0, count=1, max_variables=ring.ngens)
        for _ in range(8):
            M = random_module(rng, ring, cfg)
            if M.is_zero():
                continue
            assert depth_module(M) <= dim_module(M)


def test_depth_of_sum_with_free_summand(R2):
    x, y = R2.gens()
    for M in (cyclic_quotient(R2, [x]), cyclic_quotient(R2, [x, y]),
              free_module(R2, 1)):
        summed = M.direct_sum(free_module(R2, 1))
        assert depth_module(summed) == min(depth_module(M), R2.ngens)


def test_finite_length(R2):
    x, y = R2.gens()
    assert is_finite_length(cyclic_quotient(R2, [x, y]))
    assert not is_finite_length(cyclic_quotient(R2, [x]))
    assert is_finite_length(cyclic_quotient(R2, [x**2, x * y, y**3]))
    assert is_finite_length(zero_module(R2))


def test_minimal_primes_examples(R2, R3):
    x, y = R2.gens()
    assert [p.variables for p in minimal_primes(ideal(R2, [x * y]))] == [(0,), (1,)]
    assert [p.variables for p in minimal_primes(ideal(R2, [x, y]))] == [(0, 1)]
    X, Y, Z = R3.gens()
    assert [p.variables for p in minimal_primes(ideal(R3, [X * Y, X * Z]))] \
        == [(0,), (1, 2)]
    assert [p.variables for p in minimal_primes(ideal(R3, []))] == [()]
    assert minimal_primes(ideal(R3, [R3.one()])) == []


def test_minimal_primes_rejects_non_monomial(R2):
    x, y = R2.gens()
    with pytest.raises(UnsupportedInputError):
        minimal_primes(ideal(R2, [x + y**2]))


def test_minimal_primes_match_exhaustive_oracle(R3):
    rng = random.Random(7)
    for gens in rng.sample(all_monomial_ideals(3, 3), 80):
        I = ideal(R3, [R3.monomial(e) for e in gens])
        assert [p.variables for p in minimal_primes(I)] \
            == exhaustive_minimal_primes(3, gens)


def test_nak_status(R2):
    x, y = R2.gens()
    assert nak_status(zero_module(R2))
    assert nak_status(cyclic_quotient(R2, [x, y]))
    rng = random.Random(3)
    cfg = CampaignConfig(seed=0, count=1, max_variables=2)
    for _ in range(10):
        assert nak_status(random_module(rng, R2, cfg))


def test_support_of_derived_modules_is_contained(R2):
    # generators of Ann M + Ann N lie in the radical of every Ann(Ext/Tor)
    from modascent.derived import derived_table
    from modascent.groebner import ideal_sum

    rng = random.Random(41)
    cfg = CampaignConfig(seed=0, count=1, max_variables=2)
    for _ in range(6):
        M = random_module(rng, R2, cfg)
        N = random_module(rng, R2, cfg)
        total = ideal_sum(annihilator(M), annihilator(N))
        for kind in ("ext", "tor"):
            table = derived_table(M, N, kind)
            for entry in table.entries.values():
                ann_e = annihilator(entry)
                for (g,) in total.generators:
                    assert radical_membership(g, ann_e)


def test_prime_ideal_basics(R2):
    m = maximal_ideal(R2)
    assert m.is_maximal() and m.codimension() == 2
    p = PrimeIdeal(R2, (0,))
    assert str(p) == "(x)"
    assert [str(q) for q in [PrimeIdeal(R2, ())]] == ["()"]
    with pytest.raises(DomainError):
        PrimeIdeal(R2, (5,))
