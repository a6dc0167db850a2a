import random

import pytest

from modascent.derived import derived_table, ext_module, lemma1_witness, tor_module
from modascent.errors import DomainError
from modascent.harness import CampaignConfig, random_module
from modascent.invariants import annihilator, depth_module, dim_module
from modascent.modules import cyclic_quotient, free_module, zero_module
from modascent.resolutions import projective_dimension


def ann_strings(M):
    return [str(g[0]) for g in annihilator(M).generators]


def test_tor_of_transverse_quotients(R2):
    x, y = R2.gens()
    Mx, Ny = cyclic_quotient(R2, [x]), cyclic_quotient(R2, [y])
    t0 = tor_module(Mx, Ny, 0)
    assert t0.length() == 1
    assert sorted(ann_strings(t0)) == ["x", "y"]
    assert tor_module(Mx, Ny, 1).is_zero()


def test_tor_of_self(R2):
    x, _ = R2.gens()
    Mx = cyclic_quotient(R2, [x])
    t1 = tor_module(Mx, Mx, 1)
    assert ann_strings(t1) == ["x"]
    assert dim_module(t1) == 1


def test_ext_of_transverse_quotients(R2):
    x, y = R2.gens()
    Mx, Ny = cyclic_quotient(R2, [x]), cyclic_quotient(R2, [y])
    assert ext_module(Mx, Ny, 0).is_zero()
    assert ext_module(Mx, Ny, 1).length() == 1


def test_ext_endomorphisms_of_cyclic(R2):
    x, _ = R2.gens()
    Mx = cyclic_quotient(R2, [x])
    e0 = ext_module(Mx, Mx, 0)
    assert ann_strings(e0) == ["x"]
    assert e0.generators == 1


def test_negative_degree_rejected(R2):
    x, _ = R2.gens()
    M = cyclic_quotient(R2, [x])
    with pytest.raises(DomainError):
        ext_module(M, M, -1)
    with pytest.raises(DomainError):
        tor_module(M, M, -2)


def test_tables(R2):
    x, y = R2.gens()
    Mx, Ny = cyclic_quotient(R2, [x]), cyclic_quotient(R2, [y])
    k = cyclic_quotient(R2, [x, y])
    tor = derived_table(Mx, Ny, "tor")
    assert tor.entry(0).length() == 1 and tor.entry(1).is_zero()
    ext_free = derived_table(free_module(R2, 1), Ny, "ext")
    assert sorted(ext_free.entries) == [0]
    assert ann_strings(ext_free.entry(0)) == ["y"]
    ext_kk = derived_table(k, k, "ext")
    assert [ext_kk.entry(i).length() for i in (0, 1, 2)] == [1, 2, 1]


def test_vanishing_beyond_projective_dimension(R2):
    rng = random.Random(19)
    cfg = CampaignConfig(seed=0, count=1, max_variables=2)
    for _ in range(6):
        M = random_module(rng, R2, cfg)
        N = random_module(rng, R2, cfg)
        if M.is_zero():
            continue
        pd = projective_dimension(M)
        for i in range(pd + 1, pd + 3):
            assert ext_module(M, N, i).is_zero()
            assert tor_module(M, N, i).is_zero()


def test_tor_balance_invariants(R2):
    # Tor is symmetric; compare the computable invariants of both orders
    rng = random.Random(37)
    cfg = CampaignConfig(seed=0, count=1, max_variables=2)
    for _ in range(5):
        M = random_module(rng, R2, cfg)
        N = random_module(rng, R2, cfg)
        bound = max(projective_dimension(M) if not M.is_zero() else 0,
                    projective_dimension(N) if not N.is_zero() else 0)
        for i in range(bound + 1):
            a = tor_module(M, N, i)
            b = tor_module(N, M, i)
            assert sorted(ann_strings(a)) == sorted(ann_strings(b))
            assert dim_module(a) == dim_module(b)
            assert a.length() == b.length()


def test_witness_examples(R2):
    x, y = R2.gens()
    Mx, Ny = cyclic_quotient(R2, [x]), cyclic_quotient(R2, [y])
    k = cyclic_quotient(R2, [x, y])
    free = free_module(R2, 1)
    assert lemma1_witness(Mx, Ny) == 1 == depth_module(Ny)
    assert lemma1_witness(free, Ny) == 0
    assert lemma1_witness(k, free) == 2 == depth_module(free)
    with pytest.raises(DomainError):
        lemma1_witness(zero_module(R2), Ny)


def test_witness_bounded_by_depth_randomized(R3):
    rng = random.Random(53)
    cfg = CampaignConfig(seed=0, count=1, max_variables=3)
    for _ in range(8):
        M = random_module(rng, R3, cfg)
        N = random_module(rng, R3, cfg)
        assert lemma1_witness(M, N) <= depth_module(N)


def test_concentrated_ext_of_regular_sequence_quotients(R3):
    # M = R/(first j variables), N = R/(variables j+1 .. d-1): Ext is
    # concentrated in degree j = dim(N) - 1 and equals R/(x1..x_{d-1})
    x1, x2, x3 = R3.gens()
    cases = {
        0: (free_module(R3, 1), cyclic_quotient(R3, [x1, x2])),
        1: (cyclic_quotient(R3, [x1]), cyclic_quotient(R3, [x2])),
        2: (cyclic_quotient(R3, [x1, x2]), free_module(R3, 1)),
    }
    for j, (M, N) in cases.items():
        assert dim_module(N) - 1 == j
        table = derived_table(M, N, "ext")
        for i in table.entries:
            if i != j:
                assert table.entry(i).is_zero()
        concentrated = table.entry(j)
        assert sorted(ann_strings(concentrated)) == ["x", "y"]
        assert dim_module(concentrated) == 1
