import random

import pytest

from modascent.complexes import homology
from modascent.errors import DomainError, HomogeneityError
from modascent.invariants import depth_module
from modascent.harness import CampaignConfig, random_module
from modascent.modules import (
    ModulePresentation,
    cyclic_quotient,
    free_module,
    presentation_from_rows,
    zero_module,
)
from modascent.resolutions import (
    free_resolution,
    minimal_resolution,
    minimalize,
    projective_dimension,
)


def test_koszul_resolution_of_residue_field(R2):
    x, y = R2.gens()
    res = minimal_resolution(cyclic_quotient(R2, [x, y]))
    assert res.length == 2
    assert [res.complex.rank(i) for i in (0, 1, 2)] == [1, 2, 1]
    for i in range(1, 3):
        assert homology(res.complex, i).is_zero()


def test_free_module_resolves_trivially(R2):
    res = minimal_resolution(free_module(R2, 1))
    assert res.length == 0 and res.complete


def test_principal_ideal_resolution(R2):
    x, _ = R2.gens()
    res = minimal_resolution(cyclic_quotient(R2, [x]))
    assert res.length == 1
    assert res.complex.differential(1) == ((x,),)


def test_cokernel_of_first_differential_presents_target(R2):
    x, y = R2.gens()
    M = cyclic_quotient(R2, [x**2, x * y])
    res = free_resolution(M)
    H0 = homology(res.complex, 0)
    assert sorted(str(c[0]) for c in H0.relation_columns) == ["x^2", "x*y"]


def test_minimalize_is_noop_on_minimal(R2):
    x, y = R2.gens()
    res = minimal_resolution(cyclic_quotient(R2, [x, y]))
    assert minimalize(res) is res


def test_minimalize_strips_identity_summand(R2):
    x, _ = R2.gens()
    # presentation of R/(x) padded with a split generator: e2 = 0 via unit
    M = presentation_from_rows(R2, [[x, R2.zero()], [R2.zero(), R2.one()]])
    res = minimal_resolution(M)
    assert res.length == 1
    assert [res.complex.rank(0), res.complex.rank(1)] == [1, 1]
    assert res.complex.differential(1) == ((x,),)


def test_minimalize_rejects_inhomogeneous_nonconstant_units(R2):
    x, _ = R2.gens()
    M = cyclic_quotient(R2, [x + 1])
    with pytest.raises(HomogeneityError):
        minimal_resolution(M)


def test_projective_dimension_examples(R2):
    x, y = R2.gens()
    assert projective_dimension(cyclic_quotient(R2, [x, y])) == 2
    assert projective_dimension(free_module(R2, 1)) == 0
    assert projective_dimension(cyclic_quotient(R2, [x])) == 1
    with pytest.raises(DomainError):
        projective_dimension(zero_module(R2))


def test_resolutions_are_exact_and_bounded(R3):
    rng = random.Random(31)
    cfg = CampaignConfig(seed=0, count=1, max_variables=3)
    for _ in range(12):
        M = random_module(rng, R3, cfg)
        res = minimal_resolution(M)
        assert res.complete
        assert res.length <= R3.ngens
        for i in range(1, res.length + 1):
            assert homology(res.complex, i).is_zero()


def test_auslander_buchsbaum(R2, R3):
    rng = random.Random(47)
    for ring in (R2, R3):
        cfg = CampaignConfig(seed=0, count=1, max_variables=ring.ngens)
        for _ in range(10):
            M = random_module(rng, ring, cfg)
            if M.is_zero():
                continue
            assert projective_dimension(M) + depth_module(M) == ring.ngens


def test_zero_module_detection(R2):
    x, y = R2.gens()
    assert zero_module(R2).is_zero()
    assert cyclic_quotient(R2, [R2.one()]).is_zero()
    assert not cyclic_quotient(R2, [x]).is_zero()
    assert not free_module(R2, 1).is_zero()


def test_direct_sum_and_length(R2):
    x, y = R2.gens()
    k = cyclic_quotient(R2, [x, y])
    two = k.direct_sum(k)
    assert two.length() == 2
    assert cyclic_quotient(R2, [x**2, x * y, y**3]).length() == 4
    assert cyclic_quotient(R2, [x]).length() is None
    assert zero_module(R2).length() == 0


def test_minimal_generator_count(R2):
    x, y = R2.gens()
    M = presentation_from_rows(R2, [[x, R2.zero()], [R2.zero(), R2.one()]])
    assert M.minimal_generator_count() == 1
    assert free_module(R2, 3).minimal_generator_count() == 3
